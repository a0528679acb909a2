#pragma once

#include <string>
#include <vector>

#include "metalift/manifold.hpp"

namespace metalift {

/// (φ, η, ξ) on a Riemannian base. Nothing is assumed; use the checks.
class ParacontactStructure {
 public:
  ParacontactStructure(ChartedManifold base, TensorField phi, TensorField eta, TensorField xi);

  const ChartedManifold& base() const { return base_; }
  const ChartPtr& chart() const { return base_.chart(); }
  std::size_t dim() const { return base_.dim(); }
  const TensorField& phi() const { return phi_; }
  const TensorField& eta() const { return eta_; }
  const TensorField& xi() const { return xi_; }
  const Connection& levi_civita() const { return lc_; }

 private:
  ChartedManifold base_;
  TensorField phi_;
  TensorField eta_;
  TensorField xi_;
  Connection lc_;
};

/// φ² = I − η⊗ξ, η(ξ) = 1, φξ = 0, η∘φ = 0. One verdict per axiom.
std::vector<Verdict> check_almost_paracontact(const ParacontactStructure& s, const Assessor& assessor);

/// g(X,Y) = g(φX,φY) + η(X)η(Y), g(X,φY) = g(φX,Y), g(X,ξ) = η(X) on coordinate pairs.
std::vector<Verdict> check_metric_compat(const ParacontactStructure& s, const Assessor& assessor);

/// (∇_X φ)Y = −g(X,Y)ξ − η(Y)X + 2η(X)η(Y)ξ and ∇_X ξ = φX.
std::vector<Verdict> check_p_sasakian(const ParacontactStructure& s, const Assessor& assessor);

struct NTensors {
  TensorField n1;  // (1,2) at (k, i, j)
  TensorField n2;  // (0,2)
  TensorField n3;  // (1,1)
  TensorField n4;  // (0,1)
};

/// N¹ = N_φ − 2dη⊗ξ, N²(X,Y) = (L_{φX}η)Y − (L_{φY}η)X, N³ = L_ξφ, N⁴ = L_ξη.
NTensors n_tensors(const ParacontactStructure& s);

/// N¹(X,Y) and N²(X,Y) on arbitrary fields.
TensorField n1_on(const ParacontactStructure& s, const TensorField& x, const TensorField& y);
Expr n2_on(const ParacontactStructure& s, const TensorField& x, const TensorField& y);

/// η(v) = 0 at the point.
bool in_distribution(const ParacontactStructure& s, const TensorField& v, const Point& point,
                     EvalMode mode = EvalMode::Exact);

struct FrameMember {
  std::size_t index;  // 0-based coordinate index i of ∂_i
  TensorField field;
};

/// {∂_i − (η(∂_i)/η(ξ)) ξ}, dropping members that vanish at every sample point.
std::vector<FrameMember> distribution_frame(const ParacontactStructure& s, const Assessor& assessor);

/// η(∇_X Y) = 0 for X, Y in the distribution frame. Witness labels name the pair.
Verdict check_D_flat(const ParacontactStructure& s, const Connection& c, const Assessor& assessor);

/// Label "(d1,d2)" for a pair of distribution frame members.
std::string pair_label(const FrameMember& a, const FrameMember& b);

}  // namespace metalift
