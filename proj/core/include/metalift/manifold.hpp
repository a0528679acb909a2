#pragma once

#include <functional>
#include <initializer_list>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "metalift/assessment.hpp"
#include "metalift/expr.hpp"

namespace metalift {

/// Coordinate system: one VarId per coordinate, plus domain constraints
/// (each expression must be strictly positive at admissible points).
struct Chart {
  std::vector<VarId> coords;
  std::vector<std::string> names;
  std::vector<Expr> domain;

  std::size_t dim() const { return coords.size(); }
  VarId coord(std::size_t i) const { return coords.at(i); }
};

using ChartPtr = std::shared_ptr<const Chart>;

/// Chart of an n-dimensional base manifold with coordinates x1..xn.
ChartPtr base_chart(int n, std::vector<Expr> domain = {}, std::vector<std::string> names = {});

struct Valence {
  int contravariant = 0;
  int covariant = 0;

  int rank() const { return contravariant + covariant; }
  friend bool operator==(const Valence&, const Valence&) = default;
};

/// Tensor field in coordinate components.
///
/// Components are stored row-major with the contravariant indices first:
/// T^{a..}_{b..} lives at index (a.., b..). For (1,1) tensors that is F^i_j
/// = component i of F(∂_j).
class TensorField {
 public:
  TensorField(ChartPtr chart, Valence valence, std::vector<Expr> components);

  static TensorField zero(ChartPtr chart, Valence valence);
  static TensorField generate(ChartPtr chart, Valence valence,
                              const std::function<Expr(std::span<const std::size_t>)>& fn);

  const ChartPtr& chart() const { return chart_; }
  Valence valence() const { return valence_; }
  std::size_t dim() const { return chart_->dim(); }
  const std::vector<Expr>& components() const { return components_; }

  const Expr& at(std::initializer_list<std::size_t> idx) const;
  const Expr& at(std::span<const std::size_t> idx) const;
  /// Component of a rank-1 field.
  const Expr& operator[](std::size_t i) const;

 private:
  std::size_t flat_index(std::span<const std::size_t> idx) const;

  ChartPtr chart_;
  Valence valence_;
  std::vector<Expr> components_;
};

TensorField operator+(const TensorField& a, const TensorField& b);
TensorField operator-(const TensorField& a, const TensorField& b);
TensorField operator*(const Expr& s, const TensorField& t);
TensorField operator-(const TensorField& t);

TensorField vector_field(ChartPtr chart, std::vector<Expr> components);
TensorField one_form(ChartPtr chart, std::vector<Expr> components);
/// (1,1) tensor from F^i_j = fn(i, j).
TensorField tensor11(ChartPtr chart, const std::function<Expr(std::size_t, std::size_t)>& fn);
/// (0,2) tensor from T_ij = fn(i, j).
TensorField tensor02(ChartPtr chart, const std::function<Expr(std::size_t, std::size_t)>& fn);
TensorField coordinate_field(ChartPtr chart, std::size_t i);
TensorField identity11(ChartPtr chart);

/// ω(X).
Expr apply(const TensorField& form, const TensorField& x);
/// F(X) for a (1,1) tensor.
TensorField apply11(const TensorField& f, const TensorField& x);
/// T(X, Y) for a (0,2) tensor.
Expr apply02(const TensorField& t, const TensorField& x, const TensorField& y);
/// F∘G for (1,1) tensors.
TensorField compose(const TensorField& f, const TensorField& g);
/// The (1,1) tensor X ↦ ω(X)·v, written ω⊗v.
TensorField form_times_vector(const TensorField& form, const TensorField& v);
/// X(f) = X^i ∂_i f.
Expr derivative(const TensorField& x, const Expr& f);
/// Vector field components as a plain list.
std::vector<Expr> components_of(const TensorField& v);

/// Base manifold with a metric given in coordinates.
class ChartedManifold {
 public:
  ChartedManifold(ChartPtr chart, TensorField metric);

  const ChartPtr& chart() const { return chart_; }
  std::size_t dim() const { return chart_->dim(); }
  const TensorField& metric() const { return metric_; }
  /// Symbolic inverse g^{ij} via adjugate over determinant.
  const TensorField& inverse_metric() const { return inverse_; }
  const Expr& metric_determinant() const { return det_; }

 private:
  ChartPtr chart_;
  TensorField metric_;
  TensorField inverse_;
  Expr det_;
};

/// Checks metric symmetry and nondegeneracy at the assessor's points.
Verdict check_metric(const ChartedManifold& m, const Assessor& assessor);

/// Symbolic determinant by cofactor expansion.
Expr determinant(const std::vector<std::vector<Expr>>& m);

/// Linear connection: coefficient Γ^k_{ij} of ∂_k in ∇_{∂_i} ∂_j.
class Connection {
 public:
  Connection(ChartPtr chart, std::vector<Expr> coefficients);

  const ChartPtr& chart() const { return chart_; }
  std::size_t dim() const { return chart_->dim(); }
  const Expr& gamma(std::size_t k, std::size_t i, std::size_t j) const;
  const std::vector<Expr>& coefficients() const { return coeff_; }

 private:
  ChartPtr chart_;
  std::vector<Expr> coeff_;
};

Connection christoffel(const ChartedManifold& m);

/// R(∂_i, ∂_j)∂_k = R^l_{ijk} ∂_l, stored at index (l, i, j, k), with
/// R(X,Y)Z = ∇_X∇_Y Z − ∇_Y∇_X Z − ∇_{[X,Y]} Z.
TensorField curvature(const Connection& c);
/// R(X,Y)Z for vector fields.
TensorField apply_curvature(const TensorField& r, const TensorField& x, const TensorField& y,
                            const TensorField& z);

/// T^k_{ij} = Γ^k_{ij} − Γ^k_{ji}, stored at (k, i, j).
TensorField torsion(const Connection& c);

TensorField lie_bracket(const TensorField& x, const TensorField& y);

/// ∇T with the differentiation index appended as the last covariant slot.
/// Supported valences: (0,0), (1,0), (0,1), (1,1), (0,2).
TensorField covariant_derivative(const Connection& c, const TensorField& t);
/// ∇_X T.
TensorField covariant_derivative(const Connection& c, const TensorField& x, const TensorField& t);
/// ∇_X Y for vector fields.
TensorField nabla(const Connection& c, const TensorField& x, const TensorField& y);

/// L_X T for valences (0,0), (1,0), (0,1), (1,1).
TensorField lie_derivative(const TensorField& x, const TensorField& t);

/// d of a 1-form, (dω)(X,Y) = ½(X ω(Y) − Y ω(X) − ω([X,Y])).
TensorField exterior_derivative(const TensorField& form);
/// d of a 1-form or an alternating 2-form; for 2-forms
/// 3 dΦ(X,Y,Z) = X Φ(Y,Z) + Y Φ(Z,X) + Z Φ(X,Y) − Φ([X,Y],Z) − Φ([Z,X],Y) − Φ([Y,Z],X).
/// The 2-form must be antisymmetric at the assessor's points (ShapeError otherwise).
TensorField exterior_derivative(const TensorField& form, const Assessor& shape_check);

/// The right-hand side of the 2-form coboundary, divided by 3, on given fields.
/// Applies to any (0,2) tensor, alternating or not.
Expr coboundary(const TensorField& form, const TensorField& x, const TensorField& y, const TensorField& z);

/// N_F(X,Y) = [FX,FY] − F[FX,Y] − F[X,FY] + F²[X,Y].
TensorField nijenhuis(const TensorField& f, const TensorField& x, const TensorField& y);
/// N_F on the coordinate frame, stored at (k, i, j) = component k of N_F(∂_i, ∂_j).
TensorField nijenhuis(const TensorField& f);

/// Claim that two same-valence tensors agree componentwise.
Claim tensor_claim(std::string label, const TensorField& lhs, const TensorField& rhs);
/// Claim that a tensor vanishes.
Claim zero_claim(std::string label, const TensorField& t);

}  // namespace metalift
