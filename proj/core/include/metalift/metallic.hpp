#pragma once

#include <string>
#include <vector>

#include "metalift/bundle.hpp"
#include "metalift/paracontact.hpp"

namespace metalift {

struct MetallicParams {
  int p = 1;
  int q = 1;
  int eps1 = 1;
  int eps2 = 1;

  MetallicScalar sigma() const;
  /// (2σ − p)/2
  MetallicScalar c() const;
  std::string to_string() const;
  friend bool operator==(const MetallicParams&, const MetallicParams&) = default;
};

enum class MetallicKind { CompleteJ, HorizontalF };

struct MetallicOnTM {
  MetallicKind kind;
  TensorField tensor;
  MetallicParams params;
};

/// A structure that passed every P-Sasakian check at the assessor's points.
class CertifiedPSasakian {
 public:
  /// Throws PreconditionError naming the first failed axiom.
  static CertifiedPSasakian certify(const ParacontactStructure& s, const Assessor& assessor);

  const ParacontactStructure& structure() const { return s_; }

 private:
  explicit CertifiedPSasakian(ParacontactStructure s) : s_(std::move(s)) {}
  ParacontactStructure s_;
};

/// J = (p/2)I − c(φ^c + ε1 η^v⊗ξ^v + ε2 η^c⊗ξ^c).
MetallicOnTM build_J(const CertifiedPSasakian& s, const TangentBundle& tm, MetallicParams params);
/// F = (p/2)I − c(φ^h + η^h⊗ξ^h + η^v⊗ξ^v). Signs in params are ignored.
MetallicOnTM build_F(const CertifiedPSasakian& s, const TangentBundle& tm, MetallicParams params);
/// Same tensors without the precondition; for mutation studies.
MetallicOnTM build_J_unverified(const ParacontactStructure& s, const TangentBundle& tm, MetallicParams params);
MetallicOnTM build_F_unverified(const ParacontactStructure& s, const TangentBundle& tm, MetallicParams params);

/// T² − pT − qI = 0 on the coordinate frame.
Verdict check_metallic(const TensorField& t, int p, int q, const Assessor& assessor);
Verdict check_metallic(const MetallicOnTM& t, const Assessor& assessor);

struct CompatVerdicts {
  Verdict pq_form;   // m(TX,TY) = p m(X,TY) + q m(X,Y)
  Verdict symmetry;  // m(TX,Y) = m(X,TY)
};

CompatVerdicts check_compat(const TensorField& metric, const TensorField& t, int p, int q, const Assessor& assessor);
CompatVerdicts check_compat(const TensorField& metric, const MetallicOnTM& t, const Assessor& assessor);

/// N_T = 0 on every coordinate pair of TM.
Verdict check_nijenhuis_vanishes(const TensorField& t, const Assessor& assessor);
/// N_T ≠ 0 at some coordinate pair, at every point.
Verdict check_nijenhuis_nonzero(const TensorField& t, const Assessor& assessor);

struct NijenhuisRow {
  std::string id;
  bool normative = true;
  Verdict verdict;
};

/// The lifted-frame closed forms for N_J with A = c², X, Y over the
/// distribution frame. J must be built with (ε1, ε2) = (+, +).
std::vector<NijenhuisRow> nijenhuis_rows(const ParacontactStructure& s, const TangentBundle& tm,
                                         const MetallicOnTM& j, const Assessor& assessor);

struct ParallelityProbe {
  Verdict closed_form;  // residual equals the closed form, all directions incl. ξ
  Verdict nonzero;      // residual ≠ 0 for each distribution frame direction
};

/// (∇^c_{X^c}J)ξ^c = −c[(φX)^v − (φ²X)^c] for J, and
/// (∇^h_{X^h}F)ξ^h = −c[(φX)^v − (φ²X)^h] for F.
ParallelityProbe parallelity_probe(const ParacontactStructure& s, const TangentBundle& tm, const MetallicOnTM& t,
                                   const Connection& lifted, const Assessor& assessor);

struct IntegrabilityConditions {
  Verdict d_flat;
  Verdict e4;
  Verdict e5;
  Verdict e5_iff_eta;  // e5 residual vanishes exactly where η(∇_X Y) does
};

IntegrabilityConditions check_F_integrability_conditions(const ParacontactStructure& s, const Assessor& assessor);

/// Φ(X,Y) = m(X,TY) − (p/2) m(X,Y).
TensorField fundamental_form(const TensorField& metric, const MetallicOnTM& t);

struct FormShape {
  Verdict symmetric;
  Verdict antisymmetric;
};

FormShape form_shape(const TensorField& form, const Assessor& assessor);

/// dΦ′(X^h, X^v, ξ^v) against ±((2σ − p)/6) g(X,X); sign is "+", "-" or "?".
struct PhiPrimeProbe {
  Verdict magnitude;
  std::string sign;
  Expr value;
};

PhiPrimeProbe phi_prime_probe(const ParacontactStructure& s, const TangentBundle& tm, const MetallicOnTM& f,
                              const std::vector<TensorField>& unit_fields, const Assessor& assessor);

/// dΦ(X^c, Y^c, Z^v) next to g(∇_Y X, φZ) + g(∇_Z Y, φX) + g(∇_X Z, φY) on distribution triples.
struct ClosednessRow {
  std::string label;
  Expr d_phi;
  Expr eq_residual;
};

std::vector<ClosednessRow> closedness_rows(const ParacontactStructure& s, const TangentBundle& tm,
                                           const MetallicOnTM& j, const Assessor& assessor);

}  // namespace metalift
