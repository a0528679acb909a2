#include <tuple>

#include "doctest.h"
#include "metalift/errors.hpp"
#include "support.hpp"

using namespace testing;

namespace {

struct Fixture {
  ParacontactStructure s = make_structure(h3());
  TangentBundle tm{s.base(), s.levi_civita()};
  Assessor a = h3_assessor();
  CertifiedPSasakian cert = CertifiedPSasakian::certify(s, a);
};

const Fixture& fx() {
  static const Fixture f;
  return f;
}

/// H3 with φ rotated on the distribution by an angle depending on x1 + x3.
ParacontactStructure mutated_phi() {
  const ParacontactStructure s = make_structure(h3());
  const Expr t = P("x1+x3");
  const Expr a = (Expr(1) - t * t) / (Expr(1) + t * t);
  const Expr b = Expr(2) * t / (Expr(1) + t * t);
  const TensorField phi = tensor11(s.chart(), [&](std::size_t i, std::size_t j) -> Expr {
    if (i == 2 || j == 2) return Expr(0);
    if (i == j) return i == 0 ? a : -a;
    return b;
  });
  return ParacontactStructure(s.base(), phi, s.eta(), s.xi());
}

void check_matrix(const TensorField& t, const nlohmann::json& o, int p, int q) {
  const Point pt = point0();
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) CHECK(at(t.at({i, j}), pt) == scalar(o[i][j], p, q));
}

}  // namespace

TEST_SUITE("metallic") {

TEST_CASE("params") {
  const MetallicParams p{3, 5, 1, -1};
  CHECK(p.to_string() == "(3,5,+,-)");
  CHECK(p.c() == sigma(3, 5) - MetallicScalar(Rational(3, 2)));
}

TEST_CASE("J and F match the oracle matrices") {
  for (auto [p, q] : {std::pair{1, 1}, std::pair{3, 5}}) {
    const std::string tag = std::to_string(p) + "_" + std::to_string(q);
    check_matrix(build_J(fx().cert, fx().tm, {p, q}).tensor, oracles()["J_" + tag + "_at_point"], p, q);
    check_matrix(build_F(fx().cert, fx().tm, {p, q}).tensor, oracles()["F_" + tag + "_at_point"], p, q);
  }
}

TEST_CASE("metallic identity") {
  for (auto [p, q] : {std::pair{1, 1}, std::pair{1, 2}, std::pair{2, 1}, std::pair{3, 5}}) {
    CHECK(check_metallic(build_J(fx().cert, fx().tm, {p, q}), fx().a).holds);
    CHECK(check_metallic(build_J(fx().cert, fx().tm, {p, q, -1, -1}), fx().a).holds);
    CHECK(check_metallic(build_F(fx().cert, fx().tm, {p, q}), fx().a).holds);
  }
  const TensorField phic = fx().tm.lift_tensor11(fx().s.phi(), LiftKind::Complete);
  CHECK_FALSE(check_metallic(phic, 1, 1, fx().a).holds);
  const TensorField root = Expr(sigma(2, 1)) * identity11(fx().tm.chart());
  CHECK(check_metallic(root, 2, 1, fx().a).holds);
}

TEST_CASE("mixed sign variants are not metallic") {
  for (auto [p, q] : {std::pair{1, 1}, std::pair{3, 5}}) {
    for (auto [e1, e2, tag] : {std::tuple{1, -1, "+-"}, std::tuple{-1, 1, "-+"}}) {
      const MetallicOnTM j = build_J(fx().cert, fx().tm, {p, q, e1, e2});
      CHECK_FALSE(check_metallic(j, fx().a).holds);
      const TensorField& t = j.tensor;
      const TensorField r = compose(t, t) - Expr(p) * t - Expr(q) * identity11(t.chart());
      const auto& o = oracles()["J_" + std::to_string(p) + "_" + std::to_string(q) + "_" + tag + "_residual_dx3_at_point"];
      for (std::size_t k = 0; k < 6; ++k) CHECK(at(r.at({k, 2}), point0()) == scalar(o[k], p, q));
    }
  }
}

TEST_CASE("J(xi^v) and F(xi^v)") {
  const MetallicOnTM j = build_J(fx().cert, fx().tm, {1, 1});
  const MetallicOnTM f = build_F(fx().cert, fx().tm, {1, 1});
  const TensorField xiv = fx().tm.vlift_vector(fx().s.xi());
  const Expr c(j.params.c());
  const Expr half(Rational(1, 2));
  CHECK(fx().a.assess("J xi^v", {tensor_claim("J", apply11(j.tensor, xiv), half * xiv - c * fx().tm.clift_vector(fx().s.xi()))}).holds);
  CHECK(fx().a.assess("F xi^v", {tensor_claim("F", apply11(f.tensor, xiv), half * xiv - c * fx().tm.hlift_vector(fx().s.xi()))}).holds);
}

TEST_CASE("non P-Sasakian input is refused") {
  const ParacontactStructure m = mutated_phi();
  CHECK_THROWS_AS(CertifiedPSasakian::certify(m, fx().a), PreconditionError);
}

TEST_CASE("compatibility") {
  const MetallicOnTM j = build_J(fx().cert, fx().tm, {1, 1});
  const MetallicOnTM f = build_F(fx().cert, fx().tm, {1, 1});
  const CompatVerdicts jc = check_compat(fx().tm.clift_metric(), j, fx().a);
  CHECK(jc.pq_form.holds);
  CHECK(jc.symmetry.holds);
  const CompatVerdicts fc = check_compat(fx().tm.sasaki_metric(), f, fx().a);
  CHECK(fc.pq_form.holds);
  CHECK(fc.symmetry.holds);
  const CompatVerdicts wrong = check_compat(fx().tm.sasaki_metric(), j, fx().a);
  CHECK_FALSE(wrong.pq_form.holds);
  CHECK_FALSE(wrong.symmetry.holds);
}

TEST_CASE("integrability") {
  const MetallicOnTM j = build_J(fx().cert, fx().tm, {1, 1});
  CHECK(check_nijenhuis_vanishes(j.tensor, fx().a).holds);
  for (const auto& row : nijenhuis_rows(fx().s, fx().tm, j, fx().a)) CHECK_MESSAGE(row.verdict.holds, row.id);
  const MetallicOnTM f = build_F(fx().cert, fx().tm, {3, 5});
  CHECK(check_nijenhuis_nonzero(f.tensor, fx().a).holds);
  const TensorField nf = nijenhuis(f.tensor);
  const auto& o = oracles()["NF_dx1_dx3_3_5_at_point"];
  for (std::size_t k = 0; k < 6; ++k) CHECK(at(nf.at({k, 0, 2}), point0()) == scalar(o[k], 3, 5));
}

TEST_CASE("nijenhuis rows follow the closed forms for a mutated phi") {
  const ParacontactStructure m = mutated_phi();
  const TangentBundle tm(m.base(), m.levi_civita());
  const MetallicOnTM j = build_J_unverified(m, tm, {1, 1});
  CHECK_FALSE(check_nijenhuis_vanishes(j.tensor, fx().a).holds);
  const auto rows = nijenhuis_rows(m, tm, j, fx().a);
  CHECK(rows.size() == 8);
  for (const auto& row : rows) CHECK_MESSAGE(row.verdict.holds, row.id);
  const NTensors nt = n_tensors(m);
  CHECK_FALSE(fx().a.assess("N1", {zero_claim("N1", nt.n1)}).holds);
}

TEST_CASE("parallelity") {
  for (auto [p, q] : {std::pair{1, 1}, std::pair{3, 5}}) {
    const MetallicOnTM j = build_J(fx().cert, fx().tm, {p, q});
    const Connection nc = fx().tm.clift_connection();
    const ParallelityProbe pj = parallelity_probe(fx().s, fx().tm, j, nc, fx().a);
    CHECK(pj.closed_form.holds);
    CHECK(pj.nonzero.holds);
    const TensorField x1c = fx().tm.clift_vector(coordinate_field(fx().s.chart(), 0));
    const TensorField xic = fx().tm.clift_vector(fx().s.xi());
    const TensorField r = nabla(nc, x1c, apply11(j.tensor, xic)) - apply11(j.tensor, nabla(nc, x1c, xic));
    const auto& o = oracles()["nablac_J_xic_d1_" + std::to_string(p) + "_" + std::to_string(q) + "_at_point"];
    for (std::size_t k = 0; k < 6; ++k) CHECK(at(r[k], point0()) == scalar(o[k], p, q));

    const MetallicOnTM f = build_F(fx().cert, fx().tm, {p, q});
    const ParallelityProbe pf = parallelity_probe(fx().s, fx().tm, f, fx().tm.hlift_connection(), fx().a);
    CHECK(pf.closed_form.holds);
    CHECK(pf.nonzero.holds);
  }
}

TEST_CASE("F integrability side conditions on H3") {
  const IntegrabilityConditions ic = check_F_integrability_conditions(fx().s, fx().a);
  CHECK(ic.e4.holds);
  CHECK_FALSE(ic.d_flat.holds);
  CHECK_FALSE(ic.e5.holds);
  CHECK(ic.e5_iff_eta.holds);
}

TEST_CASE("fundamental forms are symmetric") {
  const MetallicOnTM j = build_J(fx().cert, fx().tm, {1, 1});
  const FormShape shape = form_shape(fundamental_form(fx().tm.clift_metric(), j), fx().a);
  CHECK(shape.symmetric.holds);
  CHECK_FALSE(shape.antisymmetric.holds);
}

TEST_CASE("dPhi' on the unit field x3 d1") {
  const auto units = make_unit_fields(h3(), fx().s.chart());
  for (auto [p, q] : {std::pair{1, 1}, std::pair{3, 5}}) {
    const MetallicOnTM f = build_F(fx().cert, fx().tm, {p, q});
    const PhiPrimeProbe probe = phi_prime_probe(fx().s, fx().tm, f, {units[0]}, fx().a);
    CHECK(probe.magnitude.holds);
    CHECK(probe.sign == "-");
    const auto& o = oracles()["dPhiprime_xh_xv_xiv_" + std::to_string(p) + "_" + std::to_string(q) + "_at_point"];
    CHECK(at(probe.value, point0()) == scalar(o, p, q));
  }
}

}
