#include "doctest.h"
#include "metalift/errors.hpp"
#include "support.hpp"

using namespace testing;

namespace {

ChartedManifold euclid(int n) {
  auto ch = base_chart(n);
  return ChartedManifold(ch, tensor02(ch, [](std::size_t i, std::size_t j) { return Expr(i == j ? 1 : 0); }));
}

bool vanishes(const TensorField& t, const Assessor& a) { return a.assess("zero", {zero_claim("t", t)}).holds; }

}  // namespace

TEST_SUITE("manifold") {

TEST_CASE("christoffel symbols of H3") {
  const ChartedManifold m = make_base(h3());
  const Connection c = christoffel(m);
  const Point p = base_point({1, 1, 2});
  const auto& o = oracles()["christoffel_at_1_1_2"];
  CHECK(at(c.gamma(2, 0, 0), p) == scalar(o["3_11"]));
  CHECK(at(c.gamma(0, 0, 2), p) == scalar(o["1_13"]));
  CHECK(at(c.gamma(2, 2, 2), p) == scalar(o["3_33"]));
  const Assessor a = h3_assessor();
  std::vector<Claim> sym;
  for (std::size_t k = 0; k < 3; ++k)
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) sym.push_back(Claim::scalar("sym", c.gamma(k, i, j), c.gamma(k, j, i)));
  CHECK(a.assess("symmetric", sym).holds);
}

TEST_CASE("flat metric has zero connection and curvature") {
  const ChartedManifold m = euclid(2);
  const Connection c = christoffel(m);
  for (const auto& g : c.coefficients()) CHECK(g.is_zero());
  const TensorField r = curvature(c);
  for (const auto& e : r.components()) CHECK(e.is_zero());
}

TEST_CASE("curvature of H3 is constant -1") {
  const ChartedManifold m = make_base(h3());
  const Connection c = christoffel(m);
  const TensorField r = curvature(c);
  const auto ch = m.chart();
  const TensorField d1 = coordinate_field(ch, 0), d2 = coordinate_field(ch, 1);
  const TensorField v = apply_curvature(r, d1, d2, d2);
  const Point p = base_point({1, 1, 2});
  const auto& o = oracles()["riemann_d1_d2_d2_at_1_1_2"];
  for (std::size_t k = 0; k < 3; ++k) CHECK(at(v[k], p) == scalar(o[k]));

  const Assessor a = h3_assessor();
  std::vector<Claim> claims;
  const TensorField& g = m.metric();
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k) {
        const TensorField x = coordinate_field(ch, i), y = coordinate_field(ch, j), z = coordinate_field(ch, k);
        claims.push_back(tensor_claim("const", apply_curvature(r, x, y, z), -(apply02(g, y, z) * x - apply02(g, x, z) * y)));
        // sign convention against the defining commutator
        claims.push_back(tensor_claim("commutator", apply_curvature(r, x, y, z),
                                      nabla(c, x, nabla(c, y, z)) - nabla(c, y, nabla(c, x, z)) - nabla(c, lie_bracket(x, y), z)));
        claims.push_back(zero_claim("bianchi", apply_curvature(r, x, y, z) + apply_curvature(r, y, z, x) + apply_curvature(r, z, x, y)));
      }
  CHECK(a.assess("curvature", claims).holds);
}

TEST_CASE("torsion") {
  const ChartedManifold m = make_base(h3());
  CHECK(vanishes(torsion(christoffel(m)), h3_assessor()));
  auto ch = base_chart(2);
  std::vector<Expr> coeff(8, Expr(0));
  coeff[0 * 4 + 0 * 2 + 1] = Expr(1);  // Γ^1_{12}
  const TensorField t = torsion(Connection(ch, coeff));
  CHECK(t.at({0, 0, 1}).constant() == MetallicScalar(1));
  CHECK(t.at({0, 1, 0}).constant() == MetallicScalar(-1));
}

TEST_CASE("lie bracket") {
  auto ch = base_chart(3);
  const TensorField d1 = coordinate_field(ch, 0), d2 = coordinate_field(ch, 1);
  const TensorField b12 = lie_bracket(d1, d2);
  for (const auto& c : b12.components()) CHECK(c.is_zero());
  const TensorField x2d1 = vector_field(ch, {P("x2"), Expr(0), Expr(0)});
  const TensorField br = lie_bracket(x2d1, d2);
  CHECK(br[0].constant() == MetallicScalar(-1));
  const TensorField x1d1 = vector_field(ch, {P("x1"), Expr(0), Expr(0)});
  const TensorField b = lie_bracket(x1d1, d2);
  for (const auto& c : b.components()) CHECK(c.is_zero());
}

TEST_CASE("covariant derivatives on H3") {
  const Manifest& man = h3();
  const ParacontactStructure s = make_structure(man);
  const Connection& c = s.levi_civita();
  const auto ch = s.chart();
  const TensorField n = nabla(c, coordinate_field(ch, 0), s.xi());
  const auto& o = oracles()["nabla_d1_xi_at_1_1_2"];
  for (std::size_t k = 0; k < 3; ++k) CHECK(at(n[k], base_point({1, 1, 2})) == scalar(o[k]));
  const Assessor a = h3_assessor();
  CHECK(vanishes(covariant_derivative(c, s.base().metric()), a));
  const Expr f = P("x1*x3^2");
  const TensorField df = covariant_derivative(c, TensorField(ch, {0, 0}, {f}));
  CHECK(a.assess("grad", {Claim::scalar("d3f", df.at({2}), diff(f, VarId::base(3)))}).holds);
}

TEST_CASE("lie derivatives of the H3 structure vanish along xi") {
  const ParacontactStructure s = make_structure(h3());
  const Assessor a = h3_assessor();
  CHECK(vanishes(lie_derivative(s.xi(), s.eta()), a));
  CHECK(vanishes(lie_derivative(s.xi(), s.phi()), a));
  auto ch = base_chart(2);
  const TensorField dx = one_form(ch, {Expr(1), Expr(0)});
  CHECK(vanishes(lie_derivative(coordinate_field(ch, 1), dx), a));
  CHECK_THROWS_AS(lie_derivative(s.xi(), s.base().metric()), CapabilityError);
}

TEST_CASE("exterior derivative") {
  const ParacontactStructure s = make_structure(h3());
  const Assessor a = h3_assessor();
  CHECK(vanishes(exterior_derivative(s.eta()), a));
  auto ch = s.chart();
  CHECK(vanishes(exterior_derivative(one_form(ch, {Expr(1), Expr(0), Expr(0)})), a));
  // d(x2 dx1)(d1, d2) = 1/2 (0 - 1) under the 1/2 convention
  const TensorField dw = exterior_derivative(one_form(ch, {P("x2"), Expr(0), Expr(0)}));
  CHECK(dw.at({0, 1}).constant() == MetallicScalar(Rational(-1, 2)));
  CHECK_THROWS_AS(exterior_derivative(s.base().metric(), a), ShapeError);
  const TensorField ddw = exterior_derivative(exterior_derivative(one_form(ch, {P("x2*x3^2"), P("x1^3"), P("x1*x2")})), a);
  CHECK(vanishes(ddw, a));
}

TEST_CASE("nijenhuis") {
  const ParacontactStructure s = make_structure(h3());
  const Assessor a = h3_assessor();
  CHECK(vanishes(nijenhuis(identity11(s.chart())), a));
  CHECK(vanishes(nijenhuis(s.phi()), a));
}

TEST_CASE("degenerate metric is rejected") {
  auto ch = base_chart(2);
  CHECK_THROWS_AS(ChartedManifold(ch, tensor02(ch, [](std::size_t, std::size_t) { return Expr(1); })), PreconditionError);
}

TEST_CASE("determinant") {
  CHECK(determinant({{Expr(2), Expr(1)}, {Expr(1), Expr(3)}}).constant() == MetallicScalar(5));
  CHECK(determinant({{Expr(0), Expr(1), Expr(0)}, {Expr(1), Expr(0), Expr(0)}, {Expr(0), Expr(0), Expr(4)}}).constant() ==
        MetallicScalar(-4));
}

}
