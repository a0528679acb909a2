#include "doctest.h"
#include "support.hpp"

using namespace testing;

namespace {

struct H3Bundle {
  ParacontactStructure s = make_structure(h3());
  TangentBundle tm{s.base(), s.levi_civita()};
  ChartPtr ch = s.chart();
  TensorField d(std::size_t i) const { return coordinate_field(ch, i); }
};

const H3Bundle& bundle() {
  static const H3Bundle b;
  return b;
}

bool holds(const std::vector<Claim>& claims) { return h3_assessor().assess("claims", claims).holds; }

void check_matrix(const TensorField& t, const nlohmann::json& oracle, const Point& p) {
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) CHECK(at(t.at({i, j}), p) == scalar(oracle[i][j]));
}

}  // namespace

TEST_SUITE("bundle") {

TEST_CASE("function lifts") {
  const auto& b = bundle();
  const Point p = point0();
  CHECK(structurally_equal(b.tm.vlift(P("x1")), P("x1")));
  CHECK(at(b.tm.clift(P("x1")), p) == at(P("y1"), p));
  CHECK(at(b.tm.clift(P("x3")), p) == at(P("y3"), p));
  CHECK(at(b.tm.hlift(P("x3")), p) == scalar(oracles()["hlift_x3_at_point"]));
}

TEST_CASE("vector lifts") {
  const auto& b = bundle();
  const TensorField v = b.tm.vlift_vector(b.d(0));
  CHECK(v[3].constant() == MetallicScalar(1));
  for (std::size_t k : {0, 1, 2, 4, 5}) CHECK(v[k].is_zero());
  const TensorField c = b.tm.clift_vector(b.d(0));
  CHECK(c[0].constant() == MetallicScalar(1));
  for (std::size_t k = 1; k < 6; ++k) CHECK(c[k].is_zero());
  const TensorField h = b.tm.hlift_vector(b.d(0));
  const auto& o = oracles()["adapted_H1_at_point"];
  for (std::size_t k = 0; k < 6; ++k) CHECK(at(h[k], point0()) == scalar(o[k]));
  for (std::size_t k = 0; k < 6; ++k) CHECK(at(b.tm.adapted_frame().vectors[0][k], point0()) == scalar(o[k]));
}

TEST_CASE("complete lift sign audit") {
  const auto& b = bundle();
  const TensorField x = vector_field(b.ch, {P("x2"), Expr(0), Expr(0)});
  const Expr f = P("x1");
  const TensorField xc = b.tm.clift_vector(x);
  CHECK(holds({Claim::scalar("X^c f^c", derivative(xc, b.tm.clift(f)), b.tm.clift(derivative(x, f)))}));
  // A minus sign here breaks the identity.
  std::vector<Expr> minus = xc.components();
  for (std::size_t k = 3; k < 6; ++k) minus[k] = -minus[k];
  const TensorField xm = vector_field(b.tm.chart(), minus);
  CHECK_FALSE(holds({Claim::scalar("X^c f^c", derivative(xm, b.tm.clift(f)), b.tm.clift(derivative(x, f)))}));
}

TEST_CASE("lift identities") {
  const auto& b = bundle();
  const Expr f = P("x1*x2");
  const TensorField x = b.d(0);
  CHECK(holds({Claim::scalar("X^v f^c", derivative(b.tm.vlift_vector(x), b.tm.clift(f)), P("x2"))}));
  const TensorField w = one_form(b.ch, {P("x2"), Expr(0), Expr(0)});
  CHECK(holds({Claim::scalar("w^c(X^v)", apply(b.tm.lift_oneform(w, LiftKind::Complete), b.tm.vlift_vector(x)), P("x2"))}));
  CHECK(holds({Claim::scalar("w^h(X^h)", apply(b.tm.lift_oneform(w, LiftKind::Horizontal), b.tm.hlift_vector(x)), Expr(0))}));
  const TensorField ic = b.tm.lift_tensor11(identity11(b.ch), LiftKind::Complete);
  CHECK(holds({tensor_claim("I^c", ic, identity11(b.tm.chart()))}));
  const TensorField phic = b.tm.lift_tensor11(b.s.phi(), LiftKind::Complete);
  CHECK(holds({tensor_claim("(phi^c)^2", compose(phic, phic),
                            b.tm.lift_tensor11(compose(b.s.phi(), b.s.phi()), LiftKind::Complete))}));
  const TensorField phih = b.tm.lift_tensor11(b.s.phi(), LiftKind::Horizontal);
  CHECK(holds({zero_claim("phi^h xi^v", apply11(phih, b.tm.vlift_vector(b.s.xi())))}));
}

TEST_CASE("bundle metrics") {
  const auto& b = bundle();
  const Point p = point0();
  const TensorField gc = b.tm.clift_metric();
  CHECK(at(gc.at({0, 0}), p) == scalar(oracles()["gc_d1c_d1c_at_point"]));
  check_matrix(b.tm.sasaki_metric(), oracles()["sasaki_at_point"], p);
  check_matrix(b.tm.hlift_metric(), oracles()["hlift_metric_at_point"], p);
  const TensorField xiv = b.tm.vlift_vector(b.s.xi()), xih = b.tm.hlift_vector(b.s.xi());
  CHECK(holds({Claim::scalar("g^h(xi^v, xi^h)", apply02(b.tm.hlift_metric(), xiv, xih), Expr(1)),
               Claim::scalar("G(xi^v, xi^v)", apply02(b.tm.sasaki_metric(), xiv, xiv), Expr(1))}));
  std::vector<std::vector<Expr>> m(6, std::vector<Expr>(6));
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) m[i][j] = gc.at({i, j});
  CHECK(at(determinant(m), p) == scalar(oracles()["det_gc_at_point"]));
}

TEST_CASE("flat base: horizontal and complete lifts agree") {
  auto ch = base_chart(2);
  ChartedManifold flat(ch, tensor02(ch, [](std::size_t i, std::size_t j) { return Expr(i == j ? 1 : 0); }));
  TangentBundle tm(flat);
  const TensorField x = coordinate_field(ch, 1);
  const Assessor a(std::vector<Point>{Point{{1, 2}, {3, -1}}}, EvalMode::Exact);
  CHECK(a.assess("h=c", {tensor_claim("X^h", tm.hlift_vector(x), tm.clift_vector(x))}).holds);
  CHECK(a.assess("g^h=g^c", {tensor_claim("g", tm.hlift_metric(), tm.clift_metric())}).holds);
  const Connection nh = tm.hlift_connection(), nc = tm.clift_connection();
  for (std::size_t k = 0; k < nh.coefficients().size(); ++k) {
    CHECK(a.assess("conn", {Claim::scalar("G", nh.coefficients()[k], nc.coefficients()[k])}).holds);
  }
}

TEST_CASE("gamma operator") {
  const auto& b = bundle();
  const TensorField gi = b.tm.gamma(identity11(b.ch));
  const Point p = point0();
  for (std::size_t k = 0; k < 3; ++k) {
    CHECK(at(gi[k], p).is_zero());
    CHECK(at(gi[3 + k], p) == p.fiber[k]);
  }
  const TensorField g0 = b.tm.gamma(tensor11(b.ch, [](std::size_t, std::size_t) { return Expr(0); }));
  for (const auto& c : g0.components()) CHECK(at(c, p).is_zero());
}

TEST_CASE("horizontal bracket and connection displays") {
  const auto& b = bundle();
  const TensorField x = b.d(0), y = b.d(1);
  const TensorField xh = b.tm.hlift_vector(x), yh = b.tm.hlift_vector(y);
  CHECK(holds({tensor_claim("[X^h,Y^h]", lie_bracket(xh, yh), b.tm.hlift_vector(lie_bracket(x, y)) - b.tm.gamma_curvature(x, y))}));
  const Connection nh = b.tm.hlift_connection();
  const TensorField xc = b.tm.clift_vector(x), yc = b.tm.clift_vector(y);
  CHECK(holds({tensor_claim("nabla^h_{X^c}Y^c + gammaR", nabla(nh, xc, yc) + b.tm.gamma_curvature_dot(x, y),
                            b.tm.clift_vector(nabla(b.s.levi_civita(), x, y)))}));
  const TensorField xiv = b.tm.vlift_vector(b.s.xi()), xih = b.tm.hlift_vector(b.s.xi());
  CHECK(holds({zero_claim("nabla^h_{xi^v} xi^h", nabla(nh, xiv, xih))}));
  const Connection nc = b.tm.clift_connection();
  CHECK(holds({tensor_claim("nabla^c_{X^c}Y^v", nabla(nc, xc, b.tm.vlift_vector(y)),
                            b.tm.vlift_vector(nabla(b.s.levi_civita(), x, y)))}));
  CHECK(holds({zero_claim("T^c", torsion(nc))}));
}

TEST_CASE("complete lift connection is the Levi-Civita connection of g^c") {
  const auto& b = bundle();
  const Connection nc = b.tm.clift_connection();
  CHECK(holds({zero_claim("nabla^c g^c", covariant_derivative(nc, b.tm.clift_metric()))}));
}

}
