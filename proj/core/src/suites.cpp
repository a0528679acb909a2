#include "metalift/suites.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <optional>

#include "metalift/errors.hpp"

namespace metalift {
namespace {

struct NamedField {
  std::string name;
  TensorField field;
};

struct NamedFunction {
  std::string name;
  Expr f;
};

Verdict renamed(Verdict v, std::string id) {
  v.id = std::move(id);
  return v;
}

std::string value_text(const Value& v) {
  if (std::holds_alternative<MetallicScalar>(v)) return std::get<MetallicScalar>(v).to_string();
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", std::get<double>(v));
  return buf;
}

/// Strict positivity of each expression at every point.
Verdict positivity(std::string id, const std::vector<std::pair<std::string, Expr>>& exprs, const Assessor& a) {
  Verdict v;
  v.id = std::move(id);
  v.expect = Expect::Differ;
  for (std::size_t pi = 0; pi < a.points().size(); ++pi) {
    for (const auto& [label, e] : exprs) {
      ++v.comparisons;
      Value val = eval(e, a.points()[pi], a.mode());
      const bool pos = std::holds_alternative<MetallicScalar>(val) ? std::get<MetallicScalar>(val).sign() > 0
                                                                    : std::get<double>(val) > 0.0;
      if (!pos) {
        v.holds = false;
        if (v.witnesses.size() < 3) {
          v.witnesses.push_back({pi, a.points()[pi].to_string(), label + " not positive", 0, value_text(val),
                                 std::fabs(to_double(val))});
        }
      }
    }
  }
  return v;
}

std::vector<MetallicParams> distinct_pq(const std::vector<MetallicParams>& ps) {
  std::vector<MetallicParams> out;
  for (auto p : ps) {
    p.eps1 = p.eps2 = 1;
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  }
  return out;
}

bool plus_plus(const MetallicParams& p) { return p.eps1 == 1 && p.eps2 == 1; }

std::string pq_text(const MetallicParams& p) { return "(" + std::to_string(p.p) + "," + std::to_string(p.q) + ")"; }

/// Everything the suites share, built once per run.
struct Context {
  const Manifest& manifest;
  ParacontactStructure s;
  Assessor assessor;
  std::vector<MetallicParams> params;
  std::optional<TangentBundle> tm;
  std::optional<CertifiedPSasakian> cert;
  std::optional<Connection> nabla_c;
  std::optional<Connection> nabla_h;
  std::map<std::string, MetallicOnTM> built;

  const TangentBundle& bundle() {
    if (!tm) tm.emplace(s.base(), s.levi_civita());
    return *tm;
  }
  const Connection& clift() {
    if (!nabla_c) nabla_c.emplace(bundle().clift_connection());
    return *nabla_c;
  }
  const Connection& hlift() {
    if (!nabla_h) nabla_h.emplace(bundle().hlift_connection());
    return *nabla_h;
  }
  const MetallicOnTM& J(const MetallicParams& p) {
    const std::string key = "J" + p.to_string();
    auto it = built.find(key);
    if (it == built.end()) it = built.emplace(key, build_J(*cert, bundle(), p)).first;
    return it->second;
  }
  const MetallicOnTM& F(const MetallicParams& p) {
    const std::string key = "F" + pq_text(p);
    auto it = built.find(key);
    if (it == built.end()) it = built.emplace(key, build_F(*cert, bundle(), p)).first;
    return it->second;
  }
  std::vector<NamedField> test_fields() const {
    std::vector<NamedField> out;
    const auto& chart = s.chart();
    const std::size_t n = s.dim();
    for (std::size_t i = 0; i < n; ++i) out.push_back({"d" + std::to_string(i + 1), coordinate_field(chart, i)});
    out.push_back({"xi", s.xi()});
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t j = (i + 1) % n;
      std::vector<Expr> c(n, Expr(0));
      c[i] = Expr::variable(chart->coord(j));
      out.push_back({chart->names[j] + "*d" + std::to_string(i + 1), vector_field(chart, std::move(c))});
    }
    return out;
  }
};

SuiteReport axioms_suite(Context& ctx) {
  SuiteReport r;
  const Assessor& a = ctx.assessor;
  r.checks.push_back({check_metric(ctx.s.base(), a)});
  for (auto& v : check_almost_paracontact(ctx.s, a)) r.checks.push_back({std::move(v)});
  for (auto& v : check_metric_compat(ctx.s, a)) r.checks.push_back({std::move(v)});
  for (auto& v : check_p_sasakian(ctx.s, a)) r.checks.push_back({std::move(v)});
  const NTensors nt = n_tensors(ctx.s);
  r.checks.push_back({a.assess("N1", {zero_claim("N1", nt.n1)})});
  r.checks.push_back({a.assess("N2", {zero_claim("N2", nt.n2)})});
  r.checks.push_back({a.assess("N3", {zero_claim("N3", nt.n3)})});
  r.checks.push_back({a.assess("N4", {zero_claim("N4", nt.n4)})});
  return r;
}

SuiteReport lifts_suite(Context& ctx) {
  SuiteReport r;
  const Assessor& a = ctx.assessor;
  const TangentBundle& tm = ctx.bundle();
  const ParacontactStructure& s = ctx.s;
  const auto fields = ctx.test_fields();
  const auto& chart = s.chart();
  const TensorField& g = s.base().metric();
  const Connection& lc = s.levi_civita();
  const std::size_t n = s.dim();

  std::vector<NamedFunction> fns;
  for (std::size_t i = 0; i < n; ++i) fns.push_back({chart->names[i], Expr::variable(chart->coord(i))});
  fns.push_back({"g11", g.at({0, 0})});
  fns.push_back({"x1*x2", Expr::variable(chart->coord(0)) * Expr::variable(chart->coord(1))});

  // Functions and vector fields
  std::vector<Claim> vv, vc, cv, cc, hv;
  for (const auto& [xn, x] : fields) {
    const TensorField xv = tm.vlift_vector(x), xc = tm.clift_vector(x), xh = tm.hlift_vector(x);
    for (const auto& [fn, f] : fns) {
      const std::string l = "X=" + xn + ", f=" + fn;
      const Expr xf = derivative(x, f);
      vv.push_back(Claim::scalar("X^v f^v " + l, derivative(xv, tm.vlift(f)), Expr(0)));
      vc.push_back(Claim::scalar("X^v f^c " + l, derivative(xv, tm.clift(f)), tm.vlift(xf)));
      cv.push_back(Claim::scalar("X^c f^v " + l, derivative(xc, tm.vlift(f)), tm.vlift(xf)));
      cc.push_back(Claim::scalar("X^c f^c " + l, derivative(xc, tm.clift(f)), tm.clift(xf)));
      hv.push_back(Claim::scalar("X^h f^v " + l, derivative(xh, tm.vlift(f)), tm.vlift(xf)));
    }
  }
  r.checks.push_back({a.assess("X^v f^v = 0", vv)});
  r.checks.push_back({a.assess("X^v f^c = (Xf)^v", vc)});
  r.checks.push_back({a.assess("X^c f^v = (Xf)^v", cv)});
  r.checks.push_back({a.assess("X^c f^c = (Xf)^c", cc)});
  r.checks.push_back({a.assess("X^h f^v = (Xf)^v", hv)});

  // 1-forms
  std::vector<NamedField> forms{{"eta", s.eta()}};
  {
    std::vector<Expr> c(n, Expr(0));
    c[0] = Expr::variable(chart->coord(1 % n));
    forms.push_back({chart->names[1 % n] + "*dx1", one_form(chart, std::move(c))});
  }
  std::vector<Claim> wf;
  for (const auto& [wn, w] : forms) {
    const TensorField wv = tm.lift_oneform(w, LiftKind::Vertical);
    const TensorField wc = tm.lift_oneform(w, LiftKind::Complete);
    const TensorField wh = tm.lift_oneform(w, LiftKind::Horizontal);
    for (const auto& [xn, x] : fields) {
      const std::string l = " w=" + wn + ", X=" + xn;
      const Expr wx = apply(w, x);
      const TensorField xv = tm.vlift_vector(x), xc = tm.clift_vector(x), xh = tm.hlift_vector(x);
      wf.push_back(Claim::scalar("w^v(X^c)" + l, apply(wv, xc), tm.vlift(wx)));
      wf.push_back(Claim::scalar("w^v(X^v)" + l, apply(wv, xv), Expr(0)));
      wf.push_back(Claim::scalar("w^c(X^c)" + l, apply(wc, xc), tm.clift(wx)));
      wf.push_back(Claim::scalar("w^c(X^v)" + l, apply(wc, xv), tm.vlift(wx)));
      wf.push_back(Claim::scalar("w^h(X^h)" + l, apply(wh, xh), Expr(0)));
      wf.push_back(Claim::scalar("w^h(X^v)" + l, apply(wh, xv), tm.vlift(wx)));
    }
  }
  r.checks.push_back({a.assess("1-form lifts", wf)});

  // (1,1) tensors
  const TensorField phic = tm.lift_tensor11(s.phi(), LiftKind::Complete);
  const TensorField phih = tm.lift_tensor11(s.phi(), LiftKind::Horizontal);
  const TensorField phiv = tm.lift_tensor11(s.phi(), LiftKind::Vertical);
  std::vector<Claim> tf;
  for (const auto& [xn, x] : fields) {
    const TensorField fx = apply11(s.phi(), x);
    const TensorField xv = tm.vlift_vector(x), xc = tm.clift_vector(x), xh = tm.hlift_vector(x);
    tf.push_back(tensor_claim("phi^c(X^c) X=" + xn, apply11(phic, xc), tm.clift_vector(fx)));
    tf.push_back(tensor_claim("phi^c(X^v) X=" + xn, apply11(phic, xv), tm.vlift_vector(fx)));
    tf.push_back(tensor_claim("phi^h(X^h) X=" + xn, apply11(phih, xh), tm.hlift_vector(fx)));
    tf.push_back(tensor_claim("phi^h(X^v) X=" + xn, apply11(phih, xv), tm.vlift_vector(fx)));
    tf.push_back(tensor_claim("phi^v(X^c) X=" + xn, apply11(phiv, xc), tm.vlift_vector(fx)));
    tf.push_back(zero_claim("phi^v(X^v) X=" + xn, apply11(phiv, xv)));
  }
  r.checks.push_back({a.assess("(1,1) lifts", tf)});

  std::vector<Claim> poly;
  for (const auto& p : distinct_pq(ctx.params)) {
    auto pf = [&](const TensorField& f) {
      return compose(f, f) - Expr(p.p) * f - Expr(p.q) * identity11(f.chart());
    };
    const TensorField pphi = pf(s.phi());
    poly.push_back(tensor_claim("P(phi^c) " + pq_text(p), pf(phic), tm.lift_tensor11(pphi, LiftKind::Complete)));
    poly.push_back(tensor_claim("P(phi^h) " + pq_text(p), pf(phih), tm.lift_tensor11(pphi, LiftKind::Horizontal)));
  }
  r.checks.push_back({a.assess("P(F^c) = P(F)^c, P(F^h) = P(F)^h", poly)});

  // Metrics
  const TensorField gc = tm.clift_metric(), gh = tm.hlift_metric(), gs = tm.sasaki_metric();
  std::vector<Claim> mc, mh, ms;
  for (const auto& [xn, x] : fields) {
    const TensorField xv = tm.vlift_vector(x), xc = tm.clift_vector(x), xh = tm.hlift_vector(x);
    for (const auto& [yn, y] : fields) {
      const std::string l = " (" + xn + "," + yn + ")";
      const TensorField yv = tm.vlift_vector(y), yc = tm.clift_vector(y), yh = tm.hlift_vector(y);
      const Expr gxy = apply02(g, x, y);
      mc.push_back(Claim::scalar("g^c(X^v,Y^v)" + l, apply02(gc, xv, yv), Expr(0)));
      mc.push_back(Claim::scalar("g^c(X^v,Y^c)" + l, apply02(gc, xv, yc), tm.vlift(gxy)));
      mc.push_back(Claim::scalar("g^c(X^c,Y^v)" + l, apply02(gc, xc, yv), tm.vlift(gxy)));
      mc.push_back(Claim::scalar("g^c(X^c,Y^c)" + l, apply02(gc, xc, yc), tm.clift(gxy)));
      mh.push_back(Claim::scalar("g^h(X^v,Y^v)" + l, apply02(gh, xv, yv), Expr(0)));
      mh.push_back(Claim::scalar("g^h(X^h,Y^h)" + l, apply02(gh, xh, yh), Expr(0)));
      mh.push_back(Claim::scalar("g^h(X^v,Y^h)" + l, apply02(gh, xv, yh), tm.vlift(gxy)));
      ms.push_back(Claim::scalar("G(X^v,Y^v)" + l, apply02(gs, xv, yv), tm.vlift(gxy)));
      ms.push_back(Claim::scalar("G(X^h,Y^h)" + l, apply02(gs, xh, yh), tm.vlift(gxy)));
      ms.push_back(Claim::scalar("G(X^v,Y^h)" + l, apply02(gs, xv, yh), Expr(0)));
    }
  }
  r.checks.push_back({a.assess("g^c pairings", mc)});
  r.checks.push_back({a.assess("g^h pairings", mh)});
  r.checks.push_back({a.assess("G pairings", ms)});

  const std::size_t m = 2 * n;
  std::vector<Claim> msym;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const std::string l = "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
      msym.push_back(Claim::scalar("g^c" + l, gc.at({i, j}), gc.at({j, i})));
      msym.push_back(Claim::scalar("g^h" + l, gh.at({i, j}), gh.at({j, i})));
      msym.push_back(Claim::scalar("G" + l, gs.at({i, j}), gs.at({j, i})));
    }
  }
  r.checks.push_back({a.assess("bundle metrics symmetric", msym)});
  auto mat = [&](const TensorField& t, std::size_t k) {
    std::vector<std::vector<Expr>> out(k, std::vector<Expr>(k));
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) out[i][j] = t.at({i, j});
    }
    return out;
  };
  const Expr detg = s.base().metric_determinant();
  const Expr sgn = Expr(n % 2 == 0 ? 1 : -1);
  r.checks.push_back({a.assess("det g^c = (-1)^n (det g)^2",
                               {Claim::scalar("det g^c", determinant(mat(gc, m)), sgn * detg * detg)})});
  std::vector<std::pair<std::string, Expr>> minors;
  for (std::size_t k = 1; k <= m; ++k) minors.emplace_back("minor " + std::to_string(k), determinant(mat(gs, k)));
  r.checks.push_back({positivity("G positive definite", minors, a)});
  {
    std::vector<std::vector<Expr>> fm(m, std::vector<Expr>(m));
    const Frame& fr = tm.adapted_frame();
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) fm[i][j] = fr.vectors[j][i];
    }
    r.checks.push_back({a.assess("adapted frame nondegenerate", {Claim::scalar("det", determinant(fm), Expr(0))},
                                 Expect::Differ)});
  }

  // γ operator
  {
    std::vector<Expr> canon(m, Expr(0));
    for (std::size_t i = 0; i < n; ++i) canon[n + i] = tm.fiber_point()[i];
    r.checks.push_back(
        {a.assess("gamma I = y^i d/dy^i", {tensor_claim("gamma I", tm.gamma(identity11(chart)), vector_field(tm.chart(), canon))})});
  }

  // Brackets
  std::vector<Claim> br;
  for (const auto& [xn, x] : fields) {
    const TensorField xv = tm.vlift_vector(x), xc = tm.clift_vector(x), xh = tm.hlift_vector(x);
    for (const auto& [yn, y] : fields) {
      const std::string l = " (" + xn + "," + yn + ")";
      const TensorField yv = tm.vlift_vector(y), yc = tm.clift_vector(y), yh = tm.hlift_vector(y);
      const TensorField xy = lie_bracket(x, y);
      br.push_back(zero_claim("[X^v,Y^v]" + l, lie_bracket(xv, yv)));
      br.push_back(tensor_claim("[X^v,Y^c]" + l, lie_bracket(xv, yc), tm.vlift_vector(xy)));
      br.push_back(tensor_claim("[X^c,Y^c]" + l, lie_bracket(xc, yc), tm.clift_vector(xy)));
      br.push_back(tensor_claim("[X^v,Y^h]" + l, lie_bracket(xv, yh), -tm.vlift_vector(nabla(lc, y, x))));
      br.push_back(tensor_claim("[X^h,Y^h]" + l, lie_bracket(xh, yh),
                                tm.hlift_vector(xy) - tm.gamma_curvature(x, y)));
    }
  }
  r.checks.push_back({a.assess("bracket table", br)});

  // Lifted connections
  const Connection& nc = ctx.clift();
  const Connection& nh = ctx.hlift();
  std::vector<Claim> cd, hd;
  for (const auto& [xn, x] : fields) {
    const TensorField xv = tm.vlift_vector(x), xc = tm.clift_vector(x), xh = tm.hlift_vector(x);
    for (const auto& [yn, y] : fields) {
      const std::string l = " (" + xn + "," + yn + ")";
      const TensorField yv = tm.vlift_vector(y), yc = tm.clift_vector(y), yh = tm.hlift_vector(y);
      const TensorField nxy = nabla(lc, x, y);
      cd.push_back(zero_claim("nabla^c_{X^v}Y^v" + l, nabla(nc, xv, yv)));
      cd.push_back(tensor_claim("nabla^c_{X^v}Y^c" + l, nabla(nc, xv, yc), tm.vlift_vector(nxy)));
      cd.push_back(tensor_claim("nabla^c_{X^c}Y^v" + l, nabla(nc, xc, yv), tm.vlift_vector(nxy)));
      cd.push_back(tensor_claim("nabla^c_{X^c}Y^c" + l, nabla(nc, xc, yc), tm.clift_vector(nxy)));
      const TensorField pyc = apply11(phic, yc);
      const TensorField dphi = covariant_derivative(lc, x, s.phi());
      cd.push_back(tensor_claim("(nabla^c_{X^c}phi^c)Y^c" + l, nabla(nc, xc, pyc) - apply11(phic, nabla(nc, xc, yc)),
                                tm.clift_vector(apply11(dphi, y))));
      hd.push_back(zero_claim("nabla^h_{X^v}Y^v" + l, nabla(nh, xv, yv)));
      hd.push_back(zero_claim("nabla^h_{X^v}Y^h" + l, nabla(nh, xv, yh)));
      hd.push_back(tensor_claim("nabla^h_{X^h}Y^v" + l, nabla(nh, xh, yv), tm.vlift_vector(nxy)));
      hd.push_back(tensor_claim("nabla^h_{X^h}Y^h" + l, nabla(nh, xh, yh), tm.hlift_vector(nxy)));
      hd.push_back(tensor_claim("nabla^h_{X^c}Y^c" + l, nabla(nh, xc, yc),
                                tm.clift_vector(nxy) - tm.gamma_curvature_dot(x, y)));
    }
  }
  r.checks.push_back({a.assess("nabla^c displays", cd)});
  r.checks.push_back({a.assess("torsion(nabla^c) = 0", {zero_claim("T", torsion(nc))})});
  r.checks.push_back({a.assess("nabla^h displays", hd)});
  return r;
}

SuiteReport j_metallic_suite(Context& ctx) {
  SuiteReport r;
  for (const auto& p : ctx.params) {
    r.checks.push_back({renamed(check_metallic(ctx.J(p), ctx.assessor), "J^2 = pJ + qI " + p.to_string())});
  }
  return r;
}

SuiteReport j_compat_suite(Context& ctx) {
  SuiteReport r;
  const TensorField gc = ctx.bundle().clift_metric();
  for (const auto& p : ctx.params) {
    CompatVerdicts c = check_compat(gc, ctx.J(p), ctx.assessor);
    r.checks.push_back({renamed(std::move(c.pq_form), "g^c(JX,JY) = p g^c(X,JY) + q g^c(X,Y) " + p.to_string())});
    r.checks.push_back({renamed(std::move(c.symmetry), "g^c(JX,Y) = g^c(X,JY) " + p.to_string())});
  }
  return r;
}

SuiteReport j_integrable_suite(Context& ctx) {
  SuiteReport r;
  for (const auto& p : ctx.params) {
    if (!plus_plus(p)) {
      r.notes.push_back("N_J not checked for sign variant " + p.to_string() + ": the theorem concerns (+,+)");
      continue;
    }
    const MetallicOnTM& j = ctx.J(p);
    r.checks.push_back({renamed(check_nijenhuis_vanishes(j.tensor, ctx.assessor), "N_J = 0 " + p.to_string())});
    for (auto& row : nijenhuis_rows(ctx.s, ctx.bundle(), j, ctx.assessor)) {
      r.checks.push_back({renamed(std::move(row.verdict), row.verdict.id + " closed form " + p.to_string()),
                          row.normative});
    }
  }
  return r;
}

SuiteReport parallel_suite(Context& ctx, bool complete) {
  SuiteReport r;
  const auto params = complete ? ctx.params : distinct_pq(ctx.params);
  for (const auto& p : params) {
    if (complete && !plus_plus(p)) {
      r.notes.push_back("closed form stated for (+,+); skipped " + p.to_string());
      continue;
    }
    const MetallicOnTM& t = complete ? ctx.J(p) : ctx.F(p);
    ParallelityProbe probe = parallelity_probe(ctx.s, ctx.bundle(), t, complete ? ctx.clift() : ctx.hlift(), ctx.assessor);
    const std::string tag = complete ? p.to_string() : pq_text(p);
    r.checks.push_back({renamed(std::move(probe.closed_form), "closed form " + tag)});
    r.checks.push_back({renamed(std::move(probe.nonzero), "nonzero on distribution " + tag)});
  }
  return r;
}

SuiteReport phi_closedness_suite(Context& ctx) {
  SuiteReport r;
  const TensorField gc = ctx.bundle().clift_metric();
  for (const auto& p : ctx.params) {
    const MetallicOnTM& j = ctx.J(p);
    FormShape shape = form_shape(fundamental_form(gc, j), ctx.assessor);
    r.checks.push_back({renamed(std::move(shape.symmetric), "Phi symmetric " + p.to_string())});
    r.checks.push_back({renamed(std::move(shape.antisymmetric), "Phi antisymmetric " + p.to_string()), false});
  }
  const MetallicParams first = ctx.params.front();
  if (plus_plus(first)) {
    const Point& pt = ctx.assessor.points().front();
    for (const auto& row : closedness_rows(ctx.s, ctx.bundle(), ctx.J(first), ctx.assessor)) {
      r.notes.push_back("dPhi(X^c,Y^c,Z^v) " + row.label + " = " + value_text(eval(row.d_phi, pt, ctx.assessor.mode())) +
                        ", g(nabla_Y X,phi Z)+g(nabla_Z Y,phi X)+g(nabla_X Z,phi Y) = " +
                        value_text(eval(row.eq_residual, pt, ctx.assessor.mode())) + " at " + pt.to_string() + " " +
                        first.to_string());
    }
  }
  r.notes.push_back("conditional report: the closedness criterion assumes nabla phi = 0, which a P-Sasakian structure violates");
  return r;
}

SuiteReport f_metallic_suite(Context& ctx) {
  SuiteReport r;
  for (const auto& p : distinct_pq(ctx.params)) {
    r.checks.push_back({renamed(check_metallic(ctx.F(p), ctx.assessor), "F^2 = pF + qI " + pq_text(p))});
  }
  return r;
}

SuiteReport f_compat_suite(Context& ctx) {
  SuiteReport r;
  const TensorField gs = ctx.bundle().sasaki_metric();
  for (const auto& p : distinct_pq(ctx.params)) {
    CompatVerdicts c = check_compat(gs, ctx.F(p), ctx.assessor);
    r.checks.push_back({renamed(std::move(c.pq_form), "G(FX,FY) = p G(X,FY) + q G(X,Y) " + pq_text(p))});
    r.checks.push_back({renamed(std::move(c.symmetry), "G(FX,Y) = G(X,FY) " + pq_text(p))});
  }
  return r;
}

SuiteReport f_integrability_suite(Context& ctx) {
  SuiteReport r;
  const Assessor& a = ctx.assessor;
  IntegrabilityConditions ic = check_F_integrability_conditions(ctx.s, a);
  const bool side = ic.d_flat.holds && ic.e4.holds;
  r.checks.push_back({ic.e5_iff_eta});
  for (const auto& p : distinct_pq(ctx.params)) {
    Verdict nz = check_nijenhuis_vanishes(ctx.F(p).tensor, ctx.assessor);
    Verdict iff;
    iff.id = "N_F = 0 iff (D-flat and e4) " + pq_text(p);
    iff.holds = nz.holds == side;
    iff.comparisons = nz.comparisons;
    if (!iff.holds) {
      iff.max_residual = "1";
      iff.max_residual_f = 1.0;
      iff.witnesses.push_back({0, a.points().front().to_string(),
                               std::string("N_F ") + (nz.holds ? "vanishes" : "nonzero") + " but D-flat and e4 " +
                                   (side ? "hold" : "do not both hold"),
                               0, "1", 1.0});
    }
    r.checks.push_back({std::move(iff)});
    r.checks.push_back({renamed(std::move(nz), "N_F = 0 " + pq_text(p)), false});
  }
  r.checks.push_back({std::move(ic.d_flat), false});
  r.checks.push_back({std::move(ic.e4), false});
  r.checks.push_back({std::move(ic.e5), false});
  r.notes.push_back(std::string("D-flat ") + (r.checks[r.checks.size() - 3].verdict.holds ? "holds" : "fails") +
                    ", e4 " + (r.checks[r.checks.size() - 2].verdict.holds ? "holds" : "fails") + ", e5 " +
                    (r.checks.back().verdict.holds ? "holds" : "fails"));
  return r;
}

SuiteReport phi_prime_suite(Context& ctx, Conventions& conv) {
  SuiteReport r;
  const auto units = make_unit_fields(ctx.manifest, ctx.s.chart());
  if (units.empty()) {
    r.status = SuiteStatus::Skipped;
    r.reason = "manifest lists no unit_fields";
    return r;
  }
  std::vector<Claim> unit;
  for (std::size_t k = 0; k < units.size(); ++k) {
    const std::string l = "X#" + std::to_string(k + 1);
    unit.push_back(Claim::scalar("g(X,X) = 1 " + l, apply02(ctx.s.base().metric(), units[k], units[k]), Expr(1)));
    unit.push_back(Claim::scalar("eta(X) = 0 " + l, apply(ctx.s.eta(), units[k]), Expr(0)));
  }
  r.checks.push_back({ctx.assessor.assess("unit fields in distribution", unit)});
  const TensorField gs = ctx.bundle().sasaki_metric();
  std::string sign;
  for (const auto& p : distinct_pq(ctx.params)) {
    const MetallicOnTM& f = ctx.F(p);
    PhiPrimeProbe probe = phi_prime_probe(ctx.s, ctx.bundle(), f, units, ctx.assessor);
    r.checks.push_back({renamed(std::move(probe.magnitude), "|dPhi'(X^h,X^v,xi^v)| = (2sigma-p)/6 " + pq_text(p))});
    FormShape shape = form_shape(fundamental_form(gs, f), ctx.assessor);
    r.checks.push_back({renamed(std::move(shape.symmetric), "Phi' symmetric " + pq_text(p))});
    r.checks.push_back({renamed(std::move(shape.antisymmetric), "Phi' antisymmetric " + pq_text(p)), false});
    if (sign.empty()) {
      sign = probe.sign;
    } else if (sign != probe.sign) {
      sign = "?";
    }
  }
  conv.dphi_prime_sign = sign;
  r.notes.push_back("dPhi'(X^h,X^v,xi^v) = " + sign + "(2sigma-p)/6 * g(X,X)");
  return r;
}

struct SuiteDef {
  std::string id;
  std::string claim;
  bool structural;  // requires the axioms to hold
};

const std::vector<SuiteDef>& suite_defs() {
  static const std::vector<SuiteDef> defs{
      {"axioms", "almost paracontact, metric and P-Sasakian identities", false},
      {"lifts", "lift identities, bracket table, lifted connections", false},
      {"J-metallic", "J^2 = pJ + qI", true},
      {"J-compat", "g^c is J-compatible", true},
      {"J-integrable", "the metallic structure J is integrable", true},
      {"J-parallel", "J is never parallel with respect to nabla^c", true},
      {"Phi-closedness", "closedness of the fundamental form of J (conditional report)", true},
      {"F-metallic", "F^2 = pF + qI", true},
      {"F-compat", "G is F-compatible", true},
      {"F-integrability-conditions", "F integrable iff D-flat and the curvature condition", true},
      {"F-parallel", "F is never parallel with respect to nabla^h", true},
      {"Phi-prime", "the fundamental form of F is never closed", true},
  };
  return defs;
}

void finish(SuiteReport& r) {
  if (r.status == SuiteStatus::Skipped) return;
  r.status = SuiteStatus::Pass;
  for (const auto& c : r.checks) {
    if (c.gating && !c.verdict.holds) {
      r.status = SuiteStatus::Fail;
      if (r.reason.empty()) r.reason = "check '" + c.verdict.id + "' failed";
    }
  }
}

}  // namespace

std::string to_string(SuiteStatus s) {
  switch (s) {
    case SuiteStatus::Pass: return "pass";
    case SuiteStatus::Fail: return "fail";
    case SuiteStatus::Skipped: return "skipped";
  }
  return "?";
}

bool RunResult::all_pass() const {
  return std::all_of(suites.begin(), suites.end(), [](const SuiteReport& r) { return r.status == SuiteStatus::Pass; });
}

const std::vector<std::string>& suite_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& d : suite_defs()) out.push_back(d.id);
    return out;
  }();
  return ids;
}

std::vector<Point> plan_points(const Manifest& m) {
  const ChartedManifold base = make_base(m);
  std::vector<Expr> must;
  for (const auto& row : m.phi) must.insert(must.end(), row.begin(), row.end());
  must.insert(must.end(), m.eta.begin(), m.eta.end());
  must.insert(must.end(), m.xi.begin(), m.xi.end());
  for (const auto& c : base.inverse_metric().components()) must.push_back(c);
  return sample_points(base, m.plan, must);
}

RunResult run_suites(const Manifest& m, const std::vector<std::string>& selected) {
  for (const auto& id : selected) {
    if (std::find(suite_ids().begin(), suite_ids().end(), id) == suite_ids().end()) {
      throw ParameterError("unknown suite '" + id + "'");
    }
  }
  if (m.metallic.empty()) throw ParameterError("no metallic parameters given");
  auto wanted = [&](const std::string& id) {
    return selected.empty() || std::find(selected.begin(), selected.end(), id) != selected.end();
  };

  ParacontactStructure s = make_structure(m);
  std::vector<Point> points = plan_points(m);

  RunResult out;
  out.plan = m.plan;
  out.params = m.metallic;
  out.points = points.size();
  Context ctx{m, s, Assessor(points, m.plan.mode, m.plan.rel_tol), m.metallic, {}, {}, {}, {}, {}};

  // The axioms gate everything structural, selected or not.
  SuiteReport axioms = axioms_suite(ctx);
  finish(axioms);
  std::string gate;
  if (axioms.status == SuiteStatus::Pass) {
    ctx.cert.emplace(CertifiedPSasakian::certify(ctx.s, ctx.assessor));
  } else {
    gate = "axioms suite failed (" + axioms.reason + "); structure suites not run";
  }

  for (const auto& def : suite_defs()) {
    if (!wanted(def.id)) continue;
    SuiteReport r;
    if (def.id == "axioms") {
      r = axioms;
    } else if (def.structural && !gate.empty()) {
      r.status = SuiteStatus::Skipped;
      r.reason = gate;
    } else {
      try {
        if (def.id == "lifts") r = lifts_suite(ctx);
        else if (def.id == "J-metallic") r = j_metallic_suite(ctx);
        else if (def.id == "J-compat") r = j_compat_suite(ctx);
        else if (def.id == "J-integrable") r = j_integrable_suite(ctx);
        else if (def.id == "J-parallel") r = parallel_suite(ctx, true);
        else if (def.id == "Phi-closedness") r = phi_closedness_suite(ctx);
        else if (def.id == "F-metallic") r = f_metallic_suite(ctx);
        else if (def.id == "F-compat") r = f_compat_suite(ctx);
        else if (def.id == "F-integrability-conditions") r = f_integrability_suite(ctx);
        else if (def.id == "F-parallel") r = parallel_suite(ctx, false);
        else if (def.id == "Phi-prime") r = phi_prime_suite(ctx, out.conventions);
        finish(r);
      } catch (const EvaluationError& e) {
        r = SuiteReport{};
        r.status = SuiteStatus::Fail;
        r.reason = std::string("evaluation error: ") + e.what();
      }
    }
    r.id = def.id;
    r.claim = def.claim;
    out.suites.push_back(std::move(r));
  }
  return out;
}

}  // namespace metalift
