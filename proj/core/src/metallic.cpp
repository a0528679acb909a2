#include "metalift/metallic.hpp"

#include "metalift/errors.hpp"

namespace metalift {
namespace {

Expr half_p(const MetallicParams& params) { return Expr(Rational(params.p, 2)); }

std::string name_of(const ChartPtr& chart, std::size_t i) { return chart->names.at(i); }

std::vector<Claim> column_claims(const std::string& what, const TensorField& lhs, const TensorField& rhs) {
  const std::size_t m = lhs.dim();
  std::vector<Claim> out;
  for (std::size_t j = 0; j < m; ++j) {
    std::vector<Expr> l, r;
    for (std::size_t i = 0; i < m; ++i) {
      l.push_back(lhs.at({i, j}));
      r.push_back(rhs.at({i, j}));
    }
    out.push_back({what + " on d/d" + name_of(lhs.chart(), j), std::move(l), std::move(r)});
  }
  return out;
}

TensorField matmul02_11(const TensorField& m, const TensorField& t) {
  // (m∘T)_IJ = m(∂_I, T∂_J)
  const std::size_t n = m.dim();
  return tensor02(m.chart(), [&](std::size_t i, std::size_t j) {
    std::vector<Expr> terms;
    for (std::size_t k = 0; k < n; ++k) {
      if (m.at({i, k}).is_zero() || t.at({k, j}).is_zero()) continue;
      terms.push_back(m.at({i, k}) * t.at({k, j}));
    }
    return sum(std::move(terms));
  });
}

TensorField transpose02(const TensorField& m) {
  return tensor02(m.chart(), [&](std::size_t i, std::size_t j) { return m.at({j, i}); });
}

TensorField ttm(const TensorField& t, const TensorField& m) {
  // m(T∂_I, T∂_J)
  return transpose02(matmul02_11(transpose02(matmul02_11(m, t)), t));
}

TensorField compat_scalar(const Expr& s, const TensorField& m) { return s * m; }

void require_bundle(const MetallicOnTM& t, const TangentBundle& tm) {
  if (t.tensor.dim() != tm.chart()->dim()) throw ShapeError("metallic tensor does not live on this bundle");
}

MetallicOnTM make_J(const ParacontactStructure& s, const TangentBundle& tm, MetallicParams params) {
  if (params.eps1 != 1 && params.eps1 != -1) throw ParameterError("eps1 must be +1 or -1");
  if (params.eps2 != 1 && params.eps2 != -1) throw ParameterError("eps2 must be +1 or -1");
  const ChartPtr& chart = tm.chart();
  const TensorField phic = tm.lift_tensor11(s.phi(), LiftKind::Complete);
  const TensorField etav_xiv = form_times_vector(tm.lift_oneform(s.eta(), LiftKind::Vertical), tm.vlift_vector(s.xi()));
  const TensorField etac_xic = form_times_vector(tm.lift_oneform(s.eta(), LiftKind::Complete), tm.clift_vector(s.xi()));
  const TensorField k = phic + Expr(params.eps1) * etav_xiv + Expr(params.eps2) * etac_xic;
  TensorField j = half_p(params) * identity11(chart) - Expr(params.c()) * k;
  return {MetallicKind::CompleteJ, std::move(j), params};
}

MetallicOnTM make_F(const ParacontactStructure& s, const TangentBundle& tm, MetallicParams params) {
  const ChartPtr& chart = tm.chart();
  const TensorField phih = tm.lift_tensor11(s.phi(), LiftKind::Horizontal);
  const TensorField etah_xih =
      form_times_vector(tm.lift_oneform(s.eta(), LiftKind::Horizontal), tm.hlift_vector(s.xi()));
  const TensorField etav_xiv = form_times_vector(tm.lift_oneform(s.eta(), LiftKind::Vertical), tm.vlift_vector(s.xi()));
  TensorField f = half_p(params) * identity11(chart) - Expr(params.c()) * (phih + etah_xih + etav_xiv);
  params.eps1 = 1;
  params.eps2 = 1;
  return {MetallicKind::HorizontalF, std::move(f), params};
}

}  // namespace

MetallicScalar MetallicParams::sigma() const { return metalift::sigma(p, q); }

MetallicScalar MetallicParams::c() const { return (MetallicScalar(2) * sigma() - MetallicScalar(p)) / MetallicScalar(2); }

std::string MetallicParams::to_string() const {
  return "(" + std::to_string(p) + "," + std::to_string(q) + "," + (eps1 > 0 ? "+" : "-") + "," +
         (eps2 > 0 ? "+" : "-") + ")";
}

CertifiedPSasakian CertifiedPSasakian::certify(const ParacontactStructure& s, const Assessor& assessor) {
  std::vector<Verdict> all = check_almost_paracontact(s, assessor);
  for (auto& v : check_metric_compat(s, assessor)) all.push_back(std::move(v));
  for (auto& v : check_p_sasakian(s, assessor)) all.push_back(std::move(v));
  for (const auto& v : all) {
    if (!v.holds) throw PreconditionError("structure is not P-Sasakian: " + v.id + " fails");
  }
  return CertifiedPSasakian(s);
}

MetallicOnTM build_J(const CertifiedPSasakian& s, const TangentBundle& tm, MetallicParams params) {
  return make_J(s.structure(), tm, params);
}

MetallicOnTM build_F(const CertifiedPSasakian& s, const TangentBundle& tm, MetallicParams params) {
  return make_F(s.structure(), tm, params);
}

MetallicOnTM build_J_unverified(const ParacontactStructure& s, const TangentBundle& tm, MetallicParams params) {
  return make_J(s, tm, params);
}

MetallicOnTM build_F_unverified(const ParacontactStructure& s, const TangentBundle& tm, MetallicParams params) {
  return make_F(s, tm, params);
}

Verdict check_metallic(const TensorField& t, int p, int q, const Assessor& assessor) {
  if (t.valence() != Valence{1, 1}) throw ShapeError("check_metallic needs a (1,1) tensor");
  const TensorField rhs = Expr(p) * t + Expr(q) * identity11(t.chart());
  return assessor.assess("metallic", column_claims("T^2 - pT - qI", compose(t, t), rhs));
}

Verdict check_metallic(const MetallicOnTM& t, const Assessor& assessor) {
  return check_metallic(t.tensor, t.params.p, t.params.q, assessor);
}

CompatVerdicts check_compat(const TensorField& metric, const TensorField& t, int p, int q, const Assessor& assessor) {
  if (metric.valence() != Valence{0, 2}) throw ShapeError("check_compat needs a (0,2) metric");
  const TensorField mt = matmul02_11(metric, t);  // m(X, TY)
  const TensorField lhs = ttm(t, metric);         // m(TX, TY)
  const TensorField rhs = Expr(p) * mt + compat_scalar(Expr(q), metric);
  CompatVerdicts out{assessor.assess("compat-pq", column_claims("m(TX,TY) - p m(X,TY) - q m(X,Y)", lhs, rhs)),
                     assessor.assess("compat-symmetric", column_claims("m(TX,Y) - m(X,TY)", transpose02(mt), mt))};
  return out;
}

CompatVerdicts check_compat(const TensorField& metric, const MetallicOnTM& t, const Assessor& assessor) {
  return check_compat(metric, t.tensor, t.params.p, t.params.q, assessor);
}

Verdict check_nijenhuis_vanishes(const TensorField& t, const Assessor& assessor) {
  const TensorField nt = nijenhuis(t);
  const std::size_t m = t.dim();
  std::vector<Claim> claims;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      std::vector<Expr> comps;
      for (std::size_t k = 0; k < m; ++k) comps.push_back(nt.at({k, i, j}));
      claims.push_back({"N(d/d" + name_of(t.chart(), i) + ",d/d" + name_of(t.chart(), j) + ")", comps,
                        std::vector<Expr>(m, Expr(0))});
    }
  }
  return assessor.assess("nijenhuis-zero", claims);
}

Verdict check_nijenhuis_nonzero(const TensorField& t, const Assessor& assessor) {
  const TensorField nt = nijenhuis(t);
  return assessor.assess("nijenhuis-nonzero", {zero_claim("N_T", nt)}, Expect::Differ);
}

std::vector<NijenhuisRow> nijenhuis_rows(const ParacontactStructure& s, const TangentBundle& tm, const MetallicOnTM& j,
                                         const Assessor& assessor) {
  require_bundle(j, tm);
  if (j.kind != MetallicKind::CompleteJ || j.params.eps1 != 1 || j.params.eps2 != 1) {
    throw ParameterError("the closed forms apply to J with signs (+,+)");
  }
  const TensorField& jt = j.tensor;
  const Expr a = Expr(j.params.c() * j.params.c());
  const NTensors nt = n_tensors(s);
  const auto frame = distribution_frame(s, assessor);
  const TensorField xiv = tm.vlift_vector(s.xi());
  const TensorField xic = tm.clift_vector(s.xi());
  auto nj = [&](const TensorField& x, const TensorField& y) { return nijenhuis(jt, x, y); };
  auto zero = TensorField::zero(tm.chart(), {1, 0});

  std::vector<Claim> r1, r2, r3, r4, r5, r6, r7;
  for (const auto& fx : frame) {
    const TensorField& x = fx.field;
    const TensorField xv = tm.vlift_vector(x);
    const TensorField xc = tm.clift_vector(x);
    for (const auto& fy : frame) {
      const TensorField& y = fy.field;
      const TensorField yv = tm.vlift_vector(y);
      const TensorField yc = tm.clift_vector(y);
      const std::string pl = pair_label(fx, fy);
      const TensorField n1 = n1_on(s, x, y);
      const Expr n2 = n2_on(s, x, y);
      r1.push_back(tensor_claim("N_J(X^v,Y^v) " + pl, nj(xv, yv), zero));
      r2.push_back(tensor_claim("N_J(X^v,Y^c) " + pl, nj(xv, yc), a * (tm.vlift_vector(n1) + n2 * xic)));
      r3.push_back(tensor_claim("N_J(X^c,Y^c) " + pl, nj(xc, yc), a * (tm.clift_vector(n1) + n2 * xiv)));
    }
    const std::string xl = "(d" + std::to_string(fx.index + 1) + ")";
    const TensorField n3x = apply11(nt.n3, x);
    const TensorField phin3x = apply11(s.phi(), n3x);
    const Expr n4x = apply(nt.n4, x);
    const Expr n4phix = apply(nt.n4, apply11(s.phi(), x));
    const Expr n2xxi = n2_on(s, x, s.xi());
    r4.push_back(tensor_claim("N_J(X^v,xi^v) " + xl, nj(xv, xiv), a * (-tm.vlift_vector(n3x) + n4x * xic)));
    r5.push_back(tensor_claim("N_J(X^v,xi^c) " + xl, nj(xv, xic),
                              a * (tm.vlift_vector(phin3x - n4x * s.xi()) + n2xxi * xic)));
    r6.push_back(tensor_claim("N_J(X^c,xi^v) " + xl, nj(xc, xiv),
                              a * (-tm.clift_vector(n3x) + tm.vlift_vector(phin3x) - tm.clift(n4phix - n4x) * xic)));
    r7.push_back(tensor_claim("N_J(X^c,xi^c) " + xl, nj(xc, xic),
                              a * (-tm.vlift_vector(n3x) + (n4x + n2xxi) * xic +
                                   tm.clift_vector(phin3x - n4x * s.xi()))));
  }
  std::vector<Claim> rxi{tensor_claim("N_J(xi^v,xi^v)", nj(xiv, xiv), zero),
                         tensor_claim("N_J(xi^c,xi^c)", nj(xic, xic), zero),
                         tensor_claim("N_J(xi^v,xi^c)", nj(xiv, xic), zero)};
  return {
      {"vv", true, assessor.assess("N_J(X^v,Y^v)", r1)},
      {"vc", true, assessor.assess("N_J(X^v,Y^c)", r2)},
      {"cc", true, assessor.assess("N_J(X^c,Y^c)", r3)},
      {"v-xi-v", true, assessor.assess("N_J(X^v,xi^v)", r4)},
      {"v-xi-c", true, assessor.assess("N_J(X^v,xi^c)", r5)},
      {"c-xi-v", true, assessor.assess("N_J(X^c,xi^v)", r6)},
      {"c-xi-c", false, assessor.assess("N_J(X^c,xi^c)", r7)},
      {"xi-xi", true, assessor.assess("N_J(xi,xi)", rxi)},
  };
}

ParallelityProbe parallelity_probe(const ParacontactStructure& s, const TangentBundle& tm, const MetallicOnTM& t,
                                   const Connection& lifted, const Assessor& assessor) {
  require_bundle(t, tm);
  const bool complete = t.kind == MetallicKind::CompleteJ;
  const LiftKind lk = complete ? LiftKind::Complete : LiftKind::Horizontal;
  const Expr c = Expr(t.params.c());
  const TensorField xil = tm.lift_vector(s.xi(), lk);
  const TensorField txi = apply11(t.tensor, xil);
  const std::string tag = complete ? "(nabla^c_{X^c} J) xi^c" : "(nabla^h_{X^h} F) xi^h";

  std::vector<std::pair<std::string, TensorField>> dirs;
  for (const auto& m : distribution_frame(s, assessor)) dirs.emplace_back("d" + std::to_string(m.index + 1), m.field);
  const std::size_t n_d = dirs.size();
  dirs.emplace_back("xi", s.xi());

  std::vector<Claim> closed, nonzero;
  for (std::size_t k = 0; k < dirs.size(); ++k) {
    const auto& [label, x] = dirs[k];
    const TensorField xl = tm.lift_vector(x, lk);
    const TensorField residual = nabla(lifted, xl, txi) - apply11(t.tensor, nabla(lifted, xl, xil));
    const TensorField phix = apply11(s.phi(), x);
    const TensorField phi2x = apply11(s.phi(), phix);
    const TensorField form = -(c * (tm.vlift_vector(phix) - tm.lift_vector(phi2x, lk)));
    closed.push_back(tensor_claim(tag + " X=" + label, residual, form));
    if (k < n_d) nonzero.push_back(zero_claim(tag + " X=" + label, residual));
  }
  return {assessor.assess("closed-form", closed), assessor.assess("nonzero", nonzero, Expect::Differ)};
}

IntegrabilityConditions check_F_integrability_conditions(const ParacontactStructure& s, const Assessor& assessor) {
  const Connection& lc = s.levi_civita();
  const TensorField r = curvature(lc);
  const auto frame = distribution_frame(s, assessor);
  auto phi = [&](const TensorField& v) { return apply11(s.phi(), v); };
  std::vector<Claim> e4, e5, eta;
  for (const auto& fx : frame) {
    const TensorField& x = fx.field;
    for (const auto& fy : frame) {
      const TensorField& y = fy.field;
      for (const auto& fz : frame) {
        const TensorField& z = fz.field;
        const TensorField lhs = apply_curvature(r, phi(x), phi(y), z) + apply_curvature(r, x, y, z) -
                                phi(apply_curvature(r, phi(x), y, z) + apply_curvature(r, x, phi(y), z));
        e4.push_back(zero_claim("e4 " + pair_label(fx, fy) + " on d" + std::to_string(fz.index + 1), lhs));
      }
      const std::string pl = pair_label(fx, fy);
      const TensorField lhs5 = nabla(lc, phi(x), phi(y)) - phi(nabla(lc, phi(x), y)) - phi(nabla(lc, x, phi(y))) +
                               nabla(lc, x, y);
      e5.push_back(zero_claim("e5 " + pl, lhs5));
      eta.push_back(Claim::scalar("eta(nabla_X Y) " + pl, apply(s.eta(), nabla(lc, x, y)), Expr(0)));
    }
  }
  IntegrabilityConditions out{check_D_flat(s, lc, assessor), assessor.assess("e4", e4), assessor.assess("e5", e5), {}};
  const auto a5 = assessor.agreement(e5);
  const auto ae = assessor.agreement(eta);
  Verdict& iff = out.e5_iff_eta;
  iff.id = "e5-iff-eta";
  for (std::size_t pi = 0; pi < a5.size(); ++pi) {
    for (std::size_t k = 0; k < e5.size(); ++k) {
      ++iff.comparisons;
      if (a5[pi][k] != ae[pi][k]) {
        iff.holds = false;
        if (iff.witnesses.size() < 3) {
          iff.witnesses.push_back({pi, assessor.points()[pi].to_string(), e5[k].label, 0,
                                   a5[pi][k] ? "e5 holds, eta(nabla_X Y) != 0" : "e5 fails, eta(nabla_X Y) = 0", 1.0});
        }
      }
    }
  }
  return out;
}

TensorField fundamental_form(const TensorField& metric, const MetallicOnTM& t) {
  return matmul02_11(metric, t.tensor) - half_p(t.params) * metric;
}

FormShape form_shape(const TensorField& form, const Assessor& assessor) {
  const std::size_t m = form.dim();
  std::vector<Claim> sym, anti;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i; j < m; ++j) {
      const std::string pl = "(" + name_of(form.chart(), i) + "," + name_of(form.chart(), j) + ")";
      if (i != j) sym.push_back(Claim::scalar("Phi" + pl + " = Phi^T", form.at({i, j}), form.at({j, i})));
      anti.push_back(Claim::scalar("Phi" + pl + " = -Phi^T", form.at({i, j}), -form.at({j, i})));
    }
  }
  return {assessor.assess("symmetric", sym), assessor.assess("antisymmetric", anti)};
}

PhiPrimeProbe phi_prime_probe(const ParacontactStructure& s, const TangentBundle& tm, const MetallicOnTM& f,
                              const std::vector<TensorField>& unit_fields, const Assessor& assessor) {
  require_bundle(f, tm);
  if (f.kind != MetallicKind::HorizontalF) throw ParameterError("the Phi' probe needs F");
  if (unit_fields.empty()) throw ParameterError("the Phi' probe needs at least one unit field");
  const TensorField phi_prime = fundamental_form(tm.sasaki_metric(), f);
  const Expr scale = Expr((MetallicScalar(2) * f.params.sigma() - MetallicScalar(f.params.p)) / MetallicScalar(6));
  const TensorField xiv = tm.vlift_vector(s.xi());
  std::vector<Claim> plus, minus;
  Expr first;
  for (std::size_t k = 0; k < unit_fields.size(); ++k) {
    const TensorField& x = unit_fields[k];
    const Expr value = coboundary(phi_prime, tm.hlift_vector(x), tm.vlift_vector(x), xiv);
    if (k == 0) first = value;
    const Expr expected = scale * apply02(s.base().metric(), x, x);
    const std::string label = "dPhi'(X^h,X^v,xi^v) X#" + std::to_string(k + 1);
    plus.push_back(Claim::scalar(label, value, expected));
    minus.push_back(Claim::scalar(label, value, -expected));
  }
  auto all_true = [](const std::vector<std::vector<bool>>& a) {
    for (const auto& row : a) {
      for (bool b : row) {
        if (!b) return false;
      }
    }
    return true;
  };
  std::string sign = "?";
  if (all_true(assessor.agreement(plus))) {
    sign = "+";
  } else if (all_true(assessor.agreement(minus))) {
    sign = "-";
  }
  Verdict v = assessor.assess("dPhi'-magnitude", sign == "-" ? minus : plus);
  return {std::move(v), sign, first};
}

std::vector<ClosednessRow> closedness_rows(const ParacontactStructure& s, const TangentBundle& tm,
                                           const MetallicOnTM& j, const Assessor& assessor) {
  require_bundle(j, tm);
  const TensorField phi_form = fundamental_form(tm.clift_metric(), j);
  const Connection& lc = s.levi_civita();
  const TensorField& g = s.base().metric();
  const auto frame = distribution_frame(s, assessor);
  auto phi = [&](const TensorField& v) { return apply11(s.phi(), v); };
  std::vector<ClosednessRow> out;
  for (const auto& fx : frame) {
    for (const auto& fy : frame) {
      for (const auto& fz : frame) {
        const TensorField &x = fx.field, &y = fy.field, &z = fz.field;
        const Expr d = coboundary(phi_form, tm.clift_vector(x), tm.clift_vector(y), tm.vlift_vector(z));
        const Expr eq = apply02(g, nabla(lc, y, x), phi(z)) + apply02(g, nabla(lc, z, y), phi(x)) +
                        apply02(g, nabla(lc, x, z), phi(y));
        out.push_back({"(d" + std::to_string(fx.index + 1) + ",d" + std::to_string(fy.index + 1) + ",d" +
                           std::to_string(fz.index + 1) + ")",
                       d, eq});
      }
    }
  }
  return out;
}

}  // namespace metalift
