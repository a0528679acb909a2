#include "metalift/paracontact.hpp"

#include "metalift/errors.hpp"

namespace metalift {
namespace {

std::string idx(std::size_t i) { return std::to_string(i + 1); }

std::vector<TensorField> coordinate_frame(const ChartPtr& chart) {
  std::vector<TensorField> out;
  for (std::size_t i = 0; i < chart->dim(); ++i) out.push_back(coordinate_field(chart, i));
  return out;
}

TensorField scale_vector(const Expr& s, const TensorField& v) { return s * v; }

}  // namespace

ParacontactStructure::ParacontactStructure(ChartedManifold base, TensorField phi, TensorField eta, TensorField xi)
    : base_(std::move(base)),
      phi_(std::move(phi)),
      eta_(std::move(eta)),
      xi_(std::move(xi)),
      lc_(christoffel(base_)) {
  if (phi_.valence() != Valence{1, 1}) throw ShapeError("phi must be a (1,1) tensor");
  if (eta_.valence() != Valence{0, 1}) throw ShapeError("eta must be a 1-form");
  if (xi_.valence() != Valence{1, 0}) throw ShapeError("xi must be a vector field");
  if (phi_.dim() != dim() || eta_.dim() != dim() || xi_.dim() != dim()) {
    throw ShapeError("structure tensors and metric have different dimensions");
  }
}

std::vector<Verdict> check_almost_paracontact(const ParacontactStructure& s, const Assessor& assessor) {
  const auto& chart = s.chart();
  const TensorField phi2 = compose(s.phi(), s.phi());
  const TensorField rhs = identity11(chart) - form_times_vector(s.eta(), s.xi());
  std::vector<Claim> sq;
  const std::size_t n = s.dim();
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Expr> l, r;
    for (std::size_t i = 0; i < n; ++i) {
      l.push_back(phi2.at({i, j}));
      r.push_back(rhs.at({i, j}));
    }
    sq.push_back({"phi^2 d" + idx(j), l, r});
  }
  std::vector<Verdict> out;
  out.push_back(assessor.assess("phi-squared", sq));
  out.push_back(assessor.assess("eta-xi", {Claim::scalar("eta(xi)", apply(s.eta(), s.xi()), Expr(1))}));
  out.push_back(assessor.assess("phi-xi", {zero_claim("phi xi", apply11(s.phi(), s.xi()))}));
  std::vector<Claim> ep;
  for (std::size_t j = 0; j < n; ++j) {
    ep.push_back(Claim::scalar("eta(phi d" + idx(j) + ")", apply(s.eta(), apply11(s.phi(), coordinate_field(chart, j))),
                               Expr(0)));
  }
  out.push_back(assessor.assess("eta-phi", ep));
  return out;
}

std::vector<Verdict> check_metric_compat(const ParacontactStructure& s, const Assessor& assessor) {
  const auto frame = coordinate_frame(s.chart());
  const TensorField& g = s.base().metric();
  std::vector<Claim> eq4, sym, xi;
  for (std::size_t i = 0; i < frame.size(); ++i) {
    const TensorField pi = apply11(s.phi(), frame[i]);
    for (std::size_t j = 0; j < frame.size(); ++j) {
      const TensorField pj = apply11(s.phi(), frame[j]);
      const std::string pair = "(d" + idx(i) + ",d" + idx(j) + ")";
      eq4.push_back(Claim::scalar("g" + pair, apply02(g, frame[i], frame[j]),
                                  apply02(g, pi, pj) + apply(s.eta(), frame[i]) * apply(s.eta(), frame[j])));
      sym.push_back(Claim::scalar("g(X,phi Y)" + pair, apply02(g, frame[i], pj), apply02(g, pi, frame[j])));
    }
    xi.push_back(Claim::scalar("g(d" + idx(i) + ",xi)", apply02(g, frame[i], s.xi()), apply(s.eta(), frame[i])));
  }
  return {assessor.assess("g-phi-phi", eq4), assessor.assess("g-phi-symmetric", sym),
          assessor.assess("g-xi-eta", xi)};
}

std::vector<Verdict> check_p_sasakian(const ParacontactStructure& s, const Assessor& assessor) {
  const auto frame = coordinate_frame(s.chart());
  const TensorField& g = s.base().metric();
  const Connection& lc = s.levi_civita();
  std::vector<Claim> dphi, dxi;
  for (std::size_t i = 0; i < frame.size(); ++i) {
    const TensorField& x = frame[i];
    const TensorField nphi = covariant_derivative(lc, x, s.phi());
    for (std::size_t j = 0; j < frame.size(); ++j) {
      const TensorField& y = frame[j];
      const Expr ex = apply(s.eta(), x);
      const Expr ey = apply(s.eta(), y);
      const TensorField rhs = scale_vector(-apply02(g, x, y), s.xi()) - scale_vector(ey, x) +
                              scale_vector(Expr(2) * ex * ey, s.xi());
      dphi.push_back(tensor_claim("(nabla_d" + idx(i) + " phi) d" + idx(j), apply11(nphi, y), rhs));
    }
    dxi.push_back(tensor_claim("nabla_d" + idx(i) + " xi", nabla(lc, x, s.xi()), apply11(s.phi(), x)));
  }
  return {assessor.assess("nabla-phi", dphi), assessor.assess("nabla-xi", dxi)};
}

TensorField n1_on(const ParacontactStructure& s, const TensorField& x, const TensorField& y) {
  const TensorField deta = exterior_derivative(s.eta());
  return nijenhuis(s.phi(), x, y) - (Expr(2) * apply02(deta, x, y)) * s.xi();
}

Expr n2_on(const ParacontactStructure& s, const TensorField& x, const TensorField& y) {
  const TensorField lx = lie_derivative(apply11(s.phi(), x), s.eta());
  const TensorField ly = lie_derivative(apply11(s.phi(), y), s.eta());
  return apply(lx, y) - apply(ly, x);
}

NTensors n_tensors(const ParacontactStructure& s) {
  const auto& chart = s.chart();
  const std::size_t n = s.dim();
  const TensorField nphi = nijenhuis(s.phi());
  const TensorField deta = exterior_derivative(s.eta());
  TensorField n1 = TensorField::generate(chart, {1, 2}, [&](std::span<const std::size_t> k) {
    return nphi.at(k) - Expr(2) * deta.at({k[1], k[2]}) * s.xi()[k[0]];
  });
  std::vector<TensorField> lphi;
  for (std::size_t i = 0; i < n; ++i) {
    lphi.push_back(lie_derivative(apply11(s.phi(), coordinate_field(chart, i)), s.eta()));
  }
  TensorField n2 = tensor02(chart, [&](std::size_t i, std::size_t j) { return lphi[i][j] - lphi[j][i]; });
  return {std::move(n1), std::move(n2), lie_derivative(s.xi(), s.phi()), lie_derivative(s.xi(), s.eta())};
}

bool in_distribution(const ParacontactStructure& s, const TensorField& v, const Point& point, EvalMode mode) {
  Value val = eval(apply(s.eta(), v), point, mode);
  if (mode == EvalMode::Exact) return std::get<MetallicScalar>(val).is_zero();
  return std::get<double>(val) == 0.0;
}

std::vector<FrameMember> distribution_frame(const ParacontactStructure& s, const Assessor& assessor) {
  const Expr exi = apply(s.eta(), s.xi());
  std::vector<FrameMember> out;
  for (std::size_t i = 0; i < s.dim(); ++i) {
    const TensorField d = coordinate_field(s.chart(), i);
    TensorField member = d - quotient(apply(s.eta(), d), exi) * s.xi();
    const auto pattern = assessor.agreement({zero_claim("member", member)});
    bool vanishes = true;
    for (const auto& row : pattern) vanishes = vanishes && row.front();
    if (!vanishes) out.push_back({i, std::move(member)});
  }
  return out;
}

std::string pair_label(const FrameMember& a, const FrameMember& b) {
  return "(d" + idx(a.index) + ",d" + idx(b.index) + ")";
}

Verdict check_D_flat(const ParacontactStructure& s, const Connection& c, const Assessor& assessor) {
  const auto frame = distribution_frame(s, assessor);
  std::vector<Claim> claims;
  for (const auto& a : frame) {
    for (const auto& b : frame) {
      claims.push_back(Claim::scalar("eta(nabla_X Y) " + pair_label(a, b), apply(s.eta(), nabla(c, a.field, b.field)),
                                     Expr(0)));
    }
  }
  return assessor.assess("D-flat", claims);
}

}  // namespace metalift
