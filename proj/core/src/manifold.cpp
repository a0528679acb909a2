#include "metalift/manifold.hpp"

#include "metalift/errors.hpp"

namespace metalift {
namespace {

std::size_t ipow(std::size_t base, int e) {
  std::size_t r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

void require_valence(const TensorField& t, Valence v, const char* what) {
  if (t.valence() != v) {
    throw ShapeError(std::string(what) + ": expected valence (" + std::to_string(v.contravariant) + "," +
                     std::to_string(v.covariant) + "), got (" + std::to_string(t.valence().contravariant) +
                     "," + std::to_string(t.valence().covariant) + ")");
  }
}

void require_same_chart(const TensorField& a, const TensorField& b) {
  if (a.chart() != b.chart() && a.dim() != b.dim()) throw ShapeError("tensor fields live on different charts");
}

Expr partial(const Expr& e, const Chart& chart, std::size_t i) { return diff(e, chart.coord(i)); }

}  // namespace

ChartPtr base_chart(int n, std::vector<Expr> domain, std::vector<std::string> names) {
  if (n < 1) throw ParameterError("dimension must be positive");
  auto chart = std::make_shared<Chart>();
  for (int i = 1; i <= n; ++i) chart->coords.push_back(VarId::base(i));
  if (names.empty()) {
    for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  }
  if (names.size() != static_cast<std::size_t>(n)) throw ShapeError("coordinate name count differs from dimension");
  chart->names = std::move(names);
  chart->domain = std::move(domain);
  return chart;
}

TensorField::TensorField(ChartPtr chart, Valence valence, std::vector<Expr> components)
    : chart_(std::move(chart)), valence_(valence), components_(std::move(components)) {
  if (!chart_) throw ParameterError("tensor field without a chart");
  if (valence_.contravariant < 0 || valence_.covariant < 0) throw ShapeError("negative valence");
  const std::size_t expected = ipow(chart_->dim(), valence_.rank());
  if (components_.size() != expected) {
    throw ShapeError("tensor field needs " + std::to_string(expected) + " components, got " +
                     std::to_string(components_.size()));
  }
}

TensorField TensorField::zero(ChartPtr chart, Valence valence) {
  const std::size_t count = ipow(chart->dim(), valence.rank());
  return TensorField(std::move(chart), valence, std::vector<Expr>(count, Expr(0)));
}

TensorField TensorField::generate(ChartPtr chart, Valence valence,
                                  const std::function<Expr(std::span<const std::size_t>)>& fn) {
  const std::size_t n = chart->dim();
  const int rank = valence.rank();
  const std::size_t count = ipow(n, rank);
  std::vector<Expr> comps;
  comps.reserve(count);
  std::vector<std::size_t> idx(static_cast<std::size_t>(rank), 0);
  for (std::size_t flat = 0; flat < count; ++flat) {
    std::size_t rem = flat;
    for (int k = rank - 1; k >= 0; --k) {
      idx[static_cast<std::size_t>(k)] = rem % n;
      rem /= n;
    }
    comps.push_back(fn(idx));
  }
  return TensorField(std::move(chart), valence, std::move(comps));
}

std::size_t TensorField::flat_index(std::span<const std::size_t> idx) const {
  if (idx.size() != static_cast<std::size_t>(valence_.rank())) throw ShapeError("wrong number of tensor indices");
  std::size_t flat = 0;
  for (std::size_t k : idx) {
    if (k >= dim()) throw ShapeError("tensor index out of range");
    flat = flat * dim() + k;
  }
  return flat;
}

const Expr& TensorField::at(std::initializer_list<std::size_t> idx) const {
  return components_[flat_index(std::span<const std::size_t>(idx.begin(), idx.size()))];
}

const Expr& TensorField::at(std::span<const std::size_t> idx) const { return components_[flat_index(idx)]; }

const Expr& TensorField::operator[](std::size_t i) const {
  if (valence_.rank() != 1) throw ShapeError("operator[] needs a rank-1 field");
  return components_.at(i);
}

TensorField operator+(const TensorField& a, const TensorField& b) {
  require_same_chart(a, b);
  if (a.valence() != b.valence()) throw ShapeError("adding tensors of different valence");
  std::vector<Expr> c(a.components().size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.components()[i] + b.components()[i];
  return TensorField(a.chart(), a.valence(), std::move(c));
}

TensorField operator-(const TensorField& a, const TensorField& b) {
  require_same_chart(a, b);
  if (a.valence() != b.valence()) throw ShapeError("subtracting tensors of different valence");
  std::vector<Expr> c(a.components().size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.components()[i] - b.components()[i];
  return TensorField(a.chart(), a.valence(), std::move(c));
}

TensorField operator*(const Expr& s, const TensorField& t) {
  std::vector<Expr> c(t.components().size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = s * t.components()[i];
  return TensorField(t.chart(), t.valence(), std::move(c));
}

TensorField operator-(const TensorField& t) { return Expr(-1) * t; }

TensorField vector_field(ChartPtr chart, std::vector<Expr> components) {
  return TensorField(std::move(chart), {1, 0}, std::move(components));
}

TensorField one_form(ChartPtr chart, std::vector<Expr> components) {
  return TensorField(std::move(chart), {0, 1}, std::move(components));
}

TensorField tensor11(ChartPtr chart, const std::function<Expr(std::size_t, std::size_t)>& fn) {
  return TensorField::generate(std::move(chart), {1, 1},
                               [&](std::span<const std::size_t> i) { return fn(i[0], i[1]); });
}

TensorField tensor02(ChartPtr chart, const std::function<Expr(std::size_t, std::size_t)>& fn) {
  return TensorField::generate(std::move(chart), {0, 2},
                               [&](std::span<const std::size_t> i) { return fn(i[0], i[1]); });
}

TensorField coordinate_field(ChartPtr chart, std::size_t i) {
  std::vector<Expr> c(chart->dim(), Expr(0));
  c.at(i) = Expr(1);
  return vector_field(std::move(chart), std::move(c));
}

TensorField identity11(ChartPtr chart) {
  return tensor11(std::move(chart), [](std::size_t i, std::size_t j) { return Expr(i == j ? 1 : 0); });
}

Expr apply(const TensorField& form, const TensorField& x) {
  require_valence(form, {0, 1}, "apply(form, X)");
  require_valence(x, {1, 0}, "apply(form, X)");
  std::vector<Expr> terms;
  for (std::size_t i = 0; i < x.dim(); ++i) terms.push_back(form[i] * x[i]);
  return sum(std::move(terms));
}

TensorField apply11(const TensorField& f, const TensorField& x) {
  require_valence(f, {1, 1}, "apply11");
  require_valence(x, {1, 0}, "apply11");
  const std::size_t n = f.dim();
  std::vector<Expr> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Expr> terms;
    for (std::size_t j = 0; j < n; ++j) terms.push_back(f.at({i, j}) * x[j]);
    out[i] = sum(std::move(terms));
  }
  return vector_field(f.chart(), std::move(out));
}

Expr apply02(const TensorField& t, const TensorField& x, const TensorField& y) {
  require_valence(t, {0, 2}, "apply02");
  std::vector<Expr> terms;
  for (std::size_t i = 0; i < t.dim(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < t.dim(); ++j) terms.push_back(t.at({i, j}) * x[i] * y[j]);
  }
  return sum(std::move(terms));
}

TensorField compose(const TensorField& f, const TensorField& g) {
  require_valence(f, {1, 1}, "compose");
  require_valence(g, {1, 1}, "compose");
  const std::size_t n = f.dim();
  return tensor11(f.chart(), [&](std::size_t i, std::size_t j) {
    std::vector<Expr> terms;
    for (std::size_t k = 0; k < n; ++k) terms.push_back(f.at({i, k}) * g.at({k, j}));
    return sum(std::move(terms));
  });
}

TensorField form_times_vector(const TensorField& form, const TensorField& v) {
  require_valence(form, {0, 1}, "form_times_vector");
  require_valence(v, {1, 0}, "form_times_vector");
  return tensor11(v.chart(), [&](std::size_t i, std::size_t j) { return v[i] * form[j]; });
}

Expr derivative(const TensorField& x, const Expr& f) {
  require_valence(x, {1, 0}, "derivative");
  std::vector<Expr> terms;
  for (std::size_t i = 0; i < x.dim(); ++i) {
    if (x[i].is_zero()) continue;
    terms.push_back(x[i] * partial(f, *x.chart(), i));
  }
  return sum(std::move(terms));
}

std::vector<Expr> components_of(const TensorField& v) {
  require_valence(v, {1, 0}, "components_of");
  return v.components();
}

Expr determinant(const std::vector<std::vector<Expr>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return Expr(1);
  if (n == 1) return m[0][0];
  if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  std::vector<Expr> terms;
  for (std::size_t col = 0; col < n; ++col) {
    if (m[0][col].is_zero()) continue;
    std::vector<std::vector<Expr>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Expr> row;
      for (std::size_t c = 0; c < n; ++c) {
        if (c != col) row.push_back(m[r][c]);
      }
      minor.push_back(std::move(row));
    }
    Expr t = m[0][col] * determinant(minor);
    terms.push_back(col % 2 == 0 ? t : -t);
  }
  return sum(std::move(terms));
}

ChartedManifold::ChartedManifold(ChartPtr chart, TensorField metric)
    : chart_(std::move(chart)), metric_(std::move(metric)), inverse_(TensorField::zero(chart_, {2, 0})) {
  require_valence(metric_, {0, 2}, "metric");
  if (metric_.dim() != chart_->dim()) throw ShapeError("metric dimension differs from chart dimension");
  const std::size_t n = dim();
  std::vector<std::vector<Expr>> g(n, std::vector<Expr>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) g[i][j] = metric_.at({i, j});
  }
  det_ = determinant(g);
  if (det_.is_zero()) throw PreconditionError("metric determinant is identically zero");
  // g^{ij} = cofactor_{ji} / det
  inverse_ = TensorField::generate(chart_, {2, 0}, [&](std::span<const std::size_t> idx) {
    const std::size_t i = idx[0];
    const std::size_t j = idx[1];
    std::vector<std::vector<Expr>> minor;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == j) continue;
      std::vector<Expr> row;
      for (std::size_t c = 0; c < n; ++c) {
        if (c != i) row.push_back(g[r][c]);
      }
      minor.push_back(std::move(row));
    }
    Expr cof = determinant(minor);
    if ((i + j) % 2 == 1) cof = -cof;
    return quotient(cof, det_);
  });
}

Verdict check_metric(const ChartedManifold& m, const Assessor& assessor) {
  std::vector<Claim> symmetric;
  const std::size_t n = m.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      symmetric.push_back(Claim::scalar("g" + std::to_string(i + 1) + std::to_string(j + 1) + " = g" +
                                            std::to_string(j + 1) + std::to_string(i + 1),
                                        m.metric().at({i, j}), m.metric().at({j, i})));
    }
  }
  Verdict sym = assessor.assess("metric-symmetric", symmetric);
  Verdict nondeg =
      assessor.assess("metric-nondegenerate", {Claim::scalar("det g", m.metric_determinant(), Expr(0))}, Expect::Differ);
  return combine("metric", {sym, nondeg});
}

Connection::Connection(ChartPtr chart, std::vector<Expr> coefficients)
    : chart_(std::move(chart)), coeff_(std::move(coefficients)) {
  const std::size_t n = chart_->dim();
  if (coeff_.size() != n * n * n) throw ShapeError("connection needs n^3 coefficients");
}

const Expr& Connection::gamma(std::size_t k, std::size_t i, std::size_t j) const {
  const std::size_t n = dim();
  return coeff_.at((k * n + i) * n + j);
}

Connection christoffel(const ChartedManifold& m) {
  const std::size_t n = m.dim();
  const Chart& chart = *m.chart();
  const TensorField& g = m.metric();
  const TensorField& ginv = m.inverse_metric();
  // dg[l][i][j] = ∂_l g_ij
  std::vector<Expr> dg(n * n * n);
  for (std::size_t l = 0; l < n; ++l) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) dg[(l * n + i) * n + j] = partial(g.at({i, j}), chart, l);
    }
  }
  auto d = [&](std::size_t l, std::size_t i, std::size_t j) -> const Expr& { return dg[(l * n + i) * n + j]; };
  std::vector<Expr> coeff(n * n * n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (j < i) {
          coeff[(k * n + i) * n + j] = coeff[(k * n + j) * n + i];
          continue;
        }
        std::vector<Expr> terms;
        for (std::size_t l = 0; l < n; ++l) {
          if (ginv.at({k, l}).is_zero()) continue;
          Expr koszul = d(i, j, l) + d(j, i, l) - d(l, i, j);
          if (koszul.is_zero()) continue;
          terms.push_back(ginv.at({k, l}) * koszul);
        }
        coeff[(k * n + i) * n + j] = Expr(Rational(1, 2)) * sum(std::move(terms));
      }
    }
  }
  return Connection(m.chart(), std::move(coeff));
}

TensorField curvature(const Connection& c) {
  const std::size_t n = c.dim();
  const Chart& chart = *c.chart();
  return TensorField::generate(c.chart(), {1, 3}, [&](std::span<const std::size_t> idx) {
    const std::size_t l = idx[0], i = idx[1], j = idx[2], k = idx[3];
    std::vector<Expr> terms{partial(c.gamma(l, j, k), chart, i), -partial(c.gamma(l, i, k), chart, j)};
    for (std::size_t m = 0; m < n; ++m) {
      terms.push_back(c.gamma(l, i, m) * c.gamma(m, j, k));
      terms.push_back(-(c.gamma(l, j, m) * c.gamma(m, i, k)));
    }
    return sum(std::move(terms));
  });
}

TensorField apply_curvature(const TensorField& r, const TensorField& x, const TensorField& y,
                            const TensorField& z) {
  require_valence(r, {1, 3}, "apply_curvature");
  const std::size_t n = r.dim();
  std::vector<Expr> out(n);
  for (std::size_t l = 0; l < n; ++l) {
    std::vector<Expr> terms;
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (y[j].is_zero()) continue;
        for (std::size_t k = 0; k < n; ++k) {
          if (z[k].is_zero()) continue;
          terms.push_back(r.at({l, i, j, k}) * x[i] * y[j] * z[k]);
        }
      }
    }
    out[l] = sum(std::move(terms));
  }
  return vector_field(r.chart(), std::move(out));
}

TensorField torsion(const Connection& c) {
  return TensorField::generate(c.chart(), {1, 2}, [&](std::span<const std::size_t> idx) {
    return c.gamma(idx[0], idx[1], idx[2]) - c.gamma(idx[0], idx[2], idx[1]);
  });
}

TensorField lie_bracket(const TensorField& x, const TensorField& y) {
  require_valence(x, {1, 0}, "lie_bracket");
  require_valence(y, {1, 0}, "lie_bracket");
  require_same_chart(x, y);
  const std::size_t n = x.dim();
  std::vector<Expr> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = derivative(x, y[i]) - derivative(y, x[i]);
  return vector_field(x.chart(), std::move(out));
}

TensorField covariant_derivative(const Connection& c, const TensorField& t) {
  const std::size_t n = c.dim();
  const Chart& chart = *c.chart();
  const Valence v = t.valence();
  auto sum_over = [n](const std::function<Expr(std::size_t)>& fn) {
    std::vector<Expr> terms;
    for (std::size_t m = 0; m < n; ++m) terms.push_back(fn(m));
    return sum(std::move(terms));
  };
  if (v == Valence{0, 0}) {
    return TensorField::generate(c.chart(), {0, 1}, [&](std::span<const std::size_t> idx) {
      return partial(t.components().front(), chart, idx[0]);
    });
  }
  if (v == Valence{1, 0}) {
    return TensorField::generate(c.chart(), {1, 1}, [&](std::span<const std::size_t> idx) {
      const std::size_t k = idx[0], i = idx[1];
      return partial(t[k], chart, i) + sum_over([&](std::size_t j) { return c.gamma(k, i, j) * t[j]; });
    });
  }
  if (v == Valence{0, 1}) {
    return TensorField::generate(c.chart(), {0, 2}, [&](std::span<const std::size_t> idx) {
      const std::size_t j = idx[0], i = idx[1];
      return partial(t[j], chart, i) - sum_over([&](std::size_t m) { return c.gamma(m, i, j) * t[m]; });
    });
  }
  if (v == Valence{1, 1}) {
    return TensorField::generate(c.chart(), {1, 2}, [&](std::span<const std::size_t> idx) {
      const std::size_t k = idx[0], j = idx[1], i = idx[2];
      return partial(t.at({k, j}), chart, i) +
             sum_over([&](std::size_t m) { return c.gamma(k, i, m) * t.at({m, j}); }) -
             sum_over([&](std::size_t m) { return c.gamma(m, i, j) * t.at({k, m}); });
    });
  }
  if (v == Valence{0, 2}) {
    return TensorField::generate(c.chart(), {0, 3}, [&](std::span<const std::size_t> idx) {
      const std::size_t a = idx[0], b = idx[1], i = idx[2];
      return partial(t.at({a, b}), chart, i) -
             sum_over([&](std::size_t m) { return c.gamma(m, i, a) * t.at({m, b}); }) -
             sum_over([&](std::size_t m) { return c.gamma(m, i, b) * t.at({a, m}); });
    });
  }
  throw CapabilityError("covariant derivative of valence (" + std::to_string(v.contravariant) + "," +
                        std::to_string(v.covariant) + ") is not supported");
}

TensorField covariant_derivative(const Connection& c, const TensorField& x, const TensorField& t) {
  require_valence(x, {1, 0}, "covariant_derivative direction");
  TensorField full = covariant_derivative(c, t);
  const Valence out_v = t.valence();
  const std::size_t n = c.dim();
  return TensorField::generate(c.chart(), out_v, [&](std::span<const std::size_t> idx) {
    std::vector<std::size_t> ext(idx.begin(), idx.end());
    ext.push_back(0);
    std::vector<Expr> terms;
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i].is_zero()) continue;
      ext.back() = i;
      terms.push_back(x[i] * full.at(std::span<const std::size_t>(ext)));
    }
    return sum(std::move(terms));
  });
}

TensorField nabla(const Connection& c, const TensorField& x, const TensorField& y) {
  require_valence(x, {1, 0}, "nabla");
  require_valence(y, {1, 0}, "nabla");
  const std::size_t n = c.dim();
  const Chart& chart = *c.chart();
  std::vector<Expr> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<Expr> terms;
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i].is_zero()) continue;
      std::vector<Expr> inner{partial(y[k], chart, i)};
      for (std::size_t j = 0; j < n; ++j) {
        if (!y[j].is_zero()) inner.push_back(c.gamma(k, i, j) * y[j]);
      }
      terms.push_back(x[i] * sum(std::move(inner)));
    }
    out[k] = sum(std::move(terms));
  }
  return vector_field(c.chart(), std::move(out));
}

TensorField lie_derivative(const TensorField& x, const TensorField& t) {
  require_valence(x, {1, 0}, "lie_derivative direction");
  const std::size_t n = x.dim();
  const Chart& chart = *x.chart();
  const Valence v = t.valence();
  if (v == Valence{0, 0}) return TensorField(x.chart(), v, {derivative(x, t.components().front())});
  if (v == Valence{1, 0}) return lie_bracket(x, t);
  if (v == Valence{0, 1}) {
    std::vector<Expr> out(n);
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Expr> terms{derivative(x, t[i])};
      for (std::size_t j = 0; j < n; ++j) terms.push_back(t[j] * partial(x[j], chart, i));
      out[i] = sum(std::move(terms));
    }
    return one_form(x.chart(), std::move(out));
  }
  if (v == Valence{1, 1}) {
    return tensor11(x.chart(), [&](std::size_t i, std::size_t j) {
      std::vector<Expr> terms{derivative(x, t.at({i, j}))};
      for (std::size_t k = 0; k < n; ++k) {
        terms.push_back(-(t.at({k, j}) * partial(x[i], chart, k)));
        terms.push_back(t.at({i, k}) * partial(x[k], chart, j));
      }
      return sum(std::move(terms));
    });
  }
  throw CapabilityError("Lie derivative of valence (" + std::to_string(v.contravariant) + "," +
                        std::to_string(v.covariant) + ") is not supported");
}

TensorField exterior_derivative(const TensorField& form) {
  if (form.valence() != Valence{0, 1}) {
    throw ShapeError("exterior_derivative without sample points accepts 1-forms only");
  }
  const Chart& chart = *form.chart();
  return tensor02(form.chart(), [&](std::size_t i, std::size_t j) {
    return Expr(Rational(1, 2)) * (partial(form[j], chart, i) - partial(form[i], chart, j));
  });
}

TensorField exterior_derivative(const TensorField& form, const Assessor& shape_check) {
  if (form.valence() == Valence{0, 1}) return exterior_derivative(form);
  if (form.valence() != Valence{0, 2}) throw ShapeError("exterior_derivative accepts 1-forms and 2-forms");
  const std::size_t n = form.dim();
  std::vector<Claim> anti;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      anti.push_back(Claim::scalar("form(" + std::to_string(i) + "," + std::to_string(j) + ") alternating",
                                   form.at({i, j}) + form.at({j, i}), Expr(0)));
    }
  }
  Verdict v = shape_check.assess("alternating", anti, Expect::Equal, 1);
  if (!v.holds) {
    throw ShapeError("exterior_derivative: input 2-form is not antisymmetric (" + v.witnesses.front().label +
                     " at " + v.witnesses.front().point + ")");
  }
  const Chart& chart = *form.chart();
  return TensorField::generate(form.chart(), {0, 3}, [&](std::span<const std::size_t> idx) {
    const std::size_t a = idx[0], b = idx[1], c = idx[2];
    return Expr(Rational(1, 3)) * (partial(form.at({b, c}), chart, a) + partial(form.at({c, a}), chart, b) +
                                   partial(form.at({a, b}), chart, c));
  });
}

Expr coboundary(const TensorField& form, const TensorField& x, const TensorField& y, const TensorField& z) {
  require_valence(form, {0, 2}, "coboundary");
  std::vector<Expr> terms{
      derivative(x, apply02(form, y, z)),
      derivative(y, apply02(form, z, x)),
      derivative(z, apply02(form, x, y)),
      -apply02(form, lie_bracket(x, y), z),
      -apply02(form, lie_bracket(z, x), y),
      -apply02(form, lie_bracket(y, z), x),
  };
  return Expr(Rational(1, 3)) * sum(std::move(terms));
}

TensorField nijenhuis(const TensorField& f, const TensorField& x, const TensorField& y) {
  require_valence(f, {1, 1}, "nijenhuis");
  const TensorField fx = apply11(f, x);
  const TensorField fy = apply11(f, y);
  const TensorField xy = lie_bracket(x, y);
  TensorField out = lie_bracket(fx, fy) - apply11(f, lie_bracket(fx, y)) - apply11(f, lie_bracket(x, fy));
  bool xy_zero = true;
  for (const auto& c : xy.components()) xy_zero = xy_zero && c.is_zero();
  if (!xy_zero) out = out + apply11(f, apply11(f, xy));
  return out;
}

TensorField nijenhuis(const TensorField& f) {
  require_valence(f, {1, 1}, "nijenhuis");
  const std::size_t n = f.dim();
  std::vector<Expr> comps(n * n * n, Expr(0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      TensorField v = nijenhuis(f, coordinate_field(f.chart(), i), coordinate_field(f.chart(), j));
      for (std::size_t k = 0; k < n; ++k) {
        comps[(k * n + i) * n + j] = v[k];
        comps[(k * n + j) * n + i] = -v[k];
      }
    }
  }
  return TensorField(f.chart(), {1, 2}, std::move(comps));
}

Claim tensor_claim(std::string label, const TensorField& lhs, const TensorField& rhs) {
  if (lhs.valence() != rhs.valence() || lhs.components().size() != rhs.components().size()) {
    throw ShapeError("claim '" + label + "' compares tensors of different shape");
  }
  return Claim{std::move(label), lhs.components(), rhs.components()};
}

Claim zero_claim(std::string label, const TensorField& t) {
  return Claim{std::move(label), t.components(), std::vector<Expr>(t.components().size(), Expr(0))};
}

}  // namespace metalift
