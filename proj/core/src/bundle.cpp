#include "metalift/bundle.hpp"

#include "metalift/errors.hpp"

namespace metalift {
namespace {


void require_base(const TensorField& t, std::size_t n, const char* what) {
  if (t.dim() != n) throw ShapeError(std::string(what) + ": expected a base tensor field");
}

}  // namespace

TensorField tensor11_from_frame(const Frame& frame, const std::vector<TensorField>& images) {
  const std::size_t m = frame.vectors.size();
  if (images.size() != m) throw ShapeError("one image per frame vector is required");
  const ChartPtr& chart = frame.vectors.front().chart();
  return tensor11(chart, [&](std::size_t k, std::size_t i) {
    std::vector<Expr> terms;
    for (std::size_t a = 0; a < m; ++a) {
      const Expr& th = frame.coframe[a][i];
      if (th.is_zero() || images[a][k].is_zero()) continue;
      terms.push_back(images[a][k] * th);
    }
    return sum(std::move(terms));
  });
}

TensorField tensor02_from_frame(const Frame& frame, const std::vector<std::vector<Expr>>& values) {
  const std::size_t m = frame.vectors.size();
  const ChartPtr& chart = frame.vectors.front().chart();
  return tensor02(chart, [&](std::size_t i, std::size_t j) {
    std::vector<Expr> terms;
    for (std::size_t a = 0; a < m; ++a) {
      const Expr& ta = frame.coframe[a][i];
      if (ta.is_zero()) continue;
      for (std::size_t b = 0; b < m; ++b) {
        const Expr& tb = frame.coframe[b][j];
        if (tb.is_zero() || values[a][b].is_zero()) continue;
        terms.push_back(values[a][b] * ta * tb);
      }
    }
    return sum(std::move(terms));
  });
}

TensorField oneform_from_frame(const Frame& frame, const std::vector<Expr>& values) {
  const std::size_t m = frame.vectors.size();
  const ChartPtr& chart = frame.vectors.front().chart();
  std::vector<Expr> comps(m);
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<Expr> terms;
    for (std::size_t a = 0; a < m; ++a) {
      if (values[a].is_zero() || frame.coframe[a][i].is_zero()) continue;
      terms.push_back(values[a] * frame.coframe[a][i]);
    }
    comps[i] = sum(std::move(terms));
  }
  return one_form(chart, std::move(comps));
}

Connection connection_from_frame(const ChartPtr& chart, const Frame& frame,
                                 const std::vector<std::vector<std::vector<Expr>>>& coeffs) {
  const std::size_t m = chart->dim();
  if (frame.vectors.size() != m) throw ShapeError("frame size differs from chart dimension");
  // ∇_{∂_I}∂_J = Σ_a θ^a_I Σ_b [E_a(θ^b_J) E_b + θ^b_J ∇_{E_a}E_b]
  std::vector<Expr> out(m * m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      std::vector<std::vector<Expr>> terms(m);
      for (std::size_t a = 0; a < m; ++a) {
        const Expr& ta = frame.coframe[a][i];
        if (ta.is_zero()) continue;
        for (std::size_t b = 0; b < m; ++b) {
          const Expr& tb = frame.coframe[b][j];
          const Expr dtb = derivative(frame.vectors[a], tb);
          for (std::size_t k = 0; k < m; ++k) {
            if (!dtb.is_zero() && !frame.vectors[b][k].is_zero()) {
              terms[k].push_back(ta * dtb * frame.vectors[b][k]);
            }
            if (tb.is_zero()) continue;
            for (std::size_t c = 0; c < m; ++c) {
              const Expr& cabc = coeffs[a][b][c];
              if (cabc.is_zero() || frame.vectors[c][k].is_zero()) continue;
              terms[k].push_back(ta * tb * cabc * frame.vectors[c][k]);
            }
          }
        }
      }
      for (std::size_t k = 0; k < m; ++k) out[(k * m + i) * m + j] = sum(std::move(terms[k]));
    }
  }
  return Connection(chart, std::move(out));
}

TangentBundle::TangentBundle(ChartedManifold base) : TangentBundle(base, christoffel(base)) {}

TangentBundle::TangentBundle(ChartedManifold base, Connection nabla)
    : base_(std::move(base)),
      nabla_(std::move(nabla)),
      curvature_(metalift::curvature(nabla_)),
      y_(TensorField::zero(base_.chart(), {1, 0})) {
  if (nabla_.dim() != base_.dim()) throw ShapeError("connection and base have different dimensions");
  const std::size_t n = base_.dim();
  auto chart = std::make_shared<Chart>();
  for (std::size_t i = 0; i < n; ++i) {
    chart->coords.push_back(base_.chart()->coord(i));
    chart->names.push_back(base_.chart()->names.at(i));
  }
  for (std::size_t i = 0; i < n; ++i) {
    chart->coords.push_back(VarId::fiber(static_cast<int>(i + 1)));
    chart->names.push_back("y" + std::to_string(i + 1));
  }
  chart->domain = base_.chart()->domain;
  chart_ = chart;
  std::vector<Expr> ys;
  for (std::size_t i = 0; i < n; ++i) ys.push_back(Expr::variable(VarId::fiber(static_cast<int>(i + 1))));
  y_ = vector_field(base_.chart(), std::move(ys));
  build_frames();
}

void TangentBundle::build_frames() {
  const std::size_t n = this->n();
  const std::size_t m = 2 * n;
  complete_.vectors.clear();
  complete_.coframe.assign(m, std::vector<Expr>(m, Expr(0)));
  for (std::size_t a = 0; a < m; ++a) {
    complete_.vectors.push_back(coordinate_field(chart_, a));
    complete_.coframe[a][a] = Expr(1);
  }
  // H_i = ∂_{x^i} + B^l_i ∂_{y^l} with B^l_i = −y^k Γ^l_{ki}
  std::vector<std::vector<Expr>> b(n, std::vector<Expr>(n));
  for (std::size_t l = 0; l < n; ++l) {
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Expr> terms;
      for (std::size_t k = 0; k < n; ++k) {
        if (!nabla_.gamma(l, k, i).is_zero()) terms.push_back(y_[k] * nabla_.gamma(l, k, i));
      }
      b[l][i] = -sum(std::move(terms));
    }
  }
  adapted_.vectors.clear();
  adapted_.coframe.assign(m, std::vector<Expr>(m, Expr(0)));
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Expr> comps(m, Expr(0));
    comps[i] = Expr(1);
    for (std::size_t l = 0; l < n; ++l) comps[n + l] = b[l][i];
    adapted_.vectors.push_back(vector_field(chart_, std::move(comps)));
    adapted_.coframe[i][i] = Expr(1);
  }
  for (std::size_t l = 0; l < n; ++l) {
    adapted_.vectors.push_back(coordinate_field(chart_, n + l));
    for (std::size_t i = 0; i < n; ++i) adapted_.coframe[n + l][i] = -b[l][i];
    adapted_.coframe[n + l][n + l] = Expr(1);
  }
}

Expr TangentBundle::vlift(const Expr& f) const { return f; }

Expr TangentBundle::clift(const Expr& f) const {
  std::vector<Expr> terms;
  for (std::size_t j = 0; j < n(); ++j) {
    Expr d = diff(f, base_chart()->coord(j));
    if (!d.is_zero()) terms.push_back(y_[j] * d);
  }
  return sum(std::move(terms));
}

Expr TangentBundle::hlift(const Expr& f) const {
  // ∇f = df, and γ of a 1-form ω is y^j ω_j
  std::vector<Expr> grad;
  for (std::size_t j = 0; j < n(); ++j) grad.push_back(diff(f, base_chart()->coord(j)));
  return clift(f) - apply(one_form(base_chart(), std::move(grad)), y_);
}

TensorField TangentBundle::vlift_vector(const TensorField& x) const {
  require_base(x, n(), "vlift_vector");
  std::vector<Expr> comps(2 * n(), Expr(0));
  for (std::size_t i = 0; i < n(); ++i) comps[n() + i] = x[i];
  return vector_field(chart_, std::move(comps));
}

TensorField TangentBundle::clift_vector(const TensorField& x) const {
  require_base(x, n(), "clift_vector");
  std::vector<Expr> comps(2 * n());
  for (std::size_t i = 0; i < n(); ++i) {
    comps[i] = x[i];
    comps[n() + i] = clift(x[i]);
  }
  return vector_field(chart_, std::move(comps));
}

TensorField TangentBundle::hlift_vector(const TensorField& x) const {
  require_base(x, n(), "hlift_vector");
  std::vector<Expr> comps(2 * n(), Expr(0));
  for (std::size_t i = 0; i < n(); ++i) comps[i] = x[i];
  for (std::size_t l = 0; l < n(); ++l) {
    std::vector<Expr> terms;
    for (std::size_t i = 0; i < n(); ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t k = 0; k < n(); ++k) {
        if (!nabla_.gamma(l, k, i).is_zero()) terms.push_back(y_[k] * x[i] * nabla_.gamma(l, k, i));
      }
    }
    comps[n() + l] = -sum(std::move(terms));
  }
  return vector_field(chart_, std::move(comps));
}

TensorField TangentBundle::lift_vector(const TensorField& x, LiftKind kind) const {
  switch (kind) {
    case LiftKind::Vertical: return vlift_vector(x);
    case LiftKind::Complete: return clift_vector(x);
    case LiftKind::Horizontal: return hlift_vector(x);
  }
  throw ParameterError("unknown lift kind");
}

TensorField TangentBundle::lift_oneform(const TensorField& w, LiftKind kind) const {
  require_base(w, n(), "lift_oneform");
  if (w.valence() != Valence{0, 1}) throw ShapeError("lift_oneform needs a 1-form");
  std::vector<Expr> values(2 * n(), Expr(0));
  switch (kind) {
    case LiftKind::Vertical:
      // ω^v(X^c) = ω(X)^v, ω^v(X^v) = 0
      for (std::size_t i = 0; i < n(); ++i) values[i] = w[i];
      return oneform_from_frame(complete_, values);
    case LiftKind::Complete:
      // ω^c(X^c) = ω(X)^c, ω^c(X^v) = ω(X)^v
      for (std::size_t i = 0; i < n(); ++i) {
        values[i] = clift(w[i]);
        values[n() + i] = w[i];
      }
      return oneform_from_frame(complete_, values);
    case LiftKind::Horizontal:
      // ω^h(X^h) = 0, ω^h(X^v) = ω(X)^v
      for (std::size_t i = 0; i < n(); ++i) values[n() + i] = w[i];
      return oneform_from_frame(adapted_, values);
  }
  throw ParameterError("unknown lift kind");
}

TensorField TangentBundle::lift_tensor11(const TensorField& f, LiftKind kind) const {
  require_base(f, n(), "lift_tensor11");
  if (f.valence() != Valence{1, 1}) throw ShapeError("lift_tensor11 needs a (1,1) tensor");
  std::vector<TensorField> images;
  std::vector<TensorField> fx;
  for (std::size_t i = 0; i < n(); ++i) fx.push_back(apply11(f, coordinate_field(base_chart(), i)));
  switch (kind) {
    case LiftKind::Vertical:
      // F^v(X^c) = (FX)^v, F^v(X^v) = 0
      for (const auto& v : fx) images.push_back(vlift_vector(v));
      for (std::size_t i = 0; i < n(); ++i) images.push_back(TensorField::zero(chart_, {1, 0}));
      return tensor11_from_frame(complete_, images);
    case LiftKind::Complete:
      for (const auto& v : fx) images.push_back(clift_vector(v));
      for (const auto& v : fx) images.push_back(vlift_vector(v));
      return tensor11_from_frame(complete_, images);
    case LiftKind::Horizontal:
      for (const auto& v : fx) images.push_back(hlift_vector(v));
      for (const auto& v : fx) images.push_back(vlift_vector(v));
      return tensor11_from_frame(adapted_, images);
  }
  throw ParameterError("unknown lift kind");
}

TensorField TangentBundle::clift_metric(const TensorField& g) const {
  require_base(g, n(), "clift_metric");
  const std::size_t n = this->n();
  return tensor02(chart_, [&](std::size_t i, std::size_t j) {
    const bool bi = i < n, bj = j < n;
    if (bi && bj) return clift(g.at({i, j}));
    if (bi && !bj) return g.at({i, j - n});
    if (!bi && bj) return g.at({i - n, j});
    return Expr(0);
  });
}

TensorField TangentBundle::hlift_metric(const TensorField& g) const {
  require_base(g, n(), "hlift_metric");
  const std::size_t n = this->n();
  std::vector<std::vector<Expr>> values(2 * n, std::vector<Expr>(2 * n, Expr(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      values[i][n + j] = g.at({i, j});
      values[n + i][j] = g.at({i, j});
    }
  }
  return tensor02_from_frame(adapted_, values);
}

TensorField TangentBundle::sasaki_metric(const TensorField& g) const {
  require_base(g, n(), "sasaki_metric");
  const std::size_t n = this->n();
  std::vector<std::vector<Expr>> values(2 * n, std::vector<Expr>(2 * n, Expr(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      values[i][j] = g.at({i, j});
      values[n + i][n + j] = g.at({i, j});
    }
  }
  return tensor02_from_frame(adapted_, values);
}

TensorField TangentBundle::gamma(const TensorField& f) const {
  require_base(f, n(), "gamma");
  if (f.valence() != Valence{1, 1}) throw ShapeError("gamma needs a (1,1) tensor");
  return vlift_vector(apply11(f, y_));
}

TensorField TangentBundle::gamma_curvature(const TensorField& x, const TensorField& y) const {
  return vlift_vector(apply_curvature(curvature_, x, y, y_));
}

TensorField TangentBundle::gamma_curvature_dot(const TensorField& x, const TensorField& y) const {
  return vlift_vector(apply_curvature(curvature_, y_, x, y));
}

Connection TangentBundle::clift_connection() const {
  const std::size_t n = this->n();
  const std::size_t m = 2 * n;
  std::vector<Expr> coeff(m * m * m, Expr(0));
  auto at = [&](std::size_t k, std::size_t i, std::size_t j) -> Expr& { return coeff[(k * m + i) * m + j]; };
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const Expr& g = nabla_.gamma(k, i, j);
        at(k, i, j) = g;
        at(n + k, i, j) = clift(g);
        at(n + k, i, n + j) = g;
        at(n + k, n + i, j) = g;
      }
    }
  }
  return Connection(chart_, std::move(coeff));
}

Connection TangentBundle::hlift_connection() const {
  const std::size_t n = this->n();
  const std::size_t m = 2 * n;
  // ∇_{H_i}H_j = Γ^k_{ij} H_k, ∇_{H_i}V_j = Γ^k_{ij} V_k, ∇_V = 0
  std::vector<std::vector<std::vector<Expr>>> c(m, std::vector<std::vector<Expr>>(m, std::vector<Expr>(m, Expr(0))));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        c[i][j][k] = nabla_.gamma(k, i, j);
        c[i][n + j][n + k] = nabla_.gamma(k, i, j);
      }
    }
  }
  return connection_from_frame(chart_, adapted_, c);
}

}  // namespace metalift
