#pragma once

#include <vector>

#include "metalift/manifold.hpp"

namespace metalift {

enum class LiftKind { Vertical, Complete, Horizontal };

/// A pointwise basis {E_a} of vector fields together with its dual coframe,
/// coframe[a][I] = θ^a(∂_I).
struct Frame {
  std::vector<TensorField> vectors;
  std::vector<std::vector<Expr>> coframe;
};

/// (1,1) tensor T with T(E_a) = images[a].
TensorField tensor11_from_frame(const Frame& frame, const std::vector<TensorField>& images);
/// (0,2) tensor with T(E_a, E_b) = values[a][b].
TensorField tensor02_from_frame(const Frame& frame, const std::vector<std::vector<Expr>>& values);
/// 1-form with ω(E_a) = values[a].
TensorField oneform_from_frame(const Frame& frame, const std::vector<Expr>& values);
/// Connection with ∇_{E_a} E_b = Σ_c coeffs[a][b][c] E_c.
Connection connection_from_frame(const ChartPtr& chart, const Frame& frame,
                                 const std::vector<std::vector<std::vector<Expr>>>& coeffs);

/// TM over a Riemannian chart with coordinates (x1..xn, y1..yn).
///
/// The base connection is Levi-Civita unless given.
class TangentBundle {
 public:
  explicit TangentBundle(ChartedManifold base);
  TangentBundle(ChartedManifold base, Connection nabla);

  const ChartedManifold& base() const { return base_; }
  const ChartPtr& base_chart() const { return base_.chart(); }
  const ChartPtr& chart() const { return chart_; }
  std::size_t n() const { return base_.dim(); }
  const Connection& connection() const { return nabla_; }
  const TensorField& curvature() const { return curvature_; }

  /// Canonical fiber field y = y^i ∂_i, a base vector field with fiber-valued components.
  const TensorField& fiber_point() const { return y_; }

  Expr vlift(const Expr& f) const;
  Expr clift(const Expr& f) const;
  /// f^c − γ(df); vanishes identically.
  Expr hlift(const Expr& f) const;

  TensorField vlift_vector(const TensorField& x) const;
  TensorField clift_vector(const TensorField& x) const;
  TensorField hlift_vector(const TensorField& x) const;
  TensorField lift_vector(const TensorField& x, LiftKind kind) const;

  /// {∂_i^c} ∪ {∂_i^v}, which is the coordinate frame.
  const Frame& complete_frame() const { return complete_; }
  /// {δ/δx^i} ∪ {∂/∂y^i}.
  const Frame& adapted_frame() const { return adapted_; }

  TensorField lift_oneform(const TensorField& w, LiftKind kind) const;
  TensorField lift_tensor11(const TensorField& f, LiftKind kind) const;

  TensorField clift_metric(const TensorField& g) const;
  TensorField hlift_metric(const TensorField& g) const;
  TensorField sasaki_metric(const TensorField& g) const;
  TensorField clift_metric() const { return clift_metric(base_.metric()); }
  TensorField hlift_metric() const { return hlift_metric(base_.metric()); }
  TensorField sasaki_metric() const { return sasaki_metric(base_.metric()); }

  /// γF = (F(y))^v.
  TensorField gamma(const TensorField& f) const;
  /// γR(X,Y) = (R(X,Y)y)^v.
  TensorField gamma_curvature(const TensorField& x, const TensorField& y) const;
  /// γR(·,X,Y) = (R(y,X)Y)^v.
  TensorField gamma_curvature_dot(const TensorField& x, const TensorField& y) const;

  Connection clift_connection() const;
  Connection hlift_connection() const;

 private:
  void build_frames();

  ChartedManifold base_;
  Connection nabla_;
  TensorField curvature_;
  ChartPtr chart_;
  TensorField y_;
  Frame complete_;
  Frame adapted_;
};

}  // namespace metalift
