#include "metalift/sampling.hpp"

#include <random>

#include "metalift/errors.hpp"
#include "metalift/manifold.hpp"

namespace metalift {
namespace {

Rational draw(std::mt19937_64& rng, const std::pair<Rational, Rational>& range, int den) {
  // lattice points k/den inside [lo, hi]
  const Rational lo = range.first * Rational(den);
  const Rational hi = range.second * Rational(den);
  const mpz_class first = [&] {
    mpz_class c;
    mpz_cdiv_q(c.get_mpz_t(), lo.raw().get_num_mpz_t(), lo.raw().get_den_mpz_t());
    return c;
  }();
  const mpz_class last = [&] {
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), hi.raw().get_num_mpz_t(), hi.raw().get_den_mpz_t());
    return f;
  }();
  if (last < first) throw SamplingError("sample range contains no lattice point");
  const mpz_class span = last - first + 1;
  if (!span.fits_ulong_p()) throw SamplingError("sample range is too wide");
  const std::uint64_t k = rng() % span.get_ui();
  mpz_class num = first + mpz_class(static_cast<unsigned long>(k));
  return Rational(mpq_class(num, den));
}

bool positive(const Expr& e, const Point& p, EvalMode mode) {
  Value v = eval(e, p, mode);
  if (std::holds_alternative<MetallicScalar>(v)) return std::get<MetallicScalar>(v).sign() > 0;
  return std::get<double>(v) > 0.0;
}

bool nonzero(const Expr& e, const Point& p, EvalMode mode) {
  Value v = eval(e, p, mode);
  if (std::holds_alternative<MetallicScalar>(v)) return !std::get<MetallicScalar>(v).is_zero();
  return std::get<double>(v) != 0.0;
}

}  // namespace

std::vector<Point> sample_points(const ChartedManifold& m, const SamplePlan& plan,
                                 const std::vector<Expr>& must_evaluate) {
  if (plan.count == 0) throw ParameterError("sample count must be at least 1");
  if (plan.denominator < 1) throw ParameterError("sample denominator must be positive");
  const std::size_t n = m.dim();
  if (plan.base_ranges.size() != n || plan.fiber_ranges.size() != n) {
    throw ParameterError("sample plan needs one base and one fiber range per coordinate");
  }
  for (const auto& r : plan.base_ranges) {
    if (r.second < r.first) throw ParameterError("sample range with lower bound above upper bound");
  }
  for (const auto& r : plan.fiber_ranges) {
    if (r.second < r.first) throw ParameterError("sample range with lower bound above upper bound");
  }
  auto rational_only = [&](const Expr& e) { return plan.mode == EvalMode::Exact || e.is_rational(); };
  const EvalMode check_mode = plan.mode;
  std::mt19937_64 rng(plan.seed);
  std::vector<Point> out;
  std::size_t attempts = 0;
  while (out.size() < plan.count) {
    if (++attempts > plan.max_attempts * plan.count) {
      throw SamplingError("no admissible point after " + std::to_string(attempts - 1) + " draws (" +
                          std::to_string(out.size()) + " of " + std::to_string(plan.count) + " found)");
    }
    Point p;
    for (std::size_t i = 0; i < n; ++i) p.base.emplace_back(draw(rng, plan.base_ranges[i], plan.denominator));
    bool fiber_zero = true;
    for (std::size_t i = 0; i < n; ++i) {
      p.fiber.emplace_back(draw(rng, plan.fiber_ranges[i], plan.denominator));
      fiber_zero = fiber_zero && p.fiber.back().is_zero();
    }
    if (fiber_zero) continue;
    try {
      bool ok = true;
      for (const auto& d : m.chart()->domain) {
        if (!rational_only(d)) throw ModeError("domain constraint " + d.to_string() + " is not rational");
        if (!positive(d, p, check_mode)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      if (!nonzero(m.metric_determinant(), p, check_mode)) continue;
      for (const auto& e : must_evaluate) (void)eval(e, p, check_mode);
    } catch (const EvaluationError&) {
      continue;
    }
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace metalift
