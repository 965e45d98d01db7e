#include "orbit/verdict.hpp"

#include <algorithm>
#include <cmath>

namespace orbit {

std::string_view to_string(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::DivergesToInfinity: return "DivergesToInfinity";
    case VerdictKind::Bounded: return "Bounded";
    case VerdictKind::ConvergesToZero: return "ConvergesToZero";
    case VerdictKind::ConvergesToConstant: return "ConvergesToConstant";
    case VerdictKind::BoundedAwayFromZero: return "BoundedAwayFromZero";
  }
  return "?";
}

std::string_view to_string(BlockBehavior behavior) {
  switch (behavior) {
    case BlockBehavior::Diverges: return "diverges";
    case BlockBehavior::Constant: return "constant";
    case BlockBehavior::Converges: return "converges";
    case BlockBehavior::Oscillating: return "oscillating";
  }
  return "?";
}

bool ZeroTest::zero(const Scalar& z) {
  if (z.is_exact()) return z.is_zero();
  bool small = z.modulus() < tol_;
  if (small && !z.is_zero()) uncertain_ = true;
  return small;
}

bool ZeroTest::zero(const Coords& v) {
  bool all = true;
  for (const auto& z : v) all = zero(z) && all;
  return all;
}

bool ZeroTest::is_one(const Scalar& lambda) {
  if (lambda.is_exact()) return lambda.is_one();
  bool near = lambda.is_one(tol_);
  if (near && !lambda.is_one(0.0)) uncertain_ = true;
  return near;
}

int ZeroTest::compare_modulus_to_one(const Scalar& lambda) {
  if (lambda.is_exact()) return lambda.compare_modulus_to_one();
  int sign = lambda.compare_modulus_to_one(tol_);
  if (sign == 0 && lambda.compare_modulus_to_one(0.0) != 0) uncertain_ = true;
  return sign;
}

EmpiricalTrend assess_trend(const std::vector<double>& norms, double scale,
                            std::optional<long> overflow_step) {
  EmpiricalTrend trend;
  trend.overflow_step = overflow_step;
  if (norms.empty()) return trend;

  const std::size_t last = norms.size() - 1;
  trend.final_norm = norms.back();
  trend.max_norm = *std::max_element(norms.begin(), norms.end());
  auto window = [&](std::size_t from, std::size_t to) {
    auto first = norms.begin() + static_cast<long>(from);
    auto past = norms.begin() + static_cast<long>(to) + 1;
    return std::minmax_element(first, past);
  };
  auto [lo, hi] = window(last / 2, last);
  trend.window_min = *lo;
  trend.window_max = *hi;

  if (overflow_step) {
    trend.diverges = true;
    trend.reason = "float overflow at step " + std::to_string(*overflow_step);
    return trend;
  }
  if (trend.max_norm > kDivergenceFactor * scale) {
    trend.diverges = true;
    trend.reason = "norm exceeded 1e6 * scale";
    return trend;
  }
  if (last >= 16) {
    auto [late_lo, late_hi] = window(last - last / 8, last);
    auto [mid_lo, mid_hi] = window(last / 2, last / 2 + last / 8);
    (void)late_hi;
    (void)mid_lo;
    if (*late_lo > 1.1 * *mid_hi) {
      trend.diverges = true;
      trend.reason = "sustained growth over the final quarter";
      return trend;
    }
  }
  trend.reason = "stayed below 1e6 * scale without sustained growth";
  return trend;
}

}  // namespace orbit
