#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "orbit/coords.hpp"
#include "orbit/jordan.hpp"

namespace orbit {

enum class VerdictKind {
  DivergesToInfinity,
  Bounded,
  ConvergesToZero,
  ConvergesToConstant,
  BoundedAwayFromZero,
};

/// Long-run behavior of one block's component sequence.
enum class BlockBehavior {
  Diverges,     // norm tends to infinity
  Constant,     // exactly constant past the validity threshold
  Converges,    // tends to a limit without being constant
  Oscillating,  // bounded, not convergent
};

std::string_view to_string(VerdictKind kind);
std::string_view to_string(BlockBehavior behavior);

struct BlockVerdict {
  std::size_t block = 0;
  BlockBehavior behavior = BlockBehavior::Constant;
  std::string case_label;
  /// Index of the coefficient that decides the behavior (first nonzero
  /// divergent coefficient, or the oscillating one), when there is one.
  std::optional<std::size_t> witness;
  std::optional<Coords> limit;
  std::string detail;
};

struct Verdict {
  VerdictKind kind = VerdictKind::Bounded;
  std::vector<BlockVerdict> blocks;
  std::optional<BlockVector> limit;
  /// Empirical bounds F <= |.| <= G over the oracle window [K/2, K], only
  /// for BoundedAwayFromZero.
  std::optional<double> lower_bound;
  std::optional<double> upper_bound;
  std::optional<long> bounds_horizon;
  bool linear = false;
  /// Set when a float-mode coefficient was judged zero by threshold.
  bool numerically_uncertain = false;
};

/// Zero test used by the classifiers: exact in exact mode, and
/// |z| < 1e-12 (1 + scale) in float mode. Remembers whether any nonzero
/// float value was rounded to zero.
class ZeroTest {
 public:
  explicit ZeroTest(double scale = 1.0) : tol_(1e-12 * (1.0 + scale)) {}

  bool zero(const Scalar& z);
  bool zero(const Coords& v);
  bool is_one(const Scalar& lambda);
  int compare_modulus_to_one(const Scalar& lambda);

  double tolerance() const { return tol_; }
  bool uncertain() const { return uncertain_; }

 private:
  double tol_;
  bool uncertain_ = false;
};

/// Empirical reading of an orbit-norm sequence.
struct EmpiricalTrend {
  bool diverges = false;
  std::string reason;
  std::optional<long> overflow_step;
  double window_min = 0.0;
  double window_max = 0.0;
  double final_norm = 0.0;
  double max_norm = 0.0;
};

inline constexpr double kDivergenceFactor = 1e6;

/// Diverges when a norm exceeds 1e6 * scale, when the sequence overflowed,
/// or under sustained growth: the minimum over the last eighth exceeds
/// 1.1 times the maximum over [K/2, 5K/8]. Window statistics cover the
/// second half of the sequence.
EmpiricalTrend assess_trend(const std::vector<double>& norms, double scale,
                            std::optional<long> overflow_step);

}  // namespace orbit
