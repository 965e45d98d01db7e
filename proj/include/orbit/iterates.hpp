#pragma once

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "orbit/coords.hpp"
#include "orbit/jordan.hpp"
#include "orbit/verdict.hpp"

namespace orbit {

/// Block component of T^k x for lambda != 1:
///   P x_k = B + sum_{j<w} lambda^{k-j} C(k,j) A_j,   k > max(s, t).
struct IterateExpansion {
  Scalar lambda;
  std::size_t s = 0;  // nilpotent index of the x segment
  std::size_t t = 0;  // nilpotent index of the c segment
  std::size_t w = 0;  // max(s, t)
  std::vector<Coords> a;
  Coords b;
};

/// Block component of T^k x for lambda == 1:
///   P x_k = v + sum_{j=1}^{l} C(k,j) B_j,   k > max(s, t),  l = max(s-1, t).
struct UnitIterateExpansion {
  std::size_t s = 0;
  std::size_t t = 0;
  std::size_t l = 0;
  Coords v;
  std::vector<Coords> b;  // b[j-1] holds B_j
};

using BlockExpansion = std::variant<IterateExpansion, UnitIterateExpansion>;

/// Coefficients of the closed form for one block with x segment `v` and
/// c segment `d`. In float mode lambda within 1e-12 of 1 counts as 1.
BlockExpansion expand_block(const JordanBlock& block, const Coords& v,
                            const Coords& d);

/// max(s, t) for either expansion kind; eval_iterate needs k beyond it.
std::size_t validity_threshold(const BlockExpansion& expansion);

/// Exact P x_k. Throws std::domain_error when k <= max(s, t).
Coords eval_iterate(const BlockExpansion& expansion, long k);

/// Case analysis on one block (|lambda| > 1, = 1 with lambda != 1,
/// lambda == 1, < 1). `zero` decides coefficient nonzeroness.
BlockVerdict classify_block(const BlockExpansion& expansion, ZeroTest& zero);

struct ClassifyOptions {
  /// Horizon of the float oracle run that estimates F and G for
  /// BoundedAwayFromZero verdicts.
  long bounds_horizon = 1000;
};

/// Dichotomy for the whole system, refined to the trichotomy when c == 0.
Verdict classify_system(const JordanSystem& sys, const ClassifyOptions& options = {});

struct OrbitTrace {
  std::vector<double> norms;         // |T^k x| for k = 0..K (or until overflow)
  std::vector<BlockVector> states;   // T^k x, only when requested
  BlockVector last;
  EmpiricalTrend trend;
};

/// Iterates apply_affine K times. Exact in exact mode. In float mode a
/// non-finite norm stops the run and is reported as divergence.
OrbitTrace brute_force_orbit(const JordanSystem& sys, long horizon,
                             bool keep_states = false);

}  // namespace orbit
