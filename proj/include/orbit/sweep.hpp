#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace orbit {

struct SweepOptions {
  long max_k = 30;   // k range of the binomial identities and the T_j sums
  long max_j = 10;   // j range of the binomial identities
  long trials = 10;  // random assignments per (p, q); 5x as many Newton polynomials
  std::uint64_t seed = 0;
};

struct SweepRow {
  std::string identity;
  std::string range;
  long cases = 0;
  long failures = 0;
  std::optional<std::string> first_failure;
};

/// Exhaustive and randomized evaluation of the combinatorial identities the
/// closed forms rest on. Rows are computed in parallel and returned in a
/// fixed order.
std::vector<SweepRow> verify_identities(const SweepOptions& options = {});

}  // namespace orbit
