#pragma once

#include "orbit/jordan.hpp"
#include "orbit/property_p.hpp"

namespace orbit::gallery {

/// T x = i x + c on C with c = 1, started at 0: bounded, neither convergent
/// to 0 nor bounded away from 0.
JordanSystem example2();

/// A = [[i, 1], [0, i]], c = (1, 0), x = v = (0, 1): the averages do not
/// converge to 0 but have a subsequence that does.
JordanSystem example3();

/// The weighted shift without property (P).
WeightedShift example1(std::size_t truncation = kDefaultTruncation);

}  // namespace orbit::gallery
