#pragma once

#include <vector>

#include <json.hpp>

#include "orbit/averages.hpp"
#include "orbit/iterates.hpp"
#include "orbit/sweep.hpp"
#include "orbit/verdict.hpp"

namespace orbit::report {

using Json = nlohmann::ordered_json;

/// Exact scalars become a rational string, or a pair ["re", "im"] when the
/// imaginary part is nonzero. Float scalars use numbers the same way.
Json scalar(const Scalar& z);
Json coords(const Coords& v);
Json blocks(const BlockVector& v);
Json rational(const Rational& q);

/// Block metadata plus the block verdict, including its case label.
Json block_verdict(const BlockVerdict& bv, const std::vector<JordanBlock>& blocks);
Json verdict(const Verdict& v, const std::vector<JordanBlock>& blocks);
Json trend(const EmpiricalTrend& t);

Json iterate_expansion(const BlockExpansion& e);
Json average_expansion(const AverageExpansion& e);
/// Degree and rule of H, or null when lambda is 0 or 1.
Json h_summary(const AverageExpansion& e);

Json sweep(const std::vector<SweepRow>& rows);

}  // namespace orbit::report
