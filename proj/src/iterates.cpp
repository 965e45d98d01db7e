#include "orbit/iterates.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "orbit/combinatorics.hpp"

namespace orbit {

namespace {

// eps(r) = 1 for r >= 0, 0 otherwise.
bool eps(long r) { return r >= 0; }

Scalar one_like(const Scalar& z) {
  return z.is_exact() ? Scalar(1) : Scalar(1).to_float();
}

// sum_{i=j}^{t-1} N^i d / (1-lambda)^{i-j+1}
Coords resolvent_tail(const Coords& d, long j, long t, const Scalar& lambda) {
  Coords out = zeros(d.size());
  Scalar one_minus = one_like(lambda) - lambda;
  for (long i = j; i <= t - 1; ++i) {
    out += one_minus.pow(i - j + 1).inverse() * shift(d, static_cast<std::size_t>(i));
  }
  return out;
}

}  // namespace

BlockExpansion expand_block(const JordanBlock& block, const Coords& v,
                            const Coords& d) {
  if (v.size() != block.size || d.size() != block.size) {
    throw std::invalid_argument("segment lengths must equal the block size");
  }
  const long s = static_cast<long>(nilpotent_index(v));
  const long t = static_cast<long>(nilpotent_index(d));

  if (block.lambda.is_one(1e-12)) {
    UnitIterateExpansion out;
    out.s = static_cast<std::size_t>(s);
    out.t = static_cast<std::size_t>(t);
    const long l = std::max(s - 1, t);
    out.l = static_cast<std::size_t>(l);
    out.v = v;
    const long low = std::min(s - 1, t);
    for (long j = 1; j <= l; ++j) {
      Coords bj = zeros(block.size);
      if (j <= low) {
        bj = shift(v, static_cast<std::size_t>(j)) + shift(d, static_cast<std::size_t>(j - 1));
      } else {
        if (eps(s - 1 - t)) bj += shift(v, static_cast<std::size_t>(j));
        if (eps(t - s + 1)) bj += shift(d, static_cast<std::size_t>(j - 1));
      }
      out.b.push_back(std::move(bj));
    }
    return out;
  }

  IterateExpansion out;
  out.lambda = block.lambda;
  out.s = static_cast<std::size_t>(s);
  out.t = static_cast<std::size_t>(t);
  const long w = std::max(s, t);
  out.w = static_cast<std::size_t>(w);
  const long low = std::min(s, t);
  for (long j = 0; j < w; ++j) {
    Coords aj = zeros(block.size);
    if (j < low) {
      aj = shift(v, static_cast<std::size_t>(j)) - resolvent_tail(d, j, t, block.lambda);
    } else {
      if (eps(s - t)) aj += shift(v, static_cast<std::size_t>(j));
      if (eps(t - s)) aj -= resolvent_tail(d, j, t, block.lambda);
    }
    out.a.push_back(std::move(aj));
  }
  out.b = resolvent_tail(d, 0, t, block.lambda);
  return out;
}

std::size_t validity_threshold(const BlockExpansion& expansion) {
  return std::visit([](const auto& e) { return std::max(e.s, e.t); }, expansion);
}

Coords eval_iterate(const BlockExpansion& expansion, long k) {
  if (k <= static_cast<long>(validity_threshold(expansion))) {
    throw std::domain_error("closed form needs k > max(s, t) = " +
                            std::to_string(validity_threshold(expansion)));
  }
  if (const auto* e = std::get_if<IterateExpansion>(&expansion)) {
    Coords out = e->b;
    for (long j = 0; j < static_cast<long>(e->w); ++j) {
      Scalar weight = e->lambda.pow(k - j) * Scalar(binom(k, j));
      out += weight * e->a[static_cast<std::size_t>(j)];
    }
    return out;
  }
  const auto& u = std::get<UnitIterateExpansion>(expansion);
  Coords out = u.v;
  for (long j = 1; j <= static_cast<long>(u.l); ++j) {
    Scalar weight(binom(k, j));
    if (!u.v.empty() && !u.v.front().is_exact()) weight = weight.to_float();
    out += weight * u.b[static_cast<std::size_t>(j - 1)];
  }
  return out;
}

BlockVerdict classify_block(const BlockExpansion& expansion, ZeroTest& zero) {
  BlockVerdict verdict;
  if (const auto* u = std::get_if<UnitIterateExpansion>(&expansion)) {
    verdict.case_label = "Case 3: lambda=1";
    for (std::size_t j = 1; j <= u->l; ++j) {
      if (!zero.zero(u->b[j - 1])) {
        verdict.behavior = BlockBehavior::Diverges;
        verdict.witness = j;
        verdict.detail = "B_" + std::to_string(j) + " != 0";
        return verdict;
      }
    }
    verdict.behavior = BlockBehavior::Constant;
    verdict.limit = u->v;
    verdict.detail = "all B_j = 0; the component equals v";
    return verdict;
  }

  const auto& e = std::get<IterateExpansion>(expansion);
  const int side = zero.compare_modulus_to_one(e.lambda);
  auto first_nonzero = [&](std::size_t from) -> std::optional<std::size_t> {
    for (std::size_t j = from; j < e.w; ++j) {
      if (!zero.zero(e.a[j])) return j;
    }
    return std::nullopt;
  };

  if (side > 0) {
    verdict.case_label = "Case 1: |lambda|>1";
    if (auto j = first_nonzero(0)) {
      verdict.behavior = BlockBehavior::Diverges;
      verdict.witness = *j;
      verdict.detail = "A_" + std::to_string(*j) + " != 0";
    } else {
      verdict.behavior = BlockBehavior::Constant;
      verdict.limit = e.b;
      verdict.detail = "all A_j = 0; the component equals B";
    }
    return verdict;
  }
  if (side == 0) {
    verdict.case_label = "Case 2: |lambda|=1, lambda!=1";
    if (auto j = first_nonzero(1)) {
      verdict.behavior = BlockBehavior::Diverges;
      verdict.witness = *j;
      verdict.detail = "A_" + std::to_string(*j) + " != 0";
    } else if (e.w == 0 || zero.zero(e.a[0])) {
      verdict.behavior = BlockBehavior::Constant;
      verdict.limit = e.b;
      verdict.detail = "all A_j = 0; the component equals B";
    } else {
      verdict.behavior = BlockBehavior::Oscillating;
      verdict.witness = 0;
      verdict.detail = "B + lambda^k A_0 with A_0 != 0";
    }
    return verdict;
  }
  verdict.case_label = "Case 4: |lambda|<1";
  verdict.limit = e.b;
  if (e.lambda.is_zero() || !first_nonzero(0)) {
    verdict.behavior = BlockBehavior::Constant;
    verdict.detail = "the component equals B";
  } else {
    verdict.behavior = BlockBehavior::Converges;
    verdict.detail = "converges to B";
  }
  return verdict;
}

Verdict classify_system(const JordanSystem& sys, const ClassifyOptions& options) {
  Verdict verdict;
  verdict.linear = sys.is_linear();
  ZeroTest zero(sys.scale());
  for (std::size_t b = 0; b < sys.block_count(); ++b) {
    auto expansion = expand_block(sys.blocks()[b], sys.x()[b], sys.c()[b]);
    BlockVerdict bv = classify_block(expansion, zero);
    bv.block = b;
    verdict.blocks.push_back(std::move(bv));
  }
  verdict.numerically_uncertain = zero.uncertain();

  auto diverges = [](const BlockVerdict& bv) {
    return bv.behavior == BlockBehavior::Diverges;
  };
  auto settles = [](const BlockVerdict& bv) {
    return bv.behavior == BlockBehavior::Constant ||
           bv.behavior == BlockBehavior::Converges;
  };
  if (std::any_of(verdict.blocks.begin(), verdict.blocks.end(), diverges)) {
    verdict.kind = VerdictKind::DivergesToInfinity;
    return verdict;
  }

  const bool all_settle =
      std::all_of(verdict.blocks.begin(), verdict.blocks.end(), settles);
  if (all_settle) {
    BlockVector limit;
    for (const auto& bv : verdict.blocks) limit.push_back(*bv.limit);
    verdict.limit = limit;
  }

  if (verdict.linear) {
    bool to_zero = all_settle &&
                   std::all_of(verdict.limit->begin(), verdict.limit->end(),
                               [&](const Coords& seg) { return zero.zero(seg); });
    if (to_zero) {
      verdict.kind = VerdictKind::ConvergesToZero;
      return verdict;
    }
    verdict.kind = VerdictKind::BoundedAwayFromZero;
    verdict.limit.reset();
    long horizon = std::max(2L, options.bounds_horizon);
    auto trace = brute_force_orbit(sys.to_float(), horizon);
    verdict.lower_bound = trace.trend.window_min;
    verdict.upper_bound = trace.trend.window_max;
    verdict.bounds_horizon = horizon;
    return verdict;
  }

  verdict.kind = all_settle ? VerdictKind::ConvergesToConstant : VerdictKind::Bounded;
  return verdict;
}

OrbitTrace brute_force_orbit(const JordanSystem& sys, long horizon, bool keep_states) {
  if (horizon < 1) throw std::invalid_argument("orbit horizon must be >= 1");
  OrbitTrace trace;
  BlockVector state = sys.x();
  std::optional<long> overflow;
  trace.norms.push_back(block_norm(state));
  if (keep_states) trace.states.push_back(state);
  for (long k = 1; k <= horizon; ++k) {
    state = apply_affine(sys, state);
    double norm = block_norm(state);
    if (!std::isfinite(norm)) {
      overflow = k;
      break;
    }
    trace.norms.push_back(norm);
    if (keep_states) trace.states.push_back(state);
  }
  trace.last = std::move(state);
  trace.trend = assess_trend(trace.norms, sys.scale(), overflow);
  return trace;
}

}  // namespace orbit
