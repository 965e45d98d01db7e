#include "orbit/averages.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "orbit/combinatorics.hpp"

namespace orbit {

namespace {

Scalar one_like(const Scalar& z) {
  return z.is_exact() ? Scalar(1) : Scalar(1).to_float();
}

Coords chain(const Coords& v, long j) { return shift(v, static_cast<std::size_t>(j)); }

// sum_{i=from}^{to-1} N^i v / (1-lambda)^{i-from+1+extra}
Coords resolvent(const Coords& v, long from, long to, const Scalar& lambda,
                 long extra = 0) {
  Coords out = zeros(v.size());
  Scalar one_minus = one_like(lambda) - lambda;
  for (long i = from; i < to; ++i) {
    out += one_minus.pow(i - from + 1 + extra).inverse() * chain(v, i);
  }
  return out;
}

// C(k,j) D(k,j,lambda) as a polynomial in k.
KPolynomial binom_times_d(long j, const Scalar& lambda) {
  KPolynomial out;
  Scalar lambda_power = one_like(lambda);
  for (long i = j; i >= 0; --i) {
    KPolynomial term = binom_poly(i) * binom_poly(j - i, -i - 2);
    Scalar sign = (j - i) % 2 == 0 ? Scalar(1) : Scalar(-1);
    out += (sign * lambda_power) * term;
    lambda_power *= lambda;
  }
  return (one_like(lambda) - lambda).pow(j).inverse() * out;
}

int effective_degree(const VectorPolynomial& poly, ZeroTest& zero) {
  for (int p = poly.degree(); p >= 0; --p) {
    if (!zero.zero(poly.coeff(static_cast<std::size_t>(p)))) return p;
  }
  return -1;
}

}  // namespace

AverageExpansion expand_average_block(const JordanBlock& block, const Coords& v,
                                      const Coords& d) {
  if (v.size() != block.size || d.size() != block.size) {
    throw std::invalid_argument("segment lengths must equal the block size");
  }
  AverageExpansion out;
  out.lambda = block.lambda;
  out.dimension = block.size;
  const long s = static_cast<long>(nilpotent_index(v));
  const long t = static_cast<long>(nilpotent_index(d));
  out.s = static_cast<std::size_t>(s);
  out.t = static_cast<std::size_t>(t);
  out.w = static_cast<std::size_t>(std::max(s, t));

  if (block.lambda.is_one(1e-12)) {
    out.unit = true;
    for (long j = 1; j <= s; ++j) out.x_terms.push_back(chain(v, j - 1));
    for (long j = 0; j < t; ++j) out.c_terms.push_back(chain(d, j));
    return out;
  }

  const Scalar& lambda = block.lambda;
  out.e = resolvent(d, 0, t, lambda);
  // F = sum_{j<s} N^j x/(1-l)^{j+1} - sum_{j<t} (j+1) N^j c/(1-l)^{j+2}
  out.f = resolvent(v, 0, s, lambda);
  Scalar one_minus = one_like(lambda) - lambda;
  for (long j = 0; j < t; ++j) {
    out.f -= (Scalar(j + 1) / one_minus.pow(j + 2)) * chain(d, j);
  }
  for (long j = 0; j < s; ++j) {
    out.a.push_back(Scalar(-1) * resolvent(v, j, s, lambda));
  }
  for (long j = 0; j < t; ++j) out.c_chain.push_back(chain(d, j));
  return out;
}

long average_min_k(const AverageExpansion& expansion) {
  return static_cast<long>(std::max(expansion.s, expansion.t)) + 2;
}

Coords eval_g(const AverageExpansion& ex, long k) {
  if (ex.unit) throw std::invalid_argument("G(k) is not defined for lambda = 1");
  if (k < average_min_k(ex)) {
    throw std::domain_error("average closed form needs k > max(s, t) + 1 = " +
                            std::to_string(average_min_k(ex) - 1));
  }
  Coords g = zeros(ex.dimension);
  const Scalar& lambda = ex.lambda;
  Scalar one_minus_sq = (one_like(lambda) - lambda).pow(2);
  for (long j = 0; j < static_cast<long>(ex.w); ++j) {
    Coords inner = zeros(ex.dimension);
    if (j < static_cast<long>(ex.s)) inner += ex.a[static_cast<std::size_t>(j)];
    if (j < static_cast<long>(ex.t)) {
      inner += (d_factor(k, j, lambda) / one_minus_sq) *
               ex.c_chain[static_cast<std::size_t>(j)];
    }
    Scalar weight = Scalar(binom(k, j)) * lambda.pow(k - j) / Scalar(k);
    g += weight * inner;
  }
  return g;
}

Coords eval_average(const AverageExpansion& ex, long k) {
  if (k < average_min_k(ex)) {
    throw std::domain_error("average closed form needs k > max(s, t) + 1 = " +
                            std::to_string(average_min_k(ex) - 1));
  }
  if (ex.unit) {
    Coords sum = zeros(ex.dimension);
    for (std::size_t j = 1; j <= ex.x_terms.size(); ++j) {
      sum += Scalar(binom(k, static_cast<long>(j))) * ex.x_terms[j - 1];
    }
    for (std::size_t j = 0; j < ex.c_terms.size(); ++j) {
      sum += Scalar(binom(k, static_cast<long>(j) + 2)) * ex.c_terms[j];
    }
    return Scalar(Rational(1, k)) * sum;
  }
  Coords out = ex.e;
  out += Scalar(Rational(1, k)) * ex.f;
  out += eval_g(ex, k);
  return out;
}

HPolynomial h_polynomial(const AverageExpansion& ex) {
  if (ex.unit || ex.lambda.is_zero()) {
    throw std::invalid_argument("H(k, lambda) requires lambda not in {0, 1}");
  }
  HPolynomial out{VectorPolynomial(ex.dimension), -1, false, {}};
  const Scalar& lambda = ex.lambda;
  Scalar one_minus_sq = (one_like(lambda) - lambda).pow(2);
  for (long j = 0; j < static_cast<long>(ex.w); ++j) {
    Scalar lambda_inv = lambda.pow(-j);
    if (j < static_cast<long>(ex.s)) {
      out.poly.add_term(lambda_inv * binom_poly(j), ex.a[static_cast<std::size_t>(j)]);
    }
    if (j < static_cast<long>(ex.t)) {
      out.poly.add_term((lambda_inv / one_minus_sq) * binom_times_d(j, lambda),
                        ex.c_chain[static_cast<std::size_t>(j)]);
    }
  }
  out.degree = out.poly.degree();
  out.s_equals_t = ex.s == ex.t;
  if (out.s_equals_t) {
    out.rule = "s=t: the degree of H decides";
  } else if (ex.s > ex.t) {
    out.rule = "s>t: A_{s-1} dominates";
  } else {
    out.rule = "t>s: N^{t-1}c dominates";
  }
  return out;
}

bool fixed_point_condition(const JordanBlock& block, const Coords& v, const Coords& d,
                           std::size_t i) {
  if (block.lambda.is_zero() || block.lambda.is_one(0.0)) {
    throw std::invalid_argument("fixed-point conditions require lambda not in {0, 1}");
  }
  const std::size_t t = nilpotent_index(d);
  if (i < 1 || i + 1 > t) {
    throw std::out_of_range("condition index " + std::to_string(i) +
                            " outside 1..t-1 with t=" + std::to_string(t));
  }
  Coords lhs = shift(v, i);
  Coords rhs = resolvent(d, static_cast<long>(i), static_cast<long>(t), block.lambda);
  if (block.lambda.is_exact()) return lhs == rhs;
  ZeroTest zero(1.0 + max_modulus(lhs) + max_modulus(rhs));
  return zero.zero(lhs - rhs);
}

BlockVector fixed_point(const JordanSystem& sys) {
  BlockVector out;
  for (std::size_t b = 0; b < sys.block_count(); ++b) {
    const auto& block = sys.blocks()[b];
    const Coords& d = sys.c()[b];
    if (block.lambda.is_one(0.0)) {
      if (!is_zero(d)) {
        throw std::domain_error("block " + std::to_string(b) +
                                " has lambda = 1 and c != 0: no fixed point");
      }
      out.push_back(zeros(block.size));
      continue;
    }
    out.push_back(resolvent(d, 0, static_cast<long>(nilpotent_index(d)), block.lambda));
  }
  return out;
}

BlockVerdict classify_average_block(const AverageExpansion& ex, ZeroTest& zero) {
  BlockVerdict verdict;
  if (ex.s == 0 && ex.t == 0) {
    verdict.case_label = "trivial: s=t=0";
    verdict.behavior = BlockBehavior::Constant;
    verdict.limit = zeros(ex.dimension);
    verdict.detail = "x = c = 0 on the block";
    return verdict;
  }

  if (ex.unit) {
    verdict.case_label = "Case 3: lambda=1";
    // Ave_k = x + (1/k) sum_{m>=2} C(k,m) (N^{m-1} x + N^{m-2} c)
    const std::size_t top = std::max(ex.s, ex.t + 1);
    for (std::size_t m = 2; m <= top; ++m) {
      Coords coeff = zeros(ex.dimension);
      if (m <= ex.x_terms.size()) coeff += ex.x_terms[m - 1];
      if (m - 2 < ex.c_terms.size()) coeff += ex.c_terms[m - 2];
      if (!zero.zero(coeff)) {
        verdict.behavior = BlockBehavior::Diverges;
        verdict.witness = m;
        verdict.detail = "coefficient of C(k," + std::to_string(m) + ")/k is nonzero";
        return verdict;
      }
    }
    verdict.behavior = BlockBehavior::Constant;
    verdict.limit = ex.x_terms.empty() ? zeros(ex.dimension) : ex.x_terms.front();
    verdict.detail = "N^i c + N^{i+1} x = 0 for all i; the average equals x";
    return verdict;
  }

  const int side = zero.compare_modulus_to_one(ex.lambda);
  if (side < 0) {
    verdict.case_label = "Case 4: |lambda|<1";
    verdict.behavior = BlockBehavior::Converges;
    verdict.limit = ex.e;
    verdict.detail = "G(k) -> 0 and F/k -> 0; converges to E";
    return verdict;
  }

  verdict.case_label = side > 0 ? "Case 1: |lambda|>1" : "Case 2: |lambda|=1, lambda!=1";
  if (ex.s != ex.t) {
    const std::size_t top = std::max(ex.s, ex.t);
    verdict.witness = top - 1;
    std::string dominant = ex.s > ex.t ? "A_{s-1}" : "N^{t-1}c";
    if (side > 0 || top >= 3) {
      verdict.behavior = BlockBehavior::Diverges;
      verdict.detail = dominant + " != 0 dominates";
    } else if (top == 2) {
      verdict.behavior = BlockBehavior::Oscillating;
      verdict.detail = dominant + " term is lambda^{k-1} times a nonzero vector";
    } else {
      verdict.behavior = BlockBehavior::Converges;
      verdict.limit = ex.e;
      verdict.detail = "G(k) = O(1/k); converges to E";
    }
    return verdict;
  }

  HPolynomial h = h_polynomial(ex);
  int degree = ex.lambda.is_exact() ? h.degree : effective_degree(h.poly, zero);
  verdict.detail = "deg H = " + std::to_string(degree);
  if (degree < 0) {
    verdict.behavior = BlockBehavior::Constant;
    verdict.limit = ex.e;
    verdict.detail += "; x is the fixed point and the average equals E";
    return verdict;
  }
  verdict.witness = static_cast<std::size_t>(degree);
  if (side > 0 || degree >= 2) {
    verdict.behavior = BlockBehavior::Diverges;
  } else if (degree == 1) {
    verdict.behavior = BlockBehavior::Oscillating;
  } else {
    verdict.behavior = BlockBehavior::Converges;
    verdict.limit = ex.e;
  }
  return verdict;
}

Verdict classify_average_system(const JordanSystem& sys, const ClassifyOptions& options) {
  Verdict verdict;
  verdict.linear = sys.is_linear();
  ZeroTest zero(sys.scale());
  for (std::size_t b = 0; b < sys.block_count(); ++b) {
    auto ex = expand_average_block(sys.blocks()[b], sys.x()[b], sys.c()[b]);
    BlockVerdict bv = classify_average_block(ex, zero);
    bv.block = b;
    verdict.blocks.push_back(std::move(bv));
  }
  verdict.numerically_uncertain = zero.uncertain();

  if (std::any_of(verdict.blocks.begin(), verdict.blocks.end(), [](const auto& bv) {
        return bv.behavior == BlockBehavior::Diverges;
      })) {
    verdict.kind = VerdictKind::DivergesToInfinity;
    return verdict;
  }
  const bool all_settle =
      std::all_of(verdict.blocks.begin(), verdict.blocks.end(), [](const auto& bv) {
        return bv.behavior == BlockBehavior::Constant ||
               bv.behavior == BlockBehavior::Converges;
      });
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
    auto trace = brute_force_average(sys.to_float(), horizon);
    verdict.lower_bound = trace.trend.window_min;
    verdict.upper_bound = trace.trend.window_max;
    verdict.bounds_horizon = horizon;
    return verdict;
  }
  verdict.kind = all_settle ? VerdictKind::ConvergesToConstant : VerdictKind::Bounded;
  return verdict;
}

AverageTrace brute_force_average(const JordanSystem& sys, long horizon, bool keep_states) {
  if (horizon < 1) throw std::invalid_argument("average horizon must be >= 1");
  AverageTrace trace;
  const bool exact = sys.is_exact();
  BlockVector state = sys.x();
  BlockVector sum = sys.zero_vector();
  std::optional<long> overflow;
  for (long k = 1; k <= horizon; ++k) {
    for (std::size_t b = 0; b < sum.size(); ++b) sum[b] += state[b];
    Scalar inv = exact ? Scalar(Rational(1, k)) : Scalar::from_double(1.0 / static_cast<double>(k));
    BlockVector average;
    average.reserve(sum.size());
    for (const auto& seg : sum) average.push_back(inv * seg);
    double norm = block_norm(average);
    if (!std::isfinite(norm)) {
      overflow = k;
      break;
    }
    trace.norms.push_back(norm);
    if (keep_states) trace.states.push_back(average);
    trace.last = std::move(average);
    if (k < horizon) state = apply_affine(sys, state);
  }
  trace.trend = assess_trend(trace.norms, sys.scale(), overflow);
  return trace;
}

}  // namespace orbit
