#include "orbit/property_p.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "orbit/averages.hpp"
#include "orbit/iterates.hpp"

namespace orbit {

namespace {

// State of the tail restricted to its support [0, support).
struct TailState {
  Coords coords;
  std::size_t support = 0;
};

std::size_t support_of(const Coords& v) { return nilpotent_index(v); }

TailState make_state(const Coords& v) { return {v, support_of(v)}; }

// state <- A state + c
void tail_step(const TailOperator& tail, TailState& state, const TailState& c) {
  Coords& v = state.coords;
  if (tail.kind == TailOperator::Kind::Diagonal) {
    for (std::size_t i = 0; i < state.support; ++i) {
      if (!v[i].is_zero()) v[i] *= tail.weight(i);
    }
  } else {
    if (state.support == tail.truncation) {
      Scalar pushed = tail.weight(tail.truncation - 1) * v[tail.truncation - 1];
      if (!pushed.is_zero()) {
        throw std::out_of_range("tail orbit left the truncated space (dimension " +
                                std::to_string(tail.truncation) + ")");
      }
    }
    std::size_t top = std::min(state.support, tail.truncation - 1);
    for (std::size_t i = top; i > 0; --i) v[i] = tail.weight(i - 1) * v[i - 1];
    if (state.support > 0) v[0] = Scalar(0) * v[0];
    state.support = std::min(state.support + 1, tail.truncation);
  }
  for (std::size_t i = 0; i < c.support; ++i) v[i] += c.coords[i];
  state.support = std::max(state.support, c.support);
  // Trim trailing zeros so float underflow keeps the support small. Subnormal
  // floats count as zero: a weight of modulus >= 3/4 rounds the smallest
  // subnormal back to itself, so it would never vanish.
  auto negligible = [](const Scalar& z) {
    return z.is_zero() || (!z.is_exact() && z.modulus() < std::numeric_limits<double>::min());
  };
  while (state.support > 0 && negligible(v[state.support - 1])) {
    v[state.support - 1] = Scalar(0) * v[state.support - 1];
    --state.support;
  }
}

double tail_norm(const TailState& state) {
  double best = 0.0;
  for (std::size_t i = 0; i < state.support; ++i) {
    best = std::max(best, state.coords[i].modulus());
  }
  return best;
}

struct Simulation {
  std::vector<double> orbit_norms;    // k = 0..K
  std::vector<double> average_norms;  // k = 1..K
  std::optional<long> overflow;
};

Simulation simulate(const PropertyPOperator& op, long horizon, bool averages) {
  Simulation sim;
  BlockVector head = op.head.x();
  BlockVector head_sum = op.head.zero_vector();
  TailState tail = make_state(op.x_tail);
  TailState tail_sum{zeros(op.tail.truncation), 0};
  const TailState c = make_state(op.c_tail);

  for (long k = 0; k <= horizon; ++k) {
    if (k > 0) {
      head = apply_affine(op.head, head);
      tail_step(op.tail, tail, c);
    }
    double norm = block_norm(head) + tail_norm(tail);
    if (!std::isfinite(norm)) {
      sim.overflow = k;
      break;
    }
    sim.orbit_norms.push_back(norm);
    if (averages && k < horizon) {
      for (std::size_t b = 0; b < head.size(); ++b) head_sum[b] += head[b];
      for (std::size_t i = 0; i < tail.support; ++i) tail_sum.coords[i] += tail.coords[i];
      tail_sum.support = std::max(tail_sum.support, tail.support);
      double head_avg = 0.0;
      for (const auto& seg : head_sum) head_avg += max_modulus(seg);
      sim.average_norms.push_back((head_avg + tail_norm(tail_sum)) /
                                  static_cast<double>(k + 1));
    }
  }
  return sim;
}

Verdict assemble(Verdict head, const PropertyPOperator& op, bool averages,
                 const ClassifyOptions& options) {
  Verdict out = std::move(head);
  const bool linear = op.is_linear();
  BlockVerdict tail;
  tail.block = op.head.block_count();
  tail.case_label = "tail: property (P) contraction";
  tail.behavior = BlockBehavior::Converges;
  tail.detail = linear ? "tends to 0"
                       : "bounded by tail_bound; tends to sum_m A^m c_2 (limit not listed)";
  out.blocks.push_back(std::move(tail));
  out.linear = linear;

  if (out.kind == VerdictKind::DivergesToInfinity) return out;
  if (linear) {
    if (out.kind == VerdictKind::BoundedAwayFromZero) {
      long horizon = std::max(2L, options.bounds_horizon);
      auto sim = simulate(to_float(op), horizon, averages);
      const auto& norms = averages ? sim.average_norms : sim.orbit_norms;
      auto trend = assess_trend(norms, op.scale(), sim.overflow);
      out.lower_bound = trend.window_min;
      out.upper_bound = trend.window_max;
      out.bounds_horizon = horizon;
    }
    return out;
  }
  out.lower_bound.reset();
  out.upper_bound.reset();
  out.bounds_horizon.reset();
  if (out.kind == VerdictKind::ConvergesToZero ||
      out.kind == VerdictKind::ConvergesToConstant) {
    out.kind = VerdictKind::ConvergesToConstant;
  } else {
    out.kind = VerdictKind::Bounded;
    out.limit.reset();
  }
  return out;
}

}  // namespace

const Scalar& TailOperator::weight(std::size_t i) const {
  if (weights.empty()) throw std::invalid_argument("tail operator has no weights");
  return weights[std::min(i, weights.size() - 1)];
}

Coords TailOperator::apply(const Coords& v) const {
  if (v.size() != truncation) {
    throw std::invalid_argument("tail vector length must equal the truncation");
  }
  TailState state = make_state(v);
  TailState none{zeros(truncation), 0};
  tail_step(*this, state, none);
  return state.coords;
}

bool TailOperator::satisfies_contraction(long max_k) const {
  const Rational r_sq = r * r;
  // Windows starting past the explicit weights all see the last weight.
  const std::size_t starts = std::min(truncation, weights.size() + 1);
  for (std::size_t i = 0; i < starts; ++i) {
    Rational product = 1;
    Rational bound = 1;
    for (long k = 1; k <= max_k; ++k) {
      std::size_t index = kind == Kind::Diagonal ? i : i + static_cast<std::size_t>(k) - 1;
      if (kind == Kind::Shift && index + 1 >= truncation) break;
      product *= weight(index).modulus_squared();
      bound *= r_sq;
      if (k >= n_start && product > bound) return false;
    }
  }
  return true;
}

void PropertyPOperator::validate() const {
  if (x_tail.size() != tail.truncation || c_tail.size() != tail.truncation) {
    throw std::invalid_argument("tail x and c must have length truncation = " +
                                std::to_string(tail.truncation));
  }
  if (tail.truncation == 0) throw std::invalid_argument("tail truncation must be >= 1");
  if (tail.r < 0 || tail.r >= 1) throw std::invalid_argument("tail r must lie in [0, 1)");
  if (tail.n_start < 1) throw std::invalid_argument("tail N must be >= 1");
  if (!tail.satisfies_contraction(tail.n_start + 64)) {
    throw std::invalid_argument("tail weights violate |A^k v| <= r^k |v| for k >= N");
  }
}

bool PropertyPOperator::is_linear() const {
  return head.is_linear() && is_zero(c_tail);
}

double PropertyPOperator::scale() const {
  return std::max({head.scale(), max_modulus(x_tail), max_modulus(c_tail)});
}

double tail_bound(const PropertyPOperator& op, const Coords& x_tail, long k) {
  if (k < op.tail.n_start) {
    throw std::domain_error("tail_bound needs k >= N = " + std::to_string(op.tail.n_start));
  }
  // c + A c + ... + A^{N-1} c
  TailState partial{zeros(op.tail.truncation), 0};
  const TailState c = make_state(op.c_tail);
  for (long m = 0; m < op.tail.n_start; ++m) tail_step(op.tail, partial, c);
  const double r = op.tail.r.get_d();
  return std::pow(r, static_cast<double>(k)) * max_modulus(x_tail) + tail_norm(partial) +
         max_modulus(op.c_tail) / (1.0 - r);
}

std::vector<double> tail_orbit_norms(const PropertyPOperator& op, const Coords& x_tail,
                                     long horizon) {
  std::vector<double> norms;
  TailState state = make_state(x_tail);
  const TailState c = make_state(op.c_tail);
  norms.push_back(tail_norm(state));
  for (long k = 1; k <= horizon; ++k) {
    tail_step(op.tail, state, c);
    norms.push_back(tail_norm(state));
  }
  return norms;
}

PropertyPOperator to_float(const PropertyPOperator& op) {
  PropertyPOperator out{op.head.to_float(), op.tail, orbit::to_float(op.x_tail),
                        orbit::to_float(op.c_tail)};
  for (auto& w : out.tail.weights) w = w.to_float();
  return out;
}

PropertyPTrace property_p_average(const PropertyPOperator& op, long horizon) {
  auto sim = simulate(op, horizon, true);
  PropertyPTrace trace;
  trace.norms = std::move(sim.average_norms);
  trace.trend = assess_trend(trace.norms, op.scale(), sim.overflow);
  return trace;
}

PropertyPTrace property_p_orbit(const PropertyPOperator& op, long horizon) {
  auto sim = simulate(op, horizon, false);
  PropertyPTrace trace;
  trace.norms = std::move(sim.orbit_norms);
  trace.trend = assess_trend(trace.norms, op.scale(), sim.overflow);
  return trace;
}

Verdict classify_property_p(const PropertyPOperator& op, const ClassifyOptions& options) {
  op.validate();
  return assemble(classify_system(op.head, options), op, false, options);
}

Verdict classify_average_property_p(const PropertyPOperator& op,
                                    const ClassifyOptions& options) {
  op.validate();
  return assemble(classify_average_system(op.head, options), op, true, options);
}

Rational WeightedShift::weight(long i) const {
  long n = 0;
  while (boundary(n + 1) <= i) ++n;
  return n % 2 == 0 ? Rational(1, 2) : Rational(2);
}

std::vector<Rational> weighted_shift_orbit(const WeightedShift& shift, long horizon) {
  if (horizon < 0 || static_cast<std::size_t>(horizon) >= shift.truncation) {
    throw std::out_of_range("A^k e_0 sits at coordinate k; horizon " +
                            std::to_string(horizon) + " needs truncation > horizon (" +
                            std::to_string(shift.truncation) + ")");
  }
  std::vector<Rational> norms{Rational(1)};
  for (long k = 1; k <= horizon; ++k) norms.push_back(norms.back() * shift.weight(k - 1));
  return norms;
}

ShiftSubsequences weighted_shift_subsequences(const std::vector<Rational>& norms) {
  ShiftSubsequences out;
  const long last = static_cast<long>(norms.size()) - 1;
  for (long n = 1; WeightedShift::boundary(2 * n - 1) <= last; ++n) {
    long k = WeightedShift::boundary(2 * n - 1);
    out.shrinking.emplace_back(k, norms[static_cast<std::size_t>(k)]);
    long g = WeightedShift::boundary(2 * n);
    if (g <= last) out.growing.emplace_back(g, norms[static_cast<std::size_t>(g)]);
  }
  for (long k = 0; k <= last; ++k) {
    if (norms[static_cast<std::size_t>(k)] == 1) out.unit_norm.push_back(k);
  }
  return out;
}

}  // namespace orbit
