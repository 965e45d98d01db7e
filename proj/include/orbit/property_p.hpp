#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "orbit/coords.hpp"
#include "orbit/iterates.hpp"
#include "orbit/jordan.hpp"
#include "orbit/verdict.hpp"

namespace orbit {

inline constexpr std::size_t kDefaultTruncation = 512;

/// Contraction part of an operator with property (P), on the coordinates
/// 0..truncation-1 of a sequence space. Two shapes are supported:
///   Diagonal: (A v)_i = w_i v_i
///   Shift:    A e_i = w_i e_{i+1}; a nonzero coordinate pushed past the
///             truncation is an error, never dropped.
/// Weight i is weights[min(i, weights.size() - 1)]. The pair (r, n_start)
/// asserts |A^k v| <= r^k |v| for k >= n_start in the max-modulus norm.
struct TailOperator {
  enum class Kind { Diagonal, Shift };

  Kind kind = Kind::Diagonal;
  Rational r = Rational(1, 2);
  long n_start = 1;
  std::vector<Scalar> weights{Scalar(Rational(1, 2))};
  std::size_t truncation = kDefaultTruncation;

  const Scalar& weight(std::size_t i) const;
  Coords apply(const Coords& v) const;
  /// Spot-checks the contraction estimate on every basis vector (which is
  /// exhaustive for diagonal and shift operators) for n_start <= k <= max_k.
  bool satisfies_contraction(long max_k) const;
};

/// Finite Jordan head plus contraction tail: T(x) = A x + c with
/// A = head (+) tail.
struct PropertyPOperator {
  JordanSystem head;
  TailOperator tail;
  Coords x_tail;
  Coords c_tail;

  /// Validates tail vector lengths and the contraction estimate up to
  /// k = n_start + 64. Throws std::invalid_argument on failure.
  void validate() const;
  bool is_linear() const;
  double scale() const;
};

/// r^k |x_2| + |c_2 + A c_2 + ... + A^{N-1} c_2| + |c_2| / (1 - r),
/// the bound on |T^k x_2| for k >= N. Throws std::domain_error if k < N.
double tail_bound(const PropertyPOperator& op, const Coords& x_tail, long k);

/// |T^k x_2| for k = 0..horizon on the tail alone.
std::vector<double> tail_orbit_norms(const PropertyPOperator& op, const Coords& x_tail,
                                     long horizon);

struct PropertyPTrace {
  std::vector<double> norms;  // |P1 T^k x| + |P2 T^k x|
  EmpiricalTrend trend;
};
PropertyPTrace property_p_orbit(const PropertyPOperator& op, long horizon);
/// Norms of the Cesaro averages, k = 1..horizon (index k-1).
PropertyPTrace property_p_average(const PropertyPOperator& op, long horizon);

/// The same operator with every scalar in float mode.
PropertyPOperator to_float(const PropertyPOperator& op);

/// Head verdict from classify_system, assembled with the always-bounded
/// tail. With c = 0 everywhere the tail tends to 0 and the head trichotomy
/// carries over.
Verdict classify_property_p(const PropertyPOperator& op, const ClassifyOptions& options = {});
/// The same assembly for Cesaro averages.
Verdict classify_average_property_p(const PropertyPOperator& op,
                                    const ClassifyOptions& options = {});

/// Weighted shift A e_i = lambda_i e_{i+1} whose weights are 1/2 on
/// [c_{2n}, c_{2n+1} - 1] and 2 on [c_{2n-1}, c_{2n} - 1], c_n = n(n+1)/2.
/// Bounded but not compact, and without property (P).
struct WeightedShift {
  std::size_t truncation = kDefaultTruncation;

  static long boundary(long n) { return n * (n + 1) / 2; }
  Rational weight(long i) const;
};

/// Exact |A^k e_0| = lambda_0 ... lambda_{k-1} for k = 0..horizon.
/// Throws std::out_of_range when horizon >= truncation.
std::vector<Rational> weighted_shift_orbit(const WeightedShift& shift, long horizon);

struct ShiftSubsequences {
  std::vector<std::pair<long, Rational>> shrinking;  // k = c_{2n-1}: 2^{-n}
  std::vector<std::pair<long, Rational>> growing;    // k = c_{2n}: 2^{n}
  std::vector<long> unit_norm;                       // k with |A^k e_0| = 1
};
ShiftSubsequences weighted_shift_subsequences(const std::vector<Rational>& norms);

}  // namespace orbit
