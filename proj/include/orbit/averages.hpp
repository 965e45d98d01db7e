#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "orbit/coords.hpp"
#include "orbit/iterates.hpp"
#include "orbit/jordan.hpp"
#include "orbit/kpolynomial.hpp"
#include "orbit/verdict.hpp"

namespace orbit {

/// Block component of the Cesaro average Ave_k T(x) = (1/k) sum_{m<k} T^m x.
///
/// lambda != 1:  Ave_k = E + F/k + G(k), with
///   G(k) = sum_{j<w} (1/k) C(k,j) lambda^{k-j}
///            (eps(s-1-j) A_j + eps(t-1-j) D(k,j,lambda)/(1-lambda)^2 N^j c)
/// lambda == 1:  Ave_k = (1/k) [sum_{j=1}^{s} C(k,j) N^{j-1} x
///                              + sum_{j<t} C(k,j+2) N^j c]
struct AverageExpansion {
  Scalar lambda;
  bool unit = false;
  std::size_t s = 0;
  std::size_t t = 0;
  std::size_t w = 0;
  std::size_t dimension = 0;

  Coords e;
  Coords f;
  std::vector<Coords> a;        // A_j = -sum_{i=j}^{s-1} N^i x / (1-lambda)^{i-j+1}
  std::vector<Coords> c_chain;  // N^j c, j < t

  std::vector<Coords> x_terms;  // unit case: N^{j-1} x multiplies C(k,j)
  std::vector<Coords> c_terms;  // unit case: N^j c multiplies C(k,j+2)
};

AverageExpansion expand_average_block(const JordanBlock& block, const Coords& v,
                                      const Coords& d);

/// Smallest k accepted by eval_average: max(s, t) + 2.
long average_min_k(const AverageExpansion& expansion);

/// Exact Ave_k T(x) on the block. Throws std::domain_error for
/// k <= max(s, t) + 1.
Coords eval_average(const AverageExpansion& expansion, long k);
/// G(k) alone (lambda != 1).
Coords eval_g(const AverageExpansion& expansion, long k);

/// G(k) = (lambda^k / k) H(k), with H a polynomial in k built symbolically:
/// C(k,j) D(k,j,lambda) is expanded as
/// (1-lambda)^{-j} sum_i (-1)^{j-i} C(k,i) C(k-i-2,j-i) lambda^{j-i}.
struct HPolynomial {
  VectorPolynomial poly;
  int degree = -1;  // -1 for the zero polynomial
  bool s_equals_t = false;
  /// How the block is classified: by the degree of H when s == t, or by the
  /// dominant coefficient otherwise.
  std::string rule;
};

/// Requires lambda not in {0, 1}.
HPolynomial h_polynomial(const AverageExpansion& expansion);

/// N^i x == sum_{j=i}^{t-1} N^j c / (1-lambda)^{j-i+1}. Requires
/// lambda not in {0, 1} and 1 <= i <= t-1 (std::out_of_range otherwise).
bool fixed_point_condition(const JordanBlock& block, const Coords& v,
                           const Coords& d, std::size_t i);

/// x* with T x* = x*: per block sum_j N^j c / (1-lambda)^{j+1}. A lambda == 1
/// block contributes 0 when its c segment is 0 and otherwise has no fixed
/// point (std::domain_error).
BlockVector fixed_point(const JordanSystem& sys);

BlockVerdict classify_average_block(const AverageExpansion& expansion, ZeroTest& zero);

/// Bounded-or-infinite dichotomy for averages, refined to the trichotomy
/// when c == 0.
Verdict classify_average_system(const JordanSystem& sys,
                                const ClassifyOptions& options = {});

struct AverageTrace {
  std::vector<double> norms;        // |Ave_k| for k = 1..K (index k-1)
  std::vector<BlockVector> states;  // Ave_k, only when requested
  BlockVector last;
  EmpiricalTrend trend;
};

/// Running-sum evaluation of the definition. Exact in exact mode.
AverageTrace brute_force_average(const JordanSystem& sys, long horizon,
                                 bool keep_states = false);

}  // namespace orbit
