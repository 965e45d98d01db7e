#pragma once

#include <stdexcept>
#include <string>

#include "orbit/kpolynomial.hpp"
#include "orbit/scalar.hpp"

namespace orbit {

/// Raised when a closed form disagrees with its directly summed counterpart
/// in exact mode. This is an internal error, not an input error.
class IdentityViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// C(n, j) with C(n, 0) = 1 for n >= 0 and C(n, j) = 0 when j < 0 or n < j.
/// Negative n also yields 0.
Integer binom(long n, long j);

/// C(k + offset, j) as a polynomial in k:
/// (k+offset)(k+offset-1)...(k+offset-j+1) / j!. Zero for j < 0.
KPolynomial binom_poly(long j, long offset = 0);

/// S(j,k) = sum_{i=j}^{k-1} C(i,j) lambda^{i-j} by direct summation.
Scalar s_sum_direct(long j, long k, const Scalar& lambda);
/// S(j,k) via the closed form (C(k,j+1) at lambda = 1). In exact mode the
/// result is checked against s_sum_direct and IdentityViolation is thrown on
/// mismatch. Float inputs with |1 - lambda| < 1e-6 use direct summation.
/// Requires k > j >= 0.
Scalar s_sum(long j, long k, const Scalar& lambda);

/// T_j = sum_{i=j}^{k-2} (k-i-1) C(i,j) lambda^{i-j} by direct summation.
Scalar t_sum_direct(long j, long k, const Scalar& lambda);
/// T_j via its closed form; lambda != 1 and k >= j + 2. Checked against the
/// direct sum in exact mode.
Scalar t_sum(long j, long k, const Scalar& lambda);
/// The unchecked closed form behind t_sum.
Scalar t_sum_closed(long j, long k, const Scalar& lambda);

/// B_i(k,j) = (-1)^{j-i} C(j,i) C(k-j,2) / C(k-i,2).
Rational b_coeff(long i, long k, long j);

/// D(k,j,lambda) = (1-lambda)^{-j} [B_0 lambda^j + ... + B_{j-1} lambda + 1].
/// Throws std::domain_error when k < j + 2 and std::invalid_argument when
/// lambda == 1.
Scalar d_factor(long k, long j, const Scalar& lambda);

/// C(k,j) C(j,i) C(k-j,2) / C(k-i,2) == C(k,i) C(k-i-2,j-i), exactly.
/// Requires k >= j + 2 and 0 <= i <= j.
bool binom_product_identity(long k, long i, long j);

/// (k-i+1) C(k,i-1) C(k-i-1,j-i+1) + (k-i-j-2) C(k,i) C(k-i-2,j-i)
///   == (j+1) C(k,i) C(k-i-2,j-i+1), for k >= i + 2, j >= i - 1.
bool shifted_product_identity(long k, long i, long j);

/// sum_{i=0}^{j} (-1)^{j-i} C(k,i) C(k-i-2,j-i) lambda^{j-i} as a polynomial
/// in lambda (coefficient p multiplies lambda^p).
KPolynomial t_numerator_poly(long k, long j);

/// Checks T_{j+1} == (d/dlambda T_j) / (j+1), where the right side
/// differentiates the closed form of T_j through its polynomial-in-lambda
/// numerator, and checks the numerator recurrence
/// [(1-l)(k-j) + (j+2) l] A_j + (1-l) l A_j' == (j+1) A_{j+1}
/// together with shifted_product_identity on 0 <= i <= j + 1.
/// Requires k >= j + 3 and lambda not in {0, 1}.
bool tj_recurrence_check(long j, const Scalar& lambda, long k);

}  // namespace orbit
