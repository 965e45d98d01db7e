#pragma once

#include <span>
#include <vector>

#include "orbit/kpolynomial.hpp"
#include "orbit/scalar.hpp"

namespace orbit {

// Newton forward differences on the sample points 1, 2, ..., l+1 with the
// basis x_0 = 1, x_i = (x-1)(x-2)...(x-i).

/// d_i = (1/i!) sum_p (-1)^p C(i,p) f(i+1-p) for values f(1), ..., f(l+1).
std::vector<Scalar> newton_coeffs(std::span<const Scalar> values);
/// sum_i d_i x_i evaluated at `at`.
Scalar newton_evaluate(std::span<const Scalar> coeffs, const Scalar& at);
/// f(n+1) - C(n,1) f(n) + ... + (-1)^n f(1); needs values f(1..n+1).
/// Vanishes when n exceeds the degree of f.
Scalar newton_vanishing_sum(std::span<const Scalar> values, long n);

/// P(i,j,m): the i-th Newton coefficient of f(x) = (j - x)^{m-1},
/// (1/i!) sum_{p=0}^{i} (-1)^p C(i,p) (j-i-1+p)^{m-1}. Zero for i < 0 and
/// for i >= m.
Rational p_coeff(long i, long j, long m);
/// The same quantity through P(i,j,m) = (j-i-1) P(i,j,m-1) - P(i-1,j,m-1),
/// seeded by P(i,j,1) = [i == 0]. Cross-check only.
Rational p_coeff_recursive(long i, long j, long m);

/// M(m,j,x) = sum_{i=1}^{m} (-1)^{i+1} (i+1)! P(i-1,j,m) C(j,i) x^i.
KPolynomial m_poly(long m, long j);
/// L(m,j,lambda) = M(m,j,lambda/(1-lambda)); lambda != 1.
Scalar l_coeff(long m, long j, const Scalar& lambda);

/// Elementary symmetric polynomials e_0..e_n of `values`.
std::vector<Scalar> elementary_symmetric(std::span<const Scalar> values);
/// Complete homogeneous symmetric polynomial of the given degree.
Scalar complete_homogeneous(std::span<const Scalar> values, long degree);

/// M(m,j,x) - H_1 M(m-1,j,x) + ... + (-1)^{m-1} H_{m-1} M(1,j,x)
///   == j_0 j_1 ... j_{m-1} (m+1) x^m,
/// with j_q = j - q and H_i the elementary symmetric functions of
/// j_1, ..., j_{m-1}. Exact polynomial comparison.
bool m_cancellation_check(long m, long j);

/// R(n,d): complete homogeneous of degree d in m_1..m_n (R(n,0) = 1).
/// S(n,d): elementary symmetric of degree d in m_1..m_n (S(n,0) = 1).
/// Returns true iff sum_{i=0}^{q} (-1)^i R(p+i,q-i) S(p+i-1,i) == 0 under
/// `assignment` (m_1, m_2, ...), which must hold at least p+q values.
bool rs_identity_check(long p, long q, std::span<const Scalar> assignment);

}  // namespace orbit
