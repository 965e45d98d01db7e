#include "orbit/identities.hpp"

#include <stdexcept>

#include "orbit/combinatorics.hpp"

namespace orbit {

namespace {

Integer factorial(long n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

Scalar alternating_difference(std::span<const Scalar> values, long i) {
  // sum_{p=0}^{i} (-1)^p C(i,p) f(i+1-p), with values[q] = f(q+1)
  Scalar total(0);
  for (long p = 0; p <= i; ++p) {
    Scalar term = Scalar(binom(i, p)) * values[static_cast<std::size_t>(i - p)];
    if (p % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

}  // namespace

std::vector<Scalar> newton_coeffs(std::span<const Scalar> values) {
  if (values.empty()) throw std::invalid_argument("newton_coeffs needs samples");
  std::vector<Scalar> out;
  out.reserve(values.size());
  for (long i = 0; i < static_cast<long>(values.size()); ++i) {
    out.push_back(alternating_difference(values, i) / Scalar(factorial(i)));
  }
  return out;
}

Scalar newton_evaluate(std::span<const Scalar> coeffs, const Scalar& at) {
  Scalar total(0);
  Scalar basis(1);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    total += coeffs[i] * basis;
    basis *= at - Scalar(static_cast<long>(i + 1));
  }
  return total;
}

Scalar newton_vanishing_sum(std::span<const Scalar> values, long n) {
  if (n < 0 || static_cast<long>(values.size()) < n + 1) {
    throw std::invalid_argument("newton_vanishing_sum needs f(1..n+1)");
  }
  return alternating_difference(values, n);
}

Rational p_coeff(long i, long j, long m) {
  if (m < 1) throw std::invalid_argument("P(i,j,m) requires m >= 1");
  if (i < 0) return 0;
  Integer total = 0;
  for (long p = 0; p <= i; ++p) {
    Integer base = j - i - 1 + p;
    Integer power;
    mpz_pow_ui(power.get_mpz_t(), base.get_mpz_t(),
               static_cast<unsigned long>(m - 1));
    Integer term = binom(i, p) * power;
    if (p % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  Rational out(total, factorial(i));
  out.canonicalize();
  return out;
}

Rational p_coeff_recursive(long i, long j, long m) {
  if (m < 1) throw std::invalid_argument("P(i,j,m) requires m >= 1");
  if (i < 0) return 0;
  if (m == 1) return i == 0 ? 1 : 0;
  return Rational(j - i - 1) * p_coeff_recursive(i, j, m - 1) -
         p_coeff_recursive(i - 1, j, m - 1);
}

KPolynomial m_poly(long m, long j) {
  if (m < 1) throw std::invalid_argument("M(m,j,x) requires m >= 1");
  std::vector<Scalar> coeffs(static_cast<std::size_t>(m + 1), Scalar(0));
  for (long i = 1; i <= m; ++i) {
    Rational c = Rational(factorial(i + 1) * binom(j, i)) * p_coeff(i - 1, j, m);
    coeffs[static_cast<std::size_t>(i)] = Scalar(i % 2 == 1 ? c : Rational(-c));
  }
  return KPolynomial(std::move(coeffs));
}

Scalar l_coeff(long m, long j, const Scalar& lambda) {
  if (lambda.is_one(0.0)) {
    throw std::invalid_argument("L(m,j,lambda) is undefined at lambda = 1");
  }
  return m_poly(m, j).evaluate(lambda / (Scalar(1) - lambda));
}

std::vector<Scalar> elementary_symmetric(std::span<const Scalar> values) {
  std::vector<Scalar> e(values.size() + 1, Scalar(0));
  e[0] = Scalar(1);
  for (std::size_t n = 0; n < values.size(); ++n) {
    for (std::size_t d = n + 1; d >= 1; --d) e[d] += values[n] * e[d - 1];
  }
  return e;
}

Scalar complete_homogeneous(std::span<const Scalar> values, long degree) {
  if (degree < 0) return Scalar(0);
  std::vector<Scalar> h(static_cast<std::size_t>(degree + 1), Scalar(0));
  h[0] = Scalar(1);
  for (const auto& v : values) {
    for (std::size_t d = 1; d < h.size(); ++d) h[d] += v * h[d - 1];
  }
  return h.back();
}

bool m_cancellation_check(long m, long j) {
  if (m < 1) throw std::invalid_argument("m_cancellation_check requires m >= 1");
  std::vector<Scalar> tail;  // j_1 .. j_{m-1}
  for (long q = 1; q <= m - 1; ++q) tail.push_back(Scalar(j - q));
  auto h = elementary_symmetric(tail);

  KPolynomial lhs;
  for (long i = 0; i <= m - 1; ++i) {
    KPolynomial term = h[static_cast<std::size_t>(i)] * m_poly(m - i, j);
    if (i % 2 == 0) {
      lhs += term;
    } else {
      lhs -= term;
    }
  }
  Integer product = m + 1;
  for (long q = 0; q <= m - 1; ++q) product *= j - q;
  return lhs == KPolynomial::monomial(static_cast<std::size_t>(m), Scalar(product));
}

bool rs_identity_check(long p, long q, std::span<const Scalar> assignment) {
  if (p < 1 || q < 1) throw std::invalid_argument("rs_identity_check needs p, q >= 1");
  if (static_cast<long>(assignment.size()) < p + q) {
    throw std::invalid_argument("rs_identity_check needs p + q assigned values");
  }
  Scalar total(0);
  for (long i = 0; i <= q; ++i) {
    auto r = complete_homogeneous(assignment.first(static_cast<std::size_t>(p + i)), q - i);
    auto e = elementary_symmetric(assignment.first(static_cast<std::size_t>(p + i - 1)));
    Scalar s = static_cast<std::size_t>(i) < e.size() ? e[static_cast<std::size_t>(i)]
                                                      : Scalar(0);
    if (i % 2 == 0) {
      total += r * s;
    } else {
      total -= r * s;
    }
  }
  return total.is_zero();
}

}  // namespace orbit
