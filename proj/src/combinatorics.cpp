#include "orbit/combinatorics.hpp"

#include <complex>

namespace orbit {

namespace {

constexpr double kNearOneTolerance = 1e-6;

bool near_one_float(const Scalar& lambda) {
  return !lambda.is_exact() &&
         std::abs(lambda.to_complex() - 1.0) < kNearOneTolerance;
}

void require(bool condition, const std::string& message) {
  if (!condition) throw std::domain_error(message);
}

Scalar unit_like(const Scalar& lambda) {
  return lambda.is_exact() ? Scalar(1) : Scalar(1).to_float();
}

}  // namespace

Integer binom(long n, long j) {
  if (j < 0 || n < 0 || n < j) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(j));
  return out;
}

KPolynomial binom_poly(long j, long offset) {
  if (j < 0) return {};
  KPolynomial out = KPolynomial::constant(Scalar(1));
  Integer factorial = 1;
  for (long q = 0; q < j; ++q) {
    out = out * KPolynomial(std::vector<Scalar>{Scalar(offset - q), Scalar(1)});
    factorial *= q + 1;
  }
  return Scalar(Rational(1, factorial)) * out;
}

Scalar s_sum_direct(long j, long k, const Scalar& lambda) {
  Scalar total = unit_like(lambda) * Scalar(0);
  Scalar power = unit_like(lambda);
  for (long i = j; i <= k - 1; ++i) {
    total += Scalar(binom(i, j)) * power;
    power *= lambda;
  }
  return total;
}

Scalar s_sum(long j, long k, const Scalar& lambda) {
  require(j >= 0 && k > j, "s_sum requires k > j >= 0");
  if (lambda.is_one()) {
    Scalar closed(binom(k, j + 1));
    if (!lambda.is_exact()) closed = closed.to_float();
    if (lambda.is_exact() && closed != s_sum_direct(j, k, lambda)) {
      throw IdentityViolation("S(j,k) != C(k,j+1) at lambda = 1");
    }
    return closed;
  }
  if (near_one_float(lambda)) return s_sum_direct(j, k, lambda);

  Scalar one_minus = unit_like(lambda) - lambda;
  Scalar closed = (unit_like(lambda) - lambda.pow(k)) / one_minus.pow(j + 1);
  for (long i = 0; i <= j - 1; ++i) {
    closed -= Scalar(binom(k, i + 1)) * lambda.pow(k - i - 1) /
              one_minus.pow(j - i);
  }
  if (lambda.is_exact() && closed != s_sum_direct(j, k, lambda)) {
    throw IdentityViolation("closed-form S(" + std::to_string(j) + "," +
                            std::to_string(k) + ") differs from direct sum");
  }
  return closed;
}

Scalar t_sum_direct(long j, long k, const Scalar& lambda) {
  Scalar total = unit_like(lambda) * Scalar(0);
  Scalar power = unit_like(lambda);
  for (long i = j; i <= k - 2; ++i) {
    total += Scalar(Integer((k - i - 1) * binom(i, j))) * power;
    power *= lambda;
  }
  return total;
}

Rational b_coeff(long i, long k, long j) {
  Rational out(binom(j, i) * binom(k - j, 2), binom(k - i, 2));
  out.canonicalize();
  return (j - i) % 2 == 0 ? out : Rational(-out);
}

Scalar d_factor(long k, long j, const Scalar& lambda) {
  require(j >= 0 && k >= j + 2, "D(k,j,lambda) requires k >= j + 2");
  if (lambda.is_one(0.0)) {
    throw std::invalid_argument("D(k,j,lambda) is undefined at lambda = 1");
  }
  Scalar bracket = unit_like(lambda) * Scalar(0);
  Scalar power = unit_like(lambda);
  for (long i = j; i >= 0; --i) {
    bracket += Scalar(b_coeff(i, k, j)) * power;
    power *= lambda;
  }
  return bracket / (unit_like(lambda) - lambda).pow(j);
}

Scalar t_sum_closed(long j, long k, const Scalar& lambda) {
  Scalar one_minus = unit_like(lambda) - lambda;
  return Scalar(k) / one_minus.pow(j + 1) -
         Scalar(j + 1) / one_minus.pow(j + 2) +
         Scalar(binom(k, j)) * lambda.pow(k - j) * d_factor(k, j, lambda) /
             one_minus.pow(2);
}

Scalar t_sum(long j, long k, const Scalar& lambda) {
  require(j >= 0 && k >= j + 2, "t_sum requires k >= j + 2");
  if (lambda.is_one(0.0)) {
    throw std::invalid_argument(
        "t_sum is undefined at lambda = 1; use C(k, j+2)");
  }
  if (near_one_float(lambda)) return t_sum_direct(j, k, lambda);
  Scalar closed = t_sum_closed(j, k, lambda);
  if (lambda.is_exact() && closed != t_sum_direct(j, k, lambda)) {
    throw IdentityViolation("closed-form T_" + std::to_string(j) +
                            " differs from direct sum at k=" +
                            std::to_string(k));
  }
  return closed;
}

bool binom_product_identity(long k, long i, long j) {
  require(k >= j + 2 && 0 <= i && i <= j,
          "binom_product_identity requires k >= j + 2 and 0 <= i <= j");
  Rational lhs(binom(k, j) * binom(j, i) * binom(k - j, 2), binom(k - i, 2));
  lhs.canonicalize();
  return lhs == Rational(binom(k, i) * binom(k - i - 2, j - i));
}

bool shifted_product_identity(long k, long i, long j) {
  require(k >= i + 2 && j >= i - 1,
          "shifted_product_identity requires k >= i + 2 and j >= i - 1");
  Integer lhs = (k - i + 1) * binom(k, i - 1) * binom(k - i - 1, j - i + 1) +
                (k - i - j - 2) * binom(k, i) * binom(k - i - 2, j - i);
  return lhs == (j + 1) * binom(k, i) * binom(k - i - 2, j - i + 1);
}

KPolynomial t_numerator_poly(long k, long j) {
  std::vector<Scalar> coeffs(static_cast<std::size_t>(j + 1), Scalar(0));
  for (long i = 0; i <= j; ++i) {
    Integer term = binom(k, i) * binom(k - i - 2, j - i);
    if ((j - i) % 2 != 0) term = -term;
    coeffs[static_cast<std::size_t>(j - i)] = Scalar(term);
  }
  return KPolynomial(std::move(coeffs));
}

bool tj_recurrence_check(long j, const Scalar& lambda, long k) {
  require(j >= 0 && k >= j + 3, "tj_recurrence_check requires k >= j + 3");
  if (lambda.is_zero() || lambda.is_one(0.0)) {
    throw std::invalid_argument("tj_recurrence_check requires lambda != 0, 1");
  }

  KPolynomial numerator = t_numerator_poly(k, j);
  KPolynomial numerator_prime = numerator.derivative();
  Scalar a = numerator.evaluate(lambda);
  Scalar a_prime = numerator_prime.evaluate(lambda);
  Scalar u = unit_like(lambda) - lambda;

  Scalar derivative =
      Scalar(k * (j + 1)) / u.pow(j + 2) -
      Scalar((j + 1) * (j + 2)) / u.pow(j + 3) +
      Scalar(k - j) * lambda.pow(k - j - 1) * a / u.pow(j + 2) +
      lambda.pow(k - j) * a_prime / u.pow(j + 2) +
      Scalar(j + 2) * lambda.pow(k - j) * a / u.pow(j + 3);
  bool derivative_ok =
      t_sum_direct(j + 1, k, lambda) == derivative / Scalar(j + 1);

  // [(1-l)(k-j) + (j+2) l] A + (1-l) l A' == (j+1) A_{j+1}
  KPolynomial linear(std::vector<Scalar>{Scalar(k - j), Scalar(2 * j + 2 - k)});
  KPolynomial l_minus_l2(std::vector<Scalar>{Scalar(0), Scalar(1), Scalar(-1)});
  KPolynomial lhs = linear * numerator + l_minus_l2 * numerator_prime;
  bool numerator_ok = lhs == Scalar(j + 1) * t_numerator_poly(k, j + 1);

  bool coefficients_ok = true;
  for (long i = 0; i <= j + 1; ++i) {
    coefficients_ok = coefficients_ok && shifted_product_identity(k, i, j);
  }
  return derivative_ok && numerator_ok && coefficients_ok;
}

}  // namespace orbit
