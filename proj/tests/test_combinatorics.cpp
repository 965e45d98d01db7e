#include <gtest/gtest.h>

#include "oracle.hpp"
#include "orbit/combinatorics.hpp"
#include "orbit/identities.hpp"

using namespace orbit;

namespace {

Scalar q(long p, long d = 1) { return Scalar(Rational(p, d)); }

// Direct sums written out here rather than taken from the library.
Scalar s_reference(long j, long k, const Scalar& lambda, const std::vector<std::vector<Rational>>& c) {
  Scalar total(0);
  for (long i = j; i <= k - 1; ++i) total += Scalar(c[i][j]) * lambda.pow(i - j);
  return total;
}

Scalar t_reference(long j, long k, const Scalar& lambda, const std::vector<std::vector<Rational>>& c) {
  Scalar total(0);
  for (long i = j; i <= k - 2; ++i) total += Scalar((k - i - 1) * c[i][j]) * lambda.pow(i - j);
  return total;
}

std::vector<Scalar> nontrivial_pool() {
  std::vector<Scalar> out;
  for (const auto& l : oracle::lambda_pool()) {
    if (!l.is_zero() && !(l == Scalar(1))) out.push_back(l);
  }
  return out;
}

}  // namespace

TEST(Binom, Conventions) {
  EXPECT_EQ(binom(5, 2), 10);
  EXPECT_EQ(binom(3, 5), 0);
  EXPECT_EQ(binom(0, 0), 1);
  EXPECT_EQ(binom(4, -1), 0);
  EXPECT_EQ(binom(-2, 1), 0);
}

TEST(Binom, MatchesPascalTriangle) {
  auto c = oracle::pascal(60);
  for (long n = 0; n <= 60; ++n) {
    for (long j = 0; j <= n; ++j) EXPECT_EQ(Rational(binom(n, j)), c[n][j]);
  }
}

TEST(Binom, SymbolicAgreesWithConcrete) {
  EXPECT_EQ(binom_poly(1), KPolynomial({Scalar(0), Scalar(1)}));
  EXPECT_EQ(binom_poly(0), KPolynomial::constant(Scalar(1)));
  EXPECT_TRUE(binom_poly(-1).is_zero());
  for (long j = 0; j <= 10; ++j) {
    EXPECT_EQ(binom_poly(j).degree(), j);
    for (long k = j; k <= j + 20; ++k) {
      EXPECT_EQ(binom_poly(j).evaluate(Scalar(k)), Scalar(binom(k, j)));
      if (k >= 2) EXPECT_EQ(binom_poly(j, -2).evaluate(Scalar(k)), Scalar(binom(k - 2, j)));
    }
  }
}

TEST(SSum, Examples) {
  EXPECT_EQ(s_sum(1, 5, Scalar(1)), Scalar(10));
  EXPECT_EQ(s_sum(0, 3, Scalar(2)), Scalar(7));
  EXPECT_EQ(s_sum(1, 4, Scalar(3)), Scalar(34));
}

TEST(SSum, ClosedFormEqualsDirectSumOnGrid) {
  auto c = oracle::pascal(40);
  for (const auto& lambda : oracle::lambda_pool()) {
    for (long k = 1; k <= 40; ++k) {
      for (long j = 0; j < k; ++j) {
        Scalar expected = s_reference(j, k, lambda, c);
        ASSERT_EQ(s_sum(j, k, lambda), expected) << lambda.to_string() << " j=" << j << " k=" << k;
        ASSERT_EQ(s_sum_direct(j, k, lambda), expected);
      }
    }
  }
}

TEST(SSum, FloatNearOneFallsBackToDirectSum) {
  Scalar lambda = Scalar::from_double(1.0 + 1e-9);
  Scalar closed = s_sum(2, 30, lambda);
  EXPECT_NEAR(closed.to_complex().real(), static_cast<double>(binom(30, 3).get_d()), 1e-3);
}

TEST(TSum, Examples) {
  EXPECT_EQ(t_sum(0, 4, Scalar(2)), Scalar(11));
  EXPECT_EQ(t_sum(1, 4, Scalar(2)), Scalar(6));
  for (const auto& lambda : nontrivial_pool()) {
    for (long k = 2; k <= 12; ++k) {
      Scalar one_minus = Scalar(1) - lambda;
      Scalar t0 = Scalar(k) / one_minus - (Scalar(1) - lambda.pow(k)) / one_minus.pow(2);
      EXPECT_EQ(t_sum(0, k, lambda), t0);
    }
  }
  EXPECT_THROW(t_sum(0, 5, Scalar(1)), std::invalid_argument);
}

TEST(TSum, ClosedFormEqualsDirectSumOnGrid) {
  auto c = oracle::pascal(30);
  for (const auto& lambda : nontrivial_pool()) {
    for (long j = 0; j <= 8; ++j) {
      for (long k = j + 2; k <= 30; ++k) {
        ASSERT_EQ(t_sum_closed(j, k, lambda), t_reference(j, k, lambda, c))
            << lambda.to_string() << " j=" << j << " k=" << k;
      }
    }
  }
}

TEST(DFactor, Examples) {
  for (long k = 2; k <= 10; ++k) EXPECT_EQ(d_factor(k, 0, Scalar(5)), Scalar(1));
  EXPECT_EQ(d_factor(4, 1, Scalar(2)), Scalar(0));
  EXPECT_EQ(b_coeff(0, 4, 1), Rational(-1, 2));
  Scalar far = d_factor(10000, 2, q(1, 2));
  EXPECT_NEAR(far.to_complex().real(), 1.0, 1e-3);
  EXPECT_THROW(d_factor(2, 1, Scalar(2)), std::domain_error);
  EXPECT_THROW(d_factor(5, 1, Scalar(1)), std::invalid_argument);
}

TEST(BinomialIdentities, BinomialProductExamplesAndGrid) {
  EXPECT_TRUE(binom_product_identity(6, 1, 3));
  EXPECT_EQ(Rational(binom(6, 1) * binom(3, 2)), Rational(18));
  EXPECT_TRUE(binom_product_identity(5, 0, 0));
  for (long j = 0; j <= 10; ++j) {
    for (long i = 0; i <= j; ++i) {
      for (long k = j + 2; k <= 30; ++k) ASSERT_TRUE(binom_product_identity(k, i, j));
    }
  }
}

TEST(BinomialIdentities, ShiftedProduct) {
  for (long i = 1; i <= 8; ++i) {
    for (long j = i - 1; j <= 10; ++j) {
      for (long k = i + 2; k <= 30; ++k) ASSERT_TRUE(shifted_product_identity(k, i, j));
    }
  }
}

TEST(BinomialIdentities, TjRecurrence) {
  EXPECT_TRUE(tj_recurrence_check(0, Scalar(2), 5));
  EXPECT_TRUE(tj_recurrence_check(1, Scalar(3), 6));
  EXPECT_TRUE(tj_recurrence_check(0, q(1, 2), 4));
  for (const auto& lambda : nontrivial_pool()) {
    for (long j = 0; j <= 4; ++j) {
      for (long k = j + 3; k <= 15; ++k) ASSERT_TRUE(tj_recurrence_check(j, lambda, k));
    }
  }
}

TEST(BinomialIdentities, NumeratorPolynomialDefinesD) {
  for (const auto& lambda : nontrivial_pool()) {
    for (long j = 0; j <= 6; ++j) {
      for (long k = j + 2; k <= 20; ++k) {
        Scalar lhs = Scalar(binom(k, j)) * d_factor(k, j, lambda);
        Scalar rhs = (Scalar(1) - lambda).pow(-j) * t_numerator_poly(k, j).evaluate(lambda);
        ASSERT_EQ(lhs, rhs);
      }
    }
  }
}

TEST(Newton, Examples) {
  std::vector<Scalar> squares{Scalar(1), Scalar(4), Scalar(9)};
  EXPECT_EQ(newton_coeffs(squares), (std::vector<Scalar>{Scalar(1), Scalar(3), Scalar(1)}));
  std::vector<Scalar> more{Scalar(1), Scalar(4), Scalar(9), Scalar(16)};
  EXPECT_TRUE(newton_vanishing_sum(more, 3).is_zero());
  std::vector<Scalar> constant(4, Scalar(7));
  auto d = newton_coeffs(constant);
  EXPECT_EQ(d[0], Scalar(7));
  for (std::size_t i = 1; i < d.size(); ++i) EXPECT_TRUE(d[i].is_zero());
  EXPECT_THROW(newton_coeffs(std::vector<Scalar>{}), std::invalid_argument);
}

TEST(Newton, RoundTripOnRandomPolynomials) {
  Rng rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const long degree = rng.uniform(0, 6);
    std::vector<Scalar> coeffs;
    for (long i = 0; i <= degree; ++i) coeffs.push_back(Scalar(rng.uniform(-9, 9)));
    auto f = [&](long x) {
      Scalar total(0);
      for (long i = 0; i <= degree; ++i) total += coeffs[i] * Scalar(x).pow(i);
      return total;
    };
    std::vector<Scalar> samples;
    for (long x = 1; x <= degree + 4; ++x) samples.push_back(f(x));
    auto d = newton_coeffs(std::span<const Scalar>(samples).first(degree + 1));
    for (long x = 1; x <= degree + 1; ++x) EXPECT_EQ(newton_evaluate(d, Scalar(x)), f(x));
    for (long n = degree + 1; n <= degree + 3; ++n) EXPECT_TRUE(newton_vanishing_sum(samples, n).is_zero());
  }
}

TEST(PCoefficients, KnownValuesAndRecursion) {
  for (long m = 1; m <= 7; ++m) {
    for (long j = 0; j <= 10; ++j) {
      EXPECT_EQ(p_coeff(m - 1, j, m), Rational(m % 2 == 1 ? 1 : -1));
      EXPECT_EQ(p_coeff(m, j, m), Rational(0));
      EXPECT_EQ(p_coeff(-1, j, m), Rational(0));
      for (long i = 0; i <= m; ++i) EXPECT_EQ(p_coeff(i, j, m), p_coeff_recursive(i, j, m));
    }
  }
  EXPECT_THROW(p_coeff(0, 1, 0), std::invalid_argument);
}

TEST(PCoefficients, AreNewtonCoefficientsOfAPower) {
  for (long m = 1; m <= 6; ++m) {
    for (long j = 0; j <= 8; ++j) {
      std::vector<Scalar> samples;
      for (long x = 1; x <= m; ++x) samples.push_back(Scalar(j - x).pow(m - 1));
      auto d = newton_coeffs(samples);
      for (long i = 0; i < m; ++i) EXPECT_EQ(Scalar(p_coeff(i, j, m)), d[i]);
    }
  }
}

TEST(MPolynomial, ClosedForms) {
  for (long j = 0; j <= 8; ++j) {
    EXPECT_EQ(m_poly(1, j), KPolynomial({Scalar(0), Scalar(2 * j)}));
    EXPECT_EQ(m_poly(2, j), KPolynomial({Scalar(0), Scalar(2 * j * (j - 1)), Scalar(3 * j * (j - 1))}));
  }
  Scalar lambda = q(1, 3);
  EXPECT_EQ(l_coeff(2, 4, lambda), m_poly(2, 4).evaluate(lambda / (Scalar(1) - lambda)));
  EXPECT_THROW(l_coeff(1, 2, Scalar(1)), std::invalid_argument);
}

TEST(MPolynomial, Cancellation) {
  EXPECT_TRUE(m_cancellation_check(2, 5));
  EXPECT_TRUE(m_cancellation_check(3, 4));
  EXPECT_TRUE(m_cancellation_check(1, 2));
  for (long m = 1; m <= 5; ++m) {
    for (long j = 0; j <= 8; ++j) EXPECT_TRUE(m_cancellation_check(m, j)) << m << " " << j;
  }
}

TEST(SymmetricFunctions, DefinitionsOnSmallCases) {
  std::vector<Scalar> v{Scalar(2), Scalar(3), Scalar(5)};
  auto e = elementary_symmetric(v);
  EXPECT_EQ(e, (std::vector<Scalar>{Scalar(1), Scalar(10), Scalar(31), Scalar(30)}));
  // h_2(2,3,5) = 4+9+25+6+10+15
  EXPECT_EQ(complete_homogeneous(v, 2), Scalar(69));
  EXPECT_EQ(complete_homogeneous(v, 0), Scalar(1));
}

TEST(SymmetricFunctions, RSIdentity) {
  std::vector<Scalar> one{Scalar(7), Scalar(-2)};
  EXPECT_TRUE(rs_identity_check(1, 1, one));
  Rng rng(5);
  for (long p = 1; p <= 5; ++p) {
    for (long qd = 1; qd <= 5; ++qd) {
      for (int trial = 0; trial < 10; ++trial) {
        std::vector<Scalar> a;
        for (long n = 0; n < p + qd; ++n) a.push_back(Scalar(rng.rational(), rng.rational()));
        ASSERT_TRUE(rs_identity_check(p, qd, a));
      }
    }
  }
}
