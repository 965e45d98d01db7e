#include <gtest/gtest.h>

#include <cmath>

#include "oracle.hpp"
#include "orbit/coords.hpp"
#include "orbit/kpolynomial.hpp"
#include "orbit/scalar.hpp"

using namespace orbit;

namespace {

Scalar q(long p, long d = 1) { return Scalar(Rational(p, d)); }
Scalar gi(long re, long im) { return Scalar(Rational(re), Rational(im)); }

}  // namespace

TEST(Rational, ParsesFractionsAndIntegers) {
  EXPECT_EQ(parse_rational("3/7"), Rational(3, 7));
  EXPECT_EQ(parse_rational("-6/4"), Rational(-3, 2));
  EXPECT_EQ(parse_rational("12"), Rational(12));
  EXPECT_EQ(parse_rational("123456789012345678901234567890"),
            Rational(Integer("123456789012345678901234567890")));
  EXPECT_EQ(to_string(Rational(-6, 4)), "-3/2");
  EXPECT_EQ(to_string(Rational(5)), "5");
}

TEST(Rational, RejectsMalformedText) {
  for (const char* bad : {"", "1/0", "abc", "1.5", "1/", "/2", "1/2/3", " 1"}) {
    EXPECT_THROW(parse_rational(bad), std::invalid_argument) << bad;
  }
}

TEST(Scalar, ExactArithmeticNeverRounds) {
  Scalar third = q(1, 3);
  EXPECT_EQ(third + third + third, Scalar(1));
  EXPECT_EQ(gi(1, 1) * gi(1, -1), Scalar(2));
  EXPECT_EQ(Scalar(1) / gi(0, 1), gi(0, -1));
  EXPECT_EQ(q(2, 3).pow(-2), q(9, 4));
  EXPECT_EQ(Scalar(0).pow(0), Scalar(1));
  EXPECT_EQ(Scalar(3).pow(40), Scalar(Integer("12157665459056928801")));
  EXPECT_TRUE((q(1, 2) - q(1, 2)).is_zero());
}

TEST(Scalar, DivisionByZeroThrows) {
  EXPECT_THROW(Scalar(1) / Scalar(0), std::domain_error);
  EXPECT_THROW(Scalar(0).inverse(), std::domain_error);
  EXPECT_THROW(Scalar::from_double(1.0) / Scalar::from_double(0.0), std::domain_error);
  EXPECT_THROW(Scalar(0).pow(-1), std::domain_error);
}

TEST(Scalar, ModulusSquaredIsExact) {
  Scalar z(Rational(3, 5), Rational(4, 5));
  EXPECT_EQ(z.modulus_squared(), Rational(1));
  EXPECT_EQ(z.compare_modulus_to_one(), 0);
  EXPECT_FALSE(z.is_one());
  EXPECT_EQ(q(1, 2).compare_modulus_to_one(), -1);
  EXPECT_EQ(gi(1, 1).compare_modulus_to_one(), 1);
  EXPECT_EQ(gi(3, 4).modulus(), 5.0);
}

TEST(Scalar, MixedModeDegradesToFloat) {
  Scalar mixed = q(1, 2) + Scalar::from_double(0.25);
  EXPECT_FALSE(mixed.is_exact());
  EXPECT_DOUBLE_EQ(mixed.to_complex().real(), 0.75);
  EXPECT_THROW(mixed.exact(), std::logic_error);
  EXPECT_TRUE(Scalar::from_double(1.0 + 1e-14).is_one());
  EXPECT_EQ(Scalar::from_double(1.0 + 1e-14).compare_modulus_to_one(), 0);
}

TEST(Scalar, ToStringShowsBothParts) {
  EXPECT_EQ(q(3, 7).to_string(), "3/7");
  EXPECT_EQ(Scalar(Rational(3, 7), Rational(2)).to_string(), "3/7+2*i");
  EXPECT_EQ(gi(0, -1).to_string(), "-i");
}

TEST(Coords, NilpotentIndexFollowsTheShiftConvention) {
  EXPECT_EQ(nilpotent_index({Scalar(0), Scalar(0)}), 0u);
  EXPECT_EQ(nilpotent_index({Scalar(0), Scalar(1)}), 2u);
  EXPECT_EQ(nilpotent_index({Scalar(1), Scalar(0)}), 1u);
  Coords v{Scalar(1), Scalar(2), Scalar(3)};
  EXPECT_EQ(shift(v), (Coords{Scalar(2), Scalar(3), Scalar(0)}));
  EXPECT_EQ(shift(v, 5), zeros(3));
}

TEST(Coords, ShiftLowersTheIndexByOne) {
  Rng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    Coords v(static_cast<std::size_t>(rng.uniform(1, 6)), Scalar(0));
    for (auto& z : v) {
      if (rng.coin()) z = Scalar(rng.rational());
    }
    std::size_t s = nilpotent_index(v);
    EXPECT_EQ(nilpotent_index(shift(v)), s == 0 ? 0 : s - 1);
  }
}

TEST(Coords, ShapeMismatchThrows) {
  Coords a{Scalar(1)};
  Coords b{Scalar(1), Scalar(2)};
  EXPECT_THROW(a += b, std::invalid_argument);
  EXPECT_THROW(a - b, std::invalid_argument);
}

TEST(KPolynomial, NormalizesTrailingZeros) {
  KPolynomial p({Scalar(1), Scalar(2), Scalar(0), Scalar(0)});
  EXPECT_EQ(p.degree(), 1);
  EXPECT_TRUE(KPolynomial({Scalar(0)}).is_zero());
  EXPECT_EQ(KPolynomial().degree(), -1);
  EXPECT_EQ((p - p).degree(), -1);
}

TEST(KPolynomial, ArithmeticAndHorner) {
  KPolynomial p({Scalar(1), Scalar(1)});   // 1 + k
  KPolynomial r({Scalar(-1), Scalar(1)});  // k - 1
  KPolynomial prod = p * r;                // k^2 - 1
  EXPECT_EQ(prod, KPolynomial({Scalar(-1), Scalar(0), Scalar(1)}));
  EXPECT_EQ(prod.evaluate(Scalar(7)), Scalar(48));
  EXPECT_EQ(prod.derivative(), KPolynomial({Scalar(0), Scalar(2)}));
  EXPECT_EQ((q(1, 2) * prod).evaluate(Scalar(3)), Scalar(4));
  EXPECT_EQ(KPolynomial::monomial(3, Scalar(2)).evaluate(gi(0, 1)), gi(0, -2));
}

TEST(KPolynomial, HornerMatchesTermByTermEvaluation) {
  Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Scalar> c;
    for (long d = 0; d <= rng.uniform(0, 6); ++d) c.push_back(Scalar(rng.rational(), rng.rational()));
    KPolynomial p(c);
    Scalar at(rng.rational());
    Scalar direct(0);
    for (std::size_t d = 0; d < c.size(); ++d) direct += c[d] * at.pow(static_cast<long>(d));
    EXPECT_EQ(p.evaluate(at), direct);
  }
}

TEST(VectorPolynomial, CollectsCoefficientsByPower) {
  VectorPolynomial vp(2);
  vp.add_term(KPolynomial({Scalar(0), Scalar(1)}), {Scalar(1), Scalar(0)});
  vp.add_term(KPolynomial({Scalar(3)}), {Scalar(0), Scalar(1)});
  EXPECT_EQ(vp.degree(), 1);
  EXPECT_EQ(vp.leading_coefficient(), (Coords{Scalar(1), Scalar(0)}));
  EXPECT_EQ(vp.evaluate(Scalar(5)), (Coords{Scalar(5), Scalar(3)}));
  vp.add_term(KPolynomial({Scalar(0), Scalar(-1)}), {Scalar(1), Scalar(0)});
  EXPECT_EQ(vp.degree(), 0);
  EXPECT_THROW(vp.add_term(KPolynomial({Scalar(1)}), {Scalar(1)}), std::invalid_argument);
}
