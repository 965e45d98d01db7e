#pragma once

#include <complex>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace orbit {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p/q", "-p/q" or an integer literal. Throws std::invalid_argument
/// on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

/// Complex number with rational real and imaginary parts.
struct GaussianRational {
  Rational re;
  Rational im;

  bool operator==(const GaussianRational& other) const {
    return re == other.re && im == other.im;
  }
};

enum class ScalarMode { Exact, Float };

/// mpq_class(p, q) keeps the fraction as given; comparisons need lowest terms.
inline Rational canonical(Rational q) {
  q.canonicalize();
  return q;
}

/// A complex scalar that is either an exact Gaussian rational or a
/// double-precision complex. Mixed arithmetic degrades to float.
///
/// Exact-mode arithmetic never rounds. Division by zero throws
/// std::domain_error in both modes.
class Scalar {
 public:
  Scalar() : value_(GaussianRational{0, 0}) {}
  Scalar(int n) : value_(GaussianRational{n, 0}) {}  // NOLINT(implicit)
  Scalar(long n) : value_(GaussianRational{n, 0}) {}  // NOLINT(implicit)
  Scalar(const Rational& re) : value_(GaussianRational{canonical(re), 0}) {}  // NOLINT
  Scalar(const Integer& re) : value_(GaussianRational{Rational(re), 0}) {}  // NOLINT
  Scalar(const Rational& re, const Rational& im)
      : value_(GaussianRational{canonical(re), canonical(im)}) {}
  explicit Scalar(std::complex<double> z) : value_(z) {}

  static Scalar imaginary_unit() { return Scalar(Rational(0), Rational(1)); }
  static Scalar from_double(double re, double im = 0.0) {
    return Scalar(std::complex<double>(re, im));
  }

  ScalarMode mode() const {
    return std::holds_alternative<GaussianRational>(value_) ? ScalarMode::Exact
                                                            : ScalarMode::Float;
  }
  bool is_exact() const { return mode() == ScalarMode::Exact; }

  /// Exact components; throws std::logic_error in float mode.
  const GaussianRational& exact() const;
  std::complex<double> to_complex() const;

  /// Same value in float mode.
  Scalar to_float() const { return Scalar(to_complex()); }

  bool is_zero() const;
  bool is_real() const;

  /// |z|^2. Exact rational in exact mode.
  Rational modulus_squared() const;
  double modulus_squared_double() const;
  double modulus() const;

  /// Sign of |z|^2 - 1: -1, 0 or +1. In float mode values within `tol` of
  /// the unit circle compare as 0.
  int compare_modulus_to_one(double tol = 1e-12) const;
  /// z == 1, exactly in exact mode, within `tol` in float mode.
  bool is_one(double tol = 1e-12) const;
  /// |z| < tol in float mode; exact zero test otherwise.
  bool is_negligible(double tol) const;

  Scalar conj() const;
  Scalar inverse() const;
  /// Integer power; negative exponents invert. 0^0 == 1.
  Scalar pow(long n) const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }

  /// Exact equality in exact mode; bitwise value equality in float mode.
  /// Mixed-mode comparison compares the float images.
  friend bool operator==(const Scalar& a, const Scalar& b);

  std::string to_string() const;

 private:
  std::variant<GaussianRational, std::complex<double>> value_;
};

inline std::ostream& operator<<(std::ostream& os, const Scalar& z) { return os << z.to_string(); }

}  // namespace orbit
