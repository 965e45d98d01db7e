#pragma once

#include <span>
#include <vector>

#include "orbit/coords.hpp"
#include "orbit/scalar.hpp"

namespace orbit {

/// Univariate polynomial with Scalar coefficients in the monomial basis.
/// Used for polynomials in the discrete variable k, and also for the
/// auxiliary polynomials in lambda and x of the identity kernel.
///
/// Trailing zero coefficients are always removed, so the zero polynomial
/// has no coefficients and degree() == -1.
class KPolynomial {
 public:
  KPolynomial() = default;
  explicit KPolynomial(std::vector<Scalar> coeffs);

  static KPolynomial constant(const Scalar& c);
  /// c * k^power
  static KPolynomial monomial(std::size_t power, const Scalar& c = Scalar(1));

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Scalar coeff(std::size_t power) const;
  std::span<const Scalar> coefficients() const { return coeffs_; }

  /// Horner evaluation.
  Scalar evaluate(const Scalar& at) const;
  KPolynomial derivative() const;

  KPolynomial& operator+=(const KPolynomial& rhs);
  KPolynomial& operator-=(const KPolynomial& rhs);
  friend KPolynomial operator+(KPolynomial a, const KPolynomial& b) {
    return a += b;
  }
  friend KPolynomial operator-(KPolynomial a, const KPolynomial& b) {
    return a -= b;
  }
  friend KPolynomial operator*(const KPolynomial& a, const KPolynomial& b);
  friend KPolynomial operator*(const Scalar& s, const KPolynomial& p);
  friend bool operator==(const KPolynomial& a, const KPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  void normalize();
  std::vector<Scalar> coeffs_;
};

/// Polynomial in k whose coefficients are block segments.
class VectorPolynomial {
 public:
  explicit VectorPolynomial(std::size_t dimension) : dimension_(dimension) {}

  /// this += p(k) * v
  void add_term(const KPolynomial& p, const Coords& v);

  std::size_t dimension() const { return dimension_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Coefficient of k^power (a zero segment past the degree).
  Coords coeff(std::size_t power) const;
  const std::vector<Coords>& coefficients() const { return coeffs_; }
  Coords leading_coefficient() const;

  Coords evaluate(const Scalar& at) const;

 private:
  void normalize();
  std::size_t dimension_;
  std::vector<Coords> coeffs_;
};

}  // namespace orbit
