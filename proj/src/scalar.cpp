#include "orbit/scalar.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

namespace orbit {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view s) {
  std::string body(s);
  if (!body.empty() && body[0] == '+') body.erase(0, 1);
  return Integer(body, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos
                             ? std::string_view("1")
                             : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) ||
      den.front() == '-' || den.front() == '+') {
    throw std::invalid_argument("invalid rational '" + std::string(text) + "'");
  }
  Integer d = parse_integer(den);
  if (d == 0) {
    throw std::invalid_argument("zero denominator in '" + std::string(text) +
                                "'");
  }
  Rational q(parse_integer(num), d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return canonical(q).get_str(10); }

const GaussianRational& Scalar::exact() const {
  if (auto* g = std::get_if<GaussianRational>(&value_)) return *g;
  throw std::logic_error("exact components requested from a float scalar");
}

std::complex<double> Scalar::to_complex() const {
  if (auto* g = std::get_if<GaussianRational>(&value_)) {
    return {g->re.get_d(), g->im.get_d()};
  }
  return std::get<std::complex<double>>(value_);
}

bool Scalar::is_zero() const {
  if (auto* g = std::get_if<GaussianRational>(&value_)) {
    return g->re == 0 && g->im == 0;
  }
  return std::get<std::complex<double>>(value_) == std::complex<double>(0, 0);
}

bool Scalar::is_real() const {
  if (auto* g = std::get_if<GaussianRational>(&value_)) return g->im == 0;
  return std::get<std::complex<double>>(value_).imag() == 0.0;
}

Rational Scalar::modulus_squared() const {
  if (auto* g = std::get_if<GaussianRational>(&value_)) {
    return Rational(g->re * g->re + g->im * g->im);
  }
  return Rational(std::norm(std::get<std::complex<double>>(value_)));
}

double Scalar::modulus_squared_double() const {
  if (auto* g = std::get_if<GaussianRational>(&value_)) {
    return Rational(g->re * g->re + g->im * g->im).get_d();
  }
  return std::norm(std::get<std::complex<double>>(value_));
}

double Scalar::modulus() const {
  if (is_exact()) return std::sqrt(modulus_squared_double());
  return std::abs(std::get<std::complex<double>>(value_));
}

int Scalar::compare_modulus_to_one(double tol) const {
  if (auto* g = std::get_if<GaussianRational>(&value_)) {
    int sign = cmp(Rational(g->re * g->re + g->im * g->im), 1);
    return (sign > 0) - (sign < 0);
  }
  double m = std::abs(std::get<std::complex<double>>(value_));
  if (std::abs(m - 1.0) <= tol) return 0;
  return m < 1.0 ? -1 : 1;
}

bool Scalar::is_one(double tol) const {
  if (auto* g = std::get_if<GaussianRational>(&value_)) {
    return g->re == 1 && g->im == 0;
  }
  return std::abs(std::get<std::complex<double>>(value_) - 1.0) <= tol;
}

bool Scalar::is_negligible(double tol) const {
  if (is_exact()) return is_zero();
  return std::abs(std::get<std::complex<double>>(value_)) < tol;
}

Scalar Scalar::conj() const {
  if (auto* g = std::get_if<GaussianRational>(&value_)) {
    return Scalar(g->re, Rational(-g->im));
  }
  return Scalar(std::conj(std::get<std::complex<double>>(value_)));
}

Scalar Scalar::inverse() const { return Scalar(1) / *this; }

Scalar Scalar::pow(long n) const {
  if (n < 0) return inverse().pow(-n);
  Scalar result(1);
  if (!is_exact()) result = result.to_float();
  Scalar base = *this;
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return result;
}

Scalar Scalar::operator-() const {
  if (auto* g = std::get_if<GaussianRational>(&value_)) {
    return Scalar(Rational(-g->re), Rational(-g->im));
  }
  return Scalar(-std::get<std::complex<double>>(value_));
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  if (is_exact() && rhs.is_exact()) {
    auto& a = std::get<GaussianRational>(value_);
    const auto& b = std::get<GaussianRational>(rhs.value_);
    a.re += b.re;
    a.im += b.im;
  } else {
    value_ = to_complex() + rhs.to_complex();
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  if (is_exact() && rhs.is_exact()) {
    auto& a = std::get<GaussianRational>(value_);
    const auto& b = std::get<GaussianRational>(rhs.value_);
    a.re -= b.re;
    a.im -= b.im;
  } else {
    value_ = to_complex() - rhs.to_complex();
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  if (is_exact() && rhs.is_exact()) {
    auto& a = std::get<GaussianRational>(value_);
    const auto& b = std::get<GaussianRational>(rhs.value_);
    if (a.im == 0 && b.im == 0) {
      a.re *= b.re;
    } else {
      Rational re = a.re * b.re - a.im * b.im;
      Rational im = a.re * b.im + a.im * b.re;
      a.re = std::move(re);
      a.im = std::move(im);
    }
  } else {
    value_ = to_complex() * rhs.to_complex();
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  if (rhs.is_zero()) throw std::domain_error("division by zero");
  if (is_exact() && rhs.is_exact()) {
    auto& a = std::get<GaussianRational>(value_);
    const auto& b = std::get<GaussianRational>(rhs.value_);
    if (b.im == 0) {
      a.re /= b.re;
      a.im /= b.re;
    } else {
      Rational den = b.re * b.re + b.im * b.im;
      Rational re = (a.re * b.re + a.im * b.im) / den;
      Rational im = (a.im * b.re - a.re * b.im) / den;
      a.re = std::move(re);
      a.im = std::move(im);
    }
  } else {
    value_ = to_complex() / rhs.to_complex();
  }
  return *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.is_exact() && b.is_exact()) return a.exact() == b.exact();
  return a.to_complex() == b.to_complex();
}

std::string Scalar::to_string() const {
  std::ostringstream os;
  if (auto* g = std::get_if<GaussianRational>(&value_)) {
    if (g->im == 0) return orbit::to_string(g->re);
    if (g->re != 0) os << orbit::to_string(g->re) << (g->im > 0 ? "+" : "");
    if (g->im == -1) {
      os << "-";
    } else if (g->im != 1) {
      os << orbit::to_string(g->im) << "*";
    }
    os << "i";
    return os.str();
  }
  auto z = std::get<std::complex<double>>(value_);
  os.precision(17);
  os << z.real();
  if (z.imag() != 0.0) os << (z.imag() > 0 ? "+" : "") << z.imag() << "*i";
  return os.str();
}

}  // namespace orbit
