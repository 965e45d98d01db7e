#include "orbit/kpolynomial.hpp"

#include <algorithm>

namespace orbit {

KPolynomial::KPolynomial(std::vector<Scalar> coeffs)
    : coeffs_(std::move(coeffs)) {
  normalize();
}

KPolynomial KPolynomial::constant(const Scalar& c) {
  return KPolynomial(std::vector<Scalar>{c});
}

KPolynomial KPolynomial::monomial(std::size_t power, const Scalar& c) {
  std::vector<Scalar> coeffs(power + 1, Scalar(0));
  coeffs[power] = c;
  return KPolynomial(std::move(coeffs));
}

Scalar KPolynomial::coeff(std::size_t power) const {
  return power < coeffs_.size() ? coeffs_[power] : Scalar(0);
}

Scalar KPolynomial::evaluate(const Scalar& at) const {
  Scalar acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * at + *it;
  }
  return acc;
}

KPolynomial KPolynomial::derivative() const {
  std::vector<Scalar> out;
  for (std::size_t p = 1; p < coeffs_.size(); ++p) {
    out.push_back(Scalar(static_cast<long>(p)) * coeffs_[p]);
  }
  return KPolynomial(std::move(out));
}

KPolynomial& KPolynomial::operator+=(const KPolynomial& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) {
    coeffs_.resize(rhs.coeffs_.size(), Scalar(0));
  }
  for (std::size_t p = 0; p < rhs.coeffs_.size(); ++p) coeffs_[p] += rhs.coeffs_[p];
  normalize();
  return *this;
}

KPolynomial& KPolynomial::operator-=(const KPolynomial& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) {
    coeffs_.resize(rhs.coeffs_.size(), Scalar(0));
  }
  for (std::size_t p = 0; p < rhs.coeffs_.size(); ++p) coeffs_[p] -= rhs.coeffs_[p];
  normalize();
  return *this;
}

KPolynomial operator*(const KPolynomial& a, const KPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Scalar> out(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return KPolynomial(std::move(out));
}

KPolynomial operator*(const Scalar& s, const KPolynomial& p) {
  std::vector<Scalar> out;
  out.reserve(p.coeffs_.size());
  for (const auto& c : p.coeffs_) out.push_back(s * c);
  return KPolynomial(std::move(out));
}

void KPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

void VectorPolynomial::add_term(const KPolynomial& p, const Coords& v) {
  if (v.size() != dimension_) {
    throw std::invalid_argument("vector polynomial coefficient has wrong length");
  }
  auto n = p.coefficients().size();
  while (coeffs_.size() < n) coeffs_.push_back(zeros(dimension_));
  for (std::size_t power = 0; power < n; ++power) {
    coeffs_[power] += p.coefficients()[power] * v;
  }
  normalize();
}

Coords VectorPolynomial::coeff(std::size_t power) const {
  return power < coeffs_.size() ? coeffs_[power] : zeros(dimension_);
}

Coords VectorPolynomial::leading_coefficient() const {
  return coeffs_.empty() ? zeros(dimension_) : coeffs_.back();
}

Coords VectorPolynomial::evaluate(const Scalar& at) const {
  Coords acc = zeros(dimension_);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = at * acc;
    acc += *it;
  }
  return acc;
}

void VectorPolynomial::normalize() {
  while (!coeffs_.empty() && orbit::is_zero(coeffs_.back())) coeffs_.pop_back();
}

}  // namespace orbit
