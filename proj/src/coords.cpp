#include "orbit/coords.hpp"

#include <algorithm>
#include <stdexcept>

namespace orbit {

namespace {

void require_same_length(const Coords& a, const Coords& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("segment length mismatch: " +
                                std::to_string(a.size()) + " vs " +
                                std::to_string(b.size()));
  }
}

}  // namespace

Coords zeros(std::size_t n) { return Coords(n, Scalar(0)); }

bool is_zero(const Coords& v) {
  return std::all_of(v.begin(), v.end(),
                     [](const Scalar& z) { return z.is_zero(); });
}

bool is_negligible(const Coords& v, double tol) {
  return std::all_of(v.begin(), v.end(),
                     [tol](const Scalar& z) { return z.is_negligible(tol); });
}

Coords operator+(const Coords& a, const Coords& b) {
  Coords out = a;
  out += b;
  return out;
}

Coords operator-(const Coords& a, const Coords& b) {
  Coords out = a;
  out -= b;
  return out;
}

Coords operator*(const Scalar& s, const Coords& v) {
  Coords out;
  out.reserve(v.size());
  for (const auto& z : v) out.push_back(s * z);
  return out;
}

Coords& operator+=(Coords& a, const Coords& b) {
  require_same_length(a, b);
  for (std::size_t q = 0; q < a.size(); ++q) a[q] += b[q];
  return a;
}

Coords& operator-=(Coords& a, const Coords& b) {
  require_same_length(a, b);
  for (std::size_t q = 0; q < a.size(); ++q) a[q] -= b[q];
  return a;
}

Coords shift(const Coords& v, std::size_t power) {
  Coords out = zeros(v.size());
  if (!v.empty() && !v.front().is_exact()) out = to_float(out);
  for (std::size_t q = power; q < v.size(); ++q) out[q - power] = v[q];
  return out;
}

std::size_t nilpotent_index(const Coords& v) {
  for (std::size_t q = v.size(); q > 0; --q) {
    if (!v[q - 1].is_zero()) return q;
  }
  return 0;
}

Rational max_modulus_squared(const Coords& v) {
  Rational best = 0;
  for (const auto& z : v) {
    Rational m = z.modulus_squared();
    if (m > best) best = m;
  }
  return best;
}

double max_modulus(const Coords& v) {
  double best = 0.0;
  for (const auto& z : v) best = std::max(best, z.modulus());
  return best;
}

Coords to_float(const Coords& v) {
  Coords out;
  out.reserve(v.size());
  for (const auto& z : v) out.push_back(z.to_float());
  return out;
}

}  // namespace orbit
