#pragma once

#include <cstddef>
#include <vector>

#include "orbit/scalar.hpp"

namespace orbit {

/// Coordinates of one Jordan block segment. Coordinate q is the coefficient
/// of the basis vector e_q, and the block's nilpotent part maps e_q to
/// e_{q-1} and e_0 to 0.
using Coords = std::vector<Scalar>;

Coords zeros(std::size_t n);
bool is_zero(const Coords& v);
/// All coordinates below `tol` in modulus (exact zero test in exact mode).
bool is_negligible(const Coords& v, double tol);

Coords operator+(const Coords& a, const Coords& b);
Coords operator-(const Coords& a, const Coords& b);
Coords operator*(const Scalar& s, const Coords& v);
Coords& operator+=(Coords& a, const Coords& b);
Coords& operator-=(Coords& a, const Coords& b);

/// N applied `power` times: coordinates move `power` places toward 0.
Coords shift(const Coords& v, std::size_t power = 1);

/// Smallest s with N^s v = 0, i.e. one past the last nonzero coordinate.
std::size_t nilpotent_index(const Coords& v);

/// max_q |v_q|^2, exact in exact mode.
Rational max_modulus_squared(const Coords& v);
/// max_q |v_q|.
double max_modulus(const Coords& v);

Coords to_float(const Coords& v);

}  // namespace orbit
