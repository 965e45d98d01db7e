#pragma once

// Reference computations for the tests. They share no code with the
// closed forms: iterates use a dense matrix built from the Jordan data and
// binomials come from Pascal's triangle.

#include <span>
#include <vector>

#include "orbit/jordan.hpp"
#include "orbit/rng.hpp"

namespace oracle {

using orbit::BlockVector;
using orbit::Coords;
using orbit::JordanBlock;
using orbit::JordanSystem;
using orbit::Rational;
using orbit::Scalar;

using Matrix = std::vector<std::vector<Scalar>>;

inline std::size_t dimension(const JordanSystem& sys) {
  std::size_t n = 0;
  for (const auto& b : sys.blocks()) n += b.size;
  return n;
}

/// Dense A: lambda on the diagonal, 1 at (q-1, q) inside each block.
inline Matrix dense_matrix(const JordanSystem& sys) {
  const std::size_t n = dimension(sys);
  Matrix a(n, std::vector<Scalar>(n, Scalar(0)));
  std::size_t offset = 0;
  for (const auto& block : sys.blocks()) {
    for (std::size_t q = 0; q < block.size; ++q) {
      a[offset + q][offset + q] = block.lambda;
      if (q > 0) a[offset + q - 1][offset + q] = Scalar(1);
    }
    offset += block.size;
  }
  return a;
}

inline std::vector<Scalar> flatten(const BlockVector& v) {
  std::vector<Scalar> out;
  for (const auto& seg : v) out.insert(out.end(), seg.begin(), seg.end());
  return out;
}

inline BlockVector unflatten(const JordanSystem& sys, const std::vector<Scalar>& flat) {
  BlockVector out;
  std::size_t offset = 0;
  for (const auto& block : sys.blocks()) {
    out.emplace_back(flat.begin() + static_cast<long>(offset),
                     flat.begin() + static_cast<long>(offset + block.size));
    offset += block.size;
  }
  return out;
}

inline std::vector<Scalar> multiply(const Matrix& a, const std::vector<Scalar>& v) {
  std::vector<Scalar> out(v.size(), Scalar(0));
  for (std::size_t r = 0; r < a.size(); ++r) {
    for (std::size_t q = 0; q < v.size(); ++q) {
      if (!a[r][q].is_zero()) out[r] += a[r][q] * v[q];
    }
  }
  return out;
}

/// T^k x for k = 0..horizon.
inline std::vector<BlockVector> iterates(const JordanSystem& sys, long horizon) {
  Matrix a = dense_matrix(sys);
  std::vector<Scalar> c = flatten(sys.c());
  std::vector<Scalar> x = flatten(sys.x());
  std::vector<BlockVector> out{unflatten(sys, x)};
  for (long k = 1; k <= horizon; ++k) {
    x = multiply(a, x);
    for (std::size_t q = 0; q < x.size(); ++q) x[q] += c[q];
    out.push_back(unflatten(sys, x));
  }
  return out;
}

/// Ave_k for k = 1..horizon (index k-1).
inline std::vector<BlockVector> averages(const JordanSystem& sys, long horizon) {
  auto orbit = iterates(sys, horizon);
  std::vector<Scalar> sum(dimension(sys), Scalar(0));
  std::vector<BlockVector> out;
  for (long k = 1; k <= horizon; ++k) {
    auto term = flatten(orbit[static_cast<std::size_t>(k - 1)]);
    for (std::size_t q = 0; q < sum.size(); ++q) sum[q] += term[q];
    std::vector<Scalar> avg;
    for (const auto& z : sum) avg.push_back(z / Scalar(k));
    out.push_back(unflatten(sys, avg));
  }
  return out;
}

/// Pascal's triangle up to row n.
inline std::vector<std::vector<Rational>> pascal(long n) {
  std::vector<std::vector<Rational>> rows;
  for (long r = 0; r <= n; ++r) {
    std::vector<Rational> row(static_cast<std::size_t>(r + 1), Rational(1));
    for (long j = 1; j < r; ++j) {
      row[static_cast<std::size_t>(j)] = rows[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(j - 1)] +
                                         rows[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(j)];
    }
    rows.push_back(row);
  }
  return rows;
}

inline const std::vector<Scalar>& lambda_pool() {
  static const std::vector<Scalar> pool = {
      Scalar(0),  Scalar(1), Scalar::imaginary_unit(), Scalar(-1), Scalar(Rational(1, 2)),
      Scalar(2),  Scalar(3), Scalar(Rational(3, 5), Rational(4, 5)),
  };
  return pool;
}

/// Random exact system: up to 4 blocks of size up to 5, eigenvalues from
/// the pool, small rational coordinates with random zero tails so that s
/// and t vary.
inline JordanSystem random_system(orbit::Rng& rng, long max_blocks = 4, long max_size = 5) {
  const long count = rng.uniform(1, max_blocks);
  std::vector<JordanBlock> blocks;
  BlockVector x;
  BlockVector c;
  auto segment = [&](std::size_t size) {
    Coords v(size, Scalar(0));
    const long support = rng.uniform(0, static_cast<long>(size));
    for (long q = 0; q < support; ++q) {
      long kind = rng.uniform(0, 3);
      if (kind == 0) continue;
      v[static_cast<std::size_t>(q)] =
          kind == 3 ? Scalar(rng.rational(3, 3), rng.rational(3, 3)) : Scalar(rng.rational(4, 4));
    }
    return v;
  };
  for (long b = 0; b < count; ++b) {
    const auto size = static_cast<std::size_t>(rng.uniform(1, max_size));
    blocks.push_back({rng.pick(std::span<const Scalar>(lambda_pool())), size});
    x.push_back(segment(size));
    c.push_back(rng.uniform(0, 3) == 0 ? Coords(size, Scalar(0)) : segment(size));
  }
  return JordanSystem(blocks, x, c);
}

}  // namespace oracle
