#include "orbit/jordan.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace orbit {

JordanSystem::JordanSystem(std::vector<JordanBlock> blocks, BlockVector x,
                           BlockVector c)
    : blocks_(std::move(blocks)), x_(std::move(x)), c_(std::move(c)) {
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (blocks_[b].size < 1) {
      throw std::invalid_argument("block " + std::to_string(b) +
                                  " has size 0");
    }
  }
  check_shape(*this, x_);
  check_shape(*this, c_);
}

JordanSystem JordanSystem::from_diagonal(const std::vector<Scalar>& eigenvalues,
                                         const std::vector<Scalar>& x,
                                         const std::vector<Scalar>& c) {
  if (x.size() != eigenvalues.size() || c.size() != eigenvalues.size()) {
    throw std::invalid_argument("diagonal system: x and c must match the eigenvalue count");
  }
  std::vector<JordanBlock> blocks;
  BlockVector xs;
  BlockVector cs;
  for (std::size_t q = 0; q < eigenvalues.size(); ++q) {
    blocks.push_back({eigenvalues[q], 1});
    xs.push_back({x[q]});
    cs.push_back({c[q]});
  }
  return JordanSystem(std::move(blocks), std::move(xs), std::move(cs));
}

bool JordanSystem::is_linear() const { return orbit::is_zero(c_); }

bool JordanSystem::is_exact() const {
  auto exact_coords = [](const BlockVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Coords& seg) {
      return std::all_of(seg.begin(), seg.end(),
                         [](const Scalar& z) { return z.is_exact(); });
    });
  };
  return std::all_of(blocks_.begin(), blocks_.end(),
                     [](const JordanBlock& b) { return b.lambda.is_exact(); }) &&
         exact_coords(x_) && exact_coords(c_);
}

double JordanSystem::scale() const {
  return std::max({1.0, block_norm(x_), block_norm(c_)});
}

JordanSystem JordanSystem::with_x(BlockVector x) const {
  return JordanSystem(blocks_, std::move(x), c_);
}

JordanSystem JordanSystem::to_float() const {
  std::vector<JordanBlock> blocks = blocks_;
  for (auto& b : blocks) b.lambda = b.lambda.to_float();
  return JordanSystem(std::move(blocks), orbit::to_float(x_),
                      orbit::to_float(c_));
}

BlockVector JordanSystem::zero_vector() const {
  BlockVector out;
  for (const auto& b : blocks_) out.push_back(zeros(b.size));
  return out;
}

void check_shape(const JordanSystem& sys, const BlockVector& v) {
  if (v.size() != sys.block_count()) {
    throw std::invalid_argument("expected " + std::to_string(sys.block_count()) +
                                " segments, got " + std::to_string(v.size()));
  }
  for (std::size_t b = 0; b < v.size(); ++b) {
    if (v[b].size() != sys.blocks()[b].size) {
      throw std::invalid_argument(
          "segment " + std::to_string(b) + " has length " +
          std::to_string(v[b].size()) + ", block size is " +
          std::to_string(sys.blocks()[b].size));
    }
  }
}

double block_norm(const BlockVector& v) {
  double total = 0.0;
  for (const auto& seg : v) total += max_modulus(seg);
  return total;
}

Coords apply_block(const JordanBlock& block, const Coords& v) {
  Coords out = block.lambda * v;
  for (std::size_t q = 0; q + 1 < v.size(); ++q) out[q] += v[q + 1];
  return out;
}

BlockVector apply_affine(const JordanSystem& sys, const BlockVector& v) {
  check_shape(sys, v);
  BlockVector out;
  out.reserve(v.size());
  for (std::size_t b = 0; b < v.size(); ++b) {
    out.push_back(apply_block(sys.blocks()[b], v[b]) + sys.c()[b]);
  }
  return out;
}

bool is_zero(const BlockVector& v) {
  return std::all_of(v.begin(), v.end(),
                     [](const Coords& seg) { return orbit::is_zero(seg); });
}

BlockVector to_float(const BlockVector& v) {
  BlockVector out;
  out.reserve(v.size());
  for (const auto& seg : v) out.push_back(orbit::to_float(seg));
  return out;
}

}  // namespace orbit
