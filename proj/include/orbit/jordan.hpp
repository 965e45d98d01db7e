#pragma once

#include <cstddef>
#include <vector>

#include "orbit/coords.hpp"
#include "orbit/scalar.hpp"

namespace orbit {

/// lambda*I + N on `size` coordinates, N the shift toward coordinate 0.
struct JordanBlock {
  Scalar lambda;
  std::size_t size = 1;
};

/// One coordinate segment per Jordan block.
using BlockVector = std::vector<Coords>;

/// The affine map T(x) = Ax + c in Jordan coordinates, with a starting
/// vector x. Shapes are validated on construction.
class JordanSystem {
 public:
  JordanSystem(std::vector<JordanBlock> blocks, BlockVector x, BlockVector c);

  /// Size-1 blocks with the given eigenvalues (a diagonal matrix).
  static JordanSystem from_diagonal(const std::vector<Scalar>& eigenvalues,
                                    const std::vector<Scalar>& x,
                                    const std::vector<Scalar>& c);

  const std::vector<JordanBlock>& blocks() const { return blocks_; }
  const BlockVector& x() const { return x_; }
  const BlockVector& c() const { return c_; }
  std::size_t block_count() const { return blocks_.size(); }

  /// True when every coordinate of c is zero (T is linear).
  bool is_linear() const;
  bool is_exact() const;
  /// max(1, |x|, |c|) in the block norm; the scale used by float thresholds.
  double scale() const;

  JordanSystem with_x(BlockVector x) const;
  JordanSystem to_float() const;
  /// A zero vector shaped like this system.
  BlockVector zero_vector() const;

 private:
  std::vector<JordanBlock> blocks_;
  BlockVector x_;
  BlockVector c_;
};

/// |v| = sum over blocks of the max-modulus norm of each segment.
double block_norm(const BlockVector& v);

/// (lambda I + N) v on one block.
Coords apply_block(const JordanBlock& block, const Coords& v);

/// A v + c computed blockwise. Throws std::invalid_argument on shape mismatch.
BlockVector apply_affine(const JordanSystem& sys, const BlockVector& v);

void check_shape(const JordanSystem& sys, const BlockVector& v);

bool is_zero(const BlockVector& v);
BlockVector to_float(const BlockVector& v);

}  // namespace orbit
