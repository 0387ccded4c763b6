#pragma once

#include <cstddef>
#include <random>

#include "pgspec/matrix.hpp"
#include "pgspec/spectrum.hpp"

namespace pgspec {

/// Symmetric matrix with one border block and `copies` identical diagonal
/// blocks:
///
///   [ U   V   V  ...  V ]
///   [ V^T X   W  ...  W ]
///   [ V^T W   X  ...  W ]
///   [ ...               ]
///   [ V^T W   W  ...  X ]
///
/// U is m1 x m1, V is m1 x m2, X and W are m2 x m2; n = m1 + copies * m2.
struct BlockForm {
  DenseMatrix u;
  DenseMatrix v;
  DenseMatrix x;
  DenseMatrix w;
  std::size_t copies = 1;

  /// Throws DomainError on inconsistent dimensions, non-symmetric U/X/W or copies == 0.
  void validate() const;
  std::size_t border() const { return u.rows(); }
  std::size_t block() const { return x.rows(); }
  std::size_t dimension() const { return border() + copies * block(); }

  DenseSymMatrix assemble() const;
  /// [[U, sqrt(c) V], [sqrt(c) V^T, X + (c - 1) W]].
  DenseSymMatrix reduced() const;
  DenseSymMatrix difference() const;
};

/// Spec(N) joined with Spec(X - W) repeated copies - 1 times.
Spectrum block_reduce(const BlockForm& form);

struct BlockLimits {
  std::size_t max_border = 4;
  std::size_t max_block = 4;
  std::size_t max_copies = 6;
};

/// Dimensions uniform in [1, max], entries uniform in [-1, 1].
BlockForm random_block_form(std::mt19937_64& rng, const BlockLimits& limits = {});

}  // namespace pgspec
