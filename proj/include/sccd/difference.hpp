#pragma once

#include <cstddef>
#include <vector>

#include "sccd/design.hpp"

namespace sccd {

/// Parameters of the cyclic family over Z_v with v = 2c(k-1)+1.
struct DifferenceFamilyParams {
  std::size_t c = 1;
  std::size_t k = 2;

  std::size_t v() const { return 2 * c * (k - 1) + 1; }
  std::size_t b() const { return c * c * (2 * k - 2) + c; }
  /// Base block i = {0, 1, ..., k-2, (i+1)(k-1)} for i in [0, c).
  std::vector<Block> base_blocks() const;
};

/// Develops the base blocks as L_j = (B_1+j, ..., B_{c-1}+j, B_0+j) for
/// j = 0..v-1. Each block after the first is written over its predecessor,
/// so unchanged labels keep their position. Throws Error{bad_parameters}
/// unless c >= 1 and k >= 2.
Design difference_cscc(std::size_t c, std::size_t k);

}  // namespace sccd
