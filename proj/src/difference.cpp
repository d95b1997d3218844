#include "sccd/difference.hpp"

#include <string>

namespace sccd {

std::vector<Block> DifferenceFamilyParams::base_blocks() const {
  std::vector<Block> out;
  for (std::size_t i = 0; i < c; ++i) {
    Block blk;
    for (std::size_t x = 0; x + 1 < k; ++x) blk.push_back(static_cast<Label>(x));
    blk.push_back(static_cast<Label>((i + 1) * (k - 1)));
    out.push_back(std::move(blk));
  }
  return out;
}

Design difference_cscc(std::size_t c, std::size_t k) {
  if (c < 1 || k < 2)
    throw Error(ErrorCode::bad_parameters,
                "difference family needs c >= 1 and k >= 2, got c=" + std::to_string(c) + " k=" + std::to_string(k));
  const DifferenceFamilyParams params{c, k};
  const std::size_t v = params.v();
  const auto base = params.base_blocks();

  std::vector<Block> blocks;
  blocks.reserve(params.b());
  for (std::size_t j = 0; j < v; ++j) {
    for (std::size_t t = 1; t <= c; ++t) {
      Block shifted;
      for (Label x : base[t % c]) shifted.push_back(static_cast<Label>((x + j) % v));
      if (blocks.empty()) {
        blocks.push_back(std::move(shifted));
        continue;
      }
      Block next = blocks.back();
      const auto gone = set_difference(next, shifted);
      const auto added = set_difference(shifted, next);
      for (std::size_t n = 0; n < gone.size(); ++n) next = replace_label(next, gone[n], added[n]);
      blocks.push_back(std::move(next));
    }
  }
  return Design(Kind::circular, std::move(blocks));
}

}  // namespace sccd
