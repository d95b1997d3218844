#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "sccd/design.hpp"

namespace sccd {

/// Exact non-negative rational, always reduced.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational reduced(std::int64_t num, std::int64_t den);
  bool integral() const noexcept { return den == 1; }
  std::int64_t ceiling() const noexcept { return (num + den - 1) / den; }
  double value() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }
  friend bool operator==(const Rational&, const Rational&) = default;
};

std::int64_t choose2(std::int64_t n);

/// Lower bound on the number of blocks: g1 for linear designs, g2 for
/// circular ones.
struct BoundReport {
  Rational g;
  std::int64_t g_ceiling = 0;
  std::size_t achieved_b = 0;
  bool meets_bound = false;
};

/// Throws Error{bad_parameters} unless 2 <= k <= v.
BoundReport lower_bound(std::size_t v, std::size_t k, Kind kind, std::size_t achieved_b = 0);

/// Multiplicity of every pair of the ground set (zero for uncovered pairs).
/// A pair is covered on a block when it lies in the block and one of its
/// labels was introduced there.
std::map<Pair, int> coverage(const Design& d);

/// Closed-form excess: (k-1)b + C(k-1,2) - C(v,2) for linear designs,
/// (k-1)b - C(v,2) for circular ones. Throws on a non-single-change design.
std::int64_t excess(const Design& d);

/// e_i for every block, in block order. Circular designs are scanned from
/// block `start` (zero-based) around the cycle; that block counts as the
/// initial block and has no predecessors.
std::vector<std::int64_t> block_excesses(const Design& d, std::size_t start = 0);

struct VerificationReport {
  Kind kind = Kind::linear;
  std::size_t v = 0;
  std::size_t k = 0;
  std::size_t b = 0;
  bool valid_single_change = false;
  std::vector<std::size_t> bad_adjacencies;  // zero-based left block of each failing adjacency
  bool covered_all_pairs = false;
  std::vector<Pair> missing_pairs;  // lexicographic
  std::int64_t excess = 0;
  std::vector<std::int64_t> block_excesses;
  std::size_t start = 0;
  bool tight = false;
  bool economical = false;
  BoundReport bound;
};

/// Full diagnostic report. Never throws for a structurally valid Design;
/// adjacency failures are reported and force tight/economical to false.
VerificationReport verify(const Design& d, std::size_t start = 0);

}  // namespace sccd
