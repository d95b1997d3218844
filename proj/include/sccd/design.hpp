#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "sccd/error.hpp"

namespace sccd {

using Label = std::uint32_t;

/// One k-subset of labels. Element order is positional and preserved; it
/// carries no meaning for coverage but keeps tables readable.
using Block = std::vector<Label>;

enum class Kind { linear, circular };

std::string_view to_string(Kind kind);
std::optional<Kind> parse_kind(std::string_view text);

/// An unordered pair of distinct labels, stored with lo < hi.
struct Pair {
  Label lo;
  Label hi;

  static Pair of(Label a, Label b) { return a < b ? Pair{a, b} : Pair{b, a}; }
  friend auto operator<=>(const Pair&, const Pair&) = default;
};

/// An ordered list of k-blocks over a ground set of v labels.
///
/// Construction checks the structural invariants (uniform block size, no
/// repeated label inside a block, at least one block). The single-change
/// property is deliberately not enforced here so that broken designs can
/// still be loaded and diagnosed; use `is_single_change` or
/// `require_single_change` for that.
class Design {
 public:
  Design(Kind kind, std::vector<Block> blocks);

  Kind kind() const noexcept { return kind_; }
  bool circular() const noexcept { return kind_ == Kind::circular; }
  std::size_t v() const noexcept { return labels_.size(); }
  std::size_t k() const noexcept { return blocks_.front().size(); }
  std::size_t b() const noexcept { return blocks_.size(); }

  const std::vector<Block>& blocks() const noexcept { return blocks_; }
  /// Zero-based access: block(0) is B_1.
  const Block& block(std::size_t i) const { return blocks_.at(i); }

  /// Sorted ground set X.
  const std::vector<Label>& labels() const noexcept { return labels_; }
  bool has_label(Label x) const;
  Label max_label() const noexcept { return labels_.back(); }

  friend bool operator==(const Design&, const Design&) = default;

 private:
  Kind kind_;
  std::vector<Block> blocks_;
  std::vector<Label> labels_;
};

/// (k-1)-set shared by B_i and B_{i+1}. Indices follow the usual 1-based
/// convention: index i sits between blocks i and i+1. For linear designs
/// index 0 (before B_1) and index b (after B_b) are free choices of a
/// (k-1)-subset of the end block; for circular designs index b wraps to B_1.
struct UnchangedSubset {
  std::size_t index = 0;
  std::vector<Label> elements;  // sorted

  friend auto operator<=>(const UnchangedSubset&, const UnchangedSubset&) = default;
};

/// Per-block introduced and removed elements.
struct ChangeTrace {
  /// introduced[i] = B_{i+1} \ B_i (sorted); every label of B_1 for a linear design.
  std::vector<std::vector<Label>> introduced;
  /// removed[i] = the element of the predecessor that block i replaced; empty
  /// for the first block of a linear design.
  std::vector<std::optional<Label>> removed;
};

bool contains(std::span<const Label> block, Label x);
std::vector<Label> sorted_copy(std::span<const Label> block);
std::vector<Label> set_intersection(std::span<const Label> a, std::span<const Label> b);
std::vector<Label> set_difference(std::span<const Label> a, std::span<const Label> b);

/// True when |a ∩ b| = |a| - 1 for equal-sized blocks.
bool single_change(std::span<const Label> a, std::span<const Label> b);

/// Successor of `block` with `removed` replaced in place by `introduced`.
Block replace_label(const Block& block, Label removed, Label introduced);

/// First adjacency (zero-based index of the left block) that is not a
/// single change, including the wrap-around for circular designs.
std::optional<std::size_t> first_bad_adjacency(const Design& d);
bool is_single_change(const Design& d);
/// Throws Error{invalid_design} naming the offending adjacency.
void require_single_change(const Design& d);

ChangeTrace derive_trace(const Design& d);

/// Linear: candidates for U_0 (every (k-1)-subset of B_1, lexicographic),
/// then U_1..U_{b-1}, then candidates for U_b. Circular: U_1..U_b.
std::vector<UnchangedSubset> unchanged_subsets(const Design& d);

/// All (k-1)-subsets of a block, sorted, in lexicographic order.
std::vector<std::vector<Label>> facets(std::span<const Label> block);

Design reverse(const Design& d);
Design relabel(const Design& d, const std::map<Label, Label>& mapping);
/// Cyclic shift: the result's first block is d.block(s mod b).
Design rotate(const Design& d, long long s);

/// True when some bijection of labels carries `a` onto `b` block by block
/// (as sets, same kind).
bool equivalent_up_to_relabeling(const Design& a, const Design& b);

/// Blockwise set equality (element positions ignored).
bool same_blocks(const Design& a, const Design& b);

}  // namespace sccd
