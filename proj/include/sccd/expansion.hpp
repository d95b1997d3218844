#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <vector>

#include "sccd/design.hpp"

namespace sccd {

enum class ExpansionMode { any, inner, outer, both_ends };
enum class ExpansionClass { inner, outer, disjoint_capable };

std::string_view to_string(ExpansionClass c);

/// Unchanged subsets at distinct indices that partition the ground set.
struct ExpansionSet {
  std::vector<UnchangedSubset> members;  // ascending by index
  ExpansionClass classification = ExpansionClass::inner;

  std::vector<std::size_t> indices() const;
  bool has_index(std::size_t i) const;
  /// Members at index i; throws std::out_of_range when absent.
  const UnchangedSubset& at(std::size_t i) const;
};

inline constexpr std::size_t unlimited = std::numeric_limits<std::size_t>::max();

/// Optional pins for the free end subsets of a linear design. A pinned end
/// is only a restriction; set need_u0/need_ub to make the end mandatory.
struct EndConstraints {
  std::optional<std::vector<Label>> u0;
  std::optional<std::vector<Label>> ub;
  bool need_u0 = false;
  bool need_ub = false;
};

/// Exact-cover search for expansion sets, returned in lexicographic order of
/// their sorted index tuples (ties on the free U_0/U_b choice broken by the
/// subsets themselves). Throws Error{not_divisible} when (k-1) does not
/// divide v. Circular designs have no outer sets; `outer` and `both_ends`
/// return nothing for them.
std::vector<ExpansionSet> find_expansion_sets(const Design& d, ExpansionMode mode = ExpansionMode::any,
                                              std::size_t limit = 1, const EndConstraints& ends = {});

/// Re-checks a candidate against the design: distinct indices, each member
/// equal to the unchanged subset at its index (or a valid end choice),
/// pairwise disjoint, union equal to X.
bool is_expansion_set(const Design& d, const ExpansionSet& e);

/// Builds the expansion set with exactly these indices, trying every U_0/U_b
/// choice when an end index is present. Empty when no such set exists.
std::optional<ExpansionSet> expansion_set_at(const Design& d, const std::vector<std::size_t>& indices);

/// The three disjoint-capable conditions: E uses U_0 and U_b, U_0 equals
/// U_1 = ... = U_{k-1}, and U_b is the union of the first k-1 removed labels.
/// Throws Error{not_linear} for circular designs.
bool is_disjoint_capable(const Design& d, const ExpansionSet& e);

/// First disjoint-capable expansion set of a linear design, if any. U_0 and
/// U_b are forced by the conditions, so only the interior is searched.
std::optional<ExpansionSet> find_disjoint_capable(const Design& d);

}  // namespace sccd
