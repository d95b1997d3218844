#pragma once

#include <map>
#include <optional>

#include "sccd/design.hpp"
#include "sccd/expansion.hpp"

namespace sccd {

enum class InsertionOrder { ascending, descending };

/// How the donor design is relabeled before a join.
///
/// An empty glue_map selects the default: if the donor already shares
/// exactly the glue labels with the host (and they sit where the join needs
/// them), labels are kept as they are; otherwise the glue is chosen
/// deterministically and mapped in ascending order. Donor labels outside the
/// glue get fresh values counting up from fresh_label_base, which defaults
/// to one past the host's largest label.
struct JoinPlan {
  std::map<Label, Label> glue_map;  // donor label -> host label
  std::optional<Label> fresh_label_base;
  InsertionOrder insertion_order = InsertionOrder::ascending;
  /// join_circular only: the host's disjoint-capable set to expand at.
  /// Defaults to the first one found.
  std::optional<ExpansionSet> host_set;
};

/// One new block U ∪ {new_label} per member of E. v+1 labels, b + v/(k-1)
/// blocks, same kind and excess.
Design extend_v1(const Design& d, const ExpansionSet& e, Label new_label);

/// Two new blocks per member of E, plus (U_b \ {min U_b}) ∪ {y1, y2} after
/// the pair at U_b. Excess grows by k-2.
Design extend_v2(const Design& d, const ExpansionSet& e, Label y1, Label y2);

/// Glues the donor's U'_0 onto a (k-1)-subset of the host's last block.
/// Excess is additive.
Design join_linear(const Design& host, const Design& donor, const JoinPlan& plan = {});

/// join_linear with the glue at the host's U_b, the host's U_0 elements
/// inserted last at the donor's final location, and the result reversed.
/// Throws Error{disjoint_capable_check_failed} if the output has no
/// disjoint-capable expansion set.
Design build_disjoint_capable(const Design& a, const Design& b, const JoinPlan& plan = {});

/// Circular join: a's first k-1 blocks are dropped and the donor closes the
/// cycle from a's U_b back to a's U_0.
Design join_circular(const Design& a, const Design& b, const JoinPlan& plan = {});

}  // namespace sccd
