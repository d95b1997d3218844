#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

#include "sccd/design.hpp"

namespace sccd {

struct SearchConfig {
  std::size_t v = 0;
  std::size_t k = 0;
  std::size_t b = 0;
  Kind kind = Kind::linear;
  std::chrono::milliseconds time_limit{60'000};
  std::uint64_t node_limit = 0;  // 0 = no limit
  /// B_1 = {0..k-1} and a never-used label may only enter as the smallest
  /// unused one.
  bool symmetry_breaking = true;
  /// Answer Infeasible without searching when b is below the block bound.
  bool bound_precheck = true;
};

enum class SearchStatus { found, infeasible, exhausted, timeout };

std::string_view to_string(SearchStatus s);

struct SearchResult {
  SearchStatus status = SearchStatus::exhausted;
  std::optional<Design> design;
  std::uint64_t nodes = 0;
};

/// Depth-first search over labels 0..v-1. Deterministic: the first design in
/// branching order (removed label, then introduced label, both ascending) is
/// returned. Throws Error{bad_parameters} unless 2 <= k <= v <= 64 and b >= 1.
SearchResult search(const SearchConfig& cfg);

}  // namespace sccd
