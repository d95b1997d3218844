#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sccd/design.hpp"

namespace sccd {

struct CatalogClaims {
  Kind kind = Kind::linear;
  std::size_t v = 0;
  std::size_t k = 0;
  std::size_t b = 0;
  std::int64_t excess = 0;
  bool tight = false;
  bool economical = false;
  bool disjoint_capable = false;
};

struct CatalogEntry {
  std::string name;
  Design design;
  CatalogClaims claimed;
  std::string provenance;
  std::optional<std::vector<std::size_t>> marked_expansion_indices;
};

/// Every fixture name, sorted. The first call loads and verifies the whole
/// catalog and throws Error{invariant_violation} if any claim fails.
std::vector<std::string> catalog_list();

/// Throws Error{unknown_name}.
const CatalogEntry& catalog_get(std::string_view name);

}  // namespace sccd
