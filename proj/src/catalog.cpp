#include "sccd/catalog.hpp"

#include <map>
#include <mutex>

#include "catalog_data.hpp"
#include "sccd/design_io.hpp"
#include "sccd/expansion.hpp"
#include "sccd/verify.hpp"

namespace sccd {

namespace {

struct Meta {
  std::int64_t excess;
  bool disjoint_capable;
  std::optional<std::vector<std::size_t>> marked;
  const char* provenance;
};

// Letters in the source tables (a, b, c, d) are stored as 13, 14, 15, 16.
const std::map<std::string_view, Meta>& metadata() {
  static const std::map<std::string_view, Meta> meta{
      {"sccd_7_3_10", {0, false, std::nullopt, "worked example of a tight linear design"}},
      {"cscc_6_3_8", {1, false, std::vector<std::size_t>{3, 6, 8}, "circular example; the pair {1,4} is covered twice"}},
      {"sccd_13_4_25", {0, false, std::nullopt, "v+1 extension of a tight 12,4,21"}},
      {"tsccd_6_3_7_a", {0, false, std::vector<std::size_t>{0, 2, 6}, "first 6,3,7 seed of the linear join"}},
      {"tsccd_6_3_7_b", {0, false, std::vector<std::size_t>{0, 2, 6}, "second 6,3,7 seed, labeled to share {2,5} with the first"}},
      {"tsccd_10_3_22_join", {0, false, std::vector<std::size_t>{0, 2, 6, 9, 17}, "linear join of the two 6,3,7 seeds"}},
      {"esccd_8_3_14", {1, false, std::vector<std::size_t>{0, 3, 6, 14}, "linear join of the 4,3,3 prefix and a 6,3,7"}},
      {"esccd_4_3_3", {1, false, std::vector<std::size_t>{0, 3}, "first three blocks of the 8,3,14 design"}},
      {"tsccd_10_3_22_dc", {0, true, std::vector<std::size_t>{0, 8, 16, 20, 22}, "tight 10,3,22 with a disjoint-capable set; a,b,c,d stored as 13..16"}},
      {"esccd_14_4_30", {2, false, std::nullopt, "v+2 extension of a tight 12,4,21"}},
      {"tsccd_12_4_21", {0, false, std::vector<std::size_t>{2, 7, 12, 21}, "black blocks of the 14,4,30 design"}},
      {"tsccd_12_4_21_b", {0, false, std::vector<std::size_t>{0, 6, 15, 21}, "second 12,4,21 seed, from a table left out of the typeset text"}},
      {"tsccd_15_4_34", {0, false, std::vector<std::size_t>{0, 11, 21, 29, 34}, "15,4,34 seed from a table left out of the typeset text; blocks 22-26 repaired; also cited as 15,4,35"}},
      {"tsccd_21_4_69", {0, true, std::vector<std::size_t>{0, 15, 33, 48, 55, 63, 69}, "disjoint-capable join of two 12,4,21"}},
      {"tsccd_6_3_7_relabelled", {0, false, std::vector<std::size_t>{0, 3, 7}, "6,3,7 relabeled to close the 12,3,33 cycle; a,b,c,d stored as 13..16"}},
      {"cscc_12_3_33", {0, false, std::vector<std::size_t>{6, 16, 22, 26, 28, 33}, "circular join of the disjoint-capable 10,3,22 and the relabeled 6,3,7"}},
      {"cscc_13_4_26", {0, false, std::nullopt, "difference family, c=2 k=4"}},
      {"cscc_19_4_57", {0, false, std::nullopt, "difference family, c=3 k=4"}},
      {"tsccd_18_4_50", {0, false, std::vector<std::size_t>{3, 17, 29, 40, 44, 50}, "tight 18,4,50 with an outer expansion set"}},
      {"tsccd_20_5_46", {0, false, std::vector<std::size_t>{0, 6, 21, 33, 46}, "black blocks of the 36,5,156 design"}},
      {"tsccd_36_5_156", {0, true, std::vector<std::size_t>{0, 22, 53, 81, 110, 116, 131, 143, 156}, "disjoint-capable join of two 20,5,46"}},
  };
  return meta;
}

[[noreturn]] void reject(std::string_view name, const std::string& what) {
  throw Error(ErrorCode::invariant_violation, "catalog entry " + std::string(name) + ": " + what);
}

CatalogEntry load(const detail::EmbeddedFixture& f) {
  auto it = metadata().find(f.name);
  if (it == metadata().end()) reject(f.name, "no metadata");
  const Meta& m = it->second;
  Design d = parse_design(f.text);

  CatalogClaims c;
  c.kind = d.kind();
  c.v = d.v();
  c.k = d.k();
  c.b = d.b();
  c.excess = m.excess;
  c.tight = m.excess == 0;
  c.economical = m.excess <= static_cast<std::int64_t>(d.k()) - 2;
  c.disjoint_capable = m.disjoint_capable;

  const auto r = verify(d);
  if (!r.valid_single_change) reject(f.name, "not single change");
  if (!r.covered_all_pairs) reject(f.name, "pairs left uncovered");
  if (r.excess != c.excess || r.tight != c.tight || r.economical != c.economical)
    reject(f.name, "excess " + std::to_string(r.excess) + " does not match the claim");

  if (m.marked) {
    auto e = expansion_set_at(d, *m.marked);
    if (!e) reject(f.name, "marked indices are not an expansion set");
    if (c.disjoint_capable && !is_disjoint_capable(d, *e)) reject(f.name, "marked set is not disjoint-capable");
  }
  return CatalogEntry{std::string(f.name), std::move(d), c, m.provenance, m.marked};
}

const std::map<std::string, CatalogEntry, std::less<>>& entries() {
  static std::map<std::string, CatalogEntry, std::less<>> all;
  static std::once_flag once;
  std::call_once(once, [] {
    for (const auto& f : detail::embedded_fixtures()) {
      auto e = load(f);
      all.emplace(e.name, std::move(e));
    }
  });
  return all;
}

}  // namespace

std::vector<std::string> catalog_list() {
  std::vector<std::string> names;
  for (const auto& [name, e] : entries()) names.push_back(name);
  return names;
}

const CatalogEntry& catalog_get(std::string_view name) {
  const auto& all = entries();
  auto it = all.find(name);
  if (it == all.end()) throw Error(ErrorCode::unknown_name, "no catalog entry named '" + std::string(name) + "'");
  return it->second;
}

}  // namespace sccd
