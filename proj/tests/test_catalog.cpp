#include <doctest.h>

#include <chrono>

#include "helpers.hpp"
#include "sccd/expansion.hpp"
#include "sccd/verify.hpp"

using namespace sccd;

TEST_CASE("catalog holds the required names") {
  const auto names = catalog_list();
  for (const char* n :
       {"sccd_7_3_10", "cscc_6_3_8", "sccd_13_4_25", "tsccd_6_3_7_a", "tsccd_6_3_7_b", "tsccd_10_3_22_join",
        "esccd_8_3_14", "esccd_4_3_3", "tsccd_10_3_22_dc", "esccd_14_4_30", "tsccd_12_4_21", "tsccd_21_4_69",
        "tsccd_6_3_7_relabelled", "cscc_12_3_33", "cscc_13_4_26", "cscc_19_4_57", "tsccd_18_4_50",
        "tsccd_20_5_46", "tsccd_36_5_156"})
    CHECK(std::find(names.begin(), names.end(), n) != names.end());
  CHECK(std::is_sorted(names.begin(), names.end()));
}

TEST_CASE("lookups") {
  CHECK(cat("cscc_13_4_26").block(0) == Block{0, 1, 2, 6});
  CHECK(cat("tsccd_18_4_50").b() == 50);
  try {
    catalog_get("tsccd_18_4_5O");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::unknown_name);
  }
}

TEST_CASE("claims agree with the reference counter") {
  for (const auto& name : catalog_list()) {
    CAPTURE(name);
    const auto& e = catalog_get(name);
    const auto bs = raw(e.design);
    CHECK(oracle::ground(bs).size() == e.claimed.v);
    CHECK(bs.size() == e.claimed.b);
    CHECK(oracle::single_change(bs, e.design.circular()));
    const auto m = oracle::coverage(bs, e.design.circular());
    CHECK(oracle::all_covered(m));
    CHECK(oracle::sum_excess(m) == e.claimed.excess);
    CHECK_FALSE(e.provenance.empty());
    if (e.marked_expansion_indices) {
      const auto set = expansion_set_at(e.design, *e.marked_expansion_indices);
      REQUIRE(set.has_value());
      std::vector<std::pair<std::size_t, std::vector<std::uint32_t>>> members;
      for (const auto& u : set->members) members.push_back({u.index, u.elements});
      CHECK(oracle::is_partition_by_unchanged(bs, e.design.circular(), members));
      CHECK((set->classification == ExpansionClass::disjoint_capable) == e.claimed.disjoint_capable);
    }
  }
}

TEST_CASE("sub-designs extracted from larger tables") {
  // The 4,3,3 design is the first three blocks of the 8,3,14.
  const auto& big = cat("esccd_8_3_14").blocks();
  CHECK(std::vector<Block>(big.begin(), big.begin() + 3) == cat("esccd_4_3_3").blocks());
  // The 12,4,21 inside the 14,4,30 keeps the same block order.
  const auto& host = cat("esccd_14_4_30").blocks();
  std::vector<Block> core;
  for (const auto& blk : host)
    if (!contains(blk, 13) && !contains(blk, 14)) core.push_back(blk);
  CHECK(core == cat("tsccd_12_4_21").blocks());
}
