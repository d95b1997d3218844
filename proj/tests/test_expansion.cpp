#include <doctest.h>

#include "helpers.hpp"
#include "sccd/expansion.hpp"

using namespace sccd;

namespace {

std::vector<std::pair<std::size_t, std::vector<std::uint32_t>>> members(const ExpansionSet& e) {
  std::vector<std::pair<std::size_t, std::vector<std::uint32_t>>> out;
  for (const auto& m : e.members) out.push_back({m.index, m.elements});
  return out;
}

bool has_set(const std::vector<ExpansionSet>& sets, const std::vector<UnchangedSubset>& want) {
  return std::any_of(sets.begin(), sets.end(), [&](const ExpansionSet& e) { return e.members == want; });
}

}  // namespace

TEST_CASE("the marked set of the 6,3,8 circular design is found") {
  const auto sets = find_expansion_sets(cat("cscc_6_3_8"), ExpansionMode::any, unlimited);
  CHECK(has_set(sets, {{3, {3, 6}}, {6, {1, 5}}, {8, {2, 4}}}));
  for (const auto& e : sets) CHECK(e.classification == ExpansionClass::inner);
}

TEST_CASE("a disjoint-capable set of the 10,3,22 design with letters") {
  const auto& d = cat("tsccd_10_3_22_dc");
  const auto sets = find_expansion_sets(d, ExpansionMode::both_ends, unlimited);
  REQUIRE_FALSE(sets.empty());
  const bool found = std::any_of(sets.begin(), sets.end(), [&](const ExpansionSet& e) {
    return e.at(0).elements == L({13, 14}) && e.at(d.b()).elements == L({15, 16});
  });
  CHECK(found);
  const auto dc = find_disjoint_capable(d);
  REQUIRE(dc.has_value());
  CHECK(dc->classification == ExpansionClass::disjoint_capable);
  CHECK(is_disjoint_capable(d, *dc));
}

TEST_CASE("no expansion set when every unchanged subset shares a label") {
  const Design d(Kind::circular, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}});
  CHECK(find_expansion_sets(d, ExpansionMode::any, unlimited).empty());
}

TEST_CASE("disjoint capability of marked sets") {
  for (const char* name : {"tsccd_10_3_22_dc", "tsccd_21_4_69", "tsccd_36_5_156"}) {
    CAPTURE(name);
    const auto& e = catalog_get(name);
    const auto set = expansion_set_at(e.design, *e.marked_expansion_indices);
    REQUIRE(set.has_value());
    CHECK(is_disjoint_capable(e.design, *set));
  }
  const auto& a = catalog_get("tsccd_6_3_7_a");
  const auto outer = expansion_set_at(a.design, *a.marked_expansion_indices);
  REQUIRE(outer.has_value());
  CHECK(outer->classification == ExpansionClass::outer);
  CHECK_FALSE(is_disjoint_capable(a.design, *outer));
  CHECK_THROWS_AS(is_disjoint_capable(cat("cscc_6_3_8"), ExpansionSet{}), Error);
  CHECK_THROWS_AS(find_disjoint_capable(cat("cscc_6_3_8")), Error);
}

TEST_CASE("first k-1 unchanged subsets must agree") {
  // Blocks 1..3 of this design change different labels, so condition two fails.
  const auto& d = cat("tsccd_18_4_50");
  CHECK_FALSE(find_disjoint_capable(d).has_value());
}

TEST_CASE("13,4,25 has no expansion set; its 12-label core does") {
  const auto& d = cat("sccd_13_4_25");
  CHECK_THROWS_AS(find_expansion_sets(d), Error);
  try {
    find_expansion_sets(d);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::not_divisible);
  }
  // The subsets U_1, U_7, U_13, U_22 partition every label except 13.
  std::vector<std::pair<std::size_t, std::vector<Label>>> want{
      {1, {1, 2, 3}}, {7, {5, 8, 9}}, {13, {4, 6, 7}}, {22, {10, 11, 12}}};
  std::set<Label> seen;
  for (const auto& [i, u] : want) {
    CHECK(set_intersection(d.block(i - 1), d.block(i)) == u);
    seen.insert(u.begin(), u.end());
  }
  CHECK(seen.size() == 12);
  CHECK_FALSE(seen.count(13));

  // Dropping the four blocks that hold 13 gives a 12,4,21 with the same
  // subsets at shifted indices.
  std::vector<Block> core;
  for (const auto& blk : d.blocks())
    if (!contains(blk, 13)) core.push_back(blk);
  const Design c(Kind::linear, core);
  CHECK(c.b() == 21);
  const auto e = expansion_set_at(c, {1, 6, 11, 19});
  REQUIRE(e.has_value());
  CHECK(e->at(1).elements == L({1, 2, 3}));
  CHECK(e->at(19).elements == L({10, 11, 12}));
}

TEST_CASE("enumeration agrees with brute force on small designs") {
  for (const char* name : {"tsccd_6_3_7_a", "tsccd_6_3_7_b", "tsccd_6_3_7_relabelled", "cscc_6_3_8", "esccd_4_3_3",
                           "esccd_8_3_14", "tsccd_10_3_22_join", "tsccd_10_3_22_dc", "cscc_12_3_33"}) {
    CAPTURE(name);
    const auto& d = cat(name);
    const auto sets = find_expansion_sets(d, ExpansionMode::any, unlimited);
    CHECK(sets.size() == oracle::count_expansion_sets(raw(d), d.circular()));
    for (const auto& e : sets) CHECK(oracle::is_partition_by_unchanged(raw(d), d.circular(), members(e)));
  }
}

TEST_CASE("results come in lexicographic order and are reproducible") {
  const auto& d = cat("tsccd_10_3_22_join");
  const auto a = find_expansion_sets(d, ExpansionMode::any, unlimited);
  const auto b = find_expansion_sets(d, ExpansionMode::any, unlimited);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].members == b[i].members);
  for (std::size_t i = 1; i < a.size(); ++i) {
    CAPTURE(i);
    CHECK(a[i - 1].members < a[i].members);
  }
  CHECK(find_expansion_sets(d).front().members == a.front().members);
  CHECK(find_expansion_sets(d, ExpansionMode::any, 0).empty());
}

TEST_CASE("modes filter by the end indices") {
  for (const char* name : {"tsccd_10_3_22_join", "tsccd_10_3_22_dc", "esccd_8_3_14", "tsccd_6_3_7_a"}) {
    CAPTURE(name);
    const auto& d = cat(name);
    const std::size_t b = d.b();
    const auto all = find_expansion_sets(d, ExpansionMode::any, unlimited);
    const auto inner = find_expansion_sets(d, ExpansionMode::inner, unlimited);
    const auto outer = find_expansion_sets(d, ExpansionMode::outer, unlimited);
    const auto both = find_expansion_sets(d, ExpansionMode::both_ends, unlimited);
    CHECK(inner.size() + outer.size() == all.size());
    for (const auto& e : inner) CHECK((!e.has_index(0) && !e.has_index(b)));
    for (const auto& e : outer) {
      CHECK((e.has_index(0) || e.has_index(b)));
      CHECK(e.classification != ExpansionClass::inner);
    }
    for (const auto& e : both) CHECK((e.has_index(0) && e.has_index(b)));
    // U_0 sets first, then U_b-only sets.
    bool seen_without_zero = false;
    for (const auto& e : outer) {
      if (!e.has_index(0)) seen_without_zero = true;
      if (seen_without_zero) CHECK_FALSE(e.has_index(0));
    }
  }
  CHECK(find_expansion_sets(cat("cscc_6_3_8"), ExpansionMode::outer, unlimited).empty());
}

TEST_CASE("end constraints pin U_0 and U_b") {
  const auto& d = cat("tsccd_10_3_22_join");
  EndConstraints ends;
  ends.u0 = L({2, 3});
  ends.need_u0 = true;
  for (const auto& e : find_expansion_sets(d, ExpansionMode::any, unlimited, ends))
    CHECK(e.at(0).elements == L({2, 3}));
}

TEST_CASE("is_expansion_set rejects bad candidates") {
  const auto& d = cat("cscc_6_3_8");
  ExpansionSet good{{{3, {3, 6}}, {6, {1, 5}}, {8, {2, 4}}}, ExpansionClass::inner};
  CHECK(is_expansion_set(d, good));
  ExpansionSet overlap{{{3, {3, 6}}, {6, {1, 5}}, {7, {1, 2}}}, ExpansionClass::inner};
  CHECK_FALSE(is_expansion_set(d, overlap));
  ExpansionSet short_set{{{3, {3, 6}}, {6, {1, 5}}}, ExpansionClass::inner};
  CHECK_FALSE(is_expansion_set(d, short_set));
  ExpansionSet wrong{{{3, {3, 6}}, {6, {1, 5}}, {8, {2, 5}}}, ExpansionClass::inner};
  CHECK_FALSE(is_expansion_set(d, wrong));
}

TEST_CASE("not divisible") {
  CHECK_THROWS_AS(find_expansion_sets(cat("sccd_7_3_10")), Error);
}
