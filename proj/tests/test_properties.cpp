#include <doctest.h>

#include <numeric>
#include <random>

#include "helpers.hpp"
#include "sccd/construct.hpp"
#include "sccd/design_io.hpp"
#include "sccd/difference.hpp"
#include "sccd/expansion.hpp"
#include "sccd/verify.hpp"

using namespace sccd;

namespace {

// A difference design pushed through a random relabeling, rotation and
// reversal; every fourth one is cut open into a linear design.
Design random_design(std::mt19937& rng) {
  std::uniform_int_distribution<std::size_t> pick_c(1, 4), pick_k(2, 6);
  Design d = difference_cscc(pick_c(rng), pick_k(rng));
  std::vector<Label> image(d.v());
  std::iota(image.begin(), image.end(), 0u);
  for (auto& x : image) x = x * 3 + 7;
  std::shuffle(image.begin(), image.end(), rng);
  std::map<Label, Label> m;
  for (std::size_t i = 0; i < d.v(); ++i) m[d.labels()[i]] = image[i];
  d = relabel(d, m);
  d = rotate(d, std::uniform_int_distribution<long long>(0, static_cast<long long>(d.b()) - 1)(rng));
  if (rng() % 2) d = reverse(d);
  if (rng() % 4 == 0) d = Design(Kind::linear, d.blocks());
  return d;
}

long slots(const Design& d) {
  const long k = static_cast<long>(d.k());
  const long b = static_cast<long>(d.b());
  return (k - 1) * b + (d.circular() ? 0 : oracle::choose2(k - 1));
}

}  // namespace

TEST_CASE("excess and coverage properties on 500 random designs") {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 500; ++trial) {
    const Design d = random_design(rng);
    CAPTURE(trial);
    CAPTURE(serialize_design(d));

    // (a) per-block excesses add up to the closed form
    const auto e = block_excesses(d);
    const long sum = std::accumulate(e.begin(), e.end(), 0L);
    const auto cov = coverage(d);
    long mult = 0;
    for (const auto& [p, c] : cov) mult += c;
    const bool complete = std::all_of(cov.begin(), cov.end(), [](auto& kv) { return kv.second > 0; });
    if (complete) CHECK(sum == excess(d));
    if (d.circular()) {
      const std::size_t s = rng() % d.b();
      const auto es = block_excesses(d, s);
      CHECK(std::accumulate(es.begin(), es.end(), 0L) == sum);
      CHECK(es == oracle::block_excesses(raw(d), true, s));
    } else {
      CHECK(e == oracle::block_excesses(raw(d), false));
    }

    // (b) coverage slots are conserved
    CHECK(mult == slots(d));

    // (c) parse o serialize
    CHECK(parse_design(serialize_design(d)) == d);

    // invariance of the verification flags
    const auto r = verify(d);
    const auto rr = verify(reverse(d));
    CHECK(r.excess == rr.excess);
    CHECK(r.tight == rr.tight);
    CHECK(r.economical == rr.economical);
  }
}

TEST_CASE("expansion sets re-validate as partitions") {
  std::vector<Design> designs;
  for (const auto& name : catalog_list()) designs.push_back(cat(name.c_str()));
  for (std::size_t c = 1; c <= 4; ++c) designs.push_back(difference_cscc(c, 2));
  designs.push_back(join_linear(cat("tsccd_6_3_7_a"), cat("tsccd_6_3_7_a")));
  designs.push_back(build_disjoint_capable(cat("tsccd_12_4_21"), cat("tsccd_12_4_21_b")));

  std::mt19937 rng(7);
  for (const auto& d : designs) {
    if (d.v() % (d.k() - 1) != 0) continue;
    for (auto mode : {ExpansionMode::any, ExpansionMode::inner, ExpansionMode::outer, ExpansionMode::both_ends}) {
      for (const auto& e : find_expansion_sets(d, mode, 25)) {
        CHECK(is_expansion_set(d, e));
        std::vector<std::pair<std::size_t, std::vector<std::uint32_t>>> members;
        for (const auto& u : e.members) members.push_back({u.index, u.elements});
        CHECK(oracle::is_partition_by_unchanged(raw(d), d.circular(), members));
        CHECK(e.members.size() == d.v() / (d.k() - 1));
      }
    }
  }
}

TEST_CASE("parse o serialize on constructed designs") {
  const Design designs[] = {
      join_circular(cat("tsccd_21_4_69"), cat("tsccd_15_4_34")),
      build_disjoint_capable(cat("tsccd_20_5_46"), cat("tsccd_20_5_46")),
      difference_cscc(6, 8),
  };
  for (const auto& d : designs) CHECK(parse_design(serialize_design(d)) == d);
}
