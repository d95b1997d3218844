// Runs each acceptance criterion and prints one PASS/FAIL line per criterion.
// Exit status is the number of failed criteria.

#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include "oracle.hpp"
#include "sccd/catalog.hpp"
#include "sccd/construct.hpp"
#include "sccd/design_io.hpp"
#include "sccd/difference.hpp"
#include "sccd/expansion.hpp"
#include "sccd/search.hpp"
#include "sccd/verify.hpp"

using namespace sccd;
using Clock = std::chrono::steady_clock;

namespace {

// Wall-clock budgets per criterion.
constexpr double kCatalogSeconds = 1.0;
constexpr double kConstructSeconds = 5.0;
constexpr double kDifferenceSeconds = 10.0;
constexpr double kCorollarySeconds = 30.0;
constexpr double kSearch7310Seconds = 10.0;
constexpr double kSearchInstantSeconds = 0.05;
constexpr double kSearch9412Seconds = 300.0;
constexpr double kPropertySeconds = 60.0;
constexpr int kRandomDesigns = 500;

struct Outcome {
  bool ok = true;
  std::ostringstream note;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      note << "[" << what << "] ";
    }
  }
};

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

const Design& cat(const char* name) { return catalog_get(name).design; }

// v, b, kind and excess plus a full coverage check.
void expect_design(Outcome& o, const std::string& tag, const Design& d, Kind kind, std::size_t v, std::size_t b,
                   std::int64_t e) {
  const auto r = verify(d);
  const bool good = d.kind() == kind && r.v == v && r.b == b && r.valid_single_change && r.covered_all_pairs &&
                    r.excess == e && r.tight == (e == 0) && r.economical == (e <= static_cast<std::int64_t>(d.k()) - 2);
  std::ostringstream s;
  s << tag << ": got " << to_string(d.kind()) << " v=" << r.v << " b=" << r.b << " e=" << r.excess
    << " covered=" << r.covered_all_pairs;
  o.expect(good, s.str());
}

Outcome criterion_catalog() {
  Outcome o;
  struct Want {
    const char* name;
    Kind kind;
    std::size_t v, b;
    std::int64_t e;
    bool dc;
  };
  const Want wants[] = {
      {"sccd_7_3_10", Kind::linear, 7, 10, 0, false},       {"cscc_6_3_8", Kind::circular, 6, 8, 1, false},
      {"tsccd_6_3_7_a", Kind::linear, 6, 7, 0, false},      {"tsccd_6_3_7_b", Kind::linear, 6, 7, 0, false},
      {"tsccd_10_3_22_dc", Kind::linear, 10, 22, 0, true},  {"sccd_13_4_25", Kind::linear, 13, 25, 0, false},
      {"esccd_8_3_14", Kind::linear, 8, 14, 1, false},      {"esccd_14_4_30", Kind::linear, 14, 30, 2, false},
      {"tsccd_12_4_21", Kind::linear, 12, 21, 0, false},    {"tsccd_21_4_69", Kind::linear, 21, 69, 0, true},
      {"cscc_12_3_33", Kind::circular, 12, 33, 0, false},   {"cscc_13_4_26", Kind::circular, 13, 26, 0, false},
      {"cscc_19_4_57", Kind::circular, 19, 57, 0, false},   {"tsccd_18_4_50", Kind::linear, 18, 50, 0, false},
      {"tsccd_20_5_46", Kind::linear, 20, 46, 0, false},    {"tsccd_36_5_156", Kind::linear, 36, 156, 0, true},
  };
  for (const auto& w : wants) {
    const auto& entry = catalog_get(w.name);
    expect_design(o, w.name, entry.design, w.kind, w.v, w.b, w.e);
    if (w.dc) {
      const auto set = expansion_set_at(entry.design, *entry.marked_expansion_indices);
      o.expect(set && is_disjoint_capable(entry.design, *set), std::string(w.name) + " marked set disjoint-capable");
    }
  }
  // Every other entry must also load (load-time verification) and match its claims.
  for (const auto& name : catalog_list()) {
    const auto& e = catalog_get(name);
    expect_design(o, name, e.design, e.claimed.kind, e.claimed.v, e.claimed.b, e.claimed.excess);
  }
  return o;
}

Outcome criterion_constructions() {
  Outcome o;
  const auto& t12 = cat("tsccd_12_4_21");
  EndConstraints need_ub;
  need_ub.need_ub = true;

  expect_design(o, "extend_v1 12,4,21", extend_v1(t12, find_expansion_sets(t12).front(), t12.max_label() + 1),
                Kind::linear, 13, 25, 0);
  expect_design(o, "extend_v2 12,4,21",
                extend_v2(t12, find_expansion_sets(t12, ExpansionMode::any, 1, need_ub).front(), t12.max_label() + 1,
                          t12.max_label() + 2),
                Kind::linear, 14, 30, 2);
  expect_design(o, "join 6,3,7 x2", join_linear(cat("tsccd_6_3_7_a"), cat("tsccd_6_3_7_b")), Kind::linear, 10, 22, 0);
  expect_design(o, "join 4,3,3 + 6,3,7", join_linear(cat("esccd_4_3_3"), cat("tsccd_6_3_7_a")), Kind::linear, 8, 14,
                1);

  const auto dc21 = build_disjoint_capable(t12, t12);
  expect_design(o, "disjoint 12,4,21 x2", dc21, Kind::linear, 21, 69, 0);
  o.expect(find_disjoint_capable(dc21).has_value(), "21,4,69 disjoint-capable");
  const auto dc36 = build_disjoint_capable(cat("tsccd_20_5_46"), cat("tsccd_20_5_46"));
  expect_design(o, "disjoint 20,5,46 x2", dc36, Kind::linear, 36, 156, 0);
  o.expect(find_disjoint_capable(dc36).has_value(), "36,5,156 disjoint-capable");

  expect_design(o, "circular 10,3,22 + 6,3,7",
                join_circular(cat("tsccd_10_3_22_dc"), cat("tsccd_6_3_7_relabelled")), Kind::circular, 12, 33, 0);
  const auto c27 = join_circular(cat("tsccd_21_4_69"), t12);
  expect_design(o, "circular 21,4,69 + 12,4,21", c27, Kind::circular, 27, 117, 0);
  o.expect(117 == oracle::choose2(27) / 3, "117 = C(27,2)/3");
  return o;
}

Outcome criterion_difference() {
  Outcome o;
  for (std::size_t c = 1; c <= 6; ++c)
    for (std::size_t k = 2; k <= 8; ++k) {
      const auto d = difference_cscc(c, k);
      const std::size_t v = 2 * c * (k - 1) + 1;
      const std::size_t b = c * c * (2 * k - 2) + c;
      std::ostringstream tag;
      tag << "c=" << c << " k=" << k;
      expect_design(o, tag.str(), d, Kind::circular, v, b, 0);
      o.expect(static_cast<long>(b) * static_cast<long>(k - 1) == oracle::choose2(static_cast<long>(v)),
               tag.str() + " b = C(v,2)/(k-1)");
    }
  o.expect(difference_cscc(2, 4) == cat("cscc_13_4_26"), "c=2 k=4 equals the 13,4,26 table");
  o.expect(difference_cscc(3, 4) == cat("cscc_19_4_57"), "c=3 k=4 equals the 19,4,57 table");
  return o;
}

Outcome criterion_corollary() {
  Outcome o;
  const auto& t69 = cat("tsccd_21_4_69");
  struct Step {
    std::size_t v;
    const char* seed;
  };
  for (const Step s : {Step{27, "tsccd_12_4_21"}, Step{28, "sccd_13_4_25"}, Step{29, "esccd_14_4_30"},
                       Step{30, "tsccd_15_4_34"}}) {
    const auto d = join_circular(t69, cat(s.seed));
    const auto r = verify(d);
    const auto want_b = lower_bound(s.v, 4, Kind::circular).g_ceiling;
    const bool tight_class = s.v % 3 == 0 || s.v % 3 == 1;
    std::ostringstream tag;
    tag << "CSCCD(" << s.v << ",4) via " << s.seed << ": b=" << r.b << " e=" << r.excess;
    o.expect(d.circular() && r.v == s.v && static_cast<std::int64_t>(r.b) == want_b && r.covered_all_pairs &&
                 r.valid_single_change && r.excess <= 2 && r.economical && (!tight_class || r.tight),
             tag.str());
  }

  const auto& t20 = cat("tsccd_20_5_46");
  EndConstraints need_ub;
  need_ub.need_ub = true;
  const Design five[] = {
      t20,
      extend_v1(t20, find_expansion_sets(t20).front(), t20.max_label() + 1),
      extend_v2(t20, find_expansion_sets(t20, ExpansionMode::any, 1, need_ub).front(), t20.max_label() + 1,
                t20.max_label() + 2),
  };
  const std::size_t vs[] = {20, 21, 22};
  const std::size_t bs[] = {46, 51, 57};
  const std::int64_t es[] = {0, 0, 3};
  for (int i = 0; i < 3; ++i) {
    o.expect(lower_bound(vs[i], 5, Kind::linear).g_ceiling == static_cast<std::int64_t>(bs[i]),
             "g1 ceiling for v=" + std::to_string(vs[i]));
    expect_design(o, "SCCD(" + std::to_string(vs[i]) + ",5)", five[i], Kind::linear, vs[i], bs[i], es[i]);
  }
  return o;
}

Outcome criterion_search() {
  Outcome o;
  auto timed = [&](SearchConfig cfg, double limit, const std::string& tag) {
    cfg.time_limit = std::chrono::milliseconds(static_cast<long long>(limit * 1000));
    const auto t = Clock::now();
    auto r = search(cfg);
    const double s = seconds_since(t);
    std::ostringstream note;
    note << tag << " " << to_string(r.status) << " in " << s << "s";
    o.note << note.str() << "; ";
    o.expect(s < limit, tag + " over time");
    return r;
  };

  SearchConfig a;
  a.v = 7, a.k = 3, a.b = 10;
  const auto ra = timed(a, kSearch7310Seconds, "7,3,10");
  o.expect(ra.status == SearchStatus::found && ra.design && verify(*ra.design).tight &&
               oracle::all_covered(oracle::coverage(ra.design->blocks(), false)),
           "7,3,10 found tight");

  SearchConfig b = a;
  b.b = 9;
  o.expect(timed(b, kSearchInstantSeconds, "7,3,9").status == SearchStatus::infeasible, "7,3,9 infeasible");

  SearchConfig c;
  c.v = 9, c.k = 4, c.b = 12, c.kind = Kind::circular;
  const auto rc = timed(c, kSearch9412Seconds, "9,4,12 circular");
  o.expect(rc.status == SearchStatus::found && rc.design && verify(*rc.design).tight &&
               oracle::all_covered(oracle::coverage(rc.design->blocks(), true)),
           "9,4,12 circular found tight");

  // 4,3,2 sits below the bound: the search contract answers Infeasible, and
  // the full tree with the bound check disabled is Exhausted.
  SearchConfig d;
  d.v = 4, d.k = 3, d.b = 2;
  o.expect(timed(d, kSearchInstantSeconds, "4,3,2").status == SearchStatus::infeasible, "4,3,2 infeasible by bound");
  d.bound_precheck = false;
  o.expect(timed(d, kSearch7310Seconds, "4,3,2 full tree").status == SearchStatus::exhausted,
           "4,3,2 exhausted by search");
  return o;
}

Outcome criterion_properties() {
  Outcome o;
  std::mt19937 rng(1);
  std::uniform_int_distribution<std::size_t> pick_c(1, 4), pick_k(2, 6);
  for (int trial = 0; trial < kRandomDesigns; ++trial) {
    Design d = difference_cscc(pick_c(rng), pick_k(rng));
    std::vector<Label> image(d.v());
    std::iota(image.begin(), image.end(), 100u);
    std::shuffle(image.begin(), image.end(), rng);
    std::map<Label, Label> m;
    for (std::size_t i = 0; i < d.v(); ++i) m[d.labels()[i]] = image[i];
    d = relabel(d, m);
    d = rotate(d, static_cast<long long>(rng() % d.b()));
    if (rng() % 2) d = reverse(d);
    const std::string tag = "trial " + std::to_string(trial);

    // (a)
    const auto e = block_excesses(d);
    const long sum = std::accumulate(e.begin(), e.end(), 0L);
    o.expect(sum == excess(d), tag + " sum e_i");
    const auto es = block_excesses(d, rng() % d.b());
    o.expect(std::accumulate(es.begin(), es.end(), 0L) == sum, tag + " rotation invariance");
    // (b)
    const auto cov = oracle::coverage(d.blocks(), true);
    long mult = 0;
    for (const auto& [p, c] : cov) mult += c;
    o.expect(mult == static_cast<long>((d.k() - 1) * d.b()), tag + " slot conservation");
    long lib = 0;
    for (const auto& [p, c] : coverage(d)) lib += c;
    o.expect(lib == mult, tag + " library slots");
    // (c)
    o.expect(parse_design(serialize_design(d)) == d, tag + " round trip");
  }

  // (b) for linear designs and (c), (d) on the catalog
  for (const auto& name : catalog_list()) {
    const auto& d = cat(name.c_str());
    long mult = 0;
    for (const auto& [p, c] : oracle::coverage(d.blocks(), d.circular())) mult += c;
    const long k = static_cast<long>(d.k());
    const long want = (k - 1) * static_cast<long>(d.b()) + (d.circular() ? 0 : oracle::choose2(k - 1));
    o.expect(mult == want, name + " slot conservation");
    o.expect(parse_design(serialize_design(d, name)) == d, name + " round trip");
    if (d.v() % (d.k() - 1) != 0) continue;
    for (const auto& set : find_expansion_sets(d, ExpansionMode::any, 25)) {
      std::vector<std::pair<std::size_t, std::vector<std::uint32_t>>> members;
      for (const auto& u : set.members) members.push_back({u.index, u.elements});
      o.expect(oracle::is_partition_by_unchanged(d.blocks(), d.circular(), members), name + " expansion set");
    }
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* label;
    double budget;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {"1 catalog verification", kCatalogSeconds, criterion_catalog},
      {"2 construction reproduction", kConstructSeconds, criterion_constructions},
      {"3 difference family sweep", kDifferenceSeconds, criterion_difference},
      {"4 corollary chain spot checks", kCorollarySeconds, criterion_corollary},
      {"5 search oracle", kSearch9412Seconds + kSearch7310Seconds * 2, criterion_search},
      {"6 property suites", kPropertySeconds, criterion_properties},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.note << "threw: " << e.what();
    }
    const double s = seconds_since(t);
    const bool pass = o.ok && s < c.budget;
    failed += !pass;
    std::cout << (pass ? "PASS" : "FAIL") << "  " << c.label << "  (" << s << " s, budget " << c.budget << " s)";
    const auto note = o.note.str();
    if (!note.empty()) std::cout << "  " << note;
    std::cout << '\n';
  }
  return failed;
}
