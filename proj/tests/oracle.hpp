#pragma once

// Reference checks written independently of the library: they work on raw
// block lists with std::set and enumerate every pair of every block.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Blocks = std::vector<std::vector<std::uint32_t>>;
using PairKey = std::pair<std::uint32_t, std::uint32_t>;

inline std::set<std::uint32_t> as_set(const std::vector<std::uint32_t>& b) { return {b.begin(), b.end()}; }

inline std::set<std::uint32_t> ground(const Blocks& bs) {
  std::set<std::uint32_t> x;
  for (const auto& b : bs) x.insert(b.begin(), b.end());
  return x;
}

inline bool single_change(const Blocks& bs, bool circular) {
  auto ok = [&](std::size_t i, std::size_t j) {
    auto a = as_set(bs[i]), b = as_set(bs[j]);
    std::size_t common = 0;
    for (auto x : a) common += b.count(x);
    return common + 1 == a.size();
  };
  for (std::size_t i = 0; i + 1 < bs.size(); ++i)
    if (!ok(i, i + 1)) return false;
  return !circular || bs.size() < 2 || ok(bs.size() - 1, 0);
}

// Multiplicity of every pair of the ground set. A pair in block i counts when
// at least one of its labels is absent from block i-1 (first linear block:
// every pair counts). Circular designs start counting at `start`.
inline std::map<PairKey, int> coverage(const Blocks& bs, bool circular) {
  std::map<PairKey, int> m;
  const auto x = ground(bs);
  for (auto a : x)
    for (auto b : x)
      if (a < b) m[{a, b}] = 0;
  for (std::size_t i = 0; i < bs.size(); ++i) {
    std::set<std::uint32_t> prev;
    if (i > 0) prev = as_set(bs[i - 1]);
    else if (circular) prev = as_set(bs.back());
    const auto cur = as_set(bs[i]);
    for (auto a : cur)
      for (auto b : cur)
        if (a < b && (!prev.count(a) || !prev.count(b))) ++m[{a, b}];
  }
  return m;
}

// e_i scanned from `start` around the cycle (linear designs ignore start).
inline std::vector<long> block_excesses(const Blocks& bs, bool circular, std::size_t start = 0) {
  std::vector<long> out(bs.size(), 0);
  std::map<PairKey, int> seen;
  for (std::size_t step = 0; step < bs.size(); ++step) {
    const std::size_t i = circular ? (start + step) % bs.size() : step;
    std::set<std::uint32_t> prev;
    if (i > 0) prev = as_set(bs[i - 1]);
    else if (circular) prev = as_set(bs.back());
    const auto cur = as_set(bs[i]);
    for (auto a : cur)
      for (auto b : cur)
        if (a < b && (!prev.count(a) || !prev.count(b)))
          if (seen[{a, b}]++ > 0) ++out[i];
  }
  return out;
}

inline long sum_excess(const std::map<PairKey, int>& m) {
  long e = 0;
  for (auto& [p, c] : m) e += c > 0 ? c - 1 : 0;
  return e;
}

inline bool all_covered(const std::map<PairKey, int>& m) {
  return std::all_of(m.begin(), m.end(), [](auto& kv) { return kv.second > 0; });
}

// Checks an (index, subset) list against the blocks directly.
inline bool is_partition_by_unchanged(const Blocks& bs, bool circular,
                                      const std::vector<std::pair<std::size_t, std::vector<std::uint32_t>>>& members) {
  const std::size_t b = bs.size();
  std::set<std::size_t> idx;
  std::multiset<std::uint32_t> all;
  for (const auto& [i, u] : members) {
    if (!idx.insert(i).second) return false;
    const auto us = as_set(u);
    if (us.size() + 1 != bs[0].size()) return false;
    if (!circular && (i == 0 || i == b)) {
      const auto end = as_set(bs[i == 0 ? 0 : b - 1]);
      for (auto x : us)
        if (!end.count(x)) return false;
    } else {
      if (i == 0 || i > b) return false;
      const auto l = as_set(bs[i - 1]), r = as_set(bs[i % b]);
      std::set<std::uint32_t> common;
      for (auto x : l)
        if (r.count(x)) common.insert(x);
      if (common != us) return false;
    }
    all.insert(us.begin(), us.end());
  }
  const auto x = ground(bs);
  return all.size() == x.size() && std::set<std::uint32_t>(all.begin(), all.end()) == x;
}

// Number of expansion sets by brute force over subsets of candidate rows.
inline std::size_t count_expansion_sets(const Blocks& bs, bool circular) {
  const std::size_t b = bs.size();
  std::vector<std::pair<std::size_t, std::vector<std::uint32_t>>> rows;
  auto facets = [](std::vector<std::uint32_t> blk) {
    std::sort(blk.begin(), blk.end());
    std::vector<std::vector<std::uint32_t>> out;
    for (std::size_t s = 0; s < blk.size(); ++s) {
      auto f = blk;
      f.erase(f.begin() + static_cast<long>(s));
      out.push_back(f);
    }
    return out;
  };
  if (!circular)
    for (auto& f : facets(bs[0])) rows.push_back({0, f});
  for (std::size_t i = 1; i <= b; ++i) {
    if (!circular && i == b) break;
    std::vector<std::uint32_t> common;
    for (auto x : as_set(bs[i - 1]))
      if (as_set(bs[i % b]).count(x)) common.push_back(x);
    rows.push_back({i, common});
  }
  if (!circular)
    for (auto& f : facets(bs[b - 1])) rows.push_back({b, f});

  const std::size_t need = ground(bs).size() / (bs[0].size() - 1);
  std::size_t count = 0;
  std::vector<std::pair<std::size_t, std::vector<std::uint32_t>>> pick;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (pick.size() == need) {
      if (is_partition_by_unchanged(bs, circular, pick)) ++count;
      return;
    }
    for (std::size_t r = from; r < rows.size(); ++r) {
      bool clash = false;
      for (const auto& p : pick)
        for (auto x : p.second) clash = clash || std::count(rows[r].second.begin(), rows[r].second.end(), x) > 0;
      if (clash) continue;
      pick.push_back(rows[r]);
      self(self, r + 1);
      pick.pop_back();
    }
  };
  rec(rec, 0);
  return count;
}

inline long choose2(long n) { return n * (n - 1) / 2; }

}  // namespace oracle
