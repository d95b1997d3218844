#include "sccd/expansion.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

#include <boost/dynamic_bitset.hpp>

namespace sccd {

std::string_view to_string(ExpansionClass c) {
  switch (c) {
    case ExpansionClass::inner: return "inner";
    case ExpansionClass::outer: return "outer";
    case ExpansionClass::disjoint_capable: return "disjoint_capable";
  }
  return "inner";
}

std::vector<std::size_t> ExpansionSet::indices() const {
  std::vector<std::size_t> out;
  out.reserve(members.size());
  for (const auto& m : members) out.push_back(m.index);
  return out;
}

bool ExpansionSet::has_index(std::size_t i) const {
  return std::any_of(members.begin(), members.end(), [i](const auto& m) { return m.index == i; });
}

const UnchangedSubset& ExpansionSet::at(std::size_t i) const {
  for (const auto& m : members)
    if (m.index == i) return m;
  throw std::out_of_range("expansion set has no member at index " + std::to_string(i));
}

namespace {

using Mask = boost::dynamic_bitset<>;

struct Row {
  UnchangedSubset subset;
  Mask mask;
};

// Exact cover over the ground set plus two end columns (one per free end of
// a linear design) that keep at most one U_0 and one U_b choice. The end
// columns are primary only when the query requires that end.
class ExactCover {
 public:
  ExactCover(std::vector<Row> rows, Mask primary, std::size_t limit)
      : rows_(std::move(rows)), primary_(std::move(primary)), limit_(limit) {
    next_after_.resize(rows_.size());
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      std::size_t n = r + 1;
      while (n < rows_.size() && rows_[n].subset.index == rows_[r].subset.index) ++n;
      next_after_[r] = n;
    }
  }

  std::vector<std::vector<std::size_t>> run() {
    if (!rows_.empty() || primary_.none()) {
      Mask covered(primary_.size());
      std::vector<std::size_t> chosen;
      lex(0, covered, chosen);
    }
    return std::move(found_);
  }

 private:
  bool done(const Mask& covered) const { return primary_.is_subset_of(covered); }

  // Walks index tuples in lexicographic order, descending only into branches
  // the oracle says can still be completed.
  void lex(std::size_t from, const Mask& covered, std::vector<std::size_t>& chosen) {
    if (done(covered)) {
      found_.push_back(chosen);
      return;
    }
    for (std::size_t r = from; r < rows_.size() && found_.size() < limit_; ++r) {
      if (rows_[r].mask.intersects(covered)) continue;
      Mask next = covered | rows_[r].mask;
      if (!feasible(next, next_after_[r])) continue;
      chosen.push_back(r);
      lex(next_after_[r], next, chosen);
      chosen.pop_back();
    }
  }

  // Algorithm X restricted to rows at or after `from`; branches on the
  // uncovered primary column with the fewest candidate rows.
  bool feasible(const Mask& covered, std::size_t from) {
    if (done(covered)) return true;
    auto key = std::make_pair(from, covered);
    if (dead_.count(key)) return false;

    std::size_t best_col = Mask::npos;
    std::size_t best_count = rows_.size() + 1;
    Mask open = primary_ - covered;
    for (std::size_t c = open.find_first(); c != Mask::npos; c = open.find_next(c)) {
      std::size_t count = 0;
      for (std::size_t r = from; r < rows_.size(); ++r)
        if (rows_[r].mask.test(c) && !rows_[r].mask.intersects(covered)) ++count;
      if (count < best_count) {
        best_count = count;
        best_col = c;
        if (count == 0) break;
      }
    }
    if (best_count > 0) {
      for (std::size_t r = from; r < rows_.size(); ++r) {
        const Mask& m = rows_[r].mask;
        if (!m.test(best_col) || m.intersects(covered)) continue;
        if (feasible(covered | m, from)) return true;
      }
    }
    dead_.insert(std::move(key));
    return false;
  }

  std::vector<Row> rows_;
  Mask primary_;
  std::size_t limit_;
  std::vector<std::size_t> next_after_;
  std::vector<std::vector<std::size_t>> found_;
  std::set<std::pair<std::size_t, Mask>> dead_;
};

std::size_t dense_index(const Design& d, Label x) {
  const auto& xs = d.labels();
  return static_cast<std::size_t>(std::lower_bound(xs.begin(), xs.end(), x) - xs.begin());
}

void classify(const Design& d, ExpansionSet& e) {
  e.classification = ExpansionClass::inner;
  if (d.circular()) return;
  if (is_disjoint_capable(d, e))
    e.classification = ExpansionClass::disjoint_capable;
  else if (e.has_index(0) || e.has_index(d.b()))
    e.classification = ExpansionClass::outer;
}

struct Query {
  bool allow_u0 = true;
  bool allow_ub = true;
  bool require_u0 = false;
  bool require_ub = false;
};

std::vector<ExpansionSet> solve(const Design& d, const Query& q, std::size_t limit, const EndConstraints& ends) {
  const std::size_t v = d.v();
  const std::size_t b = d.b();
  const std::size_t col_u0 = v;
  const std::size_t col_ub = v + 1;
  const bool linear = !d.circular();

  std::vector<Row> rows;
  for (auto& u : unchanged_subsets(d)) {
    const bool is_u0 = linear && u.index == 0;
    const bool is_ub = linear && u.index == b;
    if (is_u0 && (!q.allow_u0 || (ends.u0 && *ends.u0 != u.elements))) continue;
    if (is_ub && (!q.allow_ub || (ends.ub && *ends.ub != u.elements))) continue;
    Mask m(v + 2);
    for (Label x : u.elements) m.set(dense_index(d, x));
    if (is_u0) m.set(col_u0);
    if (is_ub) m.set(col_ub);
    rows.push_back({std::move(u), std::move(m)});
  }

  Mask primary(v + 2);
  for (std::size_t i = 0; i < v; ++i) primary.set(i);
  if (q.require_u0 || ends.need_u0) primary.set(col_u0);
  if (q.require_ub || ends.need_ub) primary.set(col_ub);

  const std::vector<Row> kept = rows;
  ExactCover cover(std::move(rows), std::move(primary), limit);
  std::vector<ExpansionSet> out;
  for (const auto& picks : cover.run()) {
    ExpansionSet e;
    for (std::size_t r : picks) e.members.push_back(kept[r].subset);
    classify(d, e);
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace

std::vector<ExpansionSet> find_expansion_sets(const Design& d, ExpansionMode mode, std::size_t limit,
                                              const EndConstraints& ends) {
  require_single_change(d);
  if (d.k() < 2 || d.v() % (d.k() - 1) != 0)
    throw Error(ErrorCode::not_divisible, "k-1 does not divide v, so no expansion set can exist");
  if (limit == 0) return {};

  if (d.circular()) {
    if (mode == ExpansionMode::outer || mode == ExpansionMode::both_ends) return {};
    return solve(d, Query{}, limit, ends);
  }
  switch (mode) {
    case ExpansionMode::any: return solve(d, Query{}, limit, ends);
    case ExpansionMode::inner: return solve(d, Query{false, false, false, false}, limit, ends);
    case ExpansionMode::both_ends: return solve(d, Query{true, true, true, true}, limit, ends);
    case ExpansionMode::outer: {
      // Tuples starting at index 0 sort before every other tuple, so the
      // sets using U_0 come first, then those using only U_b.
      auto out = solve(d, Query{true, true, true, false}, limit, ends);
      if (out.size() < limit) {
        auto rest = solve(d, Query{false, true, false, true}, limit - out.size(), ends);
        out.insert(out.end(), std::make_move_iterator(rest.begin()), std::make_move_iterator(rest.end()));
      }
      return out;
    }
  }
  return {};
}

bool is_expansion_set(const Design& d, const ExpansionSet& e) {
  if (!is_single_change(d) || d.k() < 2) return false;
  const std::size_t b = d.b();
  const std::size_t k = d.k();
  std::set<std::size_t> seen_index;
  std::set<Label> covered;
  std::size_t total = 0;
  for (const auto& m : e.members) {
    if (!seen_index.insert(m.index).second) return false;
    if (m.elements.size() != k - 1) return false;
    if (sorted_copy(m.elements) != m.elements) return false;
    if (!d.circular() && (m.index == 0 || m.index == b)) {
      const Block& end = d.block(m.index == 0 ? 0 : b - 1);
      for (Label x : m.elements)
        if (!contains(end, x)) return false;
    } else {
      if (m.index == 0 || m.index > b) return false;
      if (!d.circular() && m.index == b) return false;
      if (m.elements != set_intersection(d.block(m.index - 1), d.block(m.index % b))) return false;
    }
    covered.insert(m.elements.begin(), m.elements.end());
    total += m.elements.size();
  }
  return total == d.v() && covered.size() == d.v() &&
         std::equal(covered.begin(), covered.end(), d.labels().begin(), d.labels().end());
}

std::optional<ExpansionSet> expansion_set_at(const Design& d, const std::vector<std::size_t>& indices) {
  require_single_change(d);
  const std::size_t b = d.b();
  const bool linear = !d.circular();
  ExpansionSet base;
  bool want0 = false;
  bool wantb = false;
  for (std::size_t i : indices) {
    if (linear && i == 0) {
      want0 = true;
    } else if (linear && i == b) {
      wantb = true;
    } else if (i >= 1 && i <= b) {
      base.members.push_back({i, set_intersection(d.block(i - 1), d.block(i % b))});
    } else {
      return std::nullopt;
    }
  }
  const std::vector<std::vector<Label>> none{{}};
  const auto f0 = want0 ? facets(d.block(0)) : none;
  const auto fb = wantb ? facets(d.block(b - 1)) : none;
  for (const auto& u0 : f0) {
    for (const auto& ub : fb) {
      ExpansionSet e;
      if (want0) e.members.push_back({0, u0});
      e.members.insert(e.members.end(), base.members.begin(), base.members.end());
      if (wantb) e.members.push_back({b, ub});
      std::sort(e.members.begin(), e.members.end());
      if (!is_expansion_set(d, e)) continue;
      classify(d, e);
      return e;
    }
  }
  return std::nullopt;
}

namespace {

struct ForcedEnds {
  std::vector<Label> u0;
  std::vector<Label> ub;
};

// U_0 and U_b dictated by conditions 2 and 3, when the prefix allows them.
std::optional<ForcedEnds> forced_ends(const Design& d) {
  const std::size_t k = d.k();
  if (d.b() < k || k < 2) return std::nullopt;
  const auto u1 = set_intersection(d.block(0), d.block(1));
  std::vector<Label> removed;
  for (std::size_t i = 0; i + 1 < k; ++i) {
    if (set_intersection(d.block(i), d.block(i + 1)) != u1) return std::nullopt;
    for (Label x : set_difference(d.block(i), d.block(i + 1))) removed.push_back(x);
  }
  std::sort(removed.begin(), removed.end());
  removed.erase(std::unique(removed.begin(), removed.end()), removed.end());
  if (removed.size() != k - 1) return std::nullopt;
  for (Label x : removed)
    if (!contains(d.block(d.b() - 1), x)) return std::nullopt;
  return ForcedEnds{u1, removed};
}

}  // namespace

bool is_disjoint_capable(const Design& d, const ExpansionSet& e) {
  if (d.circular()) throw Error(ErrorCode::not_linear, "disjoint-capable sets are defined for linear designs");
  if (!is_expansion_set(d, e)) return false;
  if (!e.has_index(0) || !e.has_index(d.b())) return false;
  auto ends = forced_ends(d);
  if (!ends) return false;
  return e.at(0).elements == ends->u0 && e.at(d.b()).elements == ends->ub;
}

std::optional<ExpansionSet> find_disjoint_capable(const Design& d) {
  if (d.circular()) throw Error(ErrorCode::not_linear, "disjoint-capable sets are defined for linear designs");
  require_single_change(d);
  if (d.k() < 2 || d.v() % (d.k() - 1) != 0) return std::nullopt;
  auto ends = forced_ends(d);
  if (!ends) return std::nullopt;
  auto sets = find_expansion_sets(d, ExpansionMode::both_ends, 1, EndConstraints{ends->u0, ends->ub});
  if (sets.empty()) return std::nullopt;
  return sets.front();
}

}  // namespace sccd
