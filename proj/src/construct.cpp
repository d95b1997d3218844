#include "sccd/construct.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace sccd {

namespace {

using Insertions = std::map<std::size_t, std::vector<Label>>;

std::string fmt_labels(const std::vector<Label>& xs) {
  std::string s = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s + "}";
}

// Appends U ∪ {x} for each x, each block written over the previous one so the
// untouched positions keep their column.
void append_run(std::vector<Block>& out, const Block& from, const std::vector<Label>& u,
                const std::vector<Label>& xs) {
  Block cur = from;
  for (Label x : xs) {
    for (auto& slot : cur)
      if (!contains(u, slot)) {
        slot = x;
        break;
      }
    out.push_back(cur);
  }
}

// d's blocks with runs of new blocks at the given unchanged-subset indices.
// A linear index 0 run goes before B_1; any other index i runs after B_i.
std::vector<Block> weave(const Design& d, const ExpansionSet& e, const Insertions& ins) {
  std::vector<Block> out;
  const std::size_t b = d.b();
  auto run_at = [&](std::size_t i, const Block& from) {
    auto it = ins.find(i);
    if (it != ins.end() && !it->second.empty()) append_run(out, from, e.at(i).elements, it->second);
  };
  if (!d.circular()) run_at(0, d.block(0));
  for (std::size_t i = 1; i <= b; ++i) {
    out.push_back(d.block(i - 1));
    run_at(i, d.block(i - 1));
  }
  return out;
}

void require_expansion_set(const Design& d, const ExpansionSet& e) {
  if (!is_expansion_set(d, e)) throw Error(ErrorCode::not_expansion_set, "not an expansion set of the design");
}

void require_linear(const Design& d, const char* role) {
  if (d.circular()) throw Error(ErrorCode::not_linear, std::string(role) + " design must be linear");
}

void require_same_k(const Design& a, const Design& b) {
  if (a.k() != b.k())
    throw Error(ErrorCode::incompatible_k,
                "block sizes differ: " + std::to_string(a.k()) + " and " + std::to_string(b.k()));
}

void require_fresh(const Design& d, Label x) {
  if (d.has_label(x)) throw Error(ErrorCode::label_collision, "label " + std::to_string(x) + " is already in use");
}

std::vector<Label> ordered(std::vector<Label> xs, InsertionOrder order) {
  std::sort(xs.begin(), xs.end());
  if (order == InsertionOrder::descending) std::reverse(xs.begin(), xs.end());
  return xs;
}

// Completes a partial map by sending every other donor label to a fresh one.
std::map<Label, Label> complete_map(const Design& host, const Design& donor, std::map<Label, Label> glue,
                                    const JoinPlan& plan) {
  Label next = plan.fresh_label_base.value_or(host.max_label() + 1);
  for (Label x : donor.labels()) {
    if (glue.count(x)) continue;
    require_fresh(host, next);
    glue[x] = next++;
  }
  return glue;
}

std::map<Label, Label> ascending_map(const std::vector<Label>& from, const std::vector<Label>& to) {
  std::map<Label, Label> m;
  for (std::size_t i = 0; i < from.size(); ++i) m[from[i]] = to[i];
  return m;
}

bool subset_of(const std::vector<Label>& xs, const Block& blk) {
  return std::all_of(xs.begin(), xs.end(), [&](Label x) { return contains(blk, x); });
}

std::vector<Label> shared_labels(const Design& a, const Design& b) {
  std::vector<Label> out;
  std::set_intersection(a.labels().begin(), a.labels().end(), b.labels().begin(), b.labels().end(),
                        std::back_inserter(out));
  return out;
}

std::optional<ExpansionSet> first_set(const Design& d, ExpansionMode mode, const EndConstraints& ends) {
  if (d.v() % (d.k() - 1) != 0) return std::nullopt;
  auto sets = find_expansion_sets(d, mode, 1, ends);
  if (sets.empty()) return std::nullopt;
  return sets.front();
}

struct PreparedDonor {
  Design donor;     // relabeled, oriented so that U'_0 is the glue
  ExpansionSet set;  // on the relabeled donor
  std::vector<Label> glue;
};

// Orients and relabels the donor of a linear join so its U'_0 lands on a
// (k-1)-subset of the host's last block. With both_ends the donor set must
// use both ends and the glue must be the host's U_b in a both-ends set.
PreparedDonor prepare_linear_donor(const Design& host, const Design& donor, const JoinPlan& plan, bool both_ends) {
  const std::size_t k = host.k();
  const Block& last = host.block(host.b() - 1);
  const ExpansionMode mode = both_ends ? ExpansionMode::both_ends : ExpansionMode::any;
  const std::vector<Design> orientations{donor, reverse(donor)};

  auto host_accepts = [&](const std::vector<Label>& g) {
    if (!both_ends) return true;
    return first_set(host, ExpansionMode::both_ends, EndConstraints{std::nullopt, g, false, true}).has_value();
  };
  auto finish = [&](const Design& oriented, const std::vector<Label>& u0, const std::map<Label, Label>& m) {
    Design relabeled = relabel(oriented, m);
    std::vector<Label> g;
    for (Label x : u0) g.push_back(m.at(x));
    std::sort(g.begin(), g.end());
    auto set = first_set(relabeled, mode, EndConstraints{g, std::nullopt, true, false});
    if (!set) throw Error(ErrorCode::invariant_violation, "donor expansion set lost under relabeling");
    return PreparedDonor{std::move(relabeled), std::move(*set), std::move(g)};
  };

  if (!plan.glue_map.empty()) {
    std::vector<Label> domain;
    std::vector<Label> image;
    for (auto [from, to] : plan.glue_map) {
      domain.push_back(from);
      image.push_back(to);
    }
    std::sort(image.begin(), image.end());
    if (domain.size() != k - 1 || std::adjacent_find(image.begin(), image.end()) != image.end() ||
        !subset_of(image, last) || !std::all_of(domain.begin(), domain.end(), [&](Label x) { return donor.has_label(x); }))
      throw Error(ErrorCode::glue_mismatch, "glue must map k-1 donor labels onto the host's last block");
    if (!host_accepts(image)) throw Error(ErrorCode::glue_mismatch, "glue is not the host's U_b in a both-ends set");
    for (const Design& cand : orientations)
      if (first_set(cand, mode, EndConstraints{domain, std::nullopt, true, false}))
        return finish(cand, domain, complete_map(host, cand, plan.glue_map, plan));
    throw Error(ErrorCode::no_outer_expansion_set, "donor has no outer expansion set starting at the glue");
  }

  // Donor already labeled to fit: keep its labels.
  const auto shared = shared_labels(host, donor);
  if (shared.size() == k - 1 && subset_of(shared, last) && host_accepts(shared)) {
    for (const Design& cand : orientations) {
      if (!subset_of(shared, cand.block(0))) continue;
      if (first_set(cand, mode, EndConstraints{shared, std::nullopt, true, false})) {
        std::map<Label, Label> identity;
        for (Label x : cand.labels()) identity[x] = x;
        return finish(cand, shared, identity);
      }
    }
  }

  std::optional<std::vector<Label>> glue;
  if (both_ends) {
    if (auto e = first_set(host, ExpansionMode::both_ends, {})) glue = e->at(host.b()).elements;
    if (!glue) throw Error(ErrorCode::no_outer_expansion_set, "host has no expansion set using both ends");
  } else {
    const auto candidates = facets(last);
    for (const auto& f : candidates)
      if (first_set(host, ExpansionMode::any, EndConstraints{std::nullopt, f, false, true})) {
        glue = f;
        break;
      }
    if (!glue) glue = candidates.front();
  }
  for (const Design& cand : orientations)
    if (auto e = first_set(cand, mode, EndConstraints{std::nullopt, std::nullopt, true, false}))
      return finish(cand, e->at(0).elements,
                    complete_map(host, cand, ascending_map(e->at(0).elements, *glue), plan));
  throw Error(ErrorCode::no_outer_expansion_set,
              both_ends ? "donor has no expansion set using both ends" : "donor has no outer expansion set");
}

Design linear_join(const Design& host, const PreparedDonor& p, const std::vector<Label>& last_run,
                   const JoinPlan& plan) {
  std::vector<Label> extra = set_difference(host.labels(), p.glue);
  extra = ordered(std::move(extra), plan.insertion_order);
  Insertions ins;
  for (const auto& m : p.set.members)
    if (m.index != 0) ins[m.index] = extra;
  if (!last_run.empty()) ins[p.donor.b()] = last_run;
  std::vector<Block> blocks = host.blocks();
  for (auto& blk : weave(p.donor, p.set, ins)) blocks.push_back(std::move(blk));
  return Design(Kind::linear, std::move(blocks));
}

}  // namespace

Design extend_v1(const Design& d, const ExpansionSet& e, Label new_label) {
  require_fresh(d, new_label);
  require_expansion_set(d, e);
  Insertions ins;
  for (const auto& m : e.members) ins[m.index] = {new_label};
  return Design(d.kind(), weave(d, e, ins));
}

Design extend_v2(const Design& d, const ExpansionSet& e, Label y1, Label y2) {
  require_linear(d, "extended");
  require_fresh(d, y1);
  require_fresh(d, y2);
  if (y1 == y2) throw Error(ErrorCode::label_collision, "the two new labels must differ");
  require_expansion_set(d, e);
  if (!e.has_index(d.b())) throw Error(ErrorCode::missing_ub, "expansion set does not use U_b");
  Insertions ins;
  for (const auto& m : e.members) ins[m.index] = {y1, y2};
  auto blocks = weave(d, e, ins);
  const Label x = e.at(d.b()).elements.front();
  blocks.push_back(replace_label(blocks.back(), x, y1));
  return Design(Kind::linear, std::move(blocks));
}

Design join_linear(const Design& host, const Design& donor, const JoinPlan& plan) {
  require_linear(host, "host");
  require_linear(donor, "donor");
  require_same_k(host, donor);
  auto p = prepare_linear_donor(host, donor, plan, false);
  return linear_join(host, p, {}, plan);
}

Design build_disjoint_capable(const Design& a, const Design& b, const JoinPlan& plan) {
  require_linear(a, "first");
  require_linear(b, "second");
  require_same_k(a, b);
  auto p = prepare_linear_donor(a, b, plan, true);
  auto host_set = first_set(a, ExpansionMode::both_ends, EndConstraints{std::nullopt, p.glue, false, true});
  if (!host_set) throw Error(ErrorCode::no_outer_expansion_set, "host has no expansion set using both ends");
  const auto& u0 = host_set->at(0).elements;

  // a's U_0 goes in last so that, once reversed, those labels are the first
  // k-1 removed and become U_b of the result.
  std::vector<Label> head;
  std::vector<Label> tail;
  for (Label x : set_difference(a.labels(), p.glue)) (contains(u0, x) ? tail : head).push_back(x);
  std::vector<Label> last_run = ordered(head, plan.insertion_order);
  for (Label x : ordered(tail, plan.insertion_order)) last_run.push_back(x);

  Design joined = reverse(linear_join(a, p, last_run, plan));
  if (!find_disjoint_capable(joined))
    throw Error(ErrorCode::disjoint_capable_check_failed,
                "joined design has no disjoint-capable expansion set (host U_0 " + fmt_labels(u0) + ")");
  return joined;
}

Design join_circular(const Design& a, const Design& b, const JoinPlan& plan) {
  require_linear(a, "first");
  require_linear(b, "second");
  require_same_k(a, b);
  const std::size_t k = a.k();
  auto e = plan.host_set;
  if (e && !is_disjoint_capable(a, *e))
    throw Error(ErrorCode::not_disjoint_capable, "supplied expansion set is not disjoint-capable");
  if (!e) e = find_disjoint_capable(a);
  if (!e) throw Error(ErrorCode::not_disjoint_capable, "first design has no disjoint-capable expansion set");
  const auto& u0 = e->at(0).elements;
  const auto& ub = e->at(a.b()).elements;
  std::vector<Label> ends = u0;
  ends.insert(ends.end(), ub.begin(), ub.end());
  std::sort(ends.begin(), ends.end());

  auto fits = [&](const Design& d, const std::map<Label, Label>& m) {
    std::vector<Label> first, last;
    for (Label x : d.block(0))
      if (auto it = m.find(x); it != m.end() && contains(ub, it->second)) first.push_back(it->second);
    for (Label x : d.block(d.b() - 1))
      if (auto it = m.find(x); it != m.end() && contains(u0, it->second)) last.push_back(it->second);
    return first.size() == k - 1 && last.size() == k - 1;
  };

  std::optional<Design> donor;
  if (!plan.glue_map.empty()) {
    std::vector<Label> image;
    for (auto [from, to] : plan.glue_map) image.push_back(to);
    std::sort(image.begin(), image.end());
    if (image != ends || !fits(b, plan.glue_map))
      throw Error(ErrorCode::glue_mismatch, "glue must send k-1 labels of B'_1 onto U_b and k-1 of the last block onto U_0");
    donor = relabel(b, complete_map(a, b, plan.glue_map, plan));
  } else if (shared_labels(a, b) == ends && subset_of(ub, b.block(0)) && subset_of(u0, b.block(b.b() - 1))) {
    donor = b;
  } else {
    for (const auto& s1 : facets(b.block(0))) {
      for (const auto& s2 : facets(b.block(b.b() - 1))) {
        if (!set_intersection(s1, s2).empty()) continue;
        auto m = ascending_map(s1, ub);
        for (auto [from, to] : ascending_map(s2, u0)) m[from] = to;
        donor = relabel(b, complete_map(a, b, m, plan));
        break;
      }
      if (donor) break;
    }
    if (!donor) throw Error(ErrorCode::glue_infeasible, "no disjoint (k-1)-subsets of the donor's end blocks");
  }

  auto extra = ordered(set_difference(donor->labels(), ends), plan.insertion_order);
  Insertions ins;
  for (const auto& m : e->members)
    if (m.index != 0 && m.index != a.b()) ins[m.index] = extra;
  auto woven = weave(a, *e, ins);
  std::vector<Block> blocks(woven.begin() + static_cast<std::ptrdiff_t>(k - 1), woven.end());
  for (const auto& blk : donor->blocks()) blocks.push_back(blk);
  return Design(Kind::circular, std::move(blocks));
}

}  // namespace sccd
