#include "sccd/design.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <string>

namespace sccd {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_design: return "InvalidDesign";
    case ErrorCode::not_bijective: return "NotBijective";
    case ErrorCode::not_circular: return "NotCircular";
    case ErrorCode::not_linear: return "NotLinear";
    case ErrorCode::bad_parameters: return "BadParameters";
    case ErrorCode::not_divisible: return "NotDivisible";
    case ErrorCode::label_collision: return "LabelCollision";
    case ErrorCode::not_expansion_set: return "NotExpansionSet";
    case ErrorCode::missing_ub: return "MissingUb";
    case ErrorCode::no_outer_expansion_set: return "NoOuterExpansionSet";
    case ErrorCode::incompatible_k: return "IncompatibleK";
    case ErrorCode::glue_mismatch: return "GlueMismatch";
    case ErrorCode::glue_infeasible: return "GlueInfeasible";
    case ErrorCode::not_disjoint_capable: return "NotDisjointCapable";
    case ErrorCode::disjoint_capable_check_failed: return "DisjointCapableCheckFailed";
    case ErrorCode::unknown_name: return "UnknownName";
    case ErrorCode::syntax_error: return "SyntaxError";
    case ErrorCode::invariant_violation: return "InvariantViolation";
  }
  return "Error";
}

std::string_view to_string(Kind kind) {
  return kind == Kind::linear ? "linear" : "circular";
}

std::optional<Kind> parse_kind(std::string_view text) {
  if (text == "linear") return Kind::linear;
  if (text == "circular") return Kind::circular;
  return std::nullopt;
}

Design::Design(Kind kind, std::vector<Block> blocks) : kind_(kind), blocks_(std::move(blocks)) {
  if (blocks_.empty()) throw Error(ErrorCode::invalid_design, "design has no blocks");
  const std::size_t k = blocks_.front().size();
  if (k == 0) throw Error(ErrorCode::invalid_design, "blocks must be non-empty");
  std::set<Label> ground;
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    const Block& blk = blocks_[i];
    if (blk.size() != k) {
      std::ostringstream msg;
      msg << "block " << i + 1 << " has " << blk.size() << " labels, expected " << k;
      throw Error(ErrorCode::invalid_design, msg.str());
    }
    std::set<Label> seen(blk.begin(), blk.end());
    if (seen.size() != k) {
      std::ostringstream msg;
      msg << "block " << i + 1 << " repeats a label";
      throw Error(ErrorCode::invalid_design, msg.str());
    }
    ground.insert(blk.begin(), blk.end());
  }
  labels_.assign(ground.begin(), ground.end());
}

bool Design::has_label(Label x) const { return std::binary_search(labels_.begin(), labels_.end(), x); }

bool contains(std::span<const Label> block, Label x) {
  return std::find(block.begin(), block.end(), x) != block.end();
}

std::vector<Label> sorted_copy(std::span<const Label> block) {
  std::vector<Label> out(block.begin(), block.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Label> set_intersection(std::span<const Label> a, std::span<const Label> b) {
  std::vector<Label> out;
  for (Label x : a)
    if (contains(b, x)) out.push_back(x);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Label> set_difference(std::span<const Label> a, std::span<const Label> b) {
  std::vector<Label> out;
  for (Label x : a)
    if (!contains(b, x)) out.push_back(x);
  std::sort(out.begin(), out.end());
  return out;
}

bool single_change(std::span<const Label> a, std::span<const Label> b) {
  return a.size() == b.size() && set_intersection(a, b).size() + 1 == a.size();
}

Block replace_label(const Block& block, Label removed, Label introduced) {
  Block out = block;
  auto it = std::find(out.begin(), out.end(), removed);
  if (it == out.end()) throw Error(ErrorCode::invalid_design, "label to replace is not in the block");
  *it = introduced;
  return out;
}

std::optional<std::size_t> first_bad_adjacency(const Design& d) {
  const std::size_t b = d.b();
  for (std::size_t i = 0; i + 1 < b; ++i)
    if (!single_change(d.block(i), d.block(i + 1))) return i;
  if (d.circular() && b > 1 && !single_change(d.block(b - 1), d.block(0))) return b - 1;
  return std::nullopt;
}

bool is_single_change(const Design& d) { return !first_bad_adjacency(d).has_value(); }

void require_single_change(const Design& d) {
  if (auto bad = first_bad_adjacency(d)) {
    std::ostringstream msg;
    const std::size_t next = (*bad + 1) % d.b();
    msg << "blocks " << *bad + 1 << " and " << next + 1 << " do not differ by a single change";
    throw Error(ErrorCode::invalid_design, msg.str());
  }
}

ChangeTrace derive_trace(const Design& d) {
  require_single_change(d);
  ChangeTrace trace;
  const std::size_t b = d.b();
  trace.introduced.reserve(b);
  trace.removed.reserve(b);
  for (std::size_t i = 0; i < b; ++i) {
    if (i == 0 && !d.circular()) {
      trace.introduced.push_back(sorted_copy(d.block(0)));
      trace.removed.emplace_back();
      continue;
    }
    const Block& prev = d.block(i == 0 ? b - 1 : i - 1);
    const Block& cur = d.block(i);
    if (b == 1) {
      // A one-block circular design is its own predecessor; nothing changes.
      trace.introduced.emplace_back();
      trace.removed.emplace_back();
      continue;
    }
    trace.introduced.push_back(set_difference(cur, prev));
    trace.removed.emplace_back(set_difference(prev, cur).front());
  }
  return trace;
}

std::vector<std::vector<Label>> facets(std::span<const Label> block) {
  const auto sorted = sorted_copy(block);
  std::vector<std::vector<Label>> out;
  // Dropping elements from the back first yields lexicographic order.
  for (std::size_t skip = sorted.size(); skip-- > 0;) {
    std::vector<Label> f;
    for (std::size_t j = 0; j < sorted.size(); ++j)
      if (j != skip) f.push_back(sorted[j]);
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<UnchangedSubset> unchanged_subsets(const Design& d) {
  require_single_change(d);
  std::vector<UnchangedSubset> out;
  const std::size_t b = d.b();
  if (!d.circular()) {
    for (auto& f : facets(d.block(0))) out.push_back({0, std::move(f)});
    for (std::size_t i = 1; i < b; ++i) out.push_back({i, set_intersection(d.block(i - 1), d.block(i))});
    for (auto& f : facets(d.block(b - 1))) out.push_back({b, std::move(f)});
  } else {
    for (std::size_t i = 1; i <= b; ++i)
      out.push_back({i, set_intersection(d.block(i - 1), d.block(i % b))});
  }
  return out;
}

Design reverse(const Design& d) {
  std::vector<Block> blocks(d.blocks().rbegin(), d.blocks().rend());
  return Design(d.kind(), std::move(blocks));
}

Design relabel(const Design& d, const std::map<Label, Label>& mapping) {
  std::set<Label> image;
  for (Label x : d.labels()) {
    auto it = mapping.find(x);
    if (it == mapping.end())
      throw Error(ErrorCode::not_bijective, "relabeling is undefined on label " + std::to_string(x));
    if (!image.insert(it->second).second)
      throw Error(ErrorCode::not_bijective, "relabeling sends two labels to " + std::to_string(it->second));
  }
  std::vector<Block> blocks;
  blocks.reserve(d.b());
  for (const Block& blk : d.blocks()) {
    Block nb;
    nb.reserve(blk.size());
    for (Label x : blk) nb.push_back(mapping.at(x));
    blocks.push_back(std::move(nb));
  }
  return Design(d.kind(), std::move(blocks));
}

Design rotate(const Design& d, long long s) {
  if (!d.circular()) throw Error(ErrorCode::not_circular, "only circular designs can be rotated");
  const auto b = static_cast<long long>(d.b());
  const auto shift = static_cast<std::size_t>(((s % b) + b) % b);
  std::vector<Block> blocks;
  blocks.reserve(d.b());
  for (std::size_t i = 0; i < d.b(); ++i) blocks.push_back(d.block((i + shift) % d.b()));
  return Design(d.kind(), std::move(blocks));
}

bool same_blocks(const Design& a, const Design& b) {
  if (a.kind() != b.kind() || a.b() != b.b()) return false;
  for (std::size_t i = 0; i < a.b(); ++i)
    if (sorted_copy(a.block(i)) != sorted_copy(b.block(i))) return false;
  return true;
}

bool equivalent_up_to_relabeling(const Design& a, const Design& b) {
  if (a.kind() != b.kind() || a.b() != b.b() || a.k() != b.k() || a.v() != b.v()) return false;
  if (!is_single_change(a) || !is_single_change(b)) return same_blocks(a, b);

  std::map<Label, Label> forward;
  std::map<Label, Label> backward;
  auto bind = [&](Label x, Label y) {
    auto [fit, fnew] = forward.emplace(x, y);
    auto [bit, bnew] = backward.emplace(y, x);
    return fit->second == y && bit->second == x;
  };

  const auto ta = derive_trace(a);
  const auto tb = derive_trace(b);
  for (std::size_t i = 0; i < a.b(); ++i) {
    if (ta.removed[i].has_value() != tb.removed[i].has_value()) return false;
    if (ta.removed[i] && !bind(*ta.removed[i], *tb.removed[i])) return false;
    if (ta.introduced[i].size() == 1 && tb.introduced[i].size() == 1 &&
        !bind(ta.introduced[i][0], tb.introduced[i][0]))
      return false;
  }
  // Labels that never move are interchangeable; pair them up in sorted order.
  std::vector<Label> rest_a, rest_b;
  for (Label x : sorted_copy(a.block(0)))
    if (!forward.count(x)) rest_a.push_back(x);
  for (Label y : sorted_copy(b.block(0)))
    if (!backward.count(y)) rest_b.push_back(y);
  if (rest_a.size() != rest_b.size()) return false;
  for (std::size_t i = 0; i < rest_a.size(); ++i)
    if (!bind(rest_a[i], rest_b[i])) return false;
  if (forward.size() != a.v()) return false;

  return same_blocks(relabel(a, forward), b);
}

}  // namespace sccd
