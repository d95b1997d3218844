#include "sccd/search.hpp"

#include <bit>
#include <string>
#include <vector>

#include "sccd/verify.hpp"

namespace sccd {

std::string_view to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::found: return "Found";
    case SearchStatus::infeasible: return "Infeasible";
    case SearchStatus::exhausted: return "Exhausted";
    case SearchStatus::timeout: return "Timeout";
  }
  return "Exhausted";
}

namespace {

using Clock = std::chrono::steady_clock;

class Searcher {
 public:
  explicit Searcher(const SearchConfig& cfg)
      : cfg_(cfg),
        v_(cfg.v),
        k_(cfg.k),
        b_(cfg.b),
        circular_(cfg.kind == Kind::circular),
        cover_(v_ * v_, 0),
        deadline_(Clock::now() + cfg.time_limit) {
    const auto km1 = static_cast<std::int64_t>(k_) - 1;
    budget_ = km1 * static_cast<std::int64_t>(b_) - choose2(static_cast<std::int64_t>(v_));
    if (!circular_) budget_ += choose2(km1);
    uncovered_ = static_cast<std::size_t>(choose2(static_cast<std::int64_t>(v_)));
  }

  SearchResult run() {
    SearchResult r;
    if (budget_ >= 0) {
      // B_1 in lexicographic order; symmetry breaking keeps only {0..k-1}.
      std::vector<Label> first(k_);
      for (std::size_t i = 0; i < k_; ++i) first[i] = static_cast<Label>(i);
      do {
        if (place_first(first)) break;
      } while (!cfg_.symmetry_breaking && !stopped_ && next_combination(first));
    }
    r.nodes = nodes_;
    if (!found_.empty()) {
      r.status = SearchStatus::found;
      r.design = Design(cfg_.kind, found_);
    } else {
      r.status = stopped_ ? SearchStatus::timeout : SearchStatus::exhausted;
    }
    return r;
  }

 private:
  bool next_combination(std::vector<Label>& c) const {
    for (std::size_t i = k_; i-- > 0;) {
      if (c[i] < v_ - k_ + i) {
        ++c[i];
        for (std::size_t j = i + 1; j < k_; ++j) c[j] = c[j - 1] + 1;
        return true;
      }
    }
    return false;
  }

  std::uint8_t& cov(Label x, Label y) { return x < y ? cover_[x * v_ + y] : cover_[y * v_ + x]; }

  // Covers y with every label of `others`; returns how many were repeats.
  std::int64_t add_pairs(Label y, std::uint64_t others) {
    std::int64_t dup = 0;
    for (std::uint64_t m = others; m; m &= m - 1) {
      auto& c = cov(y, static_cast<Label>(std::countr_zero(m)));
      if (c++ > 0)
        ++dup;
      else
        --uncovered_;
    }
    return dup;
  }
  void remove_pairs(Label y, std::uint64_t others) {
    for (std::uint64_t m = others; m; m &= m - 1)
      if (--cov(y, static_cast<Label>(std::countr_zero(m))) == 0) ++uncovered_;
  }
  std::int64_t repeats(Label y, std::uint64_t others) {
    std::int64_t dup = 0;
    for (std::uint64_t m = others; m; m &= m - 1)
      if (cov(y, static_cast<Label>(std::countr_zero(m))) > 0) ++dup;
    return dup;
  }

  bool place_first(const std::vector<Label>& first) {
    first_mask_ = 0;
    for (Label x : first) first_mask_ |= std::uint64_t{1} << x;
    used_ = first_mask_;
    blocks_.assign(1, Block(first.begin(), first.end()));
    if (!circular_)
      for (Label x : first) add_pairs(x, first_mask_ & ~((std::uint64_t{2} << x) - 1));
    dfs(first_mask_, 0);
    if (!circular_)
      for (Label x : first) remove_pairs(x, first_mask_ & ~((std::uint64_t{2} << x) - 1));
    return !found_.empty();
  }

  bool out_of_time() {
    ++nodes_;
    if (cfg_.node_limit && nodes_ > cfg_.node_limit) stopped_ = true;
    if ((nodes_ & 0xfff) == 0 && Clock::now() > deadline_) stopped_ = true;
    return stopped_;
  }

  void dfs(std::uint64_t cur, std::int64_t spent) {
    if (out_of_time()) return;
    const std::size_t placed = blocks_.size();
    const std::size_t remaining = b_ - placed;
    if (remaining == 0) {
      finish(cur, spent);
      return;
    }
    const std::size_t slots = (k_ - 1) * (remaining + (circular_ ? 1 : 0));
    if (uncovered_ > slots) return;
    if (circular_ && static_cast<std::size_t>(std::popcount(first_mask_ & ~cur)) > remaining + 1) return;

    const std::uint64_t all = v_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << v_) - 1;
    const auto fresh = static_cast<Label>(std::countr_one(used_));
    for (std::uint64_t rm = cur; rm; rm &= rm - 1) {
      const auto r = static_cast<Label>(std::countr_zero(rm));
      const std::uint64_t keep = cur & ~(std::uint64_t{1} << r);
      for (std::uint64_t ym = all & ~cur; ym; ym &= ym - 1) {
        const auto y = static_cast<Label>(std::countr_zero(ym));
        const bool new_label = !(used_ >> y & 1);
        if (cfg_.symmetry_breaking && new_label && y != fresh) continue;
        const std::int64_t dup = repeats(y, keep);
        if (spent + dup > budget_) continue;
        add_pairs(y, keep);
        const std::uint64_t saved_used = used_;
        used_ |= std::uint64_t{1} << y;
        blocks_.push_back(replace_label(blocks_.back(), r, y));
        dfs(keep | (std::uint64_t{1} << y), spent + dup);
        blocks_.pop_back();
        used_ = saved_used;
        remove_pairs(y, keep);
        if (!found_.empty() || stopped_) return;
      }
    }
  }

  void finish(std::uint64_t last, std::int64_t spent) {
    if (!circular_) {
      if (uncovered_ == 0) found_ = blocks_;
      return;
    }
    // Close the cycle: B_1's introduced label is the one missing from B_b.
    const std::uint64_t gone = first_mask_ & ~last;
    if (std::popcount(gone) != 1) return;
    const auto z = static_cast<Label>(std::countr_zero(gone));
    const std::uint64_t rest = first_mask_ & ~gone;
    if (spent + repeats(z, rest) > budget_) return;
    add_pairs(z, rest);
    if (uncovered_ == 0) found_ = blocks_;
    remove_pairs(z, rest);
  }

  const SearchConfig& cfg_;
  std::size_t v_, k_, b_;
  bool circular_;
  std::vector<std::uint8_t> cover_;
  std::size_t uncovered_ = 0;
  std::int64_t budget_ = 0;
  std::uint64_t first_mask_ = 0;
  std::uint64_t used_ = 0;
  std::vector<Block> blocks_;
  std::vector<Block> found_;
  std::uint64_t nodes_ = 0;
  bool stopped_ = false;
  Clock::time_point deadline_;
};

}  // namespace

SearchResult search(const SearchConfig& cfg) {
  if (cfg.k < 2 || cfg.k > cfg.v || cfg.v > 64 || cfg.b < 1)
    throw Error(ErrorCode::bad_parameters, "search needs 2 <= k <= v <= 64 and b >= 1, got v=" + std::to_string(cfg.v) +
                                               " k=" + std::to_string(cfg.k) + " b=" + std::to_string(cfg.b));
  if (cfg.bound_precheck) {
    const auto bound = lower_bound(cfg.v, cfg.k, cfg.kind, cfg.b);
    if (!bound.meets_bound) return SearchResult{SearchStatus::infeasible, std::nullopt, 0};
  }
  return Searcher(cfg).run();
}

}  // namespace sccd
