#include "sccd/verify.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace sccd {

namespace {

// Dense pair counter over the sorted ground set.
class PairCounts {
 public:
  explicit PairCounts(const std::vector<Label>& labels)
      : labels_(labels), n_(labels.size()), counts_(n_ * n_, 0) {}

  std::size_t index(Label x) const {
    return static_cast<std::size_t>(std::lower_bound(labels_.begin(), labels_.end(), x) - labels_.begin());
  }
  int& at(Label x, Label y) {
    auto i = index(x), j = index(y);
    if (i > j) std::swap(i, j);
    return counts_[i * n_ + j];
  }

 private:
  const std::vector<Label>& labels_;
  std::size_t n_;
  std::vector<int> counts_;
};

// Labels of block i that count as introduced: everything for a linear B_1,
// otherwise what is new relative to the predecessor. Works on designs that
// fail the single-change property too.
std::vector<Label> introduced_at(const Design& d, std::size_t i) {
  if (i == 0 && !d.circular()) return sorted_copy(d.block(0));
  if (d.b() == 1) return {};
  const Block& prev = d.block(i == 0 ? d.b() - 1 : i - 1);
  return set_difference(d.block(i), prev);
}

template <typename Fn>
void for_each_covered_pair(const Design& d, std::size_t i, Fn&& fn) {
  const auto intro = introduced_at(d, i);
  const Block& blk = d.block(i);
  for (Label x : intro) {
    for (Label y : blk) {
      if (y == x) continue;
      // Pairs with both ends introduced are visited once, from the smaller end.
      if (contains(intro, y) && y < x) continue;
      fn(Pair::of(x, y));
    }
  }
}

std::int64_t closed_form_excess(Kind kind, std::size_t v, std::size_t k, std::size_t b) {
  const auto km1 = static_cast<std::int64_t>(k) - 1;
  std::int64_t e = km1 * static_cast<std::int64_t>(b) - choose2(static_cast<std::int64_t>(v));
  if (kind == Kind::linear) e += choose2(km1);
  return e;
}

std::vector<std::int64_t> scan_block_excesses(const Design& d, std::size_t start) {
  PairCounts seen(d.labels());
  std::vector<std::int64_t> out(d.b(), 0);
  const std::size_t b = d.b();
  for (std::size_t step = 0; step < b; ++step) {
    const std::size_t i = d.circular() ? (start + step) % b : step;
    std::int64_t e = 0;
    for_each_covered_pair(d, i, [&](Pair p) {
      int& c = seen.at(p.lo, p.hi);
      if (c > 0) ++e;
      ++c;
    });
    out[i] = e;
  }
  return out;
}

}  // namespace

Rational Rational::reduced(std::int64_t num, std::int64_t den) {
  const std::int64_t g = std::gcd(num, den);
  return g == 0 ? Rational{0, 1} : Rational{num / g, den / g};
}

std::int64_t choose2(std::int64_t n) { return n * (n - 1) / 2; }

BoundReport lower_bound(std::size_t v, std::size_t k, Kind kind, std::size_t achieved_b) {
  if (k < 2 || k > v) {
    std::ostringstream msg;
    msg << "need 2 <= k <= v, got v=" << v << " k=" << k;
    throw Error(ErrorCode::bad_parameters, msg.str());
  }
  const auto pairs = choose2(static_cast<std::int64_t>(v));
  const auto km1 = static_cast<std::int64_t>(k) - 1;
  BoundReport r;
  if (kind == Kind::linear) {
    // (C(v,2) - C(k,2)) / (k-1) + 1
    r.g = Rational::reduced(pairs - choose2(static_cast<std::int64_t>(k)) + km1, km1);
  } else {
    r.g = Rational::reduced(pairs, km1);
  }
  r.g_ceiling = r.g.ceiling();
  r.achieved_b = achieved_b;
  r.meets_bound = static_cast<std::int64_t>(achieved_b) >= r.g_ceiling;
  return r;
}

std::map<Pair, int> coverage(const Design& d) {
  require_single_change(d);
  std::map<Pair, int> mult;
  const auto& xs = d.labels();
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i + 1; j < xs.size(); ++j) mult[Pair{xs[i], xs[j]}] = 0;
  for (std::size_t i = 0; i < d.b(); ++i) for_each_covered_pair(d, i, [&](Pair p) { ++mult[p]; });
  return mult;
}

std::int64_t excess(const Design& d) {
  require_single_change(d);
  return closed_form_excess(d.kind(), d.v(), d.k(), d.b());
}

std::vector<std::int64_t> block_excesses(const Design& d, std::size_t start) {
  require_single_change(d);
  if (start >= d.b()) throw Error(ErrorCode::bad_parameters, "start block out of range");
  return scan_block_excesses(d, d.circular() ? start : 0);
}

VerificationReport verify(const Design& d, std::size_t start) {
  VerificationReport r;
  r.kind = d.kind();
  r.v = d.v();
  r.k = d.k();
  r.b = d.b();
  r.start = d.circular() && start < d.b() ? start : 0;

  for (std::size_t i = 0; i + 1 < d.b(); ++i)
    if (!single_change(d.block(i), d.block(i + 1))) r.bad_adjacencies.push_back(i);
  if (d.circular() && d.b() > 1 && !single_change(d.block(d.b() - 1), d.block(0)))
    r.bad_adjacencies.push_back(d.b() - 1);
  r.valid_single_change = r.bad_adjacencies.empty();

  PairCounts counts(d.labels());
  for (std::size_t i = 0; i < d.b(); ++i)
    for_each_covered_pair(d, i, [&](Pair p) { ++counts.at(p.lo, p.hi); });
  const auto& xs = d.labels();
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i + 1; j < xs.size(); ++j)
      if (counts.at(xs[i], xs[j]) == 0) r.missing_pairs.push_back(Pair{xs[i], xs[j]});
  r.covered_all_pairs = r.missing_pairs.empty();

  r.excess = closed_form_excess(d.kind(), d.v(), d.k(), d.b());
  r.block_excesses = scan_block_excesses(d, r.start);

  if (d.k() >= 2) r.bound = lower_bound(d.v(), d.k(), d.kind(), d.b());
  const bool sound = r.valid_single_change && r.covered_all_pairs && d.k() >= 2;
  r.economical = sound && r.excess <= static_cast<std::int64_t>(d.k()) - 2;
  r.tight = sound && r.excess == 0;
  return r;
}

}  // namespace sccd
