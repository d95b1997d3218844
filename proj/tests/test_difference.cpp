#include <doctest.h>

#include "helpers.hpp"
#include "sccd/difference.hpp"
#include "sccd/verify.hpp"

using namespace sccd;

TEST_CASE("difference family matches the 13,4,26 and 19,4,57 tables block for block") {
  CHECK(difference_cscc(2, 4) == cat("cscc_13_4_26"));
  CHECK(difference_cscc(3, 4) == cat("cscc_19_4_57"));
  CHECK(difference_cscc(2, 4).block(0) == Block{0, 1, 2, 6});
}

TEST_CASE("c = 1 gives a tight 2k-1, k, 2k-1") {
  for (std::size_t k = 2; k <= 8; ++k) {
    const auto d = difference_cscc(1, k);
    CHECK(d.v() == 2 * k - 1);
    CHECK(d.b() == 2 * k - 1);
    CHECK(verify(d).tight);
  }
}

TEST_CASE("sweep against the reference counter") {
  for (std::size_t c = 1; c <= 4; ++c)
    for (std::size_t k = 2; k <= 6; ++k) {
      CAPTURE(c);
      CAPTURE(k);
      const auto d = difference_cscc(c, k);
      const DifferenceFamilyParams p{c, k};
      CHECK(d.v() == p.v());
      CHECK(d.b() == p.b());
      CHECK(oracle::single_change(raw(d), true));
      const auto m = oracle::coverage(raw(d), true);
      CHECK(oracle::all_covered(m));
      CHECK(oracle::sum_excess(m) == 0);
    }
}

TEST_CASE("introduced labels cover each difference once per period") {
  // Over the c blocks of one development period, the pairs {introduced, other}
  // give differences that hit every nonzero residue exactly once.
  for (std::size_t c = 1; c <= 6; ++c)
    for (std::size_t k = 2; k <= 8; ++k) {
      CAPTURE(c);
      CAPTURE(k);
      const auto d = difference_cscc(c, k);
      const long v = static_cast<long>(d.v());
      std::vector<int> hits(static_cast<std::size_t>(v), 0);
      for (std::size_t i = 0; i < c; ++i) {
        const std::size_t prev = (i + d.b() - 1) % d.b();
        const auto in = set_difference(d.block(i), d.block(prev));
        REQUIRE(in.size() == 1);
        for (Label y : d.block(i)) {
          if (y == in[0]) continue;
          ++hits[static_cast<std::size_t>(((static_cast<long>(in[0]) - static_cast<long>(y)) % v + v) % v)];
          ++hits[static_cast<std::size_t>(((static_cast<long>(y) - static_cast<long>(in[0])) % v + v) % v)];
        }
      }
      CHECK(hits[0] == 0);
      for (long r = 1; r < v; ++r) CHECK(hits[static_cast<std::size_t>(r)] == 1);
    }
}

TEST_CASE("bad parameters") {
  CHECK_THROWS_AS(difference_cscc(0, 4), Error);
  CHECK_THROWS_AS(difference_cscc(2, 1), Error);
}
