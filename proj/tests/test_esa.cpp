#include <algorithm>
#include <numeric>
#include <random>
#include <string>

#include "doctest.h"
#include "helpers.hpp"

#include "lyx/esa.hpp"

using namespace lyx;
using lyx::testing::random_string;
using lyx::testing::text_of;

namespace {

std::vector<pos_t> naive_sa(const std::string& s) {
  std::vector<pos_t> sa(s.size());
  std::iota(sa.begin(), sa.end(), 0);
  std::sort(sa.begin(), sa.end(), [&](pos_t a, pos_t b) {
    return s.substr(static_cast<std::size_t>(a)) < s.substr(static_cast<std::size_t>(b));
  });
  return sa;
}

pos_t naive_lcp(const std::string& a, const std::string& b) {
  pos_t l = 0;
  while (l < static_cast<pos_t>(a.size()) && l < static_cast<pos_t>(b.size()) &&
         a[static_cast<std::size_t>(l)] == b[static_cast<std::size_t>(l)])
    ++l;
  return l;
}

std::string slice(const std::string& s, Fragment f) {
  return s.substr(static_cast<std::size_t>(f.start - 1),
                  static_cast<std::size_t>(f.len()));
}

std::string slice_k(const std::string& s, const KFragment& w) {
  std::string out;
  for (const auto& p : w.pieces) out += slice(s, p);
  return out;
}

// Lexicographic comparison where a trailing sentinel outranks every letter.
Ordering naive_cmp_sent(const std::string& a, bool sa, const std::string& b,
                        bool sb) {
  const std::size_t m = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < m; ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? Ordering::Less : Ordering::Greater;
  }
  if (a.size() == b.size()) {
    if (sa == sb) return Ordering::Equal;
    return sa ? Ordering::Greater : Ordering::Less;
  }
  if (a.size() < b.size()) return sa ? Ordering::Greater : Ordering::Less;
  return sb ? Ordering::Less : Ordering::Greater;
}

} // namespace

TEST_CASE("frozen banana tables") {
  Text t = text_of("banana");
  Esa e = Esa::build(t);
  const std::vector<pos_t> sa{0, 6, 4, 2, 1, 5, 3};
  CHECK(e.sa_table() == sa);
  const std::vector<pos_t> lcp{0, 0, 1, 3, 0, 0, 2};
  CHECK(e.lcp_table() == lcp);
  for (pos_t r = 1; r <= 6; ++r) CHECK(e.isa(e.sa(r)) == r);

  CHECK(e.lcp(Fragment{4, 6}, Fragment{2, 6}) == 3);  // "ana" vs "anana"
  CHECK(e.lcs(Fragment{1, 3}, Fragment{3, 5}) == 2);  // "ban" vs "nan"
  CHECK(e.compare(Fragment{4, 6}, Fragment{2, 6}) == Ordering::Less);
  CHECK(e.compare(Fragment{2, 4}, Fragment{4, 6}) == Ordering::Equal); // "ana"

  auto inf = e.lcp_infinite(Fragment{2, 3}, Fragment{2, 6}); // "an"^inf vs "anana"
  CHECK(inf.lcp == 5);
  CHECK(inf.cmp == Ordering::Greater);

  CHECK(e.range_min_suffix(1, 6) == 6);
  CHECK(e.range_min_suffix(1, 5) == 4);
  CHECK(e.range_max_suffix(1, 6) == 3); // "nana"
}

TEST_CASE("suffix array constructions agree") {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 120; ++round) {
    const unsigned sigma = 1 + static_cast<unsigned>(rng() % 4);
    const std::size_t len = 1 + static_cast<std::size_t>(rng() % 200);
    const std::string s = random_string(rng, len, sigma);
    std::vector<letter_t> letters(s.begin(), s.end());
    const auto ref = naive_sa(s);
    CHECK(suffix_array_sais(letters) == ref);
    CHECK(suffix_array_doubling(letters) == ref);
  }
}

TEST_CASE("fragment primitives against brute force") {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 40; ++round) {
    const unsigned sigma = 2 + static_cast<unsigned>(rng() % 2);
    const std::size_t len = 2 + static_cast<std::size_t>(rng() % 60);
    const std::string s = random_string(rng, len, sigma);
    Text t = text_of(s);
    Esa e = Esa::build(t);
    const pos_t n = t.n;
    std::uniform_int_distribution<pos_t> dp(1, n);
    for (int q = 0; q < 200; ++q) {
      pos_t a = dp(rng), b = dp(rng), c = dp(rng), d = dp(rng);
      if (a > b) std::swap(a, b);
      if (c > d) std::swap(c, d);
      const Fragment x{a, b}, y{c, d};
      const std::string xs = slice(s, x), ys = slice(s, y);
      CHECK(e.lcp(x, y) == naive_lcp(xs, ys));
      {
        auto xr = xs, yr = ys;
        std::reverse(xr.begin(), xr.end());
        std::reverse(yr.begin(), yr.end());
        CHECK(e.lcs(x, y) == naive_lcp(xr, yr));
      }
      CHECK(e.compare(x, y) == naive_cmp_sent(xs, false, ys, false));
      {
        std::string xinf;
        while (xinf.size() < ys.size() + xs.size()) xinf += xs;
        auto r = e.lcp_infinite(x, y);
        CHECK(r.lcp == naive_lcp(xinf, ys));
        const bool yprefix = naive_lcp(xinf, ys) == static_cast<pos_t>(ys.size());
        const Ordering want =
            yprefix ? Ordering::Greater
                    : naive_cmp_sent(xinf.substr(0, ys.size() + 1), false, ys, false);
        CHECK(r.cmp == want);
      }
      {
        // brute-force arg-extremes over suffix ranks
        pos_t bmin = a, bmax = a;
        for (pos_t i = a; i <= b; ++i) {
          if (e.isa(i) < e.isa(bmin)) bmin = i;
          if (e.isa(i) > e.isa(bmax)) bmax = i;
        }
        CHECK(e.range_min_suffix(a, b) == bmin);
        CHECK(e.range_max_suffix(a, b) == bmax);
      }
    }
  }
}

TEST_CASE("k-fragment comparisons against brute force") {
  std::mt19937_64 rng(13);
  for (int round = 0; round < 30; ++round) {
    const unsigned sigma = 2 + static_cast<unsigned>(rng() % 2);
    const std::size_t len = 4 + static_cast<std::size_t>(rng() % 40);
    const std::string s = random_string(rng, len, sigma);
    Text t = text_of(s);
    Esa e = Esa::build(t);
    const pos_t n = t.n;
    std::uniform_int_distribution<pos_t> dp(1, n);
    auto rand_k = [&](std::size_t max_pieces) {
      KFragment w;
      const std::size_t k = rng() % (max_pieces + 1);
      for (std::size_t i = 0; i < k; ++i) {
        pos_t a = dp(rng), b = dp(rng);
        if (a > b) std::swap(a, b);
        w.pieces.push_back(Fragment{a, b});
      }
      w.sentinel = (rng() % 2) == 0;
      return w;
    };
    for (int q = 0; q < 300; ++q) {
      const KFragment x = rand_k(3), y = rand_k(3);
      const std::string xs = slice_k(s, x), ys = slice_k(s, y);
      CHECK(e.compare_k(x, y) == naive_cmp_sent(xs, x.sentinel, ys, y.sentinel));
      CHECK(e.lcp_k(x, y) == naive_lcp(xs, ys));
      {
        auto xr = xs, yr = ys;
        std::reverse(xr.begin(), xr.end());
        std::reverse(yr.begin(), yr.end());
        CHECK(e.lcs_k(x, y) == naive_lcp(xr, yr));
      }
      {
        pos_t a = dp(rng), b = dp(rng);
        if (a > b) std::swap(a, b);
        const Fragment f{a, b};
        const std::string fs = slice(s, f);
        std::string finf;
        while (finf.size() < ys.size() + fs.size()) finf += fs;
        auto r = e.lcp_infinite_k(f, y);
        CHECK(r.lcp == naive_lcp(finf, ys));
        const bool yprefix = naive_lcp(finf, ys) == static_cast<pos_t>(ys.size());
        const Ordering want =
            yprefix ? (y.sentinel ? Ordering::Less : Ordering::Greater)
                    : naive_cmp_sent(finf.substr(0, ys.size() + 1), false, ys, false);
        CHECK(r.cmp == want);
      }
    }
  }
}

TEST_CASE("blocked range-extreme layout matches sparse") {
  std::mt19937_64 rng(17);
  const std::string s = random_string(rng, 700, 3);
  Text t = text_of(s);
  Esa sparse = Esa::build(t, Rmq::Layout::SparseTable);
  Esa blocked = Esa::build(t, Rmq::Layout::Blocked);
  std::uniform_int_distribution<pos_t> dp(1, t.n);
  for (int q = 0; q < 500; ++q) {
    pos_t a = dp(rng), b = dp(rng);
    if (a > b) std::swap(a, b);
    CHECK(sparse.suffix_lcp(a, b) == blocked.suffix_lcp(a, b));
    CHECK(sparse.prefix_lcs(a, b) == blocked.prefix_lcs(a, b));
    CHECK(sparse.range_min_suffix(a, b) == blocked.range_min_suffix(a, b));
    CHECK(sparse.range_max_suffix(a, b) == blocked.range_max_suffix(a, b));
  }
}

TEST_CASE("single primitive per low-level call") {
  Text t = text_of("abracadabraabracadabra");
  Esa e = Esa::build(t);
  stats::reset();
  e.suffix_lcp(1, 12);
  CHECK(stats::now() == 1);
  stats::reset();
  e.range_min_suffix(2, 20);
  CHECK(stats::now() == 1);
  stats::reset();
  e.compare(Fragment{1, 5}, Fragment{12, 16});
  CHECK(stats::now() == 1);
  stats::reset();
  e.lcp_infinite(Fragment{1, 4}, Fragment{5, 20});
  CHECK(stats::now() <= 3);
}

TEST_CASE("serialized tables rebuild an equivalent index") {
  std::mt19937_64 rng(23);
  const std::string s = random_string(rng, 120, 3);
  Text t = text_of(s);
  Esa e = Esa::build(t);
  Esa e2 = Esa::adopt(t, e.sa_table(), e.lcp_table(), e.rsa_table(),
                      e.rlcp_table());
  std::uniform_int_distribution<pos_t> dp(1, t.n);
  for (int q = 0; q < 200; ++q) {
    pos_t a = dp(rng), b = dp(rng);
    if (a > b) std::swap(a, b);
    CHECK(e.suffix_lcp(a, b) == e2.suffix_lcp(a, b));
    CHECK(e.prefix_lcs(a, b) == e2.prefix_lcs(a, b));
    CHECK(e.range_min_suffix(a, b) == e2.range_min_suffix(a, b));
  }
}
