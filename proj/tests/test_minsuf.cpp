#include <algorithm>
#include <random>
#include <string>

#include "doctest.h"
#include "helpers.hpp"

#include "lyx/minsuf.hpp"
#include "lyx/oracle.hpp"

using namespace lyx;
using lyx::testing::all_strings;
using lyx::testing::random_string;
using lyx::testing::text_of;

namespace {

// #{ladder roots x_j of v with x_j^inf < w}, by materializing the powers.
std::size_t naive_root_rank(const std::vector<letter_t>& v,
                            const std::vector<letter_t>& w) {
  const auto lens = oracle::naive_significant(v);
  std::size_t rank = 0;
  for (std::size_t i = 0; i + 1 < lens.size(); ++i) {
    const auto root_len = static_cast<std::size_t>(lens[i] - lens[i + 1]);
    std::vector<letter_t> x(v.end() - static_cast<std::ptrdiff_t>(root_len),
                            v.end());
    std::vector<letter_t> pow;
    while (pow.size() < w.size()) pow.insert(pow.end(), x.begin(), x.end());
    pow.resize(w.size());
    // A finite word is always smaller than the infinite power extending it.
    if (std::lexicographical_compare(pow.begin(), pow.end(), w.begin(),
                                     w.end()))
      ++rank;
  }
  return rank;
}

} // namespace

TEST_CASE("tier grid function is monotone and power-of-two valued") {
  const TierProfile paper = TierProfile::paper();
  const TierProfile test = TierProfile::test(8);
  pos_t prev_p = 0, prev_t = 0;
  for (pos_t x = 1; x <= (pos_t{1} << 22); x = x < 64 ? x + 1 : x * 2 - 7) {
    for (const auto* p : {&paper, &test}) {
      const pos_t fx = p->f(x);
      CHECK((fx & (fx - 1)) == 0);
      CHECK(fx >= 1);
    }
    CHECK(paper.f(x) >= prev_p);
    CHECK(test.f(x) >= prev_t);
    prev_p = paper.f(x);
    prev_t = test.f(x);
  }
  CHECK(paper.f(pos_t{1} << 16) == pos_t{1} << 16);
  CHECK(paper.f((pos_t{1} << 16) + 1) == pos_t{1} << 16);
  CHECK(test.f(pos_t{1} << 16) == 16);
  CHECK(test.f(17) == 4);
}

TEST_CASE("profile growth laws hold over the numeric range") {
  const TierProfile paper = TierProfile::paper();
  const TierProfile test = TierProfile::test(8);
  for (int k = 2; k <= 62; ++k) {
    const pos_t x = pos_t{1} << k;
    // Test profile: f(f(x)) stays at most log2 x everywhere.
    CHECK(test.f(test.f(x)) <= k);
    CHECK(test.f(test.f(x + 3)) <= k + 1);
    // Paper profile: f drops strictly below the argument past the cutoff.
    // Its f(f(x)) <= log2 x law only kicks in beyond the 63-bit position
    // range, so there is nothing to sweep numerically for it here.
    if (x > pos_t{1} << 16) CHECK(paper.f(x) < x);
  }
}

TEST_CASE("decompose invariants hold for every fragment") {
  const TierProfile prof = TierProfile::test(4);
  std::mt19937_64 rng(33);
  for (int round = 0; round < 20; ++round) {
    const pos_t n = 50 + static_cast<pos_t>(rng() % 200);
    for (pos_t a = 1; a <= n; ++a)
      for (pos_t b = a; b <= n; ++b) {
        const Fragment v{a, b};
        if (v.len() <= prof.f(v.len())) continue;
        const Decomposition d = decompose(prof, v);
        CHECK(d.vpp.end == b);
        CHECK(d.vp.end + 1 == d.vpp.start);
        CHECK(d.vpp.len() >= 1);
        CHECK(d.vpp.len() <= prof.f(v.len()));
        CHECK((d.vp.len() & (d.vp.len() - 1)) == 0);
        CHECK(d.vp.end % prof.f(d.vp.len()) == 0);
        if (d.has_u) {
          CHECK(d.u.start == a);
          CHECK(d.u.end + 1 == d.vp.start);
          CHECK(d.u.len() <= d.vp.len());
        } else {
          CHECK(d.vp.start == a);
        }
      }
  }
}

TEST_CASE("minimal-suffix extender matches brute force for every context") {
  std::mt19937_64 rng(35);
  for (int round = 0; round < 60; ++round) {
    const unsigned sigma = 2 + static_cast<unsigned>(rng() % 2);
    const std::string s = random_string(rng, 6 + rng() % 40, sigma);
    Text t = text_of(s);
    Esa e = Esa::build(t);
    for (pos_t a = 1; a < t.n; ++a)
      for (pos_t b = a; b < t.n; ++b) {
        const MinSufExtender ext = MinSufExtender::build(e, Fragment{a, b});
        const std::vector<letter_t> v(s.begin() + a - 1, s.begin() + b);
        for (pos_t rp = b + 1; rp <= t.n; ++rp) {
          const std::vector<letter_t> w(s.begin() + b, s.begin() + rp);
          CHECK(ext.query(rp) ==
                b - oracle::naive_minsuf_pair(v, w, false) + 1);
        }
      }
  }
}

TEST_CASE("extender rank equals the materialized ladder-root rank") {
  std::mt19937_64 rng(37);
  for (int round = 0; round < 40; ++round) {
    const std::string s = random_string(rng, 8 + rng() % 56, 2);
    Text t = text_of(s);
    Esa e = Esa::build(t);
    for (pos_t a = 1; a < t.n; ++a)
      for (pos_t b = a; b < t.n; ++b) {
        const MinSufExtender ext = MinSufExtender::build(e, Fragment{a, b});
        const std::vector<letter_t> v(s.begin() + a - 1, s.begin() + b);
        for (pos_t rp = b + 1; rp <= t.n; ++rp) {
          const std::vector<letter_t> w(s.begin() + b, s.begin() + rp);
          const auto rank = static_cast<std::size_t>(
              std::lower_bound(ext.rvals.begin(), ext.rvals.end(), rp) -
              ext.rvals.begin());
          CHECK(rank == naive_root_rank(v, w));
        }
      }
  }
}

TEST_CASE("all tiers agree with the naive minimal suffix, exhaustively") {
  for (std::size_t len = 1; len <= 10; ++len) {
    for (const auto& s : all_strings(len, 2)) {
      Text t = text_of(s);
      Esa e = Esa::build(t);
      for (const pos_t tau : {pos_t{2}, pos_t{4}}) {
        const MinSufIndex idx(e, TierProfile::test(tau, tau));
        for (pos_t a = 1; a <= t.n; ++a)
          for (pos_t b = a; b <= t.n; ++b) {
            const std::vector<letter_t> v(s.begin() + a - 1, s.begin() + b);
            const pos_t want = a + oracle::naive_minsuf(v) - 1;
            CHECK(idx.minsuf_logstar(Fragment{a, b}) == want);
            CHECK(idx.minsuf(Fragment{a, b}) == want);
          }
      }
    }
  }
}

TEST_CASE("all tiers agree with the naive minimal suffix on random texts") {
  std::mt19937_64 rng(41);
  for (int round = 0; round < 12; ++round) {
    const unsigned sigma = round % 3 == 0 ? 2 : (round % 3 == 1 ? 4 : 26);
    const std::string s = random_string(rng, 150 + rng() % 200, sigma);
    Text t = text_of(s);
    Esa e = Esa::build(t);
    const pos_t tau = round % 2 == 0 ? 4 : 8;
    const MinSufIndex idx(e, TierProfile::test(tau, tau));
    std::uniform_int_distribution<pos_t> dp(1, t.n);
    for (int q = 0; q < 400; ++q) {
      pos_t a = dp(rng), b = dp(rng);
      if (a > b) std::swap(a, b);
      const std::vector<letter_t> v(s.begin() + a - 1, s.begin() + b);
      const pos_t want = a + oracle::naive_minsuf(v) - 1;
      CHECK(minsuf_log(e, Fragment{a, b}) == want);
      CHECK(idx.minsuf_logstar(Fragment{a, b}) == want);
      CHECK(idx.minsuf(Fragment{a, b}) == want);
    }
  }
}

TEST_CASE("paper profile defers to the ladder algorithm below its cutoff") {
  std::mt19937_64 rng(43);
  const std::string s = random_string(rng, 800, 3);
  Text t = text_of(s);
  Esa e = Esa::build(t);
  const MinSufIndex idx(e, TierProfile::paper());
  std::uniform_int_distribution<pos_t> dp(1, t.n);
  for (int q = 0; q < 200; ++q) {
    pos_t a = dp(rng), b = dp(rng);
    if (a > b) std::swap(a, b);
    CHECK(idx.minsuf(Fragment{a, b}) == minsuf_log(e, Fragment{a, b}));
  }
}

TEST_CASE("order-isomorphism identifiers separate patterns exactly") {
  std::mt19937_64 rng(47);
  auto pattern = [](const std::string& s) {
    std::vector<int> out;
    for (char c : s) {
      std::vector<char> d(s.begin(), s.end());
      std::sort(d.begin(), d.end());
      d.erase(std::unique(d.begin(), d.end()), d.end());
      out.push_back(static_cast<int>(
          std::lower_bound(d.begin(), d.end(), c) - d.begin()));
    }
    return out;
  };
  for (int round = 0; round < 3000; ++round) {
    const std::size_t len = 1 + rng() % 12;
    const std::string a = random_string(rng, len, 2 + rng() % 4);
    const std::string b = random_string(rng, len, 2 + rng() % 4);
    const auto ka = oid_key(std::vector<letter_t>(a.begin(), a.end()));
    const auto kb = oid_key(std::vector<letter_t>(b.begin(), b.end()));
    CHECK((ka == kb) == (pattern(a) == pattern(b)));
  }
}

TEST_CASE("constant-tier queries stay within a flat primitive budget") {
  std::mt19937_64 rng(53);
  const std::string s = random_string(rng, 1 << 14, 2);
  Text t = text_of(s);
  Esa e = Esa::build(t);
  const MinSufIndex idx(e, TierProfile::test(16));
  std::uniform_int_distribution<pos_t> dp(1, t.n);
  std::uint64_t worst = 0;
  for (int q = 0; q < 5000; ++q) {
    pos_t a = dp(rng), b = dp(rng);
    if (a > b) std::swap(a, b);
    stats::reset();
    idx.minsuf(Fragment{a, b});
    worst = std::max(worst, stats::now());
  }
  CHECK(worst <= 40);
}
