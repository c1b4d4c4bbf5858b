#include <random>
#include <sstream>

#include "doctest.h"
#include "helpers.hpp"

#include "lyx/oracle.hpp"
#include "lyx/serialize.hpp"

using namespace lyx;
using lyx::testing::random_string;
using lyx::testing::text_of;

TEST_CASE("index round-trip preserves every query surface") {
  std::mt19937_64 rng(71);
  for (int round = 0; round < 6; ++round) {
    EngineOptions opt;
    opt.profile = round % 2 ? TierProfile::paper() : TierProfile::test(4, 4);
    opt.fp_seed = 0x1234 + static_cast<std::uint64_t>(round);
    const Engine a(text_of(random_string(rng, 40 + rng() % 80, 3)), opt);

    std::stringstream buf;
    save_index(a, buf);
    const auto b = load_index(buf);

    CHECK(b->text().symbols == a.text().symbols);
    CHECK(b->text().sigma == a.text().sigma);
    CHECK(b->options().profile.kind == opt.profile.kind);
    CHECK(b->options().profile.tau == opt.profile.tau);
    CHECK(b->options().fp_seed == opt.fp_seed);
    CHECK(b->fingerprint_base() == a.fingerprint_base());
    CHECK(b->esa().sa_table() == a.esa().sa_table());
    CHECK(b->esa().rlcp_table() == a.esa().rlcp_table());

    const pos_t n = a.text().n;
    for (int q = 0; q < 400; ++q) {
      pos_t l = 1 + static_cast<pos_t>(rng() % n);
      pos_t r = 1 + static_cast<pos_t>(rng() % n);
      if (l > r) std::swap(l, r);
      const Fragment v{l, r};
      const KFragment kv = KFragment::single(v);
      CHECK(b->minsuf(v) == a.minsuf(v));
      CHECK(b->minsuf_logstar(v) == a.minsuf_logstar(v));
      CHECK(b->significant(v).lens == a.significant(v).lens);
      CHECK(b->gen_minsuf(kv).first == a.gen_minsuf(kv).first);
      CHECK(b->min_rotation(kv) == a.min_rotation(kv));
      CHECK(b->max_rotation(kv) == a.max_rotation(kv));
      CHECK(b->cyclic_fingerprint(kv) == a.cyclic_fingerprint(kv));
      CHECK(b->lyndon_factorize_fragment(kv) ==
            a.lyndon_factorize_fragment(kv));
    }
  }
}

TEST_CASE("index loading rejects malformed input") {
  const Engine a(text_of("banana"));
  std::stringstream buf;
  save_index(a, buf);
  const std::string bytes = buf.str();

  std::stringstream bad_magic(std::string("NOTANIDX") + bytes.substr(8));
  CHECK_THROWS_AS(load_index(bad_magic), InvalidInput);

  std::stringstream truncated(bytes.substr(0, bytes.size() / 2));
  CHECK_THROWS_AS(load_index(truncated), InvalidInput);

  std::stringstream empty;
  CHECK_THROWS_AS(load_index(empty), InvalidInput);
}
