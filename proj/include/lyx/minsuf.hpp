#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "lyx/lyndon.hpp"

namespace lyx {

// Controls the geometry of the query tiers.  The paper-faithful profile uses
// f(x) = 2^{⌊log log x⌋²} with a 2^16 short-query cutoff; the test profile
// shrinks both so that every code path is exercised at desk scale.
struct TierProfile {
  enum class Kind { Paper, Test };
  Kind kind = Kind::Paper;
  pos_t tau = 0; // short-fragment table threshold; 0 disables the tables
  pos_t short_cutoff = pos_t{1} << 16; // <=: ladder-based O(log) algorithm

  static TierProfile paper() { return TierProfile{}; }
  static TierProfile test(pos_t tau, pos_t short_cutoff = 16) {
    return TierProfile{Kind::Test, tau, std::max(tau, short_cutoff)};
  }

  // Grid spacing of distinguished fragments.
  pos_t f(pos_t x) const;
};

// v = u·v'·v'' with v' distinguished, |u| <= |v'|, and 1 <= |v''| <= f(|v|).
struct Decomposition {
  Fragment u{0, 0};
  bool has_u = false;
  Fragment vp{0, 0};
  Fragment vpp{0, 0};
};
Decomposition decompose(const TierProfile& prof, Fragment v);

// Answers MinSuf(v, T[r+1..r']) for any r' in (r, n] on O(1) primitives by
// reducing the rank among the infinite ladder roots to a predecessor query
// on precomputed lcp endpoints.  The endpoint list is a multiset: distinct
// roots may share an endpoint and each occurrence counts towards the rank.
struct MinSufExtender {
  SigSuffixes sig;
  std::vector<pos_t> rvals; // sorted, with multiplicities

  static MinSufExtender build(const Esa& e, Fragment v);
  // Start in T of MinSuf(v, T[v.end+1..rprime]); v.end + 1 encodes the
  // empty suffix (the context alone is minimal).
  pos_t query(pos_t rprime) const;
};

// Order-isomorphism identifier: equal keys iff the strings have identical
// relative order patterns (and equal length).
std::string oid_key(std::span<const letter_t> w);

// Minimal-suffix queries over a fixed text at three cost tiers:
//   minsuf_log      O(log |v|)   (free-standing, see lyndon module)
//   minsuf_logstar  O(log* |v|)  (distinguished-fragment extenders)
//   minsuf          O(1)         (extenders + short-fragment tables)
// All return the start position (in T) of the minimal nonempty suffix of v.
class MinSufIndex {
 public:
  MinSufIndex(const Esa& e, TierProfile prof);

  pos_t minsuf_logstar(Fragment v) const;
  pos_t minsuf(Fragment v) const;
  const TierProfile& profile() const { return prof_; }

 private:
  struct Slot {
    std::uint32_t lens_off = 0; // into lens_pool_
    std::uint32_t r_off = 0;    // into r_pool_
    std::uint16_t lens_cnt = 0; // 0 marks an unbuilt slot
    std::uint16_t r_cnt = 0;
  };

  pos_t query_tiered(Fragment v, bool use_tables) const;
  pos_t extender_answer(Fragment vp, pos_t rprime) const;
  pos_t table_answer(Fragment v) const;
  void build_registry();
  void build_tables();

  const Esa* esa_;
  TierProfile prof_;

  std::vector<std::vector<Slot>> slots_; // [q][r / f(2^q)]
  std::vector<pos_t> lens_pool_, r_pool_;

  std::vector<std::uint32_t> block_table_id_;      // per block
  std::vector<std::vector<std::uint16_t>> tables_; // per distinct oid
};

} // namespace lyx
