#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <utility>

#include "lyx/genquery.hpp"

namespace lyx {

struct RotationAnswer {
  pos_t shift = 0;           // left rotations to reach the extreme rotation
  pos_t canonical_start = 1; // equivalent 1-based start offset within v
  bool operator==(const RotationAnswer&) const = default;
};

struct CyclicFingerprint {
  std::uint64_t value = 0; // polynomial hash of the minimal rotation
  pos_t length = 0;
  bool operator==(const CyclicFingerprint&) const = default;
};

struct EngineOptions {
  TierProfile profile = TierProfile::paper();
  bool build_gen = true; // generalized/rotation machinery
  std::uint64_t fp_seed = 0x714c0de5eed1ULL;
  Rmq::Layout layout = Rmq::Layout::Auto;
};

// Owns a text and every index layer over it; the query surface mirrors the
// CLI verbs.  Immutable after construction apart from guarded lazy builds
// (on-demand extenders, the complemented-text engine).
// Serialized suffix-structure tables; derived structures are rebuilt on
// adoption.
struct IndexTables {
  std::vector<pos_t> sa, lcp, rsa, rlcp;
};

class Engine {
 public:
  explicit Engine(Text text, EngineOptions opt = {});
  Engine(Text text, EngineOptions opt, IndexTables tables);
  Engine(const Engine&) = delete;
  Engine& operator=(const Engine&) = delete;

  const Text& text() const { return text_; }
  const Esa& esa() const { return esa_; }
  const EngineOptions& options() const { return opt_; }
  const MinSufIndex& minsuf_index() const { return ms_; }
  const GenMinSufIndex& gen_index() const;

  // Minimal-suffix starts in T (constant / log-star / log tiers).
  pos_t minsuf(Fragment v) const { return ms_.minsuf(v); }
  pos_t minsuf_logstar(Fragment v) const { return ms_.minsuf_logstar(v); }
  pos_t minsuf_ladder(Fragment v) const { return minsuf_log(esa_, v); }
  SigSuffixes significant(Fragment v) const {
    return significant_suffixes(esa_, v);
  }
  // Length of the minimal suffix of the piece concatenation, plus the
  // suffix itself.
  std::pair<pos_t, KFragment> gen_minsuf(const KFragment& v) const {
    return gen_index().gen_minsuf(v);
  }

  // Lexicographically minimal rotation of the value of v, as a k-fragment.
  KFragment canonical_rotation(const KFragment& v) const;
  RotationAnswer min_rotation(const KFragment& v) const;
  RotationAnswer max_rotation(const KFragment& v) const;
  bool cyclic_equal(const KFragment& a, const KFragment& b) const;
  CyclicFingerprint cyclic_fingerprint(const KFragment& v) const;
  std::vector<LyndonFactor> lyndon_factorize_fragment(const KFragment& v) const;

  std::uint64_t fingerprint_base() const { return fp_base_; }

 private:
  void init_derived();
  const Engine& complement() const; // built on first max-rotation query
  std::uint64_t hash_fragment(Fragment f) const;
  std::uint64_t hash_kfragment(const KFragment& w) const;

  Text text_;
  EngineOptions opt_;
  Esa esa_;
  MinSufIndex ms_;
  std::optional<GenMinSufIndex> gq_;

  std::uint64_t fp_base_ = 0;
  std::vector<std::uint64_t> fp_pref_; // hash of T[1..i]
  std::vector<std::uint64_t> fp_pow_;  // base^i

  mutable std::once_flag comp_once_;
  mutable std::unique_ptr<Engine> comp_;
};

} // namespace lyx
