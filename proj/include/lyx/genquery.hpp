#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <utility>

#include "lyx/minsuf.hpp"
#include "lyx/small_rank.hpp"

namespace lyx {

// Over a fixed collection of text positions, finds the stored suffix
// lexicographically nearest to a query suffix (the one maximizing the
// longest common prefix).  Ties break toward the lexicographic predecessor.
class NearestSuffixIndex {
 public:
  NearestSuffixIndex() = default;
  static NearestSuffixIndex build(const Esa& e,
                                  const std::vector<pos_t>& positions);

  bool empty() const { return ranks_.empty(); }
  // Index into the build-time position list; nullopt when the set is empty.
  std::optional<std::size_t> nearest(pos_t p) const;
  pos_t position(std::size_t idx) const {
    return e_->sa(static_cast<pos_t>(ranks_.select(idx)));
  }
  std::size_t owner(std::size_t idx) const { return owner_[idx]; }

 private:
  const Esa* e_ = nullptr;
  SmallSet ranks_;                 // isa values of the stored positions
  std::vector<std::size_t> owner_; // sorted-rank slot -> input index
};

// Rank queries against a small collection of text fragments: the number of
// collection elements lexicographically smaller than an arbitrary
// k-fragment.  Implemented as a compressed trie whose every explicit node
// carries a NearestSuffixIndex over the suffixes continuing below it, plus
// per-element ancestor-depth indices; a query walks the trie piece by piece
// in O(k) index primitives.
class FragmentRanker {
 public:
  FragmentRanker() = default;
  static FragmentRanker build(const Esa& e, std::vector<Fragment> a);

  std::size_t size() const { return frags_.size(); }
  const std::vector<Fragment>& sorted_elements() const { return frags_; }
  std::size_t node_count() const { return nodes_.size(); }
  std::size_t stored_words() const;

  // |{x in A : x < w}| where w may carry the trailing sentinel.
  std::size_t rank(const KFragment& w) const;

 private:
  struct Node {
    pos_t depth = 0;
    int parent = -1;
    int terminal = -1; // rank in frags_ when the node's value is in A
    std::size_t first_term = 0, last_term = 0;
    SmallSet child_letters;
    std::vector<int> children; // parallel to child_letters.elements()
    NearestSuffixIndex nsi;    // suffixes T[start + depth ..] of the subtree
    std::vector<std::uint32_t> nsi_term; // nsi input slot -> element rank
  };

  int build_group(std::size_t lo, std::size_t hi, pos_t parent_depth,
                  int parent, const std::vector<pos_t>& lcps);
  void finish_node(int id, std::size_t lo, std::size_t hi);

  const Esa* e_ = nullptr;
  std::vector<Fragment> frags_; // lexicographically sorted, value-deduped
  std::vector<Node> nodes_;     // nodes_[0] is the root
  // Per element: explicit ancestors of its terminal as (depth, node id),
  // ascending by depth.
  std::vector<std::vector<std::pair<pos_t, int>>> anc_;
};

// Per-fragment structure answering MinSuf(v, w) for arbitrary k-fragments w
// in O(k): the significant-suffix ladder plus a FragmentRanker over the
// ladder runs x_i^{p_i}.
class GenExtender {
 public:
  static GenExtender build(const Esa& e, Fragment v);

  // Start in T of the best suffix s of v with s·w minimal; v.end + 1
  // encodes the empty suffix.
  pos_t query(const KFragment& w) const;
  const SigSuffixes& ladder() const { return sig_; }
  std::size_t stored_words() const { return sig_.lens.size() + ranker_.stored_words(); }

 private:
  const Esa* e_ = nullptr;
  SigSuffixes sig_;
  FragmentRanker ranker_; // over X'(v)
};

// Constant-time MinSuf(v, w) for short fragments (|v| <= tau) via
// overlapping blocks of length 3*tau: per order-isomorphism class a
// materialized mini index with per-fragment GenExtenders, per block a
// NearestSuffixIndex for rewriting w into block-local coordinates and a
// letter successor structure.
class GenBlockIndex {
 public:
  GenBlockIndex(const Esa& e, pos_t tau);

  // Start in T of the best suffix s of v (v.end + 1 encodes empty s).
  pos_t aux_short(Fragment v, const KFragment& w) const;
  pos_t tau() const { return tau_; }

 private:
  struct Rep {
    Text text; // materialized block letters, rank-compressed
    Esa esa;
    std::vector<std::unique_ptr<GenExtender>> ext; // fragment-indexed, lazy
    pos_t blen = 0;
  };
  std::size_t ext_index(pos_t a, pos_t b) const {
    return static_cast<std::size_t>((a - 1) * tau_ + (b - a));
  }
  const GenExtender& rep_extender(const Rep& rep, pos_t a, pos_t b) const;

  const Esa* e_ = nullptr;
  pos_t tau_ = 0;
  mutable std::mutex build_mu_;
  std::vector<std::uint32_t> block_rep_;
  std::vector<std::unique_ptr<Rep>> reps_;
  std::vector<NearestSuffixIndex> block_nsi_; // over R_i (global positions)
  std::vector<SmallSet> block_chars_;         // letters occurring in a block
  std::vector<std::vector<pos_t>> char_sample_; // local sample positions
};

// Auxiliary and generalized minimal-suffix queries over a fixed text.
class GenMinSufIndex {
 public:
  GenMinSufIndex(const Esa& e, TierProfile prof);

  // MinSuf(v, w): start in T of the best (possibly empty) suffix s of v;
  // v.end + 1 encodes the empty suffix.
  pos_t aux_minsuf(Fragment v, const KFragment& w) const;

  // Minimal nonempty suffix of the concatenation of the pieces of v:
  // its length plus its canonical piece decomposition.
  std::pair<pos_t, KFragment> gen_minsuf(const KFragment& v) const;

  const TierProfile& profile() const { return prof_; }

 private:
  const GenExtender& extender_for(Fragment vp) const;

  const Esa* e_;
  TierProfile prof_;
  // Distinguished-fragment extenders, constructed on first use; the slot
  // grid itself is fixed at build time.
  mutable std::vector<std::vector<std::unique_ptr<GenExtender>>> slots_;
  mutable std::mutex build_mu_;
  std::optional<GenBlockIndex> blocks_;
};

} // namespace lyx
