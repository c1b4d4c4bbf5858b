#pragma once

#include <vector>

#include "lyx/text.hpp"

namespace lyx {

// Range-extreme index over a static array; answers argmin/argmax positions.
// SparseTable is the O(n log n)-space default profile; Blocked is the
// linear-space profile.  Both honor the same query contract.
class Rmq {
 public:
  enum class Kind { Min, Max };
  enum class Layout { Auto, SparseTable, Blocked };

  Rmq() = default;
  void build(const std::vector<pos_t>* values, Kind kind, Layout layout);
  // The backing vector object moved; point at its new location.
  void rebind(const std::vector<pos_t>* values) { values_ = values; }

  // Index of the extreme element in values[lo..hi] (inclusive, 0-based);
  // ties resolve to the smallest index.
  std::size_t query(std::size_t lo, std::size_t hi) const;

 private:
  std::size_t better(std::size_t a, std::size_t b) const;

  const std::vector<pos_t>* values_ = nullptr;
  Kind kind_ = Kind::Min;
  bool blocked_ = false;
  static constexpr std::size_t kBlock = 64;
  std::vector<std::vector<std::uint32_t>> table_; // sparse table of arg indices
  std::vector<std::uint32_t> block_arg_;          // blocked mode: per-block arg
};

// Enhanced suffix array: SA/ISA/LCP with range-extreme structures over the
// text and its reversal.  All fragment positions are 1-based inclusive.
class Esa {
 public:
  struct InfCmp {
    pos_t lcp;    // lcp(x^inf, y)
    Ordering cmp; // x^inf versus y
  };

  Esa() = default;
  Esa(const Esa&) = delete;
  Esa& operator=(const Esa&) = delete;
  Esa(Esa&& o) noexcept { *this = std::move(o); }
  Esa& operator=(Esa&& o) noexcept;

  static Esa build(const Text& t, Rmq::Layout layout = Rmq::Layout::Auto);
  // Rebuild derived structures from serialized tables.
  static Esa adopt(const Text& t, std::vector<pos_t> sa, std::vector<pos_t> lcp,
                   std::vector<pos_t> rsa, std::vector<pos_t> rlcp,
                   Rmq::Layout layout = Rmq::Layout::Auto);

  const Text& text() const { return *text_; }
  pos_t n() const { return text_->n; }
  letter_t at(pos_t i) const { return text_->at(i); }

  pos_t sa(pos_t rank) const { return sa_[static_cast<std::size_t>(rank)]; }
  pos_t isa(pos_t i) const { return isa_[static_cast<std::size_t>(i)]; }
  const std::vector<pos_t>& sa_table() const { return sa_; }
  const std::vector<pos_t>& lcp_table() const { return lcp_; }
  const std::vector<pos_t>& rsa_table() const { return rsa_; }
  const std::vector<pos_t>& rlcp_table() const { return rlcp_; }

  // lcp of suffixes T[i..] and T[j..]; lcs of prefixes T[..i] and T[..j].
  pos_t suffix_lcp(pos_t i, pos_t j) const;
  pos_t prefix_lcs(pos_t i, pos_t j) const;

  pos_t lcp(Fragment x, Fragment y) const;
  pos_t lcs(Fragment x, Fragment y) const;
  Ordering compare(Fragment x, Fragment y) const;
  InfCmp lcp_infinite(Fragment x, Fragment y) const;

  // Position k in [i,j] with lexicographically minimal (maximal) T[k..n].
  pos_t range_min_suffix(pos_t i, pos_t j) const;
  pos_t range_max_suffix(pos_t i, pos_t j) const;

  // k-fragment layer (Observation-style O(k) reductions).
  Ordering compare_k(const KFragment& x, const KFragment& y) const;
  pos_t lcp_k(const KFragment& x, const KFragment& y) const;
  pos_t lcs_k(const KFragment& x, const KFragment& y) const;
  InfCmp lcp_infinite_k(Fragment x, const KFragment& y) const;

  // u$ versus v (or u versus v$) with $ greater than every letter.
  Ordering compare_with_sentinel(const KFragment& u, bool sentinel_on_u,
                                 const KFragment& v) const;

 private:
  void finish(Rmq::Layout layout);
  InfCmp lcp_infinite_phase(Fragment x, pos_t phase, Fragment y) const;

  const Text* text_ = nullptr;
  Text rev_; // reversed copy; owns its symbols
  std::vector<pos_t> sa_, isa_, lcp_;    // 1-based; index 0 unused
  std::vector<pos_t> rsa_, risa_, rlcp_; // over reversed text
  Rmq lcp_min_, rlcp_min_, isa_min_, isa_max_;
};

// Exposed for cross-checking: straightforward O(n log^2 n) doubling sort.
std::vector<pos_t> suffix_array_doubling(const std::vector<letter_t>& s);
// Linear-time SA-IS construction.
std::vector<pos_t> suffix_array_sais(const std::vector<letter_t>& s);

} // namespace lyx
