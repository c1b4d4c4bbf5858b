#pragma once

#include <vector>

#include "lyx/esa.hpp"

namespace lyx {

struct LyndonFactor {
  pos_t word_len = 0;
  pos_t exponent = 0;
  bool operator==(const LyndonFactor&) const = default;
};

// Classic linear-time Lyndon factorization of a materialized word.
std::vector<LyndonFactor> duval_factorize(const std::vector<letter_t>& s);

// Significant suffixes of a fragment v: the suffixes (including the empty
// one) that can begin the minimal suffix of v·w for some right context w.
// Stored as strictly decreasing suffix lengths ending in 0; there are
// O(log |v|) of them.
struct SigSuffixes {
  Fragment v{0, 0};
  std::vector<pos_t> lens;
};

// Start position minimizing T[c..v.end]·$ over c in [u.start, v.start],
// i.e. the best suffix of u (possibly empty) to prepend to v.  Requires v
// to immediately follow u.  Runs on O(1) index primitives.
pos_t max_suf_rev(const Esa& e, Fragment u, Fragment v);

// Ladder of significant suffixes via O(log |v|) halving merges.
SigSuffixes significant_suffixes(const Esa& e, Fragment v);

// Length of the suffix s of v (possibly empty) minimizing s·w, given the
// precomputed ladder of v.  O(|w| + log |v|) primitives.
pos_t minsuf_with_context(const Esa& e, const SigSuffixes& sig,
                          const KFragment& w);

// Start position (in T) of the minimal nonempty suffix of v; O(log |v|)
// primitives.
pos_t minsuf_log(const Esa& e, Fragment v);

} // namespace lyx
