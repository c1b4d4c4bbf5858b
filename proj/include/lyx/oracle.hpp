#pragma once

#include <vector>

#include "lyx/lyndon.hpp"
#include "lyx/text.hpp"

// Independent brute-force references used to freeze expected values in
// tests.  Everything here operates on materialized letter vectors and never
// touches the indexed structures.

namespace lyx::oracle {

// Lexicographic comparison with an optional trailing symbol that outranks
// every letter.
Ordering compare_sent(const std::vector<letter_t>& a, bool sent_a,
                      const std::vector<letter_t>& b, bool sent_b);

// Start (1-based within v) of the minimal nonempty suffix of v.
pos_t naive_minsuf(const std::vector<letter_t>& v);

// Number of elements of a strictly smaller than w.
pos_t naive_rank(const std::vector<std::vector<letter_t>>& a,
                 const std::vector<letter_t>& w);

// Length of the suffix s of v (possibly empty) minimizing s·w, where w may
// carry the trailing top-ranked symbol.
pos_t naive_minsuf_pair(const std::vector<letter_t>& v,
                        const std::vector<letter_t>& w, bool sentinel);

// Significant suffix lengths of v, strictly decreasing and ending in 0.
std::vector<pos_t> naive_significant(const std::vector<letter_t>& v);

// Smallest period of v.
pos_t naive_period(const std::vector<letter_t>& v);

// Is v a Lyndon word (strictly smaller than each of its proper suffixes)?
bool naive_is_lyndon(const std::vector<letter_t>& v);

// Smallest shift (0-based) of the lexicographically minimal rotation,
// computed by Booth's algorithm in linear time.
pos_t booth_min_rotation(const std::vector<letter_t>& v);

// Smallest shift of the lexicographically maximal rotation (quadratic scan).
pos_t naive_max_rotation(const std::vector<letter_t>& v);

// Lyndon factorization obtained by repeatedly stripping the longest Lyndon
// prefix found by exhaustive checking.
std::vector<LyndonFactor> naive_lyndon_factorize(const std::vector<letter_t>& v);

} // namespace lyx::oracle
