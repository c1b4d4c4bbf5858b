#pragma once

#include <span>
#include <vector>

#include "lyx/common.hpp"

namespace lyx {

enum class TextMode : std::uint8_t { Bytes = 0, Tokens = 1 };

// Immutable indexed sequence with 1-based positions.
struct Text {
  std::vector<letter_t> symbols; // each in [0, sigma)
  pos_t n = 0;
  std::uint64_t sigma = 0;
  TextMode mode = TextMode::Bytes;

  letter_t at(pos_t i) const { return symbols[static_cast<std::size_t>(i - 1)]; }
};

// Inclusive interval view T[start..end]; never owns data.
struct Fragment {
  pos_t start = 0;
  pos_t end = 0;

  pos_t len() const { return end - start + 1; }
  bool operator==(const Fragment&) const = default;
};

// Concatenation of fragments; the optional trailing sentinel compares
// greater than every letter and stands for the auxiliary symbol $.
struct KFragment {
  std::vector<Fragment> pieces;
  bool sentinel = false;

  pos_t len() const {
    pos_t total = 0;
    for (const auto& p : pieces) total += p.len();
    return total;
  }
  static KFragment single(Fragment f) { return KFragment{{f}, false}; }
};

// Byte-mode keeps raw byte values; token-mode rank-remaps via radix sort.
Text load_text(std::span<const std::uint8_t> raw);
Text load_text_tokens(std::span<const std::uint32_t> tokens);

Fragment fragment(const Text& t, pos_t l, pos_t r);

// Canonical restriction of w to w[l..r]; at most as many pieces as w.
KFragment subfragment(const KFragment& w, pos_t l, pos_t r);

std::vector<letter_t> extract(const Text& t, const KFragment& w);
std::vector<letter_t> extract(const Text& t, const Fragment& f);

} // namespace lyx
