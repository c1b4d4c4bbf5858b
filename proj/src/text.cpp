#include "lyx/text.hpp"

#include <algorithm>
#include <array>

namespace lyx {

namespace stats {
thread_local std::uint64_t primitive_calls = 0;
thread_local std::uint64_t gen_minsuf_calls = 0;
}

Text load_text(std::span<const std::uint8_t> raw) {
  if (raw.empty()) throw InvalidInput("empty input text");
  Text t;
  t.symbols.assign(raw.begin(), raw.end());
  t.n = static_cast<pos_t>(raw.size());
  t.sigma = 256;
  t.mode = TextMode::Bytes;
  return t;
}

Text load_text_tokens(std::span<const std::uint32_t> tokens) {
  if (tokens.empty()) throw InvalidInput("empty input text");
  const std::size_t n = tokens.size();

  // LSD radix sort of (value, index) pairs, one byte per pass; keeps the
  // remap linear-time and order-preserving for 32-bit token values.
  std::vector<std::uint32_t> idx(n), tmp(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = static_cast<std::uint32_t>(i);
  for (int pass = 0; pass < 4; ++pass) {
    std::array<std::size_t, 257> count{};
    const int shift = pass * 8;
    for (std::size_t i = 0; i < n; ++i)
      ++count[((tokens[idx[i]] >> shift) & 0xFF) + 1];
    for (int b = 1; b <= 256; ++b) count[b] += count[b - 1];
    for (std::size_t i = 0; i < n; ++i)
      tmp[count[(tokens[idx[i]] >> shift) & 0xFF]++] = idx[i];
    idx.swap(tmp);
  }

  Text t;
  t.symbols.resize(n);
  letter_t rank = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0 && tokens[idx[i]] != tokens[idx[i - 1]]) ++rank;
    t.symbols[idx[i]] = rank;
  }
  t.n = static_cast<pos_t>(n);
  t.sigma = rank + 1;
  t.mode = TextMode::Tokens;
  return t;
}

Fragment fragment(const Text& t, pos_t l, pos_t r) {
  if (l < 1 || r > t.n || l > r) throw InvalidRange("fragment out of range");
  return Fragment{l, r};
}

KFragment subfragment(const KFragment& w, pos_t l, pos_t r) {
  const pos_t total = w.len();
  if (l < 1 || r > total || l > r) throw InvalidRange("subfragment out of range");
  KFragment out;
  pos_t off = 0; // length consumed so far
  for (const auto& p : w.pieces) {
    const pos_t plen = p.len();
    const pos_t lo = std::max<pos_t>(l, off + 1);
    const pos_t hi = std::min<pos_t>(r, off + plen);
    if (lo <= hi)
      out.pieces.push_back(Fragment{p.start + (lo - off - 1), p.start + (hi - off - 1)});
    off += plen;
    if (off >= r) break;
  }
  return out;
}

std::vector<letter_t> extract(const Text& t, const KFragment& w) {
  std::vector<letter_t> out;
  out.reserve(static_cast<std::size_t>(w.len()));
  for (const auto& p : w.pieces)
    for (pos_t i = p.start; i <= p.end; ++i) out.push_back(t.at(i));
  return out;
}

std::vector<letter_t> extract(const Text& t, const Fragment& f) {
  return extract(t, KFragment::single(f));
}

} // namespace lyx
