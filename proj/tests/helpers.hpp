#pragma once

#include <random>
#include <string>
#include <vector>

#include "lyx/text.hpp"

namespace lyx::testing {

inline Text text_of(const std::string& s) {
  return load_text(std::span<const std::uint8_t>(
      reinterpret_cast<const std::uint8_t*>(s.data()), s.size()));
}

inline std::string str_of(const std::vector<letter_t>& letters) {
  std::string out;
  for (letter_t c : letters) out.push_back(static_cast<char>(c));
  return out;
}

// Random string over the first `sigma` letters starting at 'a'.
inline std::string random_string(std::mt19937_64& rng, std::size_t len,
                                 unsigned sigma) {
  std::uniform_int_distribution<unsigned> d(0, sigma - 1);
  std::string s(len, 'a');
  for (auto& c : s) c = static_cast<char>('a' + d(rng));
  return s;
}

// All strings of the given length over the first `sigma` letters.
inline std::vector<std::string> all_strings(std::size_t len, unsigned sigma) {
  std::vector<std::string> out{""};
  for (std::size_t i = 0; i < len; ++i) {
    std::vector<std::string> next;
    next.reserve(out.size() * sigma);
    for (const auto& s : out)
      for (unsigned c = 0; c < sigma; ++c)
        next.push_back(s + static_cast<char>('a' + c));
    out = std::move(next);
  }
  return out;
}

} // namespace lyx::testing
