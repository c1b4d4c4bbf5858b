#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lyx {

using pos_t = std::int64_t;     // 1-based text positions and lengths
using letter_t = std::uint32_t; // symbols in [0, sigma)

enum class Ordering { Less, Equal, Greater };

inline Ordering reverse(Ordering o) {
  if (o == Ordering::Less) return Ordering::Greater;
  if (o == Ordering::Greater) return Ordering::Less;
  return Ordering::Equal;
}

struct InvalidInput : std::runtime_error {
  explicit InvalidInput(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidRange : std::runtime_error {
  explicit InvalidRange(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidArguments : std::runtime_error {
  explicit InvalidArguments(const std::string& what) : std::runtime_error(what) {}
};

namespace stats {
// Count of low-level index primitives (RMQ/table lookups, rank queries)
// executed on this thread.  Query-time tests freeze per-call budgets against
// this counter.
extern thread_local std::uint64_t primitive_calls;
// Count of generalized minimal-suffix queries issued; applications promise
// per-call budgets against this counter.
extern thread_local std::uint64_t gen_minsuf_calls;

inline void bump() { ++primitive_calls; }
inline std::uint64_t now() { return primitive_calls; }
inline void reset() { primitive_calls = 0; }

inline void bump_gen() { ++gen_minsuf_calls; }
inline std::uint64_t gen_now() { return gen_minsuf_calls; }
inline void gen_reset() { gen_minsuf_calls = 0; }
} // namespace stats

} // namespace lyx
