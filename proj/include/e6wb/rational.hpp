#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace e6wb {

// Exact rational scalar used everywhere in the core. No floating point.
using Rat = mpq_class;

inline bool is_zero(const Rat& q) { return mpq_sgn(q.get_mpq_t()) == 0; }
inline int sign(const Rat& q) { return mpq_sgn(q.get_mpq_t()); }

// Renders integers without a denominator, other rationals as "n/d".
inline std::string to_string(const Rat& q) { return q.get_str(); }

// Small deterministic PRNG (xorshift64*) for pseudo-random rational test
// points. Not for cryptography; fixed seeds keep every run reproducible.
class RatRng {
 public:
  explicit RatRng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}

  std::uint64_t next_u64() {
    std::uint64_t x = state_;
    x ^= x >> 12;
    x ^= x << 25;
    x ^= x >> 27;
    state_ = x;
    return x * 0x2545f4914f6cdd1dULL;
  }

  // Uniform-ish small rational: numerator in [-9, 9], denominator in {1, 2, 3}.
  Rat next_rat() {
    long num = static_cast<long>(next_u64() % 19) - 9;
    long den = static_cast<long>(next_u64() % 3) + 1;
    Rat q(num, den);
    q.canonicalize();
    return q;
  }

 private:
  std::uint64_t state_;
};

}  // namespace e6wb
