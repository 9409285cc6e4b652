#pragma once

#include <cstdint>

#include "qlat/rational.hpp"

namespace qlat {

// Deterministic splitmix64 stream, keyed by (seed, sample index) so that
// batch items can be generated independently and in parallel while the
// whole run stays byte-reproducible.  No std distributions: their output
// is not pinned across standard library implementations.
class SampleRng {
  public:
    SampleRng(std::uint64_t seed, std::uint64_t index)
        : state_(mix(seed ^ mix(index + 0x9E3779B97F4A7C15ull))) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ull;
        return mix(state_);
    }

    // uniform-ish in [lo, hi]; modulo bias is irrelevant for test sampling
    long next_in(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    bool next_bool() { return next() & 1; }

    // small-height rationals keep exact arithmetic fast
    Rational small_rational(long max_abs_num = 9, long max_den = 9) {
        return make_rational(next_in(-max_abs_num, max_abs_num), next_in(1, max_den));
    }

    Rational small_nonzero_rational(long max_abs_num = 9, long max_den = 9) {
        while (true) {
            Rational r = small_rational(max_abs_num, max_den);
            if (r != 0) return r;
        }
    }

  private:
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
};

}  // namespace qlat
