#pragma once

#include <cstdint>
#include <random>

#include "hpf/rational.hpp"

namespace hpf {

/*
 * Seeded pseudorandom source for test data.  Wraps mt19937_64 but derives
 * bounded values by modulo of the raw stream instead of std::*_distribution,
 * whose output is implementation-defined; identical seeds must produce
 * identical streams on every platform.
 */
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }

    // Uniform-ish integer in [lo, hi]; modulo bias is irrelevant at the
    // ranges used here.
    long int_in(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    // Rational with numerator in [-max_num, max_num] and denominator in
    // [1, max_den].
    Rational rational(long max_num, long max_den) {
        return Rational(int_in(-max_num, max_num), int_in(1, max_den));
    }

    Rational nonzero_rational(long max_num, long max_den) {
        for (;;) {
            Rational r = rational(max_num, max_den);
            if (!r.is_zero()) return r;
        }
    }

private:
    std::mt19937_64 gen_;
};

}  // namespace hpf
