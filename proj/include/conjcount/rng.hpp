#pragma once

#include "conjcount/rational.hpp"

#include <cstdint>

namespace conjcount {

/// Counter-based generator: value i of a stream is a pure function of
/// (seed, i), so sharded runs are independent of the worker count.
struct CounterRng {
    std::uint64_t seed = 0;

    static std::uint64_t splitmix(std::uint64_t x) {
        x += 0x9E3779B97F4A7C15ull;
        x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
        x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
        return x ^ (x >> 31);
    }

    std::uint64_t at(std::uint64_t counter) const {
        return splitmix(splitmix(seed) ^ splitmix(counter * 0x9E3779B97F4A7C15ull + 1));
    }

    /// Dyadic rational in [0, 1) with denominator 2^53.
    Rat unit_rat(std::uint64_t counter) const {
        Int num(static_cast<unsigned long>(at(counter) >> 11));
        Int den(1);
        mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), 53);
        return make_rat(num, den);
    }

    double unit_double(std::uint64_t counter) const {
        return static_cast<double>(at(counter) >> 11) * 0x1.0p-53;
    }

    /// Uniform integer in [lo, hi].
    long uniform_int(std::uint64_t counter, long lo, long hi) const {
        return lo + static_cast<long>(at(counter) % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

} // namespace conjcount
