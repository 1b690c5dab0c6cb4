// Seeded deterministic randomness. All sampling goes through rejection on raw
// mt19937_64 output, never through std::uniform_*_distribution, so a given
// seed reproduces the same stream on every platform and standard library.
#pragma once

#include <cstdint>
#include <random>

#include "semicanon/field.hpp"

namespace semicanon {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }
    // Uniform in [0, n).
    std::uint64_t below(std::uint64_t n);
    // Uniform in [lo, hi], inclusive.
    long long int_in(long long lo, long long hi);

    // Uniform over Z/q, or a bounded-height rational integer.
    Fe scalar(const Field& f);
    Fe nonzero_scalar(const Field& f);

private:
    std::mt19937_64 gen_;
};

}  // namespace semicanon
