#pragma once

#include <cstdint>

#include "fp.hpp"

namespace nilcommute {

/// Deterministic splittable generator (splitmix64 core). Every randomized
/// experiment derives one stream per trial from (master seed, trial index),
/// so results are independent of execution order and thread count.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    static Rng for_trial(std::uint64_t master_seed, std::uint64_t trial) {
        Rng r(master_seed ^ (0x9e3779b97f4a7c15ull * (trial + 1)));
        r.next();
        r.next();
        return r;
    }

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Unbiased draw from [0, bound).
    std::uint64_t below(std::uint64_t bound) {
        std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            std::uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

    Fp field_element(const PrimeField& f) { return Fp{below(f.modulus()), f.modulus()}; }

    Fp nonzero_field_element(const PrimeField& f) {
        return Fp{1 + below(f.modulus() - 1), f.modulus()};
    }

    Rng split() { return Rng(next() ^ 0xd1342543de82ef95ull); }

private:
    std::uint64_t state_;
};

} // namespace nilcommute
