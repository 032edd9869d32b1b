#pragma once

#include <cstdint>

#include "latcert/gram.hpp"

namespace latcert {

// splitmix64: state advances by the golden-gamma constant 0x9E3779B97F4A7C15,
// output mixed with the Stafford mix13 multipliers. Fixed algorithm so
// generated corpora are reproducible across implementations and platforms.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // uniform-ish value in [0, bound); bound > 0
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

private:
    std::uint64_t state_;
};

enum class GeneratorKind { kZnRotation, kE8, kDirectSum, kDisguise };

struct GeneratorSpec {
    GeneratorKind kind;
    int n = 0;
    std::uint64_t seed = 0;
    int entry_bound = 3;  // magnitude cap for random row-operation multipliers
    int steps = 20;       // number of random elementary operations
};

// Product of `steps` random elementary row operations (add a multiple of one
// row to another, swap, negate) applied to the identity; det is always +-1.
IntMatrix random_unimodular(int n, std::uint64_t seed, int entry_bound, int steps);

struct YesInstance {
    GramMatrix G;        // U^T U, always a valid UDP instance
    IntMatrix witness;   // the U above; passes verify_yes by construction
};
YesInstance yes_instance(int n, std::uint64_t seed, int entry_bound = 3, int steps = 20);

// Gram matrix of the canonical E8 basis: 2e1, e_{i+1}-e_i for i=1..6, and the
// glue vector (1/2,...,1/2). Even, det 1, not decomposable as U^T U.
GramMatrix e8_gram();

GramMatrix direct_sum(const GramMatrix& G1, const GramMatrix& G2);

// V^T G V for a seeded random unimodular V; same decision answer as G.
GramMatrix disguise(const GramMatrix& G, std::uint64_t seed, int entry_bound = 3,
                    int steps = 20);

GramMatrix generate(const GeneratorSpec& spec);

}  // namespace latcert
