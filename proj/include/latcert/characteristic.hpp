#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "latcert/gram.hpp"
#include "latcert/reduction.hpp"

namespace latcert {

inline constexpr int kMaxBruteForceRadius = 6;
inline constexpr long kMaxBruteForceBoxVolume = 5'000'000;  // (2r+1)^n points

// Canonical characteristic coefficient vector z0 with entries in {0,1}:
// z0_k = (G^{-1})_kk mod 2. Satisfies e_k^T G z0 = G_kk (mod 2) for all k.
IntVector characteristic_coefficients(const GramMatrix& G);

// Parity test on a basis: true iff e_k^T G z = G_kk (mod 2) for all k.
// This suffices for z to be the coefficient vector of a characteristic
// vector of the whole lattice.
bool is_characteristic(const GramMatrix& G, const IntVector& z);

// Shortest member of the characteristic coset z0 + 2Z^n, found by a single
// CVP call on the form 4G with target -z0/2. Deterministic tie-break.
struct MinCharacteristic {
    IntVector z;
    mpz_class norm2;
};
MinCharacteristic min_characteristic(const GramMatrix& G, EnumStats* stats = nullptr);

// The minimal coset norm alone, with tie exploration pruned. Rotated
// standard lattices have 2^n minimal characteristic vectors, so deciders
// that only compare the minimum against n should use this.
mpz_class min_characteristic_norm(const GramMatrix& G, EnumStats* stats = nullptr);

// Independent test oracle: all characteristic coefficient vectors within the
// max-norm box, sorted by (norm^2, lexicographic). Guarded to tiny sizes.
std::vector<std::pair<IntVector, mpz_class>> brute_force_characteristic(const GramMatrix& G,
                                                                        int box_radius);

// The common residue mod 8 of every characteristic vector of this lattice,
// computed as norm_sq(G, z0) mod 8.
int mod8_residue(const GramMatrix& G);

struct CharCoset {
    IntVector z0;
    std::optional<IntVector> min_vector;
    std::optional<mpz_class> min_norm2;
};
CharCoset char_coset(const GramMatrix& G, bool with_min, EnumStats* stats = nullptr);

}  // namespace latcert
