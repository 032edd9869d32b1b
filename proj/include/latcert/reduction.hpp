#pragma once

#include <cstdint>

#include "latcert/exact_linalg.hpp"
#include "latcert/gram.hpp"

namespace latcert {

// Enumeration is exponential; everything here is desk scale by contract.
inline constexpr int kMaxEnumDim = 24;

struct EnumStats {
    std::uint64_t nodes = 0;
    int svp_calls = 0;
    int cvp_calls = 0;
};

// Result of a reduction: G_reduced = transform^T * G * transform holds
// exactly, transform is unimodular, and gso carries the Gram-Schmidt data of
// G_reduced (mu in the strict lower part of L, squared GSO norms in D).
struct ReducedBasisData {
    GramMatrix G_reduced;
    IntMatrix transform;
    LdltDecomposition gso;
};

inline const mpq_class kDefaultDelta = mpq_class(99, 100);

// Exact LLL on the Gram matrix, delta in (1/4, 1).
ReducedBasisData lll_reduce(const GramMatrix& G, const mpq_class& delta = kDefaultDelta);

struct SvpResult {
    IntVector v;        // nonzero minimizer of v^T G v
    mpz_class norm2;
};

struct CvpResult {
    IntVector u;        // integral minimizer of (u - t)^T G (u - t)
    mpq_class dist2;
};

// Shortest nonzero vector in coefficient space. Ties are broken by
// normalizing the first nonzero entry to be positive and taking the
// lexicographically smallest vector; the result is deterministic.
SvpResult svp(const GramMatrix& G, EnumStats* stats = nullptr);

// Closest lattice vector to a rational target, same deterministic tie-break
// (lexicographically smallest minimizer).
CvpResult cvp(const GramMatrix& G, const RatVector& target, EnumStats* stats = nullptr);

// Hermite-Korkine-Zolotareff reduction: n successive SVP calls on projected
// Gram forms; each shortest projected vector is lifted to the lattice vector
// of smallest true norm (a CVP on the head block). Output is size-reduced.
ReducedBasisData hkz_reduce(const GramMatrix& G, EnumStats* stats = nullptr);

// Internal engines operating on rational positive definite Gram forms; the
// HKZ recursion needs them for projected blocks. Exposed for tests.
namespace detail {

struct RatReduction {
    RatMatrix G;
    IntMatrix T;
    LdltDecomposition gso;
};

RatReduction lll_engine(RatMatrix G, const mpq_class& delta);

struct RatSvpResult {
    IntVector v;
    mpq_class norm2;
};

RatSvpResult svp_rational(const RatMatrix& Q, EnumStats* stats);
// prune_ties trades the deterministic tie-break for speed: the distance is
// still exact but only one (DFS-order) minimizer is visited.
CvpResult cvp_rational(const RatMatrix& Q, const RatVector& target, EnumStats* stats,
                       bool prune_ties = false);

// Unimodular matrix whose first column is the given primitive vector.
IntMatrix unimodular_with_first_column(const IntVector& s);

}  // namespace detail

}  // namespace latcert
