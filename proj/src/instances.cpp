#include "latcert/instances.hpp"

#include "latcert/exact_linalg.hpp"

namespace latcert {

IntMatrix random_unimodular(int n, std::uint64_t seed, int entry_bound, int steps) {
    if (n < 1) throw Error("dimension must be positive");
    if (entry_bound < 1) throw Error("entry_bound must be positive");
    if (steps < 0) throw Error("steps must be nonnegative");
    SplitMix64 rng(seed);
    IntMatrix U = IntMatrix::identity(n);
    for (int s = 0; s < steps; ++s) {
        std::uint64_t op = rng.below(3);
        if (n == 1) op = 2;  // only negation is available
        if (op == 0) {
            // row_i += c * row_j, i != j, c in [-entry_bound, entry_bound]
            int i = static_cast<int>(rng.below(n));
            int j = static_cast<int>(rng.below(n - 1));
            if (j >= i) ++j;
            long c = static_cast<long>(rng.below(2 * entry_bound + 1)) - entry_bound;
            for (int k = 0; k < n; ++k) U(i, k) += c * U(j, k);
        } else if (op == 1) {
            int i = static_cast<int>(rng.below(n));
            int j = static_cast<int>(rng.below(n - 1));
            if (j >= i) ++j;
            for (int k = 0; k < n; ++k) std::swap(U(i, k), U(j, k));
        } else {
            int i = static_cast<int>(rng.below(n));
            for (int k = 0; k < n; ++k) U(i, k) = -U(i, k);
        }
    }
    return U;
}

YesInstance yes_instance(int n, std::uint64_t seed, int entry_bound, int steps) {
    IntMatrix U = random_unimodular(n, seed, entry_bound, steps);
    GramMatrix G = validate_gram(mat_mul(mat_transpose(U), U));
    return YesInstance{std::move(G), std::move(U)};
}

GramMatrix e8_gram() {
    // Basis columns: 2e1, -e1+e2, -e2+e3, ..., -e6+e7, (1/2)*(1,...,1).
    // All lie in E8 (integral with even coordinate sum, or in the glue
    // coset); the matrix is triangular with diagonal 2,1,...,1,1/2, so the
    // basis determinant is 1.
    RatMatrix B(8, 8);
    B(0, 0) = 2;
    for (int c = 1; c <= 6; ++c) {
        B(c - 1, c) = -1;
        B(c, c) = 1;
    }
    for (int r = 0; r < 8; ++r) B(r, 7) = mpq_class(1, 2);
    return validate_gram(to_integral(gram_from_basis(B)));
}

GramMatrix direct_sum(const GramMatrix& G1, const GramMatrix& G2) {
    const int n1 = G1.dim(), n2 = G2.dim();
    IntMatrix M(n1 + n2, n1 + n2);
    for (int i = 0; i < n1; ++i)
        for (int j = 0; j < n1; ++j) M(i, j) = G1.mat()(i, j);
    for (int i = 0; i < n2; ++i)
        for (int j = 0; j < n2; ++j) M(n1 + i, n1 + j) = G2.mat()(i, j);
    return GramMatrix::spd(std::move(M));
}

GramMatrix disguise(const GramMatrix& G, std::uint64_t seed, int entry_bound, int steps) {
    IntMatrix V = random_unimodular(G.dim(), seed, entry_bound, steps);
    return GramMatrix::spd(congruence(V, G.mat()));
}

GramMatrix generate(const GeneratorSpec& spec) {
    switch (spec.kind) {
        case GeneratorKind::kZnRotation:
            return yes_instance(spec.n, spec.seed, spec.entry_bound, spec.steps).G;
        case GeneratorKind::kE8:
            return e8_gram();
        case GeneratorKind::kDirectSum: {
            // E8 plus identity_k; generic sums are built via direct_sum directly
            if (spec.n <= 8) throw Error("direct-sum dimension must exceed 8");
            GramMatrix id = GramMatrix::spd(IntMatrix::identity(spec.n - 8));
            return direct_sum(e8_gram(), id);
        }
        case GeneratorKind::kDisguise: {
            GramMatrix id = GramMatrix::spd(IntMatrix::identity(spec.n));
            return disguise(id, spec.seed, spec.entry_bound, spec.steps);
        }
    }
    throw Error("unknown generator kind");
}

}  // namespace latcert
