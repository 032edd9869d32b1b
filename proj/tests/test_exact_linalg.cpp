#include <doctest.h>

#include "latcert/exact_linalg.hpp"
#include "latcert/instances.hpp"
#include "oracles.hpp"

using namespace latcert;

namespace {

RatMatrix reconstruct(const LdltDecomposition& F) {
    const int n = F.L.rows;
    RatMatrix D(n, n);
    for (int i = 0; i < n; ++i) D(i, i) = F.D[i];
    return rat_mul(F.L, rat_mul(D, rat_transpose(F.L)));
}

IntMatrix random_entries(SplitMix64& rng, int n, long lo, long hi) {
    IntMatrix M(n, n);
    for (auto& e : M.a) e = static_cast<long>(rng.below(hi - lo + 1)) + lo;
    return M;
}

}  // namespace

TEST_CASE("det_bareiss on pinned examples") {
    CHECK(det_bareiss(IntMatrix::identity(3)) == 1);
    CHECK(det_bareiss(IntMatrix::from_rows({{1, 1}, {1, 2}})) == 1);
    CHECK(det_bareiss(IntMatrix::from_rows({{2, 0}, {0, 2}})) == 4);
    CHECK(det_bareiss(IntMatrix::from_rows({{1, 2}, {2, 4}})) == 0);
    CHECK(det_bareiss(IntMatrix::from_rows({{0, 1}, {1, 0}})) == -1);
    CHECK_THROWS_AS(det_bareiss(IntMatrix(2, 3)), NotSquareError);
}

TEST_CASE("det_bareiss agrees with cofactor expansion") {
    SplitMix64 rng(7);
    for (int n = 1; n <= 4; ++n) {
        for (int rep = 0; rep < 60; ++rep) {
            IntMatrix M = random_entries(rng, n, -9, 9);
            CHECK(det_bareiss(M) == oracle::cofactor_det(M));
        }
    }
}

TEST_CASE("inverse_unimodular on pinned examples") {
    CHECK(inverse_unimodular(IntMatrix::identity(4)) == IntMatrix::identity(4));

    IntMatrix M = IntMatrix::from_rows({{1, 1}, {1, 2}});
    IntMatrix inv = inverse_unimodular(M);
    CHECK(inv == IntMatrix::from_rows({{2, -1}, {-1, 1}}));
    CHECK(mat_mul(M, inv) == IntMatrix::identity(2));

    CHECK_THROWS_AS(inverse_unimodular(IntMatrix::from_rows({{2, 0}, {0, 2}})),
                    NotUnimodularError);
}

TEST_CASE("inverse of random unimodular matrices is exact") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        int n = 1 + static_cast<int>(seed % 6);
        IntMatrix U = random_unimodular(n, seed, 4, 25);
        IntMatrix inv = inverse_unimodular(U);
        CHECK(mat_mul(U, inv) == IntMatrix::identity(n));
        CHECK(mat_mul(inv, U) == IntMatrix::identity(n));
    }
}

TEST_CASE("ldlt_rational on pinned examples") {
    LdltDecomposition F = ldlt_rational(IntMatrix::identity(3));
    CHECK(F.L == RatMatrix::identity(3));
    for (const auto& d : F.D) CHECK(d == 1);

    LdltDecomposition G = ldlt_rational(IntMatrix::from_rows({{1, 1}, {1, 2}}));
    CHECK(G.L(1, 0) == 1);
    CHECK(G.D[0] == 1);
    CHECK(G.D[1] == 1);
    CHECK(reconstruct(G) == to_rational(IntMatrix::from_rows({{1, 1}, {1, 2}})));
}

TEST_CASE("ldlt_rational failure witnesses") {
    try {
        ldlt_rational(IntMatrix::from_rows({{0, 0}, {0, 1}}));
        FAIL("expected NotPositiveDefiniteError");
    } catch (const NotPositiveDefiniteError& e) {
        CHECK(e.pivot == 1);
    }
    try {
        ldlt_rational(IntMatrix::from_rows({{1, 2}, {2, 1}}));
        FAIL("expected NotPositiveDefiniteError");
    } catch (const NotPositiveDefiniteError& e) {
        CHECK(e.pivot == 2);  // pivots are (1, -3)
    }
    try {
        ldlt_rational(IntMatrix::from_rows({{1, 2}, {3, 1}}));
        FAIL("expected NotSymmetricError");
    } catch (const NotSymmetricError& e) {
        CHECK(e.i == 0);
        CHECK(e.j == 1);
    }
}

TEST_CASE("ldlt reconstruction on random SPD matrices") {
    SplitMix64 rng(11);
    for (int rep = 0; rep < 40; ++rep) {
        int n = 1 + static_cast<int>(rng.below(5));
        IntMatrix B = random_entries(rng, n, -5, 5);
        IntMatrix G = mat_mul(mat_transpose(B), B);
        for (int i = 0; i < n; ++i) G(i, i) += 1;  // make strictly positive definite
        LdltDecomposition F = ldlt_rational(G);
        for (const auto& d : F.D) CHECK(d > 0);
        CHECK(reconstruct(F) == to_rational(G));
    }
}

TEST_CASE("ldlt_solve solves SPD systems") {
    SplitMix64 rng(13);
    for (int rep = 0; rep < 25; ++rep) {
        int n = 1 + static_cast<int>(rng.below(5));
        IntMatrix B = random_entries(rng, n, -4, 4);
        IntMatrix G = mat_mul(mat_transpose(B), B);
        for (int i = 0; i < n; ++i) G(i, i) += 1;
        RatVector b(n);
        for (auto& e : b) e = static_cast<long>(rng.below(19)) - 9;
        RatVector x = ldlt_solve(ldlt_rational(G), b);
        RatVector Ax = rat_mat_vec(to_rational(G), x);
        CHECK(Ax == b);
    }
}

TEST_CASE("congruence det multiplicativity") {
    SplitMix64 rng(17);
    for (int rep = 0; rep < 20; ++rep) {
        int n = 2 + static_cast<int>(rng.below(3));
        IntMatrix G = random_entries(rng, n, -3, 3);
        IntMatrix V = random_entries(rng, n, -2, 2);
        mpz_class dv = det_bareiss(V);
        CHECK(det_bareiss(congruence(V, G)) == dv * dv * det_bareiss(G));
    }
}

TEST_CASE("rat_det matches integer determinant") {
    SplitMix64 rng(19);
    for (int rep = 0; rep < 30; ++rep) {
        int n = 1 + static_cast<int>(rng.below(4));
        IntMatrix M = random_entries(rng, n, -6, 6);
        CHECK(rat_det(to_rational(M)) == mpq_class(det_bareiss(M)));
    }
}
