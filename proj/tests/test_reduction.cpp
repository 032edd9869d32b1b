#include <doctest.h>

#include "latcert/instances.hpp"
#include "latcert/reduction.hpp"
#include "oracles.hpp"

using namespace latcert;

namespace {

GramMatrix spd(std::vector<std::vector<long>> rows) {
    return GramMatrix::spd(IntMatrix::from_rows(rows));
}

// reduction output invariants: exact congruence, unimodular transform,
// size reduction, Lovasz condition at the default delta
void check_reduced(const GramMatrix& G, const ReducedBasisData& red,
                   bool expect_lovasz = true) {
    mpz_class dt = det_bareiss(red.transform);
    CHECK((dt == 1 || dt == -1));
    CHECK(congruence(red.transform, G.mat()) == red.G_reduced.mat());
    const int n = G.dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j) {
            CHECK(red.gso.L(i, j) <= mpq_class(1, 2));
            CHECK(red.gso.L(i, j) >= mpq_class(-1, 2));
        }
    if (expect_lovasz)
        for (int k = 1; k < n; ++k) {
            mpq_class mu = red.gso.L(k, k - 1);
            CHECK(red.gso.D[k] >= (kDefaultDelta - mu * mu) * red.gso.D[k - 1]);
        }
}

}  // namespace

TEST_CASE("lll_reduce leaves the identity alone") {
    GramMatrix I4 = validate_gram(IntMatrix::identity(4));
    ReducedBasisData red = lll_reduce(I4);
    CHECK(red.G_reduced.mat() == IntMatrix::identity(4));
    CHECK(red.transform == IntMatrix::identity(4));
    check_reduced(I4, red);
}

TEST_CASE("lll_reduce undoes a shear disguise") {
    // congruence([[1,5],[0,1]], I2) = [[1,5],[5,26]]
    GramMatrix G = validate_gram(IntMatrix::from_rows({{1, 5}, {5, 26}}));
    ReducedBasisData red = lll_reduce(G);
    CHECK(red.G_reduced.mat() == IntMatrix::identity(2));
    check_reduced(G, red);
}

TEST_CASE("lll_reduce keeps an already-reduced Gram") {
    GramMatrix G = spd({{2, 1}, {1, 2}});
    ReducedBasisData red = lll_reduce(G);
    CHECK(red.G_reduced.mat() == G.mat());
    check_reduced(G, red);
}

TEST_CASE("lll delta domain") {
    GramMatrix I2 = validate_gram(IntMatrix::identity(2));
    CHECK_THROWS_AS(lll_reduce(I2, mpq_class(1, 4)), Error);
    CHECK_THROWS_AS(lll_reduce(I2, mpq_class(1)), Error);
}

TEST_CASE("svp pinned examples") {
    SvpResult r3 = svp(validate_gram(IntMatrix::identity(3)));
    CHECK(r3.norm2 == 1);
    CHECK(r3.v == IntVector{mpz_class(0), mpz_class(0), mpz_class(1)});

    // minimizers of x^2 + 2xy + 2y^2 = (x+y)^2 + y^2 are {(1,0), (1,-1)} up
    // to sign; (1,-1) is the lexicographically smaller normalized one
    SvpResult r = svp(validate_gram(IntMatrix::from_rows({{1, 1}, {1, 2}})));
    CHECK(r.norm2 == 1);
    CHECK(r.v == IntVector{mpz_class(1), mpz_class(-1)});

    // E8 is even, so the minimum is at least 2; a norm-2 vector exists
    SvpResult e8 = svp(e8_gram());
    CHECK(e8.norm2 == 2);
}

TEST_CASE("svp matches the exhaustive oracle") {
    SplitMix64 rng(31);
    int checked = 0;
    for (std::uint64_t seed = 1; checked < 40; ++seed) {
        int n = 2 + static_cast<int>(rng.below(4));  // n <= 5
        IntMatrix B(n, n);
        for (auto& e : B.a) e = static_cast<long>(rng.below(7)) - 3;
        if (det_bareiss(B) == 0) continue;
        GramMatrix G = GramMatrix::spd(mat_mul(mat_transpose(B), B));
        auto want = oracle::svp_brute(G);
        if (!want) continue;  // box too large for the exhaustive oracle
        SvpResult got = svp(G);
        CHECK(got.norm2 == want->norm2);
        CHECK(got.v == want->v);
        ++checked;
    }
}

TEST_CASE("svp norm is invariant under unimodular disguise") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        GramMatrix G = (seed % 2) ? e8_gram() : yes_instance(5, seed).G;
        GramMatrix D = disguise(G, seed * 101);
        CHECK(svp(G).norm2 == svp(D).norm2);
    }
}

TEST_CASE("cvp pinned examples") {
    GramMatrix I2 = validate_gram(IntMatrix::identity(2));
    CvpResult half = cvp(I2, RatVector{mpq_class(1, 2), mpq_class(1, 2)});
    CHECK(half.dist2 == mpq_class(1, 2));
    CHECK(half.u == IntVector{mpz_class(0), mpz_class(0)});

    CvpResult origin = cvp(I2, RatVector{mpq_class(0), mpq_class(0)});
    CHECK(origin.dist2 == 0);
    CHECK(origin.u == IntVector{mpz_class(0), mpz_class(0)});

    GramMatrix G = validate_gram(IntMatrix::from_rows({{1, 1}, {1, 2}}));
    CvpResult r = cvp(G, RatVector{mpq_class(1, 2), mpq_class(0)});
    auto want = oracle::cvp_brute(G, RatVector{mpq_class(1, 2), mpq_class(0)});
    REQUIRE(want.has_value());
    CHECK(r.dist2 == want->dist2);
    CHECK(r.u == want->u);
    CHECK(r.dist2 == mpq_class(1, 4));
}

TEST_CASE("cvp matches the exhaustive oracle") {
    SplitMix64 rng(37);
    int checked = 0;
    for (std::uint64_t seed = 1; checked < 30; ++seed) {
        int n = 2 + static_cast<int>(rng.below(3));  // n <= 4
        IntMatrix B(n, n);
        for (auto& e : B.a) e = static_cast<long>(rng.below(5)) - 2;
        if (det_bareiss(B) == 0) continue;
        GramMatrix G = GramMatrix::spd(mat_mul(mat_transpose(B), B));
        RatVector t(n);
        for (auto& e : t) {
            long num = static_cast<long>(rng.below(17)) - 8;
            long den = 1 + static_cast<long>(rng.below(4));
            e = mpq_class(num, den);
            e.canonicalize();
        }
        auto want = oracle::cvp_brute(G, t);
        if (!want) continue;  // box too large for the exhaustive oracle
        CvpResult got = cvp(G, t);
        CHECK(got.dist2 == want->dist2);
        CHECK(got.u == want->u);
        ++checked;
    }
}

TEST_CASE("hkz_reduce identity and yes-instances reach the identity") {
    GramMatrix I3 = validate_gram(IntMatrix::identity(3));
    ReducedBasisData red = hkz_reduce(I3);
    CHECK(red.G_reduced.mat() == IntMatrix::identity(3));
    // the transform is some orthogonal integer matrix (a signed permutation)
    CHECK(mat_mul(mat_transpose(red.transform), red.transform) == IntMatrix::identity(3));

    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
        int n = 2 + static_cast<int>(seed % 6);
        GramMatrix G = yes_instance(n, seed).G;
        ReducedBasisData r = hkz_reduce(G);
        CHECK(r.G_reduced.mat() == IntMatrix::identity(n));
        check_reduced(G, r);
    }
}

TEST_CASE("hkz_reduce on E8 exposes the all-2 diagonal") {
    GramMatrix e8 = e8_gram();

    // independent successive-minima check: the lattice is even (minimum >= 2)
    // and carries 8 linearly independent vectors of norm 2
    std::vector<IntVector> roots = oracle::all_short_vectors(e8, 2);
    CHECK(roots.size() == 240);
    CHECK(oracle::rank_of(roots, 8) == 8);

    ReducedBasisData red = hkz_reduce(e8);
    for (int i = 0; i < 8; ++i) CHECK(red.G_reduced.mat()(i, i) == 2);
    check_reduced(e8, red);
}

TEST_CASE("dimension guard") {
    GramMatrix big = GramMatrix::spd(IntMatrix::identity(25));
    CHECK_THROWS_AS(svp(big), DimensionTooLargeError);
    CHECK_THROWS_AS(cvp(big, RatVector(25)), DimensionTooLargeError);
    CHECK_THROWS_AS(hkz_reduce(big), DimensionTooLargeError);
}

TEST_CASE("enumeration stats accumulate") {
    EnumStats st;
    svp(e8_gram(), &st);
    CHECK(st.svp_calls == 1);
    CHECK(st.nodes > 0);
    cvp(validate_gram(IntMatrix::identity(2)), RatVector{mpq_class(1, 2), mpq_class(1, 3)},
        &st);
    CHECK(st.cvp_calls == 1);
}
