#include "latcert/decide.hpp"

#include <algorithm>
#include <chrono>

#include "latcert/characteristic.hpp"
#include "latcert/exact_linalg.hpp"

namespace latcert {

namespace {

using Clock = std::chrono::steady_clock;

void check_instance(const GramMatrix& G) {
    if (G.dim() > kMaxEnumDim) throw DimensionTooLargeError(G.dim(), kMaxEnumDim);
    if (!G.is_unimodular()) throw NotUnimodularError(G.det().get_str());
}

Decision finish(Answer answer, Certificate cert, Route route, const GramMatrix& G,
                const EnumStats& es, Clock::time_point t0) {
    if (!verify_certificate(G, cert))
        throw InternalInconsistencyError("emitted certificate failed its own verifier");
    DecisionStats stats;
    stats.enum_nodes = es.nodes;
    stats.svp_calls = es.svp_calls;
    stats.cvp_calls = es.cvp_calls;
    stats.elapsed_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
    return Decision{answer, std::move(cert), route, stats};
}

// Left-multiplying U by a signed permutation preserves U^T U. Pick the
// representative with sign-normalized rows in descending lexicographic
// order; the identity instance then gets the identity witness.
IntMatrix canonicalize_witness(const IntMatrix& U) {
    std::vector<IntVector> rows(U.rows);
    for (int i = 0; i < U.rows; ++i) {
        IntVector r(U.cols);
        for (int j = 0; j < U.cols; ++j) r[j] = U(i, j);
        for (const auto& e : r) {
            if (e == 0) continue;
            if (e < 0)
                for (auto& x : r) x = -x;
            break;
        }
        rows[i] = std::move(r);
    }
    std::sort(rows.begin(), rows.end(),
              [](const IntVector& a, const IntVector& b) { return lex_less(b, a); });
    IntMatrix out(U.rows, U.cols);
    for (int i = 0; i < U.rows; ++i)
        for (int j = 0; j < U.cols; ++j) out(i, j) = rows[i][j];
    return out;
}

// Shared YES path: HKZ must reach the identity Gram; U = transform^{-1}.
YesCertificate materialize_witness(const GramMatrix& G, EnumStats& es) {
    ReducedBasisData red = hkz_reduce(G, &es);
    if (red.G_reduced.mat() != IntMatrix::identity(G.dim()))
        throw InternalInconsistencyError(
            "no short characteristic vector exists but HKZ did not reach the identity; "
            "this contradicts Elkies' criterion");
    return YesCertificate{canonicalize_witness(inverse_unimodular(red.transform))};
}

}  // namespace

Decision decide_elkies(const GramMatrix& G) {
    check_instance(G);
    const auto t0 = Clock::now();
    EnumStats es;
    // value first: yes-instances have 2^n minimal coset members, and only
    // the comparison against n is needed to branch
    mpz_class m = min_characteristic_norm(G, &es);
    if (m < G.dim()) {
        MinCharacteristic mc = min_characteristic(G, &es);
        if (mc.norm2 != m)
            throw InternalInconsistencyError("coset minimum changed between passes");
        return finish(Answer::kNo, NoCertificate{std::move(mc.z)}, Route::kElkies, G, es, t0);
    }
    if (m != G.dim())
        throw InternalInconsistencyError(
            "minimal characteristic norm exceeds the dimension; this contradicts the "
            "standard-lattice minimum");
    return finish(Answer::kYes, materialize_witness(G, es), Route::kElkies, G, es, t0);
}

Decision decide_hkz(const GramMatrix& G) {
    check_instance(G);
    const auto t0 = Clock::now();
    EnumStats es;
    ReducedBasisData red = hkz_reduce(G, &es);
    if (red.G_reduced.mat() == IntMatrix::identity(G.dim())) {
        YesCertificate cert{canonicalize_witness(inverse_unimodular(red.transform))};
        return finish(Answer::kYes, std::move(cert), Route::kHkz, G, es, t0);
    }
    MinCharacteristic mc = min_characteristic(G, &es);
    if (mc.norm2 >= G.dim())
        throw InternalInconsistencyError(
            "HKZ-reduced Gram is not the identity yet no characteristic vector is short; "
            "this contradicts Elkies' criterion");
    return finish(Answer::kNo, NoCertificate{std::move(mc.z)}, Route::kHkz, G, es, t0);
}

Decision decide(const GramMatrix& G, Route route) {
    switch (route) {
        case Route::kElkies:
            return decide_elkies(G);
        case Route::kHkz:
            return decide_hkz(G);
        case Route::kBoth: {
            Decision e = decide_elkies(G);
            Decision h = decide_hkz(G);
            if (e.answer != h.answer)
                throw RouteDisagreementError(
                    std::string("elkies says ") + (e.answer == Answer::kYes ? "YES" : "NO") +
                    ", hkz says " + (h.answer == Answer::kYes ? "YES" : "NO"));
            e.stats.enum_nodes += h.stats.enum_nodes;
            e.stats.svp_calls += h.stats.svp_calls;
            e.stats.cvp_calls += h.stats.cvp_calls;
            e.stats.elapsed_ms += h.stats.elapsed_ms;
            return e;
        }
    }
    throw Error("unknown route");
}

}  // namespace latcert
