#include "latcert/reduction.hpp"

#include <algorithm>
#include <functional>
#include <utility>

namespace latcert {

namespace {

void check_dim(int n) {
    if (n > kMaxEnumDim) throw DimensionTooLargeError(n, kMaxEnumDim);
}

// b_k <- b_k - q * b_j applied to the working Gram, the transform, and the
// mu rows of a current LDL^T factorization (D is unchanged by size reduction).
void apply_translation(RatMatrix& G, IntMatrix& U, LdltDecomposition& F, int k, int j,
                       const mpz_class& q) {
    const int n = G.rows;
    mpq_class qr(q);
    for (int c = 0; c < n; ++c) G(k, c) -= qr * G(j, c);
    for (int r = 0; r < n; ++r) G(r, k) -= qr * G(r, j);
    for (int r = 0; r < U.rows; ++r) U(r, k) -= q * U(r, j);
    for (int i = 0; i <= j; ++i) F.L(k, i) -= qr * F.L(j, i);
}

void swap_basis_vectors(RatMatrix& G, IntMatrix& U, int i, int j) {
    const int n = G.rows;
    for (int c = 0; c < n; ++c) std::swap(G(i, c), G(j, c));
    for (int r = 0; r < n; ++r) std::swap(G(r, i), G(r, j));
    for (int r = 0; r < U.rows; ++r) std::swap(U(r, i), U(r, j));
}

// Depth-first Fincke-Pohst enumeration over the form L D L^T. Visits every
// integer x with (x - t)^T Q (x - t) <= radius2, where the radius shrinks as
// the sink reports improvements. The per-level scan starts at the rounded
// center and zig-zags outward, so each side can be cut off independently.
class Enumerator {
public:
    Enumerator(const LdltDecomposition& F, RatVector target, bool skip_zero)
        : F_(F), t_(std::move(target)), skip_zero_(skip_zero), n_(F.L.rows), x_(n_, 0) {}

    // Sink: (const IntVector& x, const mpq_class& value) -> void. Called for
    // every assignment inside the current radius; the radius shrinks to each
    // strictly better value. With prune_ties set, assignments matching the
    // best value seen so far are cut as well: the minimum value stays exact
    // but only one minimizer is reported. A tie-broken minimizer needs the
    // full scan (cosets of rotated standard lattices have 2^n of them).
    template <class Sink>
    void run(mpq_class radius2, bool prune_ties, Sink&& sink) {
        radius2_ = std::move(radius2);
        prune_ties_ = prune_ties;
        have_candidate_ = false;
        sink_ = [&](const IntVector& x, const mpq_class& val) {
            sink(x, val);
            have_candidate_ = true;
            if (val < radius2_) radius2_ = val;
        };
        dfs(n_ - 1, mpq_class(0));
    }

    std::uint64_t nodes() const { return nodes_; }

private:
    void dfs(int k, const mpq_class& partial) {
        if (k < 0) {
            if (skip_zero_) {
                bool zero = true;
                for (const auto& xi : x_)
                    if (xi != 0) { zero = false; break; }
                if (zero) return;
            }
            sink_(x_, partial);
            return;
        }
        // center of the admissible interval for x_k given the deeper choices
        mpq_class c = -t_[k];
        for (int i = k + 1; i < n_; ++i) {
            const mpq_class& lik = F_.L(i, k);
            if (lik == 0 || (x_[i] == 0 && t_[i] == 0)) continue;
            c += (mpq_class(x_[i]) - t_[i]) * lik;
        }
        const mpz_class start = round_nearest(-c);
        mpz_class up = start, down = start - 1;
        bool up_alive = true, down_alive = true, take_up = true;
        mpq_class term;
        while (up_alive || down_alive) {
            mpz_class* xk;
            if (take_up && up_alive) xk = &up;
            else if (down_alive) xk = &down;
            else xk = &up;
            take_up = !take_up;

            term = mpq_class(*xk) + c;
            term *= term;
            term *= F_.D[k];
            term += partial;
            // monotone per side: once over budget, that side stays over
            if (term > radius2_ ||
                (prune_ties_ && have_candidate_ && term == radius2_)) {
                if (xk == &up) up_alive = false; else down_alive = false;
                continue;
            }
            ++nodes_;
            x_[k] = *xk;
            dfs(k - 1, term);
            if (xk == &up) ++up; else --down;
        }
    }

    const LdltDecomposition& F_;
    RatVector t_;
    bool skip_zero_;
    int n_;
    IntVector x_;
    mpq_class radius2_;
    bool prune_ties_ = false;
    bool have_candidate_ = false;
    std::function<void(const IntVector&, const mpq_class&)> sink_;
    std::uint64_t nodes_ = 0;
};

void normalize_sign(IntVector& v) {
    for (const auto& e : v) {
        if (e == 0) continue;
        if (e < 0)
            for (auto& x : v) x = -x;
        return;
    }
}

mpq_class eval_form(const RatMatrix& Q, const RatVector& d) {
    mpq_class s = 0;
    for (int i = 0; i < Q.rows; ++i) {
        if (d[i] == 0) continue;
        mpq_class row = 0;
        for (int j = 0; j < Q.cols; ++j) row += Q(i, j) * d[j];
        s += d[i] * row;
    }
    return s;
}

}  // namespace

namespace detail {

RatReduction lll_engine(RatMatrix G, const mpq_class& delta) {
    if (delta <= mpq_class(1, 4) || delta >= 1)
        throw Error("LLL delta must lie in (1/4, 1)");
    const int n = G.rows;
    IntMatrix U = IntMatrix::identity(n);
    LdltDecomposition F = ldlt_of_rational(G);
    int k = 1;
    std::uint64_t iters = 0;
    while (k < n) {
        if (++iters > 50'000'000)
            throw InternalInconsistencyError("LLL exceeded its iteration guard");
        for (int j = k - 1; j >= 0; --j) {
            // reduce only strictly outside [-1/2, 1/2]; mu = 1/2 stays put
            if (2 * abs(F.L(k, j)) > 1)
                apply_translation(G, U, F, k, j, round_nearest(F.L(k, j)));
        }
        mpq_class mu = F.L(k, k - 1);
        if (F.D[k] >= (delta - mu * mu) * F.D[k - 1]) {
            ++k;
        } else {
            swap_basis_vectors(G, U, k - 1, k);
            F = ldlt_of_rational(G);
            k = std::max(k - 1, 1);
        }
    }
    return RatReduction{std::move(G), std::move(U), std::move(F)};
}

RatSvpResult svp_rational(const RatMatrix& Q, EnumStats* stats) {
    RatReduction red = lll_engine(Q, kDefaultDelta);
    const int n = Q.rows;

    bool have_best = false;
    RatSvpResult best;
    Enumerator en(red.gso, RatVector(n, mpq_class(0)), /*skip_zero=*/true);
    en.run(red.G(0, 0), /*prune_ties=*/false, [&](const IntVector& x, const mpq_class& val) {
        IntVector v = mat_vec(red.T, x);
        normalize_sign(v);
        if (!have_best || val < best.norm2 ||
            (val == best.norm2 && lex_less(v, best.v))) {
            best = RatSvpResult{std::move(v), val};
            have_best = true;
        }
    });
    if (stats) {
        stats->nodes += en.nodes();
        ++stats->svp_calls;
    }
    if (!have_best) throw InternalInconsistencyError("SVP enumeration found no vector");
    return best;
}

CvpResult cvp_rational(const RatMatrix& Q, const RatVector& target, EnumStats* stats,
                       bool prune_ties) {
    const int n = Q.rows;
    if (static_cast<int>(target.size()) != n)
        throw DimensionMismatchError("cvp target has size " + std::to_string(target.size()) +
                                     ", Gram dimension is " + std::to_string(n));
    RatReduction red = lll_engine(Q, kDefaultDelta);
    IntMatrix Tinv = inverse_unimodular(red.T);

    // target in reduced coordinates
    RatVector t(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t[i] += mpq_class(Tinv(i, j)) * target[j];

    // initial radius: distance of the component-wise rounded target
    RatVector d(n);
    for (int i = 0; i < n; ++i) d[i] = mpq_class(round_nearest(t[i])) - t[i];
    mpq_class radius = eval_form(red.G, d);

    bool have_best = false;
    CvpResult best;
    Enumerator en(red.gso, t, /*skip_zero=*/false);
    en.run(radius, prune_ties, [&](const IntVector& y, const mpq_class& val) {
        IntVector u = mat_vec(red.T, y);
        if (!have_best || val < best.dist2 ||
            (val == best.dist2 && lex_less(u, best.u))) {
            best = CvpResult{std::move(u), val};
            have_best = true;
        }
    });
    if (stats) {
        stats->nodes += en.nodes();
        ++stats->cvp_calls;
    }
    if (!have_best) throw InternalInconsistencyError("CVP enumeration found no vector");
    return best;
}

IntMatrix unimodular_with_first_column(const IntVector& s) {
    const int m = static_cast<int>(s.size());
    IntMatrix R = IntMatrix::identity(m);
    IntVector v = s;
    for (int i = 1; i < m; ++i) {
        if (v[i] == 0) continue;
        mpz_class g, a, b;
        mpz_gcdext(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t(), v[0].get_mpz_t(),
                   v[i].get_mpz_t());
        mpz_class p = v[0] / g, q = v[i] / g;
        for (int c = 0; c < m; ++c) {
            mpz_class r0 = a * R(0, c) + b * R(i, c);
            mpz_class ri = -q * R(0, c) + p * R(i, c);
            R(0, c) = r0;
            R(i, c) = ri;
        }
        v[0] = g;
        v[i] = 0;
    }
    if (v[0] == -1) {
        for (int c = 0; c < m; ++c) R(0, c) = -R(0, c);
        v[0] = 1;
    }
    if (v[0] != 1) throw Error("vector is not primitive: gcd=" + v[0].get_str());
    return inverse_unimodular(R);
}

}  // namespace detail

ReducedBasisData lll_reduce(const GramMatrix& G, const mpq_class& delta) {
    detail::RatReduction red = detail::lll_engine(to_rational(G.mat()), delta);
    return ReducedBasisData{GramMatrix::spd(to_integral(red.G)), std::move(red.T),
                            std::move(red.gso)};
}

SvpResult svp(const GramMatrix& G, EnumStats* stats) {
    check_dim(G.dim());
    detail::RatSvpResult r = detail::svp_rational(to_rational(G.mat()), stats);
    if (r.norm2.get_den() != 1)
        throw InternalInconsistencyError("integral form produced a fractional norm");
    return SvpResult{std::move(r.v), r.norm2.get_num()};
}

CvpResult cvp(const GramMatrix& G, const RatVector& target, EnumStats* stats) {
    check_dim(G.dim());
    return detail::cvp_rational(to_rational(G.mat()), target, stats);
}

ReducedBasisData hkz_reduce(const GramMatrix& G, EnumStats* stats) {
    const int n = G.dim();
    check_dim(n);
    IntMatrix U = IntMatrix::identity(n);
    IntMatrix Gw = G.mat();

    for (int i = 0; i < n; ++i) {
        const int m = n - i;

        // Gram form of the lattice projected orthogonally to b_0..b_{i-1}:
        // the Schur complement of the leading i x i block.
        RatMatrix Q(m, m);
        if (i == 0) {
            Q = to_rational(Gw);
        } else {
            RatMatrix A(i, i);
            for (int r = 0; r < i; ++r)
                for (int c = 0; c < i; ++c) A(r, c) = Gw(r, c);
            LdltDecomposition head_f = ldlt_of_rational(A);
            // columns of X = A^{-1} C, C the i x m cross block
            std::vector<RatVector> X(m);
            for (int c = 0; c < m; ++c) {
                RatVector col(i);
                for (int r = 0; r < i; ++r) col[r] = Gw(r, i + c);
                X[c] = ldlt_solve(head_f, col);
            }
            for (int r = 0; r < m; ++r)
                for (int c = 0; c < m; ++c) {
                    mpq_class v(Gw(i + r, i + c));
                    for (int k = 0; k < i; ++k) v -= mpq_class(Gw(k, i + r)) * X[c][k];
                    Q(r, c) = v;
                }
        }

        detail::RatSvpResult sv = detail::svp_rational(Q, stats);

        // rotate the tail so the new b_i projects to the shortest vector
        IntMatrix W = detail::unimodular_with_first_column(sv.v);
        IntMatrix Tfull = IntMatrix::identity(n);
        for (int r = 0; r < m; ++r)
            for (int c = 0; c < m; ++c) Tfull(i + r, i + c) = W(r, c);
        U = mat_mul(U, Tfull);
        Gw = congruence(U, G.mat());

        if (i > 0) {
            // lift: add the head combination minimizing the true norm of b_i
            RatVector cross(i);
            for (int r = 0; r < i; ++r) cross[r] = -mpq_class(Gw(r, i));
            RatMatrix A(i, i);
            for (int r = 0; r < i; ++r)
                for (int c = 0; c < i; ++c) A(r, c) = Gw(r, c);
            RatVector t = ldlt_solve(ldlt_of_rational(A), cross);
            CvpResult lift = detail::cvp_rational(A, t, stats);
            bool moved = false;
            for (int j = 0; j < i; ++j) {
                if (lift.u[j] == 0) continue;
                moved = true;
                for (int r = 0; r < n; ++r) U(r, i) += lift.u[j] * U(r, j);
            }
            if (moved) Gw = congruence(U, G.mat());
        }
    }

    // final size-reduction pass; GSO norms (hence HKZ-ness) are unchanged
    {
        RatMatrix Gr = to_rational(Gw);
        LdltDecomposition F = ldlt_of_rational(Gr);
        for (int i = 1; i < n; ++i)
            for (int j = i - 1; j >= 0; --j) {
                if (2 * abs(F.L(i, j)) > 1)
                    apply_translation(Gr, U, F, i, j, round_nearest(F.L(i, j)));
            }
        Gw = to_integral(Gr);
    }

    LdltDecomposition gso = ldlt_rational(Gw);
    return ReducedBasisData{GramMatrix::spd(std::move(Gw)), std::move(U), std::move(gso)};
}

}  // namespace latcert
