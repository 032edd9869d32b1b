#include "latcert/exact_linalg.hpp"

#include <utility>

namespace latcert {

namespace {

// Fraction-free forward elimination of an n x m augmented matrix (m >= n).
// Returns the permutation sign, or 0 if the left n x n block is singular.
// On success the left block is upper triangular and the division by the
// previous pivot in each update step is exact.
int bareiss_forward(IntMatrix& B, int n) {
    int sign = 1;
    mpz_class prev = 1;
    for (int k = 0; k < n; ++k) {
        if (B(k, k) == 0) {
            int r = -1;
            for (int i = k + 1; i < n; ++i)
                if (B(i, k) != 0) { r = i; break; }
            if (r < 0) return 0;
            for (int j = 0; j < B.cols; ++j) std::swap(B(k, j), B(r, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < B.cols; ++j) {
                mpz_class t = B(i, j) * B(k, k) - B(i, k) * B(k, j);
                mpz_divexact(B(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            B(i, k) = 0;
        }
        prev = B(k, k);
    }
    return sign;
}

}  // namespace

mpz_class det_bareiss(const IntMatrix& M) {
    if (!M.square()) throw NotSquareError(M.rows, M.cols);
    IntMatrix B = M;
    int sign = bareiss_forward(B, M.rows);
    if (sign == 0) return 0;
    return sign * B(M.rows - 1, M.rows - 1);
}

IntMatrix inverse_unimodular(const IntMatrix& M) {
    if (!M.square()) throw NotSquareError(M.rows, M.cols);
    const int n = M.rows;
    mpz_class det = det_bareiss(M);
    if (det != 1 && det != -1) throw NotUnimodularError(det.get_str());

    IntMatrix B(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) B(i, j) = M(i, j);
        B(i, n + i) = 1;
    }
    if (bareiss_forward(B, n) == 0)
        throw InternalInconsistencyError("unimodular matrix hit a zero pivot column");

    IntMatrix inv(n, n);
    RatVector x(n);
    for (int c = 0; c < n; ++c) {
        for (int i = n - 1; i >= 0; --i) {
            mpq_class s = mpq_class(B(i, n + c));
            for (int j = i + 1; j < n; ++j) s -= mpq_class(B(i, j)) * x[j];
            x[i] = s / mpq_class(B(i, i));
        }
        for (int i = 0; i < n; ++i) {
            if (x[i].get_den() != 1)
                throw InternalInconsistencyError("inverse of unimodular matrix not integral");
            inv(i, c) = x[i].get_num();
        }
    }
    return inv;
}

LdltDecomposition ldlt_of_rational(const RatMatrix& G) {
    if (!G.square()) throw NotSquareError(G.rows, G.cols);
    const int n = G.rows;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (G(i, j) != G(j, i)) throw NotSymmetricError(i, j);

    LdltDecomposition F{RatMatrix::identity(n), RatVector(n)};
    for (int j = 0; j < n; ++j) {
        mpq_class d = G(j, j);
        for (int k = 0; k < j; ++k) d -= F.L(j, k) * F.L(j, k) * F.D[k];
        if (d <= 0) throw NotPositiveDefiniteError(j + 1);
        F.D[j] = d;
        for (int i = j + 1; i < n; ++i) {
            mpq_class s = G(i, j);
            for (int k = 0; k < j; ++k) s -= F.L(i, k) * F.L(j, k) * F.D[k];
            F.L(i, j) = s / d;
        }
    }
    return F;
}

LdltDecomposition ldlt_rational(const IntMatrix& G) {
    if (!G.square()) throw NotSquareError(G.rows, G.cols);
    for (int i = 0; i < G.rows; ++i)
        for (int j = i + 1; j < G.cols; ++j)
            if (G(i, j) != G(j, i)) throw NotSymmetricError(i, j);
    return ldlt_of_rational(to_rational(G));
}

RatVector ldlt_solve(const LdltDecomposition& F, const RatVector& b) {
    const int n = F.L.rows;
    if (static_cast<int>(b.size()) != n) throw DimensionMismatchError("ldlt_solve");
    RatVector y(n);
    for (int i = 0; i < n; ++i) {
        mpq_class s = b[i];
        for (int j = 0; j < i; ++j) s -= F.L(i, j) * y[j];
        y[i] = s;
    }
    for (int i = 0; i < n; ++i) y[i] /= F.D[i];
    for (int i = n - 1; i >= 0; --i) {
        mpq_class s = y[i];
        for (int j = i + 1; j < n; ++j) s -= F.L(j, i) * y[j];
        y[i] = s;
    }
    return y;
}

mpq_class rat_det(const RatMatrix& M) {
    if (!M.square()) throw NotSquareError(M.rows, M.cols);
    RatMatrix A = M;
    const int n = A.rows;
    mpq_class det = 1;
    for (int k = 0; k < n; ++k) {
        if (A(k, k) == 0) {
            int r = -1;
            for (int i = k + 1; i < n; ++i)
                if (A(i, k) != 0) { r = i; break; }
            if (r < 0) return 0;
            for (int j = k; j < n; ++j) std::swap(A(k, j), A(r, j));
            det = -det;
        }
        det *= A(k, k);
        for (int i = k + 1; i < n; ++i) {
            mpq_class f = A(i, k) / A(k, k);
            for (int j = k; j < n; ++j) A(i, j) -= f * A(k, j);
        }
    }
    return det;
}

}  // namespace latcert
