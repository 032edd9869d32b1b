#include "latcert/matrix.hpp"

#include <sstream>

namespace latcert {

IntMatrix IntMatrix::identity(int n) {
    IntMatrix M(n, n);
    for (int i = 0; i < n; ++i) M(i, i) = 1;
    return M;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
    if (rows.empty()) throw Error("matrix dimensions must be positive");
    IntMatrix M(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (int i = 0; i < M.rows; ++i) {
        if (static_cast<int>(rows[i].size()) != M.cols)
            throw Error("ragged row list");
        for (int j = 0; j < M.cols; ++j) M(i, j) = rows[i][j];
    }
    return M;
}

RatMatrix RatMatrix::identity(int n) {
    RatMatrix M(n, n);
    for (int i = 0; i < n; ++i) M(i, i) = 1;
    return M;
}

IntMatrix mat_mul(const IntMatrix& A, const IntMatrix& B) {
    if (A.cols != B.rows)
        throw DimensionMismatchError("mat_mul " + std::to_string(A.rows) + "x" +
                                     std::to_string(A.cols) + " * " + std::to_string(B.rows) +
                                     "x" + std::to_string(B.cols));
    IntMatrix C(A.rows, B.cols);
    for (int i = 0; i < A.rows; ++i)
        for (int k = 0; k < A.cols; ++k) {
            const mpz_class& aik = A(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < B.cols; ++j) C(i, j) += aik * B(k, j);
        }
    return C;
}

IntMatrix mat_transpose(const IntMatrix& A) {
    IntMatrix T(A.cols, A.rows);
    for (int i = 0; i < A.rows; ++i)
        for (int j = 0; j < A.cols; ++j) T(j, i) = A(i, j);
    return T;
}

IntVector mat_vec(const IntMatrix& A, const IntVector& v) {
    if (A.cols != static_cast<int>(v.size()))
        throw DimensionMismatchError("mat_vec: matrix has " + std::to_string(A.cols) +
                                     " columns, vector has " + std::to_string(v.size()));
    IntVector out(A.rows);
    for (int i = 0; i < A.rows; ++i)
        for (int j = 0; j < A.cols; ++j) out[i] += A(i, j) * v[j];
    return out;
}

IntMatrix congruence(const IntMatrix& V, const IntMatrix& G) {
    if (!G.square()) throw NotSquareError(G.rows, G.cols);
    if (V.rows != G.cols)
        throw DimensionMismatchError("congruence: V has " + std::to_string(V.rows) +
                                     " rows, G is " + std::to_string(G.rows) + "x" +
                                     std::to_string(G.cols));
    return mat_mul(mat_transpose(V), mat_mul(G, V));
}

bool is_symmetric(const IntMatrix& M) {
    if (!M.square()) return false;
    for (int i = 0; i < M.rows; ++i)
        for (int j = i + 1; j < M.cols; ++j)
            if (M(i, j) != M(j, i)) return false;
    return true;
}

RatMatrix rat_mul(const RatMatrix& A, const RatMatrix& B) {
    if (A.cols != B.rows) throw DimensionMismatchError("rat_mul");
    RatMatrix C(A.rows, B.cols);
    for (int i = 0; i < A.rows; ++i)
        for (int k = 0; k < A.cols; ++k) {
            const mpq_class& aik = A(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < B.cols; ++j) C(i, j) += aik * B(k, j);
        }
    return C;
}

RatMatrix rat_transpose(const RatMatrix& A) {
    RatMatrix T(A.cols, A.rows);
    for (int i = 0; i < A.rows; ++i)
        for (int j = 0; j < A.cols; ++j) T(j, i) = A(i, j);
    return T;
}

RatVector rat_mat_vec(const RatMatrix& A, const RatVector& v) {
    if (A.cols != static_cast<int>(v.size())) throw DimensionMismatchError("rat_mat_vec");
    RatVector out(A.rows);
    for (int i = 0; i < A.rows; ++i)
        for (int j = 0; j < A.cols; ++j) out[i] += A(i, j) * v[j];
    return out;
}

RatMatrix to_rational(const IntMatrix& M) {
    RatMatrix R(M.rows, M.cols);
    for (size_t k = 0; k < M.a.size(); ++k) R.a[k] = M.a[k];
    return R;
}

IntMatrix to_integral(const RatMatrix& M) {
    IntMatrix Z(M.rows, M.cols);
    for (int i = 0; i < M.rows; ++i)
        for (int j = 0; j < M.cols; ++j) {
            if (M(i, j).get_den() != 1) throw NonIntegralGramError(i, j);
            Z(i, j) = M(i, j).get_num();
        }
    return Z;
}

std::string to_string(const IntMatrix& M) {
    std::ostringstream os;
    for (int i = 0; i < M.rows; ++i) {
        for (int j = 0; j < M.cols; ++j) {
            if (j) os << ' ';
            os << M(i, j).get_str();
        }
        os << '\n';
    }
    return os.str();
}

std::string to_string(const IntVector& v) {
    std::ostringstream os;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ' ';
        os << v[i].get_str();
    }
    return os.str();
}

mpz_class round_nearest(const mpq_class& q) {
    // floor((2*num + den) / (2*den))
    mpz_class num = 2 * q.get_num() + q.get_den();
    mpz_class den = 2 * q.get_den();
    mpz_class out;
    mpz_fdiv_q(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return out;
}

mpz_class floor_mod(const mpz_class& x, unsigned long m) {
    mpz_class out, mod(static_cast<long>(m));
    mpz_fdiv_r(out.get_mpz_t(), x.get_mpz_t(), mod.get_mpz_t());
    return out;
}

mpz_class floor_sqrt(const mpq_class& q) {
    if (q < 0) throw Error("floor_sqrt of a negative value");
    mpz_class approx_in = q.get_num() / q.get_den();
    mpz_class m;
    mpz_sqrt(m.get_mpz_t(), approx_in.get_mpz_t());
    // correct the truncation: want largest m with m^2 * den <= num
    while ((m + 1) * (m + 1) * q.get_den() <= q.get_num()) ++m;
    while (m > 0 && m * m * q.get_den() > q.get_num()) --m;
    return m;
}

bool lex_less(const IntVector& a, const IntVector& b) {
    for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return a.size() < b.size();
}

}  // namespace latcert
