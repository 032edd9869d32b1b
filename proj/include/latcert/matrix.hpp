#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "latcert/errors.hpp"

namespace latcert {

using RatScalar = mpq_class;
using IntVector = std::vector<mpz_class>;
using RatVector = std::vector<mpq_class>;

// Dense arbitrary-precision integer matrix, row-major.
struct IntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<mpz_class> a;

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c) {
        if (r < 1 || c < 1) throw Error("matrix dimensions must be positive");
        a.resize(static_cast<size_t>(r) * c);
    }

    mpz_class& operator()(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const mpz_class& operator()(int i, int j) const {
        return a[static_cast<size_t>(i) * cols + j];
    }

    bool square() const { return rows == cols; }
    bool operator==(const IntMatrix& o) const = default;

    static IntMatrix identity(int n);
    static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);
};

// Dense exact-rational matrix. mpq_class keeps entries in lowest terms with
// positive denominator as long as they are produced by arithmetic operators.
struct RatMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<mpq_class> a;

    RatMatrix() = default;
    RatMatrix(int r, int c) : rows(r), cols(c) {
        if (r < 1 || c < 1) throw Error("matrix dimensions must be positive");
        a.resize(static_cast<size_t>(r) * c);
    }

    mpq_class& operator()(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const mpq_class& operator()(int i, int j) const {
        return a[static_cast<size_t>(i) * cols + j];
    }

    bool square() const { return rows == cols; }
    bool operator==(const RatMatrix& o) const = default;

    static RatMatrix identity(int n);
};

IntMatrix mat_mul(const IntMatrix& A, const IntMatrix& B);
IntMatrix mat_transpose(const IntMatrix& A);
IntVector mat_vec(const IntMatrix& A, const IntVector& v);

// V^T G V. Preserves symmetry of G; det scales by det(V)^2.
IntMatrix congruence(const IntMatrix& V, const IntMatrix& G);

bool is_symmetric(const IntMatrix& M);

RatMatrix rat_mul(const RatMatrix& A, const RatMatrix& B);
RatMatrix rat_transpose(const RatMatrix& A);
RatVector rat_mat_vec(const RatMatrix& A, const RatVector& v);

RatMatrix to_rational(const IntMatrix& M);
// Throws NonIntegralGramError at the first non-integral entry.
IntMatrix to_integral(const RatMatrix& M);

std::string to_string(const IntMatrix& M);
std::string to_string(const IntVector& v);

// floor(q + 1/2): nearest integer, ties rounded up. Deterministic.
mpz_class round_nearest(const mpq_class& q);

// x mod m in {0, ..., m-1} (floor convention), m > 0.
mpz_class floor_mod(const mpz_class& x, unsigned long m);

// Largest m >= 0 with m^2 <= q; requires q >= 0.
mpz_class floor_sqrt(const mpq_class& q);

bool lex_less(const IntVector& a, const IntVector& b);

}  // namespace latcert
