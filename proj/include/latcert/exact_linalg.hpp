#pragma once

#include "latcert/matrix.hpp"

namespace latcert {

// Exact determinant via Bareiss fraction-free elimination. All intermediate
// values stay integral; every division is exact by the Sylvester identity.
mpz_class det_bareiss(const IntMatrix& M);

// Exact integral inverse of a matrix with det = +-1.
// Bareiss forward elimination on [M | I], then exact rational back
// substitution. Throws NotUnimodularError when |det| != 1.
IntMatrix inverse_unimodular(const IntMatrix& M);

// Unit lower-triangular L and positive diagonal D with A = L D L^T.
// For a Gram matrix this is exactly the Gram-Schmidt data: L's strict lower
// part holds the mu coefficients and D the squared orthogonal-vector norms.
struct LdltDecomposition {
    RatMatrix L;
    RatVector D;
};

// Throws NotSymmetricError / NotPositiveDefiniteError (1-based pivot index).
LdltDecomposition ldlt_rational(const IntMatrix& G);
LdltDecomposition ldlt_of_rational(const RatMatrix& G);

// Solve A x = b for symmetric positive definite A given its LDL^T factors.
RatVector ldlt_solve(const LdltDecomposition& F, const RatVector& b);

// Exact rational determinant (Gaussian elimination with pivoting).
mpq_class rat_det(const RatMatrix& M);

}  // namespace latcert
