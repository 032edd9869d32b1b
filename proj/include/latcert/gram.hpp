#pragma once

#include <optional>

#include "latcert/matrix.hpp"

namespace latcert {

// Validated symmetric positive definite integral matrix. The determinant is
// cached at construction; the exact integral inverse is cached when det = 1
// (positive definiteness rules out det = -1).
class GramMatrix {
public:
    // Validates symmetry and positive definiteness only. Use validate_gram
    // for UDP instances, which must additionally be unimodular.
    static GramMatrix spd(IntMatrix M);

    int dim() const { return mat_.rows; }
    const IntMatrix& mat() const { return mat_; }
    const mpz_class& det() const { return det_; }
    bool is_unimodular() const { return det_ == 1; }

    // G^{-1}, integral. Throws NotUnimodularError when det != 1.
    const IntMatrix& inverse() const;

private:
    GramMatrix() = default;
    IntMatrix mat_;
    mpz_class det_;
    std::optional<IntMatrix> inverse_;
};

// The UDP instance validator: symmetric, positive definite, det = 1.
// Error order: NotSquare, NotSymmetric (first offending pair),
// NotPositiveDefinite (first bad pivot), NotUnimodular (with det witness).
GramMatrix validate_gram(const IntMatrix& M);

// B^T B for a nonsingular rational basis given column-wise.
RatMatrix gram_from_basis(const RatMatrix& B);

// Gram matrix of the dual basis: G^{-1}. Requires a unimodular G.
IntMatrix dual_gram(const GramMatrix& G);

// z^T G z (>= 0, zero only at z = 0) and x^T G y.
mpz_class norm_sq(const GramMatrix& G, const IntVector& z);
mpz_class inner(const GramMatrix& G, const IntVector& x, const IntVector& y);

}  // namespace latcert
