#include "latcert/gram.hpp"

#include "latcert/exact_linalg.hpp"

namespace latcert {

GramMatrix GramMatrix::spd(IntMatrix M) {
    if (!M.square()) throw NotSquareError(M.rows, M.cols);
    ldlt_rational(M);  // throws NotSymmetric / NotPositiveDefinite
    GramMatrix G;
    G.det_ = det_bareiss(M);
    G.mat_ = std::move(M);
    if (G.det_ == 1) G.inverse_ = inverse_unimodular(G.mat_);
    return G;
}

const IntMatrix& GramMatrix::inverse() const {
    if (!inverse_) throw NotUnimodularError(det_.get_str());
    return *inverse_;
}

GramMatrix validate_gram(const IntMatrix& M) {
    GramMatrix G = GramMatrix::spd(M);
    if (!G.is_unimodular()) throw NotUnimodularError(G.det().get_str());
    return G;
}

RatMatrix gram_from_basis(const RatMatrix& B) {
    if (!B.square()) throw NotSquareError(B.rows, B.cols);
    if (rat_det(B) == 0) throw SingularError();
    return rat_mul(rat_transpose(B), B);
}

IntMatrix dual_gram(const GramMatrix& G) { return G.inverse(); }

mpz_class inner(const GramMatrix& G, const IntVector& x, const IntVector& y) {
    const int n = G.dim();
    if (static_cast<int>(x.size()) != n || static_cast<int>(y.size()) != n)
        throw DimensionMismatchError("inner: vector size does not match Gram dimension " +
                                     std::to_string(n));
    mpz_class s = 0;
    for (int i = 0; i < n; ++i) {
        if (x[i] == 0) continue;
        mpz_class row = 0;
        for (int j = 0; j < n; ++j) row += G.mat()(i, j) * y[j];
        s += x[i] * row;
    }
    return s;
}

mpz_class norm_sq(const GramMatrix& G, const IntVector& z) { return inner(G, z, z); }

}  // namespace latcert
