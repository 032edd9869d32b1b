#include "latcert/characteristic.hpp"

#include <algorithm>

namespace latcert {

IntVector characteristic_coefficients(const GramMatrix& G) {
    const IntMatrix& inv = G.inverse();  // throws NotUnimodular
    IntVector z(G.dim());
    for (int k = 0; k < G.dim(); ++k) z[k] = floor_mod(inv(k, k), 2);
    return z;
}

bool is_characteristic(const GramMatrix& G, const IntVector& z) {
    const int n = G.dim();
    if (static_cast<int>(z.size()) != n)
        throw DimensionMismatchError("is_characteristic: vector size " +
                                     std::to_string(z.size()) + " vs dimension " +
                                     std::to_string(n));
    for (int k = 0; k < n; ++k) {
        mpz_class row = 0;
        for (int j = 0; j < n; ++j) row += G.mat()(k, j) * z[j];
        if (floor_mod(row - G.mat()(k, k), 2) != 0) return false;
    }
    return true;
}

namespace {

// minimize (z0 + 2u)^T G (z0 + 2u) = (u + z0/2)^T (4G) (u + z0/2)
CvpResult coset_cvp(const GramMatrix& G, const IntVector& z0, EnumStats* stats,
                    bool prune_ties) {
    const int n = G.dim();
    IntMatrix G4 = G.mat();
    for (auto& e : G4.a) e *= 4;
    RatVector target(n);
    for (int i = 0; i < n; ++i) target[i] = mpq_class(-z0[i]) / 2;
    return detail::cvp_rational(to_rational(G4), target, stats, prune_ties);
}

}  // namespace

MinCharacteristic min_characteristic(const GramMatrix& G, EnumStats* stats) {
    const int n = G.dim();
    if (n > kMaxEnumDim) throw DimensionTooLargeError(n, kMaxEnumDim);
    IntVector z0 = characteristic_coefficients(G);
    CvpResult r = coset_cvp(G, z0, stats, /*prune_ties=*/false);
    MinCharacteristic out;
    out.z = std::move(z0);
    for (int i = 0; i < n; ++i) out.z[i] += 2 * r.u[i];
    if (r.dist2.get_den() != 1)
        throw InternalInconsistencyError("characteristic norm came out fractional");
    out.norm2 = r.dist2.get_num();
    if (!is_characteristic(G, out.z))
        throw InternalInconsistencyError("minimal coset member failed the parity test");
    return out;
}

mpz_class min_characteristic_norm(const GramMatrix& G, EnumStats* stats) {
    if (G.dim() > kMaxEnumDim) throw DimensionTooLargeError(G.dim(), kMaxEnumDim);
    IntVector z0 = characteristic_coefficients(G);
    CvpResult r = coset_cvp(G, z0, stats, /*prune_ties=*/true);
    if (r.dist2.get_den() != 1)
        throw InternalInconsistencyError("characteristic norm came out fractional");
    return r.dist2.get_num();
}

std::vector<std::pair<IntVector, mpz_class>> brute_force_characteristic(const GramMatrix& G,
                                                                        int box_radius) {
    const int n = G.dim();
    if (box_radius < 1 || box_radius > kMaxBruteForceRadius)
        throw DimensionTooLargeError(box_radius, kMaxBruteForceRadius);
    // guard on the actual work, not the dimension alone: (2r+1)^n points
    double volume = 1.0;
    for (int k = 0; k < n; ++k) volume *= 2.0 * box_radius + 1.0;
    if (volume > static_cast<double>(kMaxBruteForceBoxVolume))
        throw DimensionTooLargeError(n, kMaxBruteForceRadius);

    std::vector<std::pair<IntVector, mpz_class>> out;
    IntVector z(n, mpz_class(-box_radius));
    while (true) {
        if (is_characteristic(G, z)) out.emplace_back(z, norm_sq(G, z));
        int k = n - 1;
        while (k >= 0 && z[k] == box_radius) z[k--] = -box_radius;
        if (k < 0) break;
        ++z[k];
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second < b.second;
        return lex_less(a.first, b.first);
    });
    return out;
}

int mod8_residue(const GramMatrix& G) {
    IntVector z0 = characteristic_coefficients(G);
    return static_cast<int>(floor_mod(norm_sq(G, z0), 8).get_si());
}

CharCoset char_coset(const GramMatrix& G, bool with_min, EnumStats* stats) {
    CharCoset c;
    c.z0 = characteristic_coefficients(G);
    if (with_min) {
        MinCharacteristic m = min_characteristic(G, stats);
        c.min_vector = std::move(m.z);
        c.min_norm2 = std::move(m.norm2);
    }
    return c;
}

}  // namespace latcert
