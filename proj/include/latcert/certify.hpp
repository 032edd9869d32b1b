#pragma once

#include <iosfwd>
#include <string>
#include <variant>

#include "latcert/gram.hpp"

namespace latcert {

// NP-side certificate: a unimodular U with U^T U = G.
struct YesCertificate {
    IntMatrix U;
};

// co-NP-side certificate: a characteristic coefficient vector z with
// z^T G z < n. Sound by Elkies' criterion together with the basis parity
// test.
struct NoCertificate {
    IntVector z;
};

using Certificate = std::variant<YesCertificate, NoCertificate>;

// True iff det(U) = +-1 and U^T U = G exactly. Entries violating
// |U_ij| <= max_i sqrt(G_ii) cannot occur in any valid decomposition and are
// rejected early with EntryBoundViolatedError.
bool verify_yes(const GramMatrix& G, const YesCertificate& cert);

// True iff z passes the parity test and z^T G z < n (strictly; the standard
// lattice itself attains exactly n).
bool verify_no(const GramMatrix& G, const NoCertificate& cert);

// Diagnostic bound check: sum z_k^2 <= (n*M)^(n+1) with M = max |G_ij|.
// verify_no does not depend on it.
bool certificate_size_ok(const GramMatrix& G, const NoCertificate& cert);

bool verify_certificate(const GramMatrix& G, const Certificate& cert);

// Certificate document: "answer: yes|no", "n: <dim>", then "U:" with n rows
// or "z:" with one row. Decimal integers, '#' comments allowed.
std::string write_certificate(const Certificate& cert);
Certificate parse_certificate(std::istream& in);
Certificate parse_certificate_string(const std::string& text);

}  // namespace latcert
