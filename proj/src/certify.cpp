#include "latcert/certify.hpp"

#include <istream>
#include <sstream>

#include "latcert/characteristic.hpp"
#include "latcert/exact_linalg.hpp"
#include "latcert/matrix_io.hpp"

namespace latcert {

bool verify_yes(const GramMatrix& G, const YesCertificate& cert) {
    const int n = G.dim();
    if (cert.U.rows != n || cert.U.cols != n)
        throw DimensionMismatchError("certificate U is " + std::to_string(cert.U.rows) + "x" +
                                     std::to_string(cert.U.cols) + ", instance has n=" +
                                     std::to_string(n));
    // |U_ij|^2 <= max_i G_ii, else U^T U = G is impossible
    mpz_class bound = 0;
    for (int i = 0; i < n; ++i)
        if (G.mat()(i, i) > bound) bound = G.mat()(i, i);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (cert.U(i, j) * cert.U(i, j) > bound) throw EntryBoundViolatedError(i, j);

    mpz_class det = det_bareiss(cert.U);
    if (det != 1 && det != -1) return false;
    return mat_mul(mat_transpose(cert.U), cert.U) == G.mat();
}

bool verify_no(const GramMatrix& G, const NoCertificate& cert) {
    const int n = G.dim();
    if (static_cast<int>(cert.z.size()) != n)
        throw DimensionMismatchError("certificate z has size " + std::to_string(cert.z.size()) +
                                     ", instance has n=" + std::to_string(n));
    if (!is_characteristic(G, cert.z)) return false;
    return norm_sq(G, cert.z) < n;
}

bool certificate_size_ok(const GramMatrix& G, const NoCertificate& cert) {
    const int n = G.dim();
    if (static_cast<int>(cert.z.size()) != n)
        throw DimensionMismatchError("certificate z has size " + std::to_string(cert.z.size()) +
                                     ", instance has n=" + std::to_string(n));
    mpz_class M = 0;
    for (const auto& e : G.mat().a) {
        mpz_class m = abs(e);
        if (m > M) M = m;
    }
    mpz_class bound, base = n * M;
    mpz_pow_ui(bound.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(n) + 1);
    mpz_class s = 0;
    for (const auto& zk : cert.z) s += zk * zk;
    return s <= bound;
}

bool verify_certificate(const GramMatrix& G, const Certificate& cert) {
    if (const auto* yes = std::get_if<YesCertificate>(&cert)) return verify_yes(G, *yes);
    return verify_no(G, std::get<NoCertificate>(cert));
}

std::string write_certificate(const Certificate& cert) {
    std::ostringstream os;
    if (const auto* yes = std::get_if<YesCertificate>(&cert)) {
        os << "answer: yes\n" << "n: " << yes->U.rows << "\nU:\n" << to_string(yes->U);
    } else {
        const auto& no = std::get<NoCertificate>(cert);
        os << "answer: no\n" << "n: " << no.z.size() << "\nz:\n" << to_string(no.z) << '\n';
    }
    return os.str();
}

Certificate parse_certificate(std::istream& in) {
    using namespace io_detail;
    std::vector<Token> toks = tokenize(in);
    size_t pos = 0;
    auto next = [&](const char* what) -> const Token& {
        if (pos >= toks.size()) {
            int line = toks.empty() ? 1 : toks.back().line;
            throw ParseError(line, std::string("certificate ends early: expected ") + what);
        }
        return toks[pos++];
    };

    const Token& key_answer = next("'answer:'");
    if (key_answer.text != "answer:")
        throw ParseError(key_answer.line, "expected 'answer:', got '" + key_answer.text + "'");
    const Token& answer = next("'yes' or 'no'");
    bool yes;
    if (answer.text == "yes") yes = true;
    else if (answer.text == "no") yes = false;
    else throw ParseError(answer.line, "answer must be 'yes' or 'no', got '" + answer.text + "'");

    const Token& key_n = next("'n:'");
    if (key_n.text != "n:")
        throw ParseError(key_n.line, "expected 'n:', got '" + key_n.text + "'");
    int n = parse_small_positive(next("dimension"), "certificate dimension");

    const Token& key_body = next(yes ? "'U:'" : "'z:'");
    if (yes) {
        if (key_body.text != "U:")
            throw ParseError(key_body.line, "expected 'U:', got '" + key_body.text + "'");
        IntMatrix U(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) U(i, j) = parse_integer(next("matrix entry"));
        if (pos != toks.size())
            throw ParseError(toks[pos].line, "trailing data after certificate body");
        return YesCertificate{std::move(U)};
    }
    if (key_body.text != "z:")
        throw ParseError(key_body.line, "expected 'z:', got '" + key_body.text + "'");
    IntVector z(n);
    for (int i = 0; i < n; ++i) z[i] = parse_integer(next("vector entry"));
    if (pos != toks.size())
        throw ParseError(toks[pos].line, "trailing data after certificate body");
    return NoCertificate{std::move(z)};
}

Certificate parse_certificate_string(const std::string& text) {
    std::istringstream is(text);
    return parse_certificate(is);
}

}  // namespace latcert
