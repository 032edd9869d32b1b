#include "latcert/matrix_io.hpp"

#include <istream>
#include <sstream>

namespace latcert {

namespace io_detail {

std::vector<Token> tokenize(std::istream& in) {
    std::vector<Token> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) out.push_back(Token{tok, lineno});
    }
    return out;
}

mpz_class parse_integer(const Token& t) {
    mpz_class v;
    if (mpz_set_str(v.get_mpz_t(), t.text.c_str(), 10) != 0)
        throw ParseError(t.line, "expected a decimal integer, got '" + t.text + "'");
    return v;
}

int parse_small_positive(const Token& t, const char* what) {
    mpz_class v = parse_integer(t);
    if (v < 1 || v > 4096)
        throw ParseError(t.line, std::string(what) + " out of range: " + t.text);
    return static_cast<int>(v.get_si());
}

}  // namespace io_detail

IntMatrix parse_matrix_document(std::istream& in) {
    using namespace io_detail;
    std::vector<Token> toks = tokenize(in);
    if (toks.empty()) throw ParseError(1, "empty matrix document");
    int n = parse_small_positive(toks[0], "matrix dimension");
    const size_t need = 1 + static_cast<size_t>(n) * n;
    if (toks.size() < need)
        throw ParseError(toks.back().line,
                         "matrix document ends early: expected " + std::to_string(need - 1) +
                             " entries for n=" + std::to_string(n) + ", found " +
                             std::to_string(toks.size() - 1));
    if (toks.size() > need)
        throw ParseError(toks[need].line, "trailing data after matrix entries");
    IntMatrix M(n, n);
    for (size_t k = 1; k < need; ++k) M.a[k - 1] = parse_integer(toks[k]);
    return M;
}

IntMatrix parse_matrix_document_string(const std::string& text) {
    std::istringstream is(text);
    return parse_matrix_document(is);
}

std::string write_matrix_document(const IntMatrix& M) {
    std::ostringstream os;
    os << M.rows << '\n' << to_string(M);
    return os.str();
}

}  // namespace latcert
