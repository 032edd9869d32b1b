#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "latcert/matrix.hpp"

namespace latcert {

// MatrixDocument: first non-comment token is the dimension n, followed by
// n*n whitespace-separated decimal integers. '#' starts a comment anywhere.
IntMatrix parse_matrix_document(std::istream& in);
IntMatrix parse_matrix_document_string(const std::string& text);
std::string write_matrix_document(const IntMatrix& M);

namespace io_detail {

struct Token {
    std::string text;
    int line;  // 1-based
};

// Whitespace-split tokens with comments stripped and line numbers kept.
std::vector<Token> tokenize(std::istream& in);

mpz_class parse_integer(const Token& t);
int parse_small_positive(const Token& t, const char* what);

}  // namespace io_detail

}  // namespace latcert
