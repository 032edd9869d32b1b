#pragma once

#include <stdexcept>
#include <string>

namespace latcert {

// Base class for all latcert errors. Subclasses carry the witness of the
// failed precondition (offending entry pair, pivot index, determinant, ...).
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct NotSquareError : Error {
    int rows, cols;
    NotSquareError(int r, int c)
        : Error("matrix is not square: " + std::to_string(r) + "x" + std::to_string(c)),
          rows(r), cols(c) {}
};

struct NotSymmetricError : Error {
    int i, j;  // first mismatched pair, 0-based, i < j
    NotSymmetricError(int i_, int j_)
        : Error("matrix is not symmetric: entries (" + std::to_string(i_) + "," +
                std::to_string(j_) + ") and (" + std::to_string(j_) + "," +
                std::to_string(i_) + ") differ"),
          i(i_), j(j_) {}
};

struct NotPositiveDefiniteError : Error {
    int pivot;  // 1-based index of the first non-positive LDL^T pivot
    explicit NotPositiveDefiniteError(int pivot_)
        : Error("matrix is not positive definite: pivot " + std::to_string(pivot_) +
                " is not positive"),
          pivot(pivot_) {}
};

struct NotUnimodularError : Error {
    std::string det;  // decimal determinant
    explicit NotUnimodularError(const std::string& det_)
        : Error("matrix is not unimodular: det=" + det_), det(det_) {}
};

struct SingularError : Error {
    SingularError() : Error("matrix is singular") {}
};

struct NonIntegralGramError : Error {
    int i, j;
    NonIntegralGramError(int i_, int j_)
        : Error("Gram matrix is not integral at entry (" + std::to_string(i_) + "," +
                std::to_string(j_) + ")"),
          i(i_), j(j_) {}
};

struct DimensionMismatchError : Error {
    explicit DimensionMismatchError(const std::string& what)
        : Error("dimension mismatch: " + what) {}
};

struct DimensionTooLargeError : Error {
    int n, limit;
    DimensionTooLargeError(int n_, int limit_)
        : Error("dimension " + std::to_string(n_) + " exceeds the supported limit " +
                std::to_string(limit_)),
          n(n_), limit(limit_) {}
};

struct EntryBoundViolatedError : Error {
    int i, j;
    EntryBoundViolatedError(int i_, int j_)
        : Error("certificate entry (" + std::to_string(i_) + "," + std::to_string(j_) +
                ") exceeds the max sqrt(G_ii) bound"),
          i(i_), j(j_) {}
};

// A proved theorem was contradicted at runtime. Always a bug; never swallowed.
struct InternalInconsistencyError : Error {
    explicit InternalInconsistencyError(const std::string& what)
        : Error("internal inconsistency: " + what) {}
};

struct RouteDisagreementError : Error {
    explicit RouteDisagreementError(const std::string& what)
        : Error("decision routes disagree: " + what) {}
};

struct ParseError : Error {
    int line;            // 1-based line number in the input document
    std::string detail;  // message without the location prefix
    ParseError(int line_, const std::string& what)
        : Error("parse error at line " + std::to_string(line_) + ": " + what),
          line(line_), detail(what) {}
};

}  // namespace latcert
