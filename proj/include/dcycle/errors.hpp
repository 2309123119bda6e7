#pragma once

#include <stdexcept>
#include <string>

namespace dcycle {

/// Base class for all library errors.  `code()` is a stable, machine-readable
/// identifier; `what()` carries the human-readable details.
class Error : public std::runtime_error {
public:
    Error(const char* code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    const char* code() const noexcept { return code_; }

private:
    const char* code_;
};

struct InvalidFacet : Error {
    explicit InvalidFacet(const std::string& m) : Error("invalid-facet", m) {}
};

struct EmptyComplex : Error {
    explicit EmptyComplex(const std::string& m) : Error("empty-complex", m) {}
};

struct UnknownVertex : Error {
    explicit UnknownVertex(const std::string& m) : Error("unknown-vertex", m) {}
};

struct ForeignFace : Error {
    explicit ForeignFace(const std::string& m) : Error("foreign-face", m) {}
};

struct ChainMismatch : Error {
    explicit ChainMismatch(const std::string& m) : Error("chain-mismatch", m) {}
};

struct EmptySupport : Error {
    explicit EmptySupport(const std::string& m) : Error("empty-support", m) {}
};

struct DimensionRange : Error {
    explicit DimensionRange(const std::string& m) : Error("dimension-range", m) {}
};

struct OracleTooLarge : Error {
    explicit OracleTooLarge(const std::string& m) : Error("oracle-too-large", m) {}
};

struct NotPure : Error {
    explicit NotPure(const std::string& m) : Error("not-pure", m) {}
};

struct NotACycle : Error {
    explicit NotACycle(const std::string& m) : Error("not-a-cycle", m) {}
};

struct VertexClash : Error {
    explicit VertexClash(const std::string& m) : Error("vertex-clash", m) {}
};

struct TooFewVertices : Error {
    explicit TooFewVertices(const std::string& m) : Error("too-few-vertices", m) {}
};

struct SearchBudgetExceeded : Error {
    explicit SearchBudgetExceeded(const std::string& m) : Error("search-budget-exceeded", m) {}
};

struct IncompleteAssignment : Error {
    explicit IncompleteAssignment(const std::string& m) : Error("incomplete-assignment", m) {}
};

struct UnknownEntry : Error {
    explicit UnknownEntry(const std::string& m) : Error("unknown-entry", m) {}
};

struct NotAPrime : Error {
    explicit NotAPrime(const std::string& m) : Error("not-a-prime", m) {}
};

struct ParseError : Error {
    ParseError(const std::string& m, int line = 0)
        : Error("parse-error", line > 0 ? "line " + std::to_string(line) + ": " + m : m),
          line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

struct OperationCancelled : Error {
    explicit OperationCancelled(const std::string& m) : Error("cancelled", m) {}
};

/// Internal invariant violation; thrown when a result that is guaranteed by
/// construction fails its re-check.
struct InternalCheckFailure : Error {
    explicit InternalCheckFailure(const std::string& m) : Error("internal-check", m) {}
};

} // namespace dcycle
