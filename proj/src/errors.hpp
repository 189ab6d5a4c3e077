#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace liesym {

// Position of a token in parser input. Line and column are 1-based,
// offset is a 0-based byte offset.
struct SourceSpan {
    int line = 0;
    int column = 0;
    size_t offset = 0;
    size_t length = 1;

    std::string describe() const {
        return "line " + std::to_string(line) + ", column " + std::to_string(column) +
               " (byte " + std::to_string(offset) + ")";
    }
};

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed textual input (expression grammar, .sys/.vf files).
struct ParseError : Error {
    ParseError(const SourceSpan& s, const std::string& msg)
        : Error(msg + " at " + s.describe()), span(s), message(msg) {}
    SourceSpan span;
    std::string message;
};

// A system violating the nondegeneracy requirement F2 != 0.
struct DegenerateError : Error {
    using Error::Error;
};

// A division required by the elimination path has an identically zero
// divisor; carries the offending pivot.
struct PivotVanishesError : Error {
    PivotVanishesError(const std::string& sym, const std::string& pivot)
        : Error("pivot vanishes while solving for " + sym + ": divisor " + pivot +
                " is identically zero"),
          symbol(sym),
          pivot_polynomial(pivot) {}
    std::string symbol;
    std::string pivot_polynomial;
};

// The reduction-table completion stalled; lists the symbols left unreduced.
struct IncompleteError : Error {
    explicit IncompleteError(std::vector<std::string> syms)
        : Error(make_message(syms)), symbols(std::move(syms)) {}
    std::vector<std::string> symbols;

private:
    static std::string make_message(const std::vector<std::string>& syms) {
        std::string m = "reduction table incomplete; unreduced symbols:";
        for (const auto& s : syms) m += " " + s;
        return m;
    }
};

// A bracket of two basis fields left the candidate algebra.
struct NotClosedError : Error {
    NotClosedError(size_t i_, size_t j_, const std::string& residual_)
        : Error("bracket [e" + std::to_string(i_ + 1) + ", e" + std::to_string(j_ + 1) +
                "] lies outside the span; residual " + residual_),
          i(i_),
          j(j_),
          residual(residual_) {}
    size_t i, j;
    std::string residual;
};

// Internal invariant violation (a kernel bug, not a user error).
struct KernelError : Error {
    using Error::Error;
};

}  // namespace liesym
