#ifndef KOSZULQ_ERRORS_HPP
#define KOSZULQ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace koszulq {

// Exact division was requested but the divisor does not divide the dividend.
struct NotDivisible : std::domain_error {
    explicit NotDivisible(const std::string& what) : std::domain_error(what) {}
};

// A rewriting run exceeded the step bound; the presentation is not PBW-usable.
struct NonTerminating : std::runtime_error {
    explicit NonTerminating(const std::string& what) : std::runtime_error(what) {}
};

// The derived dual rule set failed the overlap check.
struct DualNotPBW : std::runtime_error {
    explicit DualNotPBW(const std::string& what) : std::runtime_error(what) {}
};

// Some commutator of a q-algebra is not divisible by (q-1).
struct NoSemiclassicalLimit : std::runtime_error {
    explicit NoSemiclassicalLimit(const std::string& what) : std::runtime_error(what) {}
};

// A matrix entry connects basis elements of different weights.
struct NotHomogeneous : std::runtime_error {
    explicit NotHomogeneous(const std::string& what) : std::runtime_error(what) {}
};

// class_reduce was handed an element that is not killed by the differential.
struct NotACocycle : std::runtime_error {
    explicit NotACocycle(const std::string& what) : std::runtime_error(what) {}
};

// A generated presentation disagrees with its transcribed fixture.
struct MismatchWithPaperTable : std::runtime_error {
    explicit MismatchWithPaperTable(const std::string& what) : std::runtime_error(what) {}
};

// Input text could not be parsed; carries 1-based line and column.
struct ParseError : std::runtime_error {
    int line;
    int column;
    ParseError(const std::string& what, int line_, int col_)
        : std::runtime_error(what + " (line " + std::to_string(line_) + ", column " +
                             std::to_string(col_) + ")"),
          line(line_), column(col_) {}
};

} // namespace koszulq

#endif
