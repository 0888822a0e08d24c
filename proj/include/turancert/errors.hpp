#pragma once

#include <stdexcept>
#include <string>

namespace turancert {

// Input exceeds a documented size limit (graph order, brute-force range, ...).
struct TooLargeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Eigensolver hit its iteration cap before reaching the requested tolerance.
struct NoConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An exact search exhausted its node budget before settling the question.
struct BudgetExceededError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An edit set is inconsistent with the graph it is applied to.
struct InvalidEditError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Malformed edge-list input; line numbers are 1-based.
struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what), line(line_) {}
};

// The completion pipeline could not produce an edit certificate.
struct ExtractionFailedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace turancert
