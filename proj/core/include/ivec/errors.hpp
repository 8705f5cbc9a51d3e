#ifndef IVEC_ERRORS_HPP
#define IVEC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ivec {

/// Malformed text input. Carries the 1-based line number of the offending line
/// (0 when no particular line applies, e.g. truncated input).
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what
                                      : what),
          line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

/// A randomized generator exhausted its retry budget.
class GenerationError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A coloring construction failed to produce a verified result.
class ConstructionError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An exhaustive search ran out of its node/time budget.
class BudgetError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace ivec

#endif
