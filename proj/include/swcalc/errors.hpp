#ifndef SWCALC_ERRORS_HPP
#define SWCALC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace swcalc {

// Violated mathematical hypothesis or inconsistent input data
// (non-spin signature, c1^2 incongruent to sign mod 8, impossible
// descriptor).  The CLI maps this to exit code 1.
class MathConstraintError : public std::runtime_error {
public:
    explicit MathConstraintError(const std::string& what)
        : std::runtime_error(what) {}
};

// A vanishing and a non-vanishing rule fired on the same descriptor.
// The encoded theorems are mutually exclusive on their hypotheses, so
// this certifies the input descriptor was inconsistent.
class RuleConflictError : public std::logic_error {
public:
    RuleConflictError(const std::string& vanishing_rule,
                      const std::string& nonvanishing_rule)
        : std::logic_error("rule conflict: [" + vanishing_rule + "] vs [" +
                           nonvanishing_rule + "]"),
          vanishing(vanishing_rule),
          nonvanishing(nonvanishing_rule) {}

    std::string vanishing;
    std::string nonvanishing;
};

// Malformed ring expression; `position` is a byte offset into the input.
class ExprParseError : public std::invalid_argument {
public:
    ExprParseError(const std::string& what, std::size_t position)
        : std::invalid_argument(what + " (at position " +
                                std::to_string(position) + ")"),
          position(position) {}

    std::size_t position;
};

}  // namespace swcalc

#endif
