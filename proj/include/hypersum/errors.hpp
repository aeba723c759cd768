#ifndef HYPERSUM_ERRORS_HPP
#define HYPERSUM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hypersum {

// Error taxonomy shared by all modules.  Every exception carries a stable
// `kind()` string that verification drivers copy into report records.

class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(what), kind_(std::move(kind)) {}
    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

struct ZeroDenominatorError : Error {
    explicit ZeroDenominatorError(const std::string& what = "zero denominator")
        : Error("ZeroDenominator", what) {}
};

struct SymbolMismatchError : Error {
    explicit SymbolMismatchError(const std::string& what = "operands use different symbol tables")
        : Error("SymbolMismatch", what) {}
};

struct DenominatorVanishesError : Error {
    explicit DenominatorVanishesError(const std::string& what = "denominator vanishes at the given point")
        : Error("DenominatorVanishes", what) {}
};

// A lower Pochhammer factor vanished at an included term index.
struct DenominatorZeroError : Error {
    explicit DenominatorZeroError(unsigned long k)
        : Error("DenominatorZero",
                "lower-parameter Pochhammer factor vanishes at included term index " + std::to_string(k)),
          term_index(k) {}
    unsigned long term_index;
};

struct PoleError : Error {
    explicit PoleError(const std::string& what = "gamma pole at non-positive integer")
        : Error("PoleAtNonPositiveInteger", what) {}
};

struct DegenerateTrigError : Error {
    explicit DegenerateTrigError(const std::string& what = "trigonometric factor vanishes")
        : Error("DegenerateTrig", what) {}
};

struct NoConvergenceError : Error {
    explicit NoConvergenceError(const std::string& what = "series did not converge within max_terms")
        : Error("NoConvergence", what) {}
};

struct InvalidParamsError : Error {
    explicit InvalidParamsError(const std::string& what = "parameters violate preconditions")
        : Error("InvalidParams", what) {}
};

struct NumericInstabilityError : Error {
    explicit NumericInstabilityError(const std::string& what = "cancellation exceeds tolerance budget")
        : Error("NumericInstability", what) {}
};

struct UsageError : Error {
    explicit UsageError(const std::string& what) : Error("Usage", what) {}
};

} // namespace hypersum

#endif
