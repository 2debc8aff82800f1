#ifndef STRATA_ERRORS_HPP
#define STRATA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace strata {

struct CompositionMismatch : std::runtime_error {
    explicit CompositionMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct IndexError : std::runtime_error {
    explicit IndexError(const std::string& what) : std::runtime_error(what) {}
};

struct ActionMismatch : std::runtime_error {
    explicit ActionMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct RangeError : std::runtime_error {
    explicit RangeError(const std::string& what) : std::runtime_error(what) {}
};

struct NotRelevant : std::runtime_error {
    explicit NotRelevant(const std::string& what) : std::runtime_error(what) {}
};

struct NotComposable : std::runtime_error {
    explicit NotComposable(const std::string& what) : std::runtime_error(what) {}
};

struct ClosureBudgetExceeded : std::runtime_error {
    explicit ClosureBudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct LawViolation : std::runtime_error {
    explicit LawViolation(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace strata

#endif
