#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bnkit {

enum class ErrorKind {
    empty_range,
    rho_nonzero,
    out_of_conjecture_range,
    precondition_violation,
    not_a_core,
    symbol_count_mismatch,
    out_of_regime,
    negative_rank,
    index_out_of_range,
    degree_mismatch,
    not_r_positive,
    budget_exceeded,
    rho_negative,
    even_degree,
    parse_error,
};

std::string_view to_string(ErrorKind kind);

// A rejected input: the caller asked for something outside an operation's
// domain. The CLI maps these to exit code 2.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

// A broken internal identity. Never caused by user input; the CLI maps these
// to exit code 3.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Raised by the chain engine when a starred component's aspect is not the
// bundle the star condition forces.
class GenericityViolation : public InvariantViolation {
public:
    using InvariantViolation::InvariantViolation;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& what);

inline void ensure(bool cond, const char* what) {
    if (!cond) throw InvariantViolation(what);
}

} // namespace bnkit
