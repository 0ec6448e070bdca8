#include "bnkit/error.hpp"

namespace bnkit {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::empty_range: return "EmptyRange";
    case ErrorKind::rho_nonzero: return "RhoNonzero";
    case ErrorKind::out_of_conjecture_range: return "OutOfConjectureRange";
    case ErrorKind::precondition_violation: return "PreconditionViolation";
    case ErrorKind::not_a_core: return "NotACore";
    case ErrorKind::symbol_count_mismatch: return "SymbolCountMismatch";
    case ErrorKind::out_of_regime: return "OutOfRegime";
    case ErrorKind::negative_rank: return "NegativeRank";
    case ErrorKind::index_out_of_range: return "IndexOutOfRange";
    case ErrorKind::degree_mismatch: return "DegreeMismatch";
    case ErrorKind::not_r_positive: return "NotRPositive";
    case ErrorKind::budget_exceeded: return "BudgetExceeded";
    case ErrorKind::rho_negative: return "RhoNegative";
    case ErrorKind::even_degree: return "EvenDegree";
    case ErrorKind::parse_error: return "ParseError";
    }
    return "Unknown";
}

void fail(ErrorKind kind, const std::string& what) {
    throw Error(kind, std::string(to_string(kind)) + ": " + what);
}

} // namespace bnkit
