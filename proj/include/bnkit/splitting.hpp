#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "bnkit/bn_numbers.hpp"

namespace bnkit {

/// Splitting type e_1 <= ... <= e_k (k >= 2) of the pushforward of a line
/// bundle under a degree-k cover of the line. Sorted on construction.
class SplittingType {
public:
    explicit SplittingType(std::vector<Int> parts);

    const std::vector<Int>& parts() const { return parts_; }
    Int k() const { return static_cast<Int>(parts_.size()); }
    Int sum() const;
    // 1-based, matching e_1..e_k
    Int e(Int i) const { return parts_.at(static_cast<std::size_t>(i - 1)); }

    friend bool operator==(const SplittingType&, const SplittingType&) = default;
    friend auto operator<=>(const SplittingType&, const SplittingType&) = default;

private:
    std::vector<Int> parts_;
};

SplittingType parse_splitting(std::string_view text);
std::string format_splitting(const SplittingType& e);

struct RD {
    Int r;
    Int d;
    friend bool operator==(const RD&, const RD&) = default;
};

/// d = k + sum(e) + g - 1, r = sum(max(0, e_i + 1)) - 1.
///
/// r counts sections of O(e_1) + ... + O(e_k) on the line, which is why the
/// summand is max(0, e_i + 1). The form max(0, e_i - 1) would put the two
/// components of the trigonal genus-5 W^1_4 at r = -1 and 0.
RD rd_from_splitting(Int g, const SplittingType& e);

/// g - sum_{i>j} max(0, e_i - e_j - 1).
Int rho_splitting(Int g, const SplittingType& e);

enum class MajorizationReason { ok, length_mismatch, sum_mismatch, prefix_exceeds };

struct Majorization {
    bool holds;
    MajorizationReason reason;
    explicit operator bool() const { return holds; }
};

std::string_view to_string(MajorizationReason reason);

/// True iff every prefix sum of inner is <= that of outer, i.e. the splitting
/// locus of inner lies in that of outer. Types of different length or sum are
/// never comparable.
Majorization majorizes(const SplittingType& outer, const SplittingType& inner);

/// Balanced type of length x and sum y: parts differ by at most one.
std::vector<Int> balanced(Int x, Int y);

struct MaximalType {
    Int l;
    SplittingType type;
};

/// The l-range for maximal splitting types in W^r_d of a general k-gonal
/// curve: max(0, r+2-k) <= l <= r, and l = 0 or l <= g-d+2r+1-k.
std::vector<Int> admissible_l(Int g, Int r, Int d, Int k);

/// w_{r,l} = b(k-r-1+l, d-g+1-k-l) + b(r+1-l, l), re-sorted, for each
/// admissible l. Only defined when g-d+r > 0.
std::vector<MaximalType> maximal_splitting_types(Int g, Int r, Int d, Int k);

struct HbnPredicates {
    bool basepoint_free;
    // Sufficient condition only; false does not mean "not very ample".
    bool very_ample_sufficient;
};

/// basepoint_free: e_{k-1} >= 0. very_ample_sufficient: e_{k-2} >= 0 and r >= 3
/// (needs k >= 3 for e_{k-2} to exist).
HbnPredicates hbn_predicates(const SplittingType& e, Int r);

} // namespace bnkit
