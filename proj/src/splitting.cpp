#include "bnkit/splitting.hpp"

#include <algorithm>
#include <numeric>

#include "bnkit/error.hpp"
#include "bnkit/text.hpp"

namespace bnkit {

SplittingType::SplittingType(std::vector<Int> parts) : parts_(std::move(parts)) {
    if (parts_.size() < 2)
        fail(ErrorKind::precondition_violation, "a splitting type needs at least 2 parts");
    std::sort(parts_.begin(), parts_.end());
}

Int SplittingType::sum() const { return std::accumulate(parts_.begin(), parts_.end(), Int{0}); }

SplittingType parse_splitting(std::string_view text) { return SplittingType(parse_int_list(text)); }

std::string format_splitting(const SplittingType& e) { return format_int_list(e.parts()); }

RD rd_from_splitting(Int g, const SplittingType& e) {
    Int sections = 0;
    for (Int part : e.parts()) sections += std::max<Int>(0, part + 1);
    return {sections - 1, e.k() + e.sum() + g - 1};
}

Int rho_splitting(Int g, const SplittingType& e) {
    Int h1_end = 0;
    const auto& p = e.parts();
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) h1_end += std::max<Int>(0, p[i] - p[j] - 1);
    return g - h1_end;
}

std::string_view to_string(MajorizationReason reason) {
    switch (reason) {
    case MajorizationReason::ok: return "ok";
    case MajorizationReason::length_mismatch: return "length_mismatch";
    case MajorizationReason::sum_mismatch: return "sum_mismatch";
    case MajorizationReason::prefix_exceeds: return "prefix_exceeds";
    }
    return "unknown";
}

Majorization majorizes(const SplittingType& outer, const SplittingType& inner) {
    if (outer.k() != inner.k()) return {false, MajorizationReason::length_mismatch};
    if (outer.sum() != inner.sum()) return {false, MajorizationReason::sum_mismatch};
    Int po = 0, pi = 0;
    for (Int j = 1; j <= outer.k(); ++j) {
        po += outer.e(j);
        pi += inner.e(j);
        if (pi > po) return {false, MajorizationReason::prefix_exceeds};
    }
    return {true, MajorizationReason::ok};
}

std::vector<Int> balanced(Int x, Int y) {
    if (x < 1) fail(ErrorKind::precondition_violation, "balanced type needs length >= 1");
    const Int q = floor_div(y, x);
    const Int extra = y - q * x; // number of parts equal to q+1
    std::vector<Int> out(static_cast<std::size_t>(x - extra), q);
    out.insert(out.end(), static_cast<std::size_t>(extra), q + 1);
    return out;
}

std::vector<Int> admissible_l(Int g, Int r, Int d, Int k) {
    std::vector<Int> out;
    for (Int l = std::max<Int>(0, r + 2 - k); l <= r; ++l)
        if (l == 0 || l <= g - d + 2 * r + 1 - k) out.push_back(l);
    return out;
}

std::vector<MaximalType> maximal_splitting_types(Int g, Int r, Int d, Int k) {
    if (k < 2) fail(ErrorKind::precondition_violation, "gonality k must be >= 2");
    if (r < 0) fail(ErrorKind::precondition_violation, "rank must be >= 0");
    if (g - d + r <= 0)
        fail(ErrorKind::out_of_regime, "maximal splitting types need g-d+r > 0, got " +
                                           std::to_string(g - d + r));
    std::vector<MaximalType> out;
    for (Int l : admissible_l(g, r, d, k)) {
        auto parts = balanced(k - r - 1 + l, d - g + 1 - k - l);
        const auto tail = balanced(r + 1 - l, l);
        parts.insert(parts.end(), tail.begin(), tail.end());
        SplittingType w(std::move(parts));
        ensure(rd_from_splitting(g, w) == RD{r, d}, "maximal splitting type has the wrong (r, d)");
        out.push_back({l, std::move(w)});
    }
    return out;
}

HbnPredicates hbn_predicates(const SplittingType& e, Int r) {
    const Int k = e.k();
    HbnPredicates out{};
    out.basepoint_free = e.e(k - 1) >= 0;
    out.very_ample_sufficient = k >= 3 && e.e(k - 2) >= 0 && r >= 3;
    return out;
}

} // namespace bnkit
