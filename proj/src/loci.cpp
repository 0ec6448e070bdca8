#include "bnkit/loci.hpp"

#include <array>

#include "bnkit/error.hpp"

namespace bnkit {

BNIndex serre_dual(const BNIndex& idx) {
    const Int dual_r = idx.g - idx.d + idx.r - 1;
    if (dual_r < 0)
        fail(ErrorKind::negative_rank, "g-d+r-1 < 0 for " + to_string(idx));
    BNIndex out(idx.g, dual_r, 2 * idx.g - 2 - idx.d);
    ensure(rho(out) == rho(idx), "Serre duality changed rho");
    return out;
}

LocusIndex::LocusIndex(BNIndex idx) : original_(idx), canonical_(idx) {
    if (idx.g < 2) fail(ErrorKind::precondition_violation, "loci need genus >= 2");
    if (idx.r < 1) fail(ErrorKind::precondition_violation, "loci need r >= 1");
    if (idx.d > idx.g - 1) canonical_ = serre_dual(idx);
}

std::vector<Containment> trivial_containments(const BNIndex& idx) {
    std::vector<Containment> out;
    out.push_back({BNIndex(idx.g, idx.r, idx.d + 1), false});
    if (idx.r >= 1) out.push_back({BNIndex(idx.g, idx.r - 1, idx.d - 1), idx.r - 1 == 0});
    return out;
}

namespace {

bool is_listed_exception(const BNIndex& idx) {
    static constexpr std::array<std::array<Int, 3>, 3> exceptions{{{7, 2, 6}, {8, 1, 4}, {9, 2, 7}}};
    for (const auto& e : exceptions)
        if (e[0] == idx.g && e[1] == idx.r && e[2] == idx.d) return true;
    return false;
}

} // namespace

ExpectedMaximal expected_maximal(const BNIndex& idx) {
    if (idx.g < 3) fail(ErrorKind::precondition_violation, "expected maximality needs g >= 3");
    ExpectedMaximal out;
    out.rho = rho(idx);
    out.is_maximal_exception = is_listed_exception(idx);
    const bool proper = out.rho < 0;
    const bool add_ok = rho(BNIndex(idx.g, idx.r, idx.d + 1)) >= 0;
    const bool sub_ok = idx.r >= 1 && rho(BNIndex(idx.g, idx.r - 1, idx.d - 1)) >= 0;
    out.is_expected_maximal = proper && add_ok && sub_ok;
    if (out.is_expected_maximal) {
        out.predicted_degree = ceil_div(idx.r * idx.g, idx.r + 1) + idx.r - 1;
        out.codimension_bounded = -out.rho <= idx.r + 1;
        ensure(out.predicted_degree == idx.d, "expected-maximal degree off the ceiling formula");
        ensure(out.codimension_bounded, "expected-maximal locus with -rho > r+1");
    }
    return out;
}

std::vector<MaximalLocus> enumerate_expected_maximal(Int g) {
    if (g < 3) fail(ErrorKind::precondition_violation, "enumeration needs g >= 3");
    std::vector<MaximalLocus> out;
    for (Int r = 1; r <= g; ++r) {
        for (Int d = 2; d <= g - 1; ++d) {
            const BNIndex idx(g, r, d);
            auto info = expected_maximal(idx);
            if (info.is_expected_maximal) out.push_back({idx, info});
        }
    }
    return out;
}

Int isqrt(Int n) {
    if (n < 0) fail(ErrorKind::precondition_violation, "isqrt of a negative number");
    Int x = 0;
    while ((x + 1) * (x + 1) <= n) ++x;
    return x;
}

} // namespace bnkit
