#include "bnkit/bn_numbers.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>

#include "bnkit/error.hpp"

namespace bnkit {

using boost::multiprecision::cpp_rational;

BNIndex::BNIndex(Int genus, Int rank, Int degree) : g(genus), r(rank), d(degree) {
    if (g < 0) fail(ErrorKind::precondition_violation, "genus must be >= 0, got " + std::to_string(g));
    if (r < 0) fail(ErrorKind::precondition_violation, "rank must be >= 0, got " + std::to_string(r));
}

std::string to_string(const BNIndex& idx) {
    std::ostringstream os;
    os << '(' << idx.g << ',' << idx.r << ',' << idx.d << ')';
    return os.str();
}

Int floor_div(Int a, Int b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

Int ceil_div(Int a, Int b) { return -floor_div(-a, b); }

Int rho(const BNIndex& idx) {
    return idx.g - (idx.r + 1) * (idx.g - idx.d + idx.r);
}

namespace {

Int rho_raw(Int g, Int r, Int d) { return g - (r + 1) * (g - d + r); }

Int l_max(const BNIndex& idx) { return std::min(idx.r, idx.g - idx.d + idx.r - 1); }

} // namespace

RhoK rho_k_detail(const BNIndex& idx, Int k) {
    if (k < 2) fail(ErrorKind::precondition_violation, "gonality k must be >= 2");
    const Int top = l_max(idx);
    if (top < 0)
        fail(ErrorKind::empty_range, "min(r, g-d+r-1) < 0 for " + to_string(idx) +
                                         "; the index is outside the special range");
    RhoK best{rho(idx), 0};
    for (Int l = 1; l <= top; ++l) {
        const Int v = rho_raw(idx.g, idx.r - l, idx.d) - l * k;
        if (v > best.value) best = {v, l};
    }
    return best;
}

Int rho_k(const BNIndex& idx, Int k) { return rho_k_detail(idx, k).value; }

Int rho_k_stable_threshold(const BNIndex& idx) {
    const Int top = l_max(idx);
    if (top < 0)
        fail(ErrorKind::empty_range, "min(r, g-d+r-1) < 0 for " + to_string(idx));
    // rho(g, r-l, d) - l*k <= rho(g, r, d)  iff  k >= (rho(g,r-l,d) - rho)/l
    Int threshold = 2;
    const Int base = rho(idx);
    for (Int l = 1; l <= top; ++l)
        threshold = std::max(threshold, ceil_div(rho_raw(idx.g, idx.r - l, idx.d) - base, l));
    return threshold;
}

namespace {

BigInt factorial(Int n) {
    BigInt f = 1;
    for (Int i = 2; i <= n; ++i) f *= i;
    return f;
}

} // namespace

BigInt count_grd(const BNIndex& idx) {
    if (rho(idx) != 0)
        fail(ErrorKind::rho_nonzero, "rho" + to_string(idx) + " = " + std::to_string(rho(idx)));
    const Int cols = idx.g - idx.d + idx.r;
    if (cols < 1)
        fail(ErrorKind::precondition_violation, "g-d+r must be >= 1 for " + to_string(idx));
    cpp_rational value = factorial(idx.g);
    for (Int a = 0; a <= idx.r; ++a)
        value *= cpp_rational(factorial(a), factorial(cols + a));
    ensure(denominator(value) == 1, "count_grd: product formula is not an integer");
    return numerator(value);
}

Int chi_pullback_tangent(const BNIndex& idx) {
    const Int euler = (idx.r + 1) * idx.d - idx.r * (idx.g - 1);
    ensure(euler == rho(idx) + (idx.r + 1) * (idx.r + 1) - 1,
           "chi_pullback_tangent: Euler-sequence and rho forms disagree");
    return euler;
}

BigInt binomial(Int n, Int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigInt result = 1;
    for (Int i = 1; i <= k; ++i) {
        result *= (n - k + i);
        result /= i;
    }
    return result;
}

BigInt hilbert_function(const BNIndex& idx, Int k) {
    if (k < 1) fail(ErrorKind::precondition_violation, "power k must be >= 1");
    const BigInt forms = binomial(k + idx.r, idx.r);
    const BigInt sections = BigInt(k * idx.d + 1 - idx.g);
    return std::min(forms, sections);
}

BigInt smrc_expected_dim(const BNIndex& idx, Int k) {
    const Int p = rho(idx);
    if (idx.g - idx.d + idx.r < 0)
        fail(ErrorKind::out_of_conjecture_range, "g-d+r >= 0 fails for " + to_string(idx));
    if (p < 0)
        fail(ErrorKind::out_of_conjecture_range, "0 <= rho fails for " + to_string(idx));
    if (p >= idx.r - 2)
        fail(ErrorKind::out_of_conjecture_range, "rho < r-2 fails for " + to_string(idx));
    if (k < 2) fail(ErrorKind::out_of_conjecture_range, "k >= 2 fails");
    BigInt gap = binomial(idx.r + k, k) - BigInt(idx.d * k + 1 - idx.g);
    if (gap < 0) gap = -gap;
    return BigInt(p - 1) - gap;
}

InterpolationCount interpolation_points(const BNIndex& idx) {
    if (idx.r < 3)
        fail(ErrorKind::precondition_violation, "interpolation count needs r >= 3, got r = " +
                                                    std::to_string(idx.r));
    if (rho(idx) < 0)
        fail(ErrorKind::precondition_violation, "interpolation count needs rho >= 0 for " +
                                                    to_string(idx));
    static constexpr std::array<std::array<Int, 3>, 4> exceptions{{
        {2, 3, 5}, {4, 3, 6}, {2, 5, 7}, {6, 5, 10}}};

    InterpolationCount out;
    out.formula_value =
        floor_div((idx.r + 1) * idx.d - (idx.r - 3) * (idx.g - 1), idx.r - 1);
    out.is_exception = std::any_of(exceptions.begin(), exceptions.end(), [&](const auto& e) {
        return e[0] == idx.g && e[1] == idx.r && e[2] == idx.d;
    });
    if (!out.is_exception) {
        out.count = out.formula_value;
    } else if (idx.g == 2 && idx.r == 3 && idx.d == 5) {
        // every such curve lies on a quadric, and quadrics pass through 9 points
        out.count = out.formula_value - 1;
    }
    return out;
}

} // namespace bnkit
