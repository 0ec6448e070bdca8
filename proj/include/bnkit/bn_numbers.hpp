#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace bnkit {

using Int = std::int64_t;
using BigInt = boost::multiprecision::cpp_int;

/// Index (g, r, d) of a Brill-Noether problem: genus, projective dimension,
/// degree. Genus and rank are nonnegative; the degree is unrestricted because
/// every formula below is polynomial in it.
struct BNIndex {
    Int g = 0;
    Int r = 0;
    Int d = 0;

    BNIndex() = default;
    BNIndex(Int genus, Int rank, Int degree);

    friend bool operator==(const BNIndex&, const BNIndex&) = default;
    friend auto operator<=>(const BNIndex&, const BNIndex&) = default;
};

std::string to_string(const BNIndex& idx);

/// g - (r+1)(g-d+r).
Int rho(const BNIndex& idx);

/// max over l in [0, min(r, g-d+r-1)] of rho(g, r-l, d) - l*k, with the
/// smallest l attaining it. Throws EmptyRange when the l-range is empty.
struct RhoK {
    Int value;
    Int best_l;
};
RhoK rho_k_detail(const BNIndex& idx, Int k);
Int rho_k(const BNIndex& idx, Int k);

/// Least gonality above which rho_k equals rho; every k >= threshold has
/// rho_k(idx, k) == rho(idx). Requires the same l-range as rho_k.
Int rho_k_stable_threshold(const BNIndex& idx);

/// Number of g^r_d's on a general curve when rho = 0:
/// g! * prod_{a=0..r} a! / (g-d+r+a)!, evaluated as one exact rational.
BigInt count_grd(const BNIndex& idx);

/// chi of the pulled-back tangent bundle, (r+1)d - r(g-1).
Int chi_pullback_tangent(const BNIndex& idx);

BigInt binomial(Int n, Int k);

/// min(binom(k+r, r), kd + 1 - g).
BigInt hilbert_function(const BNIndex& idx, Int k);

/// Expected dimension of the locus where Sym^k H^0(L) -> H^0(L^k) drops rank:
/// rho - 1 - |binom(r+k, k) - (dk + 1 - g)|. Only defined when g-d+r >= 0,
/// 0 <= rho < r-2 and k >= 2.
BigInt smrc_expected_dim(const BNIndex& idx, Int k);

struct InterpolationCount {
    Int formula_value = 0;
    bool is_exception = false;
    // Known exact count; empty for the exceptions whose count is only known
    // to fall below formula_value.
    std::optional<Int> count;
};

/// floor(((r+1)d - (r-3)(g-1)) / (r-1)) for r >= 3 and rho >= 0, with the
/// four exceptional triples flagged.
InterpolationCount interpolation_points(const BNIndex& idx);

Int floor_div(Int a, Int b);
Int ceil_div(Int a, Int b);

} // namespace bnkit
