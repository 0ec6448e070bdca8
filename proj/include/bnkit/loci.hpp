#pragma once

#include <vector>

#include "bnkit/bn_numbers.hpp"

namespace bnkit {

/// (g, r, d) -> (g, g-d+r-1, 2g-2-d). Involutive and rho-preserving.
BNIndex serre_dual(const BNIndex& idx);

/// A Brill-Noether locus M^r_{g,d}. The stored index is normalized to
/// d <= g-1 through Serre duality; the index it was built from is kept for
/// display.
class LocusIndex {
public:
    explicit LocusIndex(BNIndex idx);

    const BNIndex& index() const { return canonical_; }
    const BNIndex& original() const { return original_; }
    bool was_dualized() const { return !(canonical_ == original_); }

private:
    BNIndex original_;
    BNIndex canonical_;
};

struct Containment {
    BNIndex target;
    // r = 0: the target is all of M_g
    bool full_moduli;
};

/// Adding a point, M^r_{g,d} in M^r_{g,d+1}; subtracting a general point,
/// M^r_{g,d} in M^{r-1}_{g,d-1}.
std::vector<Containment> trivial_containments(const BNIndex& idx);

struct ExpectedMaximal {
    bool is_expected_maximal = false;
    bool is_maximal_exception = false;
    Int rho = 0;
    // Filled when is_expected_maximal: ceil(rg/(r+1)) + r - 1, which must
    // equal d, and whether -rho <= r+1.
    Int predicted_degree = 0;
    bool codimension_bounded = false;
};

/// rho(g,r,d) < 0, rho(g,r,d+1) >= 0 and rho(g,r-1,d-1) >= 0, with the three
/// triples where an expected-maximal locus is not maximal flagged.
ExpectedMaximal expected_maximal(const BNIndex& idx);

struct MaximalLocus {
    BNIndex index;
    ExpectedMaximal info;
};

/// All expected-maximal (r, d) for genus g with 2 <= d <= g-1 and r >= 1.
std::vector<MaximalLocus> enumerate_expected_maximal(Int g);

Int isqrt(Int n);

} // namespace bnkit
