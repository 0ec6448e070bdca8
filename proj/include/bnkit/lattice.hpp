#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bnkit/bn_numbers.hpp"
#include "bnkit/normal_bundle.hpp"

namespace bnkit {

/// Least d with rho(g, r, d) >= 0: ceil(rg/(r+1)) + r.
Int min_degree(Int r, Int g);

enum class Move : char {
    A = 'A', // attach a 1-secant line: (d, g) -> (d+1, g)
    B = 'B', // attach a 2-secant line: (d, g) -> (d+1, g+1)
    C = 'C', // attach an (r+2)-secant rational normal curve: (d, g) -> (d+r, g+r+1)
};

struct LatticePoint {
    Int d;
    Int g;
    friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

LatticePoint apply_move(Move m, Int r, LatticePoint p);

/// Closure of (r, 0) under the three moves inside d <= d_max, g <= g_max.
std::set<LatticePoint> reachable_set(Int r, Int g_max, Int d_max);

/// T_{P^r} restricted to a line: O(1)^{r-1} + O(2).
SplitBundle tangent_on_line(Int r);
/// T_{P^r} restricted to a rational normal curve: O(r+1)^r.
SplitBundle tangent_on_rational_normal_curve(Int r);

/// Number of points where the attached curve meets the old one.
Int secancy(Move m, Int r);

/// T_{P^r}|_R(-C cap R) for the curve R attached by a move.
SplitBundle move_bundle(Move m, Int r);

struct CertificateStep {
    Move move;
    SplitBundle bundle;
    Int h1;
    LatticePoint after;
};

struct MoveCertificate {
    Int r = 0;
    Int d = 0;
    Int g = 0;
    SplitBundle base;    // T_{P^r} on the starting rational normal curve
    Int base_h1 = 0;
    std::vector<CertificateStep> steps;
    Int chi = 0;         // accumulated along the ledger

    std::string moves() const;
};

/// Move sequence from (r, 0) to (d, g): as many C moves as the genus allows,
/// then B moves for the remaining genus, then A moves for the remaining degree.
/// Each step records the attached bundle and its h^1, which must vanish.
MoveCertificate h1_certificate(Int r, Int d, Int g);

} // namespace bnkit
