#include "bnkit/lattice.hpp"

#include <deque>

#include "bnkit/error.hpp"

namespace bnkit {

Int min_degree(Int r, Int g) {
    if (r < 1 || g < 0) fail(ErrorKind::precondition_violation, "min_degree needs r >= 1 and g >= 0");
    const Int d = ceil_div(r * g, r + 1) + r;
    ensure(rho(BNIndex(g, r, d)) >= 0 && rho(BNIndex(g, r, d - 1)) < 0,
           "min_degree disagrees with the sign change of rho");
    return d;
}

LatticePoint apply_move(Move m, Int r, LatticePoint p) {
    switch (m) {
    case Move::A: return {p.d + 1, p.g};
    case Move::B: return {p.d + 1, p.g + 1};
    case Move::C: return {p.d + r, p.g + r + 1};
    }
    return p;
}

std::set<LatticePoint> reachable_set(Int r, Int g_max, Int d_max) {
    if (r < 1 || g_max < 0 || d_max < 0)
        fail(ErrorKind::precondition_violation, "reachable_set needs r >= 1 and nonnegative bounds");
    std::set<LatticePoint> seen;
    std::deque<LatticePoint> work;
    const LatticePoint start{r, 0};
    if (start.d <= d_max) {
        seen.insert(start);
        work.push_back(start);
    }
    while (!work.empty()) {
        const LatticePoint p = work.front();
        work.pop_front();
        for (Move m : {Move::A, Move::B, Move::C}) {
            const LatticePoint q = apply_move(m, r, p);
            if (q.d > d_max || q.g > g_max) continue;
            if (seen.insert(q).second) work.push_back(q);
        }
    }
    return seen;
}

SplitBundle tangent_on_line(Int r) {
    // 0 -> T_R = O(2) -> T|_R -> N_R = O(1)^{r-1} -> 0 splits
    return SplitBundle::uniform(r - 1, 1).direct_sum(SplitBundle({2}));
}

SplitBundle tangent_on_rational_normal_curve(Int r) {
    const SplitBundle t = SplitBundle::uniform(r, r + 1);
    // Euler sequence: 0 -> O -> O(r)^{r+1} -> T|_R -> 0
    ensure(t.degree() == (r + 1) * r, "rational normal curve tangent degree off the Euler sequence");
    return t;
}

Int secancy(Move m, Int r) {
    switch (m) {
    case Move::A: return 1;
    case Move::B: return 2;
    case Move::C: return r + 2;
    }
    return 0;
}

SplitBundle move_bundle(Move m, Int r) {
    const SplitBundle on_r =
        (m == Move::C) ? tangent_on_rational_normal_curve(r) : tangent_on_line(r);
    const SplitBundle out = on_r.twist(-secancy(m, r));
    SplitBundle listed;
    switch (m) {
    case Move::A: listed = SplitBundle::uniform(r - 1, 0).direct_sum(SplitBundle({1})); break;
    case Move::B: listed = SplitBundle::uniform(r - 1, -1).direct_sum(SplitBundle({0})); break;
    case Move::C: listed = SplitBundle::uniform(r, -1); break;
    }
    ensure(out == listed, "twisted tangent bundle differs from the listed move bundle");
    return out;
}

std::string MoveCertificate::moves() const {
    std::string s;
    for (const auto& st : steps) s += static_cast<char>(st.move);
    return s;
}

MoveCertificate h1_certificate(Int r, Int d, Int g) {
    if (r < 3) fail(ErrorKind::precondition_violation, "h1 certificate needs r >= 3");
    if (g < 0) fail(ErrorKind::precondition_violation, "genus must be >= 0");
    const BNIndex idx(g, r, d);
    if (rho(idx) < 0) fail(ErrorKind::rho_negative, "rho" + to_string(idx) + " = " + std::to_string(rho(idx)));

    // g = b + (r+1)c and d = r + a + b + rc; take c as large as possible
    const Int c = g / (r + 1);
    const Int b = g - (r + 1) * c;
    const Int a = d - r - b - r * c;
    ensure(a >= 0, "rho >= 0 but the greedy move count is negative");

    MoveCertificate cert;
    cert.r = r;
    cert.d = d;
    cert.g = g;
    cert.base = tangent_on_rational_normal_curve(r);
    cert.base_h1 = cert.base.h1();
    ensure(cert.base_h1 == 0, "rational normal curve tangent bundle has h1");
    cert.chi = cert.base.chi();

    LatticePoint at{r, 0};
    auto push = [&](Move m, Int times) {
        for (Int i = 0; i < times; ++i) {
            const SplitBundle bundle = move_bundle(m, r);
            at = apply_move(m, r, at);
            ensure(rho(BNIndex(at.g, r, at.d)) >= 0, "certificate passed through rho < 0");
            cert.steps.push_back({m, bundle, bundle.h1(), at});
            ensure(bundle.h1() == 0, "attached bundle has h1");
            cert.chi += bundle.chi();
        }
    };
    push(Move::C, c);
    push(Move::B, b);
    push(Move::A, a);

    ensure(at.d == d && at.g == g, "move sequence misses the target");
    ensure(cert.chi == chi_pullback_tangent(idx), "ledger chi differs from (r+1)d - r(g-1)");
    return cert;
}

} // namespace bnkit
