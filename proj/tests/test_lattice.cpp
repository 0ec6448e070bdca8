#include <doctest.h>

#include "bnkit/error.hpp"
#include "bnkit/lattice.hpp"

using namespace bnkit;

TEST_CASE("least degree with rho >= 0") {
    for (Int r = 1; r <= 8; ++r)
        for (Int g = 0; g <= 40; ++g) {
            // scan instead of the closed form
            Int d = 0;
            while (rho(BNIndex(g, r, d)) < 0) ++d;
            CHECK(min_degree(r, g) == d);
        }
}

TEST_CASE("reachable points for r = 3 in the box g <= 8, d <= 9") {
    std::set<LatticePoint> expected;
    const std::vector<std::pair<Int, Int>> first{{0, 3}, {1, 4}, {2, 5}, {3, 6}, {4, 6}, {5, 7}, {6, 8}, {7, 9}, {8, 9}};
    for (const auto& [g, dmin] : first)
        for (Int d = dmin; d <= 9; ++d) expected.insert({d, g});
    CHECK(expected.size() == 33);
    CHECK(reachable_set(3, 8, 9) == expected);
}

TEST_CASE("reachable set is exactly rho >= 0") {
    for (Int r = 1; r <= 6; ++r) {
        const Int g_max = 30;
        const Int d_max = 45;
        const auto reach = reachable_set(r, g_max, d_max);
        for (Int g = 0; g <= g_max; ++g)
            for (Int d = 0; d <= d_max; ++d) {
                const bool want = d >= r && rho(BNIndex(g, r, d)) >= 0;
                CHECK(reach.count({d, g}) == (want ? 1u : 0u));
            }
    }
}

TEST_CASE("move bundles") {
    for (Int r = 3; r <= 8; ++r) {
        CHECK(move_bundle(Move::A, r).h1() == 0);
        CHECK(move_bundle(Move::B, r).h1() == 0);
        CHECK(move_bundle(Move::C, r).h1() == 0);
        CHECK(move_bundle(Move::C, r) == SplitBundle::uniform(r, -1));
        CHECK(tangent_on_line(r).degree() == r + 1);
    }
}

TEST_CASE("certificates for every rho >= 0 point with r <= 6, g <= 20") {
    int count = 0;
    for (Int r = 3; r <= 6; ++r)
        for (Int g = 0; g <= 20; ++g)
            for (Int d = r; d <= 2 * g + r + 4; ++d) {
                if (rho(BNIndex(g, r, d)) < 0) continue;
                const auto c = h1_certificate(r, d, g);
                LatticePoint at{r, 0};
                Int chi = c.base.h0() - c.base.h1();
                for (const auto& st : c.steps) {
                    at = apply_move(st.move, r, at);
                    CHECK(st.after == at);
                    CHECK(st.h1 == 0);
                    CHECK(st.bundle.h0() - st.bundle.h1() == st.bundle.degree() + st.bundle.rank());
                    chi += st.bundle.h0() - st.bundle.h1();
                }
                CHECK(at == LatticePoint{d, g});
                CHECK(chi == c.chi);
                CHECK(chi == (r + 1) * d - r * (g - 1));
                ++count;
            }
    CHECK(count > 500);
}

TEST_CASE("certificate examples") {
    CHECK(h1_certificate(3, 5, 2).moves() == "BB");
    CHECK(h1_certificate(3, 5, 2).chi == 17);
    CHECK(h1_certificate(3, 3, 0).moves().empty());
    CHECK(h1_certificate(3, 6, 4).moves() == "C");
    try {
        h1_certificate(3, 5, 4);
        FAIL("expected RhoNegative");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::rho_negative);
    }
}

TEST_CASE("least degrees") {
    CHECK(min_degree(3, 0) == 3);
    CHECK(min_degree(3, 4) == 6);
    for (Int r = 1; r <= 10; ++r) CHECK(min_degree(r, r + 1) == 2 * r);
}
