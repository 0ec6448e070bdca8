#include <doctest.h>

#include <set>

#include "bnkit/chain.hpp"
#include "bnkit/error.hpp"
#include "oracles.hpp"

using namespace bnkit;

namespace {

LimitLineBundle running() { return parse_limit_bundle("0,4;2,2;0,4", 4); }

DegreeDistribution D(std::vector<Int> v) { return DegreeDistribution(std::move(v)); }

// Every aspect tuple the search would visit, for small windows.
template <class F>
void for_each_bundle(Int g, Int d, Int aspect_window, F f) {
    std::vector<std::vector<Aspect>> choices;
    for (Int i = 1; i <= g; ++i) choices.push_back(aspect_choices(i, g, d, aspect_window));
    std::vector<std::size_t> pos(static_cast<std::size_t>(g), 0);
    while (true) {
        std::vector<Aspect> tuple;
        for (std::size_t k = 0; k < pos.size(); ++k) tuple.push_back(choices[k][pos[k]]);
        f(LimitLineBundle(ChainCurve(g, d), tuple));
        std::size_t k = pos.size();
        while (k-- > 0) {
            if (++pos[k] < choices[k].size()) break;
            pos[k] = 0;
        }
        if (k == static_cast<std::size_t>(-1)) return;
    }
}

} // namespace

TEST_CASE("chip firing") {
    CHECK(chip_fire(D({3, 1, 0}), 2) == D({4, -1, 1}));
    CHECK(chip_fire(D({3, 1, 0}), 1) == D({2, 2, 0}));
    CHECK(chip_fire(D({3, 1, 0}), 3) == D({3, 2, -1}));
    CHECK(prefix_fire(D({4, 0, 0}), 1) == D({3, 1, 0}));
    CHECK_THROWS_AS(chip_fire(D({3, 1, 0}), 4), Error);
    CHECK_THROWS_AS(prefix_fire(D({3, 1, 0}), 3), Error);

    // firing every component is the trivial twist
    DegreeDistribution x = D({2, -1, 5, 0});
    for (Int i = 1; i <= 4; ++i) x = chip_fire(x, i);
    CHECK(x == D({2, -1, 5, 0}));
    // chip_fire(i) = prefix_fire(i) undone by prefix_fire(i-1)
    DegreeDistribution y = D({1, 1, 1, 1});
    for (int step = 0; step < 50; ++step) {
        const Int i = 1 + (step * 7) % 4;
        y = chip_fire(y, i);
        CHECK(y.total() == 4);
    }
}

TEST_CASE("restriction to components") {
    const auto L = running();
    const auto c = restrict_bundle(L, D({3, 0, 1}));
    // component 2 is O(2p1 + 2p2) twisted by (-3, -1): O(-p1 + p2)
    CHECK(c[1].base.a - c[1].u == -1);
    CHECK(c[1].base.b - c[1].v == 1);
    const auto c2 = restrict_bundle(L, D({1, 2, 1}));
    CHECK(c2[1].base.a - c2[1].u == 1);
    CHECK(c2[1].base.b - c2[1].v == 1);
    for (Int i = 1; i <= 3; ++i) {
        const auto ci = restrict_bundle(L, DegreeDistribution::concentrated(3, 4, i))[static_cast<std::size_t>(i - 1)];
        CHECK(ci.u == 0);
        CHECK(ci.v == 0);
    }
    CHECK_THROWS_AS(restrict_bundle(L, D({3, 0, 0})), Error);
}

TEST_CASE("prefix firing composites match the closed-form restriction") {
    const auto L = running();
    DegreeDistribution x = D({4, 0, 0});
    for (int step = 0; step < 40; ++step) {
        const Int i = 1 + step % 2;
        x = prefix_fire(x, i);
        const auto c = restrict_bundle(L, x);
        for (Int j = 1; j <= 3; ++j) {
            CHECK(c[static_cast<std::size_t>(j - 1)].u == x.prefix(j - 1));
            CHECK(c[static_cast<std::size_t>(j - 1)].v == 4 - x.prefix(j));
            CHECK(c[static_cast<std::size_t>(j - 1)].degree() == x.at(j));
        }
    }
}

TEST_CASE("h0 on one component") {
    CHECK(h0_component({Aspect::exact(0, 4), 0, 1}) == 3);
    CHECK(h0_component({Aspect::exact(2, 2), 4, 0}) == 0);
    CHECK(h0_component({Aspect::exact(2, 2), 2, 2}) == 1);
    CHECK(h0_component({Aspect::exact(0, 4), 0, 5}) == 0);
    CHECK(h0_component({Aspect{true, 0, 4}, 1, 3}) == 0);
}

TEST_CASE("h0 of the running example") {
    const auto L = running();
    for (const auto& d : {D({4, 0, 0}), D({3, 0, 1}), D({1, 2, 1})}) {
        CHECK(h0_chain(L, d) == 3);
        CHECK(h0_chain_left_to_right(L, d) == 3);
    }
}

TEST_CASE("aspect serialization") {
    const auto L = running();
    CHECK(L.aspect(3) == Aspect::exact(4, 0));
    CHECK(format_limit_bundle(L) == "0,4;2,2;0,4");
    CHECK(parse_limit_bundle("[0,4; 2,2; 0,4]", 4) == L);
    CHECK(format_limit_bundle(parse_limit_bundle("gen;1,3;gen", 4)) == "gen;1,3;gen");
    CHECK_THROWS_AS(parse_limit_bundle("0,4;2,3;0,4", 4), Error);
    CHECK_THROWS_AS(parse_limit_bundle("1,3;2,2;0,4", 4), Error);
    CHECK_THROWS_AS(parse_limit_bundle("0,4;x;0,4", 4), Error);
}

TEST_CASE("sweeps agree and h0 moves by at most one per firing, g <= 4, d <= 5") {
    Int cases = 0;
    for (Int g = 1; g <= 4; ++g)
        for (Int d = 0; d <= 5; ++d) {
            const Int aw = g <= 3 ? 1 : 0;
            const Int w = g <= 3 ? 2 : 1;
            for_each_bundle(g, d, aw, [&](const LimitLineBundle& L) {
                oracle::for_each_prefix(g, -w, d + w, [&](const std::vector<Int>& s) {
                    const auto dist = DegreeDistribution::from_prefix(s, d);
                    const Int h = h0_chain(L, dist);
                    CHECK(h == h0_chain_left_to_right(L, dist));
                    for (Int i = 1; i < g; ++i) {
                        const Int h2 = h0_chain(L, prefix_fire(dist, i));
                        CHECK(std::abs(h2 - h) <= 1);
                    }
                    ++cases;
                });
            });
        }
    CHECK(cases > 10000);
}

TEST_CASE("min_h0 agrees with exhaustive enumeration") {
    for (Int g = 1; g <= 4; ++g)
        for (Int d = 0; d <= 4; ++d) {
            const Int w = g <= 3 ? 2 : 1;
            for_each_bundle(g, d, g <= 3 ? 1 : 0, [&](const LimitLineBundle& L) {
                const MinH0 fast = min_h0(L, w);
                const auto slow = oracle::min_h0_brute(L, w);
                CHECK(fast.value == slow.value);
                CHECK(fast.witness == slow.witness);
            });
        }
}

TEST_CASE("running example: positivity, window stability, witness") {
    const auto L = running();
    CHECK(min_h0(L, 4).value == 3);
    CHECK(min_h0(L, 8).value == 3);
    CHECK(min_h0(L, 0).value <= h0_chain(L, D({4, 0, 0})));
    CHECK(is_r_positive(L, 2, 4).positive);
    const auto p3 = is_r_positive(L, 3, 4);
    CHECK_FALSE(p3.positive);
    CHECK(h0_chain(L, p3.minimum.witness) == 3);
    const auto one = LimitLineBundle(ChainCurve(1, 1), {Aspect::make_generic()});
    CHECK(is_r_positive(one, 0, 2).positive);
}

TEST_CASE("suffix minima agree with enumeration and drop by at most one") {
    for (Int g = 1; g <= 3; ++g)
        for (Int d = 0; d <= 4; ++d) {
            const Int w = 2;
            for_each_bundle(g, d, 1, [&](const LimitLineBundle& L) {
                const auto m = suffix_minima(L, w);
                for (Int i = 0; i < g; ++i) {
                    const auto& row = m[static_cast<std::size_t>(i)];
                    for (Int alpha = -w; alpha <= d + w; ++alpha) {
                        const Int v = row[static_cast<std::size_t>(alpha + w)];
                        if (i == 0 && alpha != 0) continue;
                        CHECK(v == oracle::suffix_min_brute(L, i, alpha, w));
                        if (alpha > -w) {
                            const Int prev = row[static_cast<std::size_t>(alpha - 1 + w)];
                            CHECK(v <= prev);
                            CHECK(prev - v <= 1);
                        }
                    }
                }
            });
        }
}

TEST_CASE("vanishing tables of the running example") {
    const auto t = vanishing_tables(running(), 2, 4);
    CHECK(t.a[0] == std::vector<Int>{0, 1, 2});
    CHECK(t.a[1] == std::vector<Int>{0, 2, 3});
    CHECK(t.a[2] == std::vector<Int>{1, 2, 4});
    CHECK(t.b[1] == std::vector<Int>{1, 2, 4});
    CHECK(t.b[2] == std::vector<Int>{0, 2, 3});
    CHECK(t.b[3] == std::vector<Int>{0, 1, 2});
    const auto t8 = vanishing_tables(running(), 2, 8);
    CHECK(t8.a == t.a);
    CHECK(t8.b == t.b);
    CHECK_FALSE(lls_violation(running(), t).has_value());
    try {
        vanishing_tables(running(), 3, 4);
        FAIL("expected NotRPositive");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::not_r_positive);
    }
}

TEST_CASE("stars of the running example") {
    const auto rep = star_components(running(), 2, 4);
    REQUIRE(rep.stars.size() == 3);
    CHECK(rep.stars[0] == Star{1, 0, Aspect::exact(0, 4)});
    CHECK(rep.stars[1] == Star{2, 1, Aspect::exact(2, 2)});
    CHECK(rep.stars[2] == Star{3, 2, Aspect::exact(4, 0)});
    CHECK(rep.per_n == std::vector<Int>{1, 1, 1});
    CHECK(rep.required == 1);
}

TEST_CASE("search at desk scale") {
    const auto none = search_limit_bundles(2, 1, 1);
    CHECK(none.count_exact == 0);
    CHECK(none.count_with_generic == 0);

    const auto one = search_limit_bundles(3, 2, 4);
    CHECK(one.count_exact == 1);
    REQUIRE(one.witnesses.size() == 1);
    CHECK(one.witnesses[0] == running());

    const auto trivial = search_limit_bundles(1, 0, 0);
    CHECK(trivial.count_exact == 1);
    CHECK(trivial.count_with_generic == 0);

    CHECK_THROWS_AS(search_limit_bundles(7, 1, 5), Error);
    SearchOptions small;
    small.max_tuples = 10;
    CHECK_THROWS_AS(search_limit_bundles(4, 1, 3, small), Error);
}

TEST_CASE("nonexistence and existence for g <= 4, d <= 6; lls on every witness") {
    for (Int g = 1; g <= 4; ++g)
        for (Int d = 1; d <= 6; ++d)
            for (Int r = 0; r <= 3; ++r) {
                const Int p = rho(BNIndex(g, r, d));
                const auto res = search_limit_bundles(g, r, d);
                CAPTURE(g);
                CAPTURE(r);
                CAPTURE(d);
                CHECK((res.count_exact + res.count_with_generic == 0) == (p < 0));
                if (p == 0) CHECK(BigInt(res.count_exact) == count_grd(BNIndex(g, r, d)));
                for (const auto& L : res.witnesses) {
                    const auto t = vanishing_tables(L, r, res.window);
                    CHECK_FALSE(lls_violation(L, t).has_value());
                    for (Int i = 1; i <= g; ++i)
                        for (Int n = 0; n <= r; ++n)
                            CHECK(t.a[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(n)] +
                                      t.b[static_cast<std::size_t>(i)][static_cast<std::size_t>(r - n)] <=
                                  d);
                    const auto rep = star_components(L, r, res.window);
                    for (Int c : rep.per_n) CHECK(c >= g - d + r);
                }
            }
}

TEST_CASE("search is independent of the thread count and of a doubled distribution window") {
    for (const auto& [g, r, d] : std::vector<std::tuple<Int, Int, Int>>{{3, 1, 3}, {4, 1, 3}, {4, 2, 5}}) {
        SearchOptions base;
        const auto a = search_limit_bundles(g, r, d, base);
        SearchOptions threaded;
        threaded.threads = 3;
        const auto b = search_limit_bundles(g, r, d, threaded);
        CHECK(a.count_exact == b.count_exact);
        CHECK(a.count_with_generic == b.count_with_generic);
        CHECK(a.witnesses == b.witnesses);
        SearchOptions wide;
        wide.window = 2 * a.window;
        wide.aspect_window = a.window;
        const auto c = search_limit_bundles(g, r, d, wide);
        CHECK(a.count_exact == c.count_exact);
        CHECK(a.count_with_generic == c.count_with_generic);
    }
}
