#include "bnkit/chain.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <thread>

#include "bnkit/error.hpp"
#include "bnkit/text.hpp"

namespace bnkit {

namespace {

constexpr Int kInf = std::numeric_limits<Int>::max() / 4;

// Generic aspects carry no coefficients; give them degree d so that
// ComponentBundle::degree stays meaningful.
Aspect with_degree(Aspect asp, Int d) {
    if (asp.generic) {
        asp.a = 0;
        asp.b = d;
    }
    return asp;
}

void check_index(Int i, Int g) {
    if (i < 1 || i > g)
        fail(ErrorKind::index_out_of_range,
             "component " + std::to_string(i) + " outside 1.." + std::to_string(g));
}

} // namespace

ChainCurve::ChainCurve(Int genus, Int degree) : g(genus), d(degree) {
    if (g < 1) fail(ErrorKind::precondition_violation, "a chain needs at least one component");
}

DegreeDistribution::DegreeDistribution(std::vector<Int> degrees) : degrees_(std::move(degrees)) {
    if (degrees_.empty()) fail(ErrorKind::precondition_violation, "degree distribution is empty");
}

Int DegreeDistribution::total() const {
    Int s = 0;
    for (Int x : degrees_) s += x;
    return s;
}

Int DegreeDistribution::at(Int i) const {
    check_index(i, genus());
    return degrees_[static_cast<std::size_t>(i - 1)];
}

Int DegreeDistribution::prefix(Int i) const {
    if (i < 0 || i > genus())
        fail(ErrorKind::index_out_of_range, "prefix index " + std::to_string(i));
    Int s = 0;
    for (Int j = 0; j < i; ++j) s += degrees_[static_cast<std::size_t>(j)];
    return s;
}

DegreeDistribution DegreeDistribution::from_prefix(const std::vector<Int>& interior, Int d) {
    std::vector<Int> out;
    Int prev = 0;
    for (Int s : interior) {
        out.push_back(s - prev);
        prev = s;
    }
    out.push_back(d - prev);
    return DegreeDistribution(std::move(out));
}

DegreeDistribution DegreeDistribution::concentrated(Int g, Int d, Int i) {
    check_index(i, g);
    std::vector<Int> out(static_cast<std::size_t>(g), 0);
    out[static_cast<std::size_t>(i - 1)] = d;
    return DegreeDistribution(std::move(out));
}

std::string format_distribution(const DegreeDistribution& dist) { return format_int_list(dist.degrees()); }

DegreeDistribution parse_distribution(std::string_view text) {
    return DegreeDistribution(parse_int_list(text));
}

DegreeDistribution chip_fire(const DegreeDistribution& dist, Int i) {
    const Int g = dist.genus();
    check_index(i, g);
    std::vector<Int> out = dist.degrees();
    const auto at = [&](Int j) -> Int& { return out[static_cast<std::size_t>(j - 1)]; };
    // E^i meets its neighbours once each; O(E^i) has degree -(#neighbours) on E^i
    if (i > 1) {
        at(i - 1) += 1;
        at(i) -= 1;
    }
    if (i < g) {
        at(i + 1) += 1;
        at(i) -= 1;
    }
    return DegreeDistribution(std::move(out));
}

DegreeDistribution prefix_fire(const DegreeDistribution& dist, Int i) {
    const Int g = dist.genus();
    if (i < 1 || i >= g)
        fail(ErrorKind::index_out_of_range,
             "prefix firing needs 1 <= i <= g-1, got i = " + std::to_string(i));
    std::vector<Int> out = dist.degrees();
    out[static_cast<std::size_t>(i - 1)] -= 1;
    out[static_cast<std::size_t>(i)] += 1;
    return DegreeDistribution(std::move(out));
}

LimitLineBundle::LimitLineBundle(ChainCurve chain, std::vector<Aspect> aspects)
    : chain_(chain), aspects_(std::move(aspects)) {
    if (static_cast<Int>(aspects_.size()) != chain_.g)
        fail(ErrorKind::precondition_violation, "expected " + std::to_string(chain_.g) + " aspects, got " +
                                                    std::to_string(aspects_.size()));
    for (std::size_t k = 0; k < aspects_.size(); ++k) {
        const Aspect& asp = aspects_[k];
        if (asp.generic) continue;
        const Int i = static_cast<Int>(k) + 1;
        if (asp.a + asp.b != chain_.d)
            fail(ErrorKind::degree_mismatch, "aspect " + std::to_string(i) + " has degree " +
                                                 std::to_string(asp.a + asp.b) + ", chain degree is " +
                                                 std::to_string(chain_.d));
        if ((i == 1 && asp.a != 0) || (i == chain_.g && asp.b != 0))
            fail(ErrorKind::precondition_violation,
                 "aspect " + std::to_string(i) + ": free-point coefficients are normalized to 0");
    }
}

const Aspect& LimitLineBundle::aspect(Int i) const {
    check_index(i, chain_.g);
    return aspects_[static_cast<std::size_t>(i - 1)];
}

std::string format_aspect(const Aspect& asp, Int i, Int g) {
    if (asp.generic) return "gen";
    // the last component lists its free point first
    if (i == g && g > 1) return std::to_string(asp.b) + "," + std::to_string(asp.a);
    return std::to_string(asp.a) + "," + std::to_string(asp.b);
}

std::string format_limit_bundle(const LimitLineBundle& L) {
    std::string out;
    for (Int i = 1; i <= L.genus(); ++i) {
        if (i > 1) out += ';';
        out += format_aspect(L.aspect(i), i, L.genus());
    }
    return out;
}

LimitLineBundle parse_limit_bundle(std::string_view text, Int d) {
    std::string body(trim(text));
    if (body.size() >= 2 && body.front() == '[' && body.back() == ']') body = body.substr(1, body.size() - 2);
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t semi = body.find(';', start);
        parts.emplace_back(trim(std::string_view(body).substr(start, semi == std::string::npos ? std::string::npos
                                                                                            : semi - start)));
        if (semi == std::string::npos) break;
        start = semi + 1;
    }
    const Int g = static_cast<Int>(parts.size());
    std::vector<Aspect> aspects;
    for (Int i = 1; i <= g; ++i) {
        const std::string& p = parts[static_cast<std::size_t>(i - 1)];
        if (p == "gen") {
            aspects.push_back(Aspect::make_generic());
            continue;
        }
        const auto xy = parse_int_list(p);
        if (xy.size() != 2)
            fail(ErrorKind::parse_error, "aspect '" + p + "' is neither 'gen' nor 'x,y'");
        if (i == g && g > 1) aspects.push_back(Aspect::exact(xy[1], xy[0]));
        else aspects.push_back(Aspect::exact(xy[0], xy[1]));
    }
    return LimitLineBundle(ChainCurve(g, d), std::move(aspects));
}

Int h0_component(const ComponentBundle& B) {
    const Int deg = B.degree();
    if (deg < 0) return 0;
    if (deg > 0) return deg;
    // degree 0: trivial only when the twist cancels both coefficients exactly
    return (!B.base.generic && B.base.a == B.u && B.base.b == B.v) ? 1 : 0;
}

std::vector<ComponentBundle> restrict_bundle(const LimitLineBundle& L, const DegreeDistribution& dist) {
    if (dist.genus() != L.genus())
        fail(ErrorKind::precondition_violation, "distribution has " + std::to_string(dist.genus()) +
                                                    " entries for a chain of " + std::to_string(L.genus()));
    if (dist.total() != L.degree())
        fail(ErrorKind::degree_mismatch, "distribution total " + std::to_string(dist.total()) +
                                             " differs from degree " + std::to_string(L.degree()));
    std::vector<ComponentBundle> out;
    for (Int i = 1; i <= L.genus(); ++i) {
        ComponentBundle B{with_degree(L.aspect(i), L.degree()), dist.prefix(i - 1), L.degree() - dist.prefix(i)};
        ensure(B.degree() == dist.at(i), "restriction degree differs from the distribution");
        out.push_back(B);
    }
    return out;
}

namespace {

struct Step {
    Int gain; // sections added minus gluing conditions
    int eps;  // rank of evaluation at the far node afterwards
};

// Gluing onto a component through the node at `near`. `eps_in` is the rank of
// evaluation at that node on the part already glued. Twists at the near node
// are (du_near) and at the far node (du_far), expressed through a lambda.
template <class Twist>
Step glue(const ComponentBundle& B, int eps_in, Twist twist) {
    if (eps_in == 1) {
        const Int W = h0_component(B);
        return {W - 1, h0_component(twist(B, 0, 1)) < W ? 1 : 0};
    }
    const Int W = h0_component(twist(B, 1, 0));
    return {W, h0_component(twist(B, 1, 1)) < W ? 1 : 0};
}

// Left-to-right: the near node is p^{i-1}, the far node p^i.
ComponentBundle twist_ltr(const ComponentBundle& B, Int near, Int far) { return B.twisted(near, far); }
// Right-to-left: the near node is p^i, the far node p^{i-1}.
ComponentBundle twist_rtl(const ComponentBundle& B, Int near, Int far) { return B.twisted(far, near); }

Step start(const ComponentBundle& B, bool ltr) {
    const Int n = h0_component(B);
    const ComponentBundle far = ltr ? B.twisted(0, 1) : B.twisted(1, 0);
    return {n, h0_component(far) < n ? 1 : 0};
}

Step step_ltr(const ComponentBundle& B, int eps) { return glue(B, eps, twist_ltr); }
Step step_rtl(const ComponentBundle& B, int eps) { return glue(B, eps, twist_rtl); }

ComponentBundle component(const LimitLineBundle& L, Int i, Int u, Int v) {
    return {with_degree(L.aspect(i), L.degree()), u, v};
}

} // namespace

Int h0_chain(const LimitLineBundle& L, const DegreeDistribution& dist) {
    restrict_bundle(L, dist); // validation
    const Int g = L.genus();
    const Int d = L.degree();
    Step st = start(component(L, g, dist.prefix(g - 1), 0), false);
    Int n = st.gain;
    int eps = st.eps;
    for (Int i = g - 1; i >= 1; --i) {
        const Step s = step_rtl(component(L, i, dist.prefix(i - 1), d - dist.prefix(i)), eps);
        n += s.gain;
        eps = s.eps;
    }
    ensure(n >= 0, "negative section count");
    return n;
}

Int h0_chain_left_to_right(const LimitLineBundle& L, const DegreeDistribution& dist) {
    restrict_bundle(L, dist);
    const Int g = L.genus();
    const Int d = L.degree();
    Step st = start(component(L, 1, 0, d - dist.prefix(1)), true);
    Int n = st.gain;
    int eps = st.eps;
    for (Int i = 2; i <= g; ++i) {
        const Step s = step_ltr(component(L, i, dist.prefix(i - 1), d - dist.prefix(i)), eps);
        n += s.gain;
        eps = s.eps;
    }
    ensure(n >= 0, "negative section count");
    return n;
}

namespace {

void check_window(Int window) {
    if (window < 0) fail(ErrorKind::precondition_violation, "window must be >= 0");
}

} // namespace

MinH0 min_h0(const LimitLineBundle& L, Int window) {
    check_window(window);
    const Int g = L.genus();
    const Int d = L.degree();
    if (g == 1) {
        const DegreeDistribution only({d});
        return {h0_chain(L, only), only};
    }
    const Int lo = -window;
    const Int hi = d + window;
    const Int width = hi - lo + 1;
    const auto idx = [&](Int s) { return static_cast<std::size_t>(s - lo); };

    // togo[i][S_i][eps]: least sections contributed by components i+1..g given
    // the prefix state after component i, 1 <= i <= g-1
    std::vector<std::vector<std::array<Int, 2>>> togo(
        static_cast<std::size_t>(g), std::vector<std::array<Int, 2>>(static_cast<std::size_t>(width), {kInf, kInf}));
    for (Int s = lo; s <= hi; ++s)
        for (int e = 0; e < 2; ++e)
            togo[static_cast<std::size_t>(g - 1)][idx(s)][static_cast<std::size_t>(e)] =
                step_ltr(component(L, g, s, 0), e).gain;
    for (Int i = g - 2; i >= 1; --i) {
        for (Int s = lo; s <= hi; ++s) {
            for (int e = 0; e < 2; ++e) {
                Int best = kInf;
                for (Int t = lo; t <= hi; ++t) {
                    const Step st = step_ltr(component(L, i + 1, s, d - t), e);
                    best = std::min(best, st.gain + togo[static_cast<std::size_t>(i + 1)][idx(t)][static_cast<std::size_t>(st.eps)]);
                }
                togo[static_cast<std::size_t>(i)][idx(s)][static_cast<std::size_t>(e)] = best;
            }
        }
    }

    Int value = kInf;
    for (Int s = lo; s <= hi; ++s) {
        const Step st = start(component(L, 1, 0, d - s), true);
        value = std::min(value, st.gain + togo[1][idx(s)][static_cast<std::size_t>(st.eps)]);
    }

    // lexicographically least prefix sums attaining the minimum
    std::vector<Int> prefix;
    Int spent = 0;
    int eps = 0;
    for (Int s = lo; s <= hi; ++s) {
        const Step st = start(component(L, 1, 0, d - s), true);
        if (st.gain + togo[1][idx(s)][static_cast<std::size_t>(st.eps)] == value) {
            prefix.push_back(s);
            spent = st.gain;
            eps = st.eps;
            break;
        }
    }
    for (Int i = 2; i <= g - 1; ++i) {
        const Int prev = prefix.back();
        bool found = false;
        for (Int t = lo; t <= hi && !found; ++t) {
            const Step st = step_ltr(component(L, i, prev, d - t), eps);
            if (spent + st.gain + togo[static_cast<std::size_t>(i)][idx(t)][static_cast<std::size_t>(st.eps)] == value) {
                prefix.push_back(t);
                spent += st.gain;
                eps = st.eps;
                found = true;
            }
        }
        ensure(found, "minimum witness reconstruction failed");
    }
    MinH0 out{value, DegreeDistribution::from_prefix(prefix, d)};
    ensure(h0_chain(L, out.witness) == value, "minimum witness does not attain the minimum");
    return out;
}

Positivity is_r_positive(const LimitLineBundle& L, Int r, Int window) {
    if (r < 0) fail(ErrorKind::precondition_violation, "r must be >= 0");
    MinH0 m = min_h0(L, window);
    return {m.value >= r + 1, std::move(m)};
}

std::vector<std::vector<Int>> suffix_minima(const LimitLineBundle& L, Int window) {
    check_window(window);
    const Int g = L.genus();
    const Int d = L.degree();
    const Int lo = -window;
    const Int hi = d + window;
    const Int width = hi - lo + 1;
    const auto idx = [&](Int s) { return static_cast<std::size_t>(s - lo); };

    // R[alpha][eps]: least h0 on components j..g given S_{j-1} = alpha, with
    // eps the evaluation rank at p^{j-1}
    std::vector<std::array<Int, 2>> R(static_cast<std::size_t>(width), {kInf, kInf});
    for (Int s = lo; s <= hi; ++s) {
        const Step st = start(component(L, g, s, 0), false);
        R[idx(s)][static_cast<std::size_t>(st.eps)] = st.gain;
    }
    std::vector<std::vector<Int>> m(static_cast<std::size_t>(g), std::vector<Int>(static_cast<std::size_t>(width)));
    const auto record = [&](Int i) {
        for (Int s = lo; s <= hi; ++s)
            m[static_cast<std::size_t>(i)][idx(s)] = std::min(R[idx(s)][0], R[idx(s)][1]);
    };
    record(g - 1);
    for (Int j = g - 1; j >= 1; --j) {
        std::vector<std::array<Int, 2>> next(static_cast<std::size_t>(width), {kInf, kInf});
        for (Int s = lo; s <= hi; ++s) {
            for (Int t = lo; t <= hi; ++t) {
                for (int e = 0; e < 2; ++e) {
                    const Int have = R[idx(t)][static_cast<std::size_t>(e)];
                    if (have >= kInf) continue;
                    const Step st = step_rtl(component(L, j, s, d - t), e);
                    Int& slot = next[idx(s)][static_cast<std::size_t>(st.eps)];
                    slot = std::min(slot, have + st.gain);
                }
            }
        }
        R = std::move(next);
        record(j - 1);
    }
    return m;
}

VanishingTable vanishing_tables(const LimitLineBundle& L, Int r, Int window) {
    const Positivity pos = is_r_positive(L, r, window);
    if (!pos.positive)
        fail(ErrorKind::not_r_positive, "minimum h0 is " + std::to_string(pos.minimum.value) + " at " +
                                            format_distribution(pos.minimum.witness) + ", need " +
                                            std::to_string(r + 1));
    const Int g = L.genus();
    const Int d = L.degree();
    const Int lo = -window;
    const auto m = suffix_minima(L, window);
    ensure(m[0][static_cast<std::size_t>(-lo)] == pos.minimum.value, "suffix and prefix minima disagree");

    VanishingTable t;
    t.g = g;
    t.r = r;
    t.d = d;
    t.window = window;
    const auto rows = static_cast<std::size_t>(r + 1);
    t.a.assign(static_cast<std::size_t>(g), std::vector<Int>(rows));
    t.b.assign(static_cast<std::size_t>(g + 1), std::vector<Int>(rows));
    for (Int n = 0; n <= r; ++n) {
        t.a[0][static_cast<std::size_t>(n)] = n;
        t.b[static_cast<std::size_t>(g)][static_cast<std::size_t>(n)] = n;
    }
    for (Int i = 1; i <= g - 1; ++i) {
        const auto& row = m[static_cast<std::size_t>(i)];
        for (Int n = 0; n <= r; ++n) {
            Int best = kInf;
            for (std::size_t k = row.size(); k-- > 0;) {
                if (row[k] >= r + 1 - n) {
                    best = lo + static_cast<Int>(k);
                    break;
                }
            }
            ensure(best < kInf, "no degree in the window keeps enough sections");
            t.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(n)] = best;
        }
        for (Int n = 1; n <= r; ++n)
            ensure(t.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(n)] >
                       t.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(n - 1)],
                   "vanishing row is not strictly increasing");
    }
    for (Int i = 1; i <= g - 1; ++i)
        for (Int n = 0; n <= r; ++n)
            t.b[static_cast<std::size_t>(i)][static_cast<std::size_t>(n)] =
                d - t.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(r - n)];
    return t;
}

StarReport star_components(const LimitLineBundle& L, Int r, Int window) {
    const VanishingTable t = vanishing_tables(L, r, window);
    const Int g = L.genus();
    const Int d = L.degree();
    StarReport rep;
    rep.required = g - d + r;
    rep.per_n.assign(static_cast<std::size_t>(r + 1), 0);
    for (Int i = 1; i <= g; ++i) {
        for (Int n = 0; n <= r; ++n) {
            const Int left = t.a[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(n)];
            const Int right = t.b[static_cast<std::size_t>(i)][static_cast<std::size_t>(r - n)];
            ensure(left + right <= d, "a + b exceeds the degree");
            if (left + right != d) continue;
            const Aspect forced = Aspect::exact(left, right);
            if (!(L.aspect(i) == forced))
                throw GenericityViolation("component " + std::to_string(i) + " is starred at n = " +
                                          std::to_string(n) + " but its aspect is " +
                                          format_aspect(L.aspect(i), i, g));
            rep.stars.push_back({i, n, forced});
            ++rep.per_n[static_cast<std::size_t>(n)];
        }
    }
    for (Int c : rep.per_n) ensure(c >= rep.required, "fewer stars than g-d+r for some n");
    return rep;
}

std::optional<std::pair<Int, std::pair<Int, Int>>> lls_violation(const LimitLineBundle& L,
                                                                 const VanishingTable& t) {
    for (Int i = 1; i <= L.genus(); ++i) {
        for (Int n = 0; n <= t.r; ++n) {
            for (Int m = 0; n + m <= t.r; ++m) {
                const ComponentBundle B = component(L, i, t.a[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(n)],
                                                    t.b[static_cast<std::size_t>(i)][static_cast<std::size_t>(m)]);
                if (h0_component(B) < t.r + 1 - n - m) return std::make_pair(i, std::make_pair(n, m));
            }
        }
    }
    return std::nullopt;
}

std::vector<Aspect> aspect_choices(Int i, Int g, Int d, Int window) {
    std::vector<Aspect> out;
    if (g == 1) {
        if (d == 0) out.push_back(Aspect::exact(0, 0));
    } else if (i == 1) {
        out.push_back(Aspect::exact(0, d));
    } else if (i == g) {
        out.push_back(Aspect::exact(d, 0));
    } else {
        for (Int a = -window; a <= d + window; ++a) out.push_back(Aspect::exact(a, d - a));
    }
    out.push_back(Aspect::make_generic());
    return out;
}

namespace {

struct Partial {
    Int count_exact = 0;
    Int count_with_generic = 0;
    std::vector<LimitLineBundle> witnesses;
};

Partial search_slice(Int g, Int r, Int d, Int window, const Aspect& first,
                     const std::vector<std::vector<Aspect>>& choices) {
    Partial out;
    std::vector<Aspect> tuple(static_cast<std::size_t>(g));
    tuple[0] = first;
    std::vector<std::size_t> pos(static_cast<std::size_t>(g), 0);
    const auto visit = [&]() {
        const LimitLineBundle L(ChainCurve(g, d), tuple);
        if (min_h0(L, window).value < r + 1) return;
        const bool exact = std::none_of(tuple.begin(), tuple.end(), [](const Aspect& a) { return a.generic; });
        if (exact) {
            ++out.count_exact;
            out.witnesses.push_back(L);
        } else {
            ++out.count_with_generic;
        }
    };
    if (g == 1) {
        visit();
        return out;
    }
    // odometer over components 2..g, last component fastest
    while (true) {
        for (std::size_t k = 1; k < tuple.size(); ++k) tuple[k] = choices[k][pos[k]];
        visit();
        std::size_t k = tuple.size();
        while (k-- > 1) {
            if (++pos[k] < choices[k].size()) break;
            pos[k] = 0;
        }
        if (k == 0) break;
    }
    return out;
}

} // namespace

SearchResult search_limit_bundles(Int g, Int r, Int d, const SearchOptions& opts) {
    if (g < 1) fail(ErrorKind::precondition_violation, "genus must be >= 1");
    if (r < 0) fail(ErrorKind::precondition_violation, "r must be >= 0");
    const Int window = opts.window < 0 ? default_window(g) : opts.window;
    const Int aspect_window = opts.aspect_window < 0 ? window : opts.aspect_window;
    std::vector<std::vector<Aspect>> choices;
    Int tuples = 1;
    for (Int i = 1; i <= g; ++i) {
        choices.push_back(aspect_choices(i, g, d, aspect_window));
        const Int c = static_cast<Int>(choices.back().size());
        tuples = (tuples > opts.max_tuples) ? tuples : tuples * c;
    }
    if (g > opts.max_genus || tuples > opts.max_tuples)
        fail(ErrorKind::budget_exceeded, "search over " + std::to_string(tuples) + " aspect tuples at genus " +
                                             std::to_string(g) + " exceeds the budget (genus <= " +
                                             std::to_string(opts.max_genus) + ", tuples <= " +
                                             std::to_string(opts.max_tuples) + ")");

    const auto& firsts = choices[0];
    std::vector<Partial> parts(firsts.size());
    const unsigned threads = std::max(1u, opts.threads);
    if (threads == 1 || firsts.size() == 1) {
        for (std::size_t k = 0; k < firsts.size(); ++k)
            parts[k] = search_slice(g, r, d, window, firsts[k], choices);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < threads; ++w) {
            pool.emplace_back([&, w]() {
                for (std::size_t k = w; k < firsts.size(); k += threads)
                    parts[k] = search_slice(g, r, d, window, firsts[k], choices);
            });
        }
        for (auto& th : pool) th.join();
    }

    SearchResult res;
    res.g = g;
    res.r = r;
    res.d = d;
    res.window = window;
    res.aspect_window = aspect_window;
    res.tuples = tuples;
    for (auto& p : parts) {
        res.count_exact += p.count_exact;
        res.count_with_generic += p.count_with_generic;
        for (auto& w : p.witnesses) res.witnesses.push_back(std::move(w));
    }
    return res;
}

} // namespace bnkit
