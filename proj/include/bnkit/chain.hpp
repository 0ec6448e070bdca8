#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bnkit/bn_numbers.hpp"

namespace bnkit {

/// Chain E^1 u ... u E^g of elliptic curves carrying total degree d. E^i
/// holds p^{i-1} and p^i; p^0 and p^g are free, the others are nodes.
struct ChainCurve {
    Int g = 1;
    Int d = 0;

    ChainCurve() = default;
    ChainCurve(Int genus, Int degree);
    friend bool operator==(const ChainCurve&, const ChainCurve&) = default;
};

class DegreeDistribution {
public:
    DegreeDistribution() = default;
    explicit DegreeDistribution(std::vector<Int> degrees);

    const std::vector<Int>& degrees() const { return degrees_; }
    Int genus() const { return static_cast<Int>(degrees_.size()); }
    Int total() const;
    Int at(Int i) const; // 1-based
    Int prefix(Int i) const; // S_i, with S_0 = 0

    /// From prefix sums S_1..S_{g-1}, with S_g = d.
    static DegreeDistribution from_prefix(const std::vector<Int>& interior, Int d);
    /// All degree on component i.
    static DegreeDistribution concentrated(Int g, Int d, Int i);

    friend bool operator==(const DegreeDistribution&, const DegreeDistribution&) = default;
    friend auto operator<=>(const DegreeDistribution&, const DegreeDistribution&) = default;

private:
    std::vector<Int> degrees_;
};

std::string format_distribution(const DegreeDistribution& dist);
DegreeDistribution parse_distribution(std::string_view text);

/// Twist by the component E^i of the central fiber.
DegreeDistribution chip_fire(const DegreeDistribution& dist, Int i);
/// Twist by E^1 + ... + E^i: one unit moves from component i to i+1.
DegreeDistribution prefix_fire(const DegreeDistribution& dist, Int i);

/// O(a p^{i-1} + b p^i) when exact, otherwise a generic class of degree a+b.
struct Aspect {
    bool generic = true;
    Int a = 0;
    Int b = 0;

    static Aspect make_generic() { return {}; }
    static Aspect exact(Int a, Int b) { return {false, a, b}; }
    friend bool operator==(const Aspect&, const Aspect&) = default;
};

class LimitLineBundle {
public:
    LimitLineBundle(ChainCurve chain, std::vector<Aspect> aspects);

    const ChainCurve& chain() const { return chain_; }
    const std::vector<Aspect>& aspects() const { return aspects_; }
    const Aspect& aspect(Int i) const; // 1-based
    Int genus() const { return chain_.g; }
    Int degree() const { return chain_.d; }

    friend bool operator==(const LimitLineBundle&, const LimitLineBundle&) = default;

private:
    ChainCurve chain_;
    std::vector<Aspect> aspects_;
};

/// Aspects separated by ';', each "gen" or "x,y". Interior components list
/// (left, right) coefficients; end components list the free point first,
/// so "0,4;2,2;0,4" is O(4p^1), O(2p^1+2p^2), O(4p^2). Free-point
/// coefficients must be 0. Outer brackets are optional.
LimitLineBundle parse_limit_bundle(std::string_view text, Int d);
std::string format_limit_bundle(const LimitLineBundle& L);
std::string format_aspect(const Aspect& asp, Int i, Int g);

/// base (x) O(-u p^{i-1} - v p^i).
struct ComponentBundle {
    Aspect base;
    Int u = 0;
    Int v = 0;

    Int degree() const { return base.a + base.b - u - v; }
    ComponentBundle twisted(Int du, Int dv) const { return {base, u + du, v + dv}; }
};

Int h0_component(const ComponentBundle& B);

std::vector<ComponentBundle> restrict_bundle(const LimitLineBundle& L, const DegreeDistribution& dist);

Int h0_chain(const LimitLineBundle& L, const DegreeDistribution& dist);
Int h0_chain_left_to_right(const LimitLineBundle& L, const DegreeDistribution& dist);

inline Int default_window(Int g) { return g + 1; }

struct MinH0 {
    Int value = 0;
    DegreeDistribution witness; // lexicographically least minimizer
};

/// Minimum of h0_chain over distributions whose interior prefix sums lie in
/// [-window, d+window].
MinH0 min_h0(const LimitLineBundle& L, Int window);

struct Positivity {
    bool positive = false;
    MinH0 minimum;
};
Positivity is_r_positive(const LimitLineBundle& L, Int r, Int window);

/// Minimum suffix h0 on components i+1..g as a function of S_i over the
/// window, for 0 <= i <= g-1. Entry [i][alpha + window] is for S_i = alpha.
std::vector<std::vector<Int>> suffix_minima(const LimitLineBundle& L, Int window);

struct VanishingTable {
    Int g = 0;
    Int r = 0;
    Int d = 0;
    Int window = 0;
    std::vector<std::vector<Int>> a; // rows 0..g-1
    std::vector<std::vector<Int>> b; // rows 1..g, row 0 unused
};

VanishingTable vanishing_tables(const LimitLineBundle& L, Int r, Int window);

struct Star {
    Int i = 0;
    Int n = 0;
    Aspect forced; // O(a^{i-1}_n p^{i-1} + b^i_{r-n} p^i)
    friend bool operator==(const Star&, const Star&) = default;
};

struct StarReport {
    std::vector<Star> stars; // sorted by (i, n)
    std::vector<Int> per_n;  // number of stars with each n
    Int required = 0;        // g - d + r
};

/// Components where a^{i-1}_n + b^i_{r-n} = d. Checks that the aspect there
/// is the forced one (GenericityViolation otherwise) and that each n has at
/// least g-d+r stars.
StarReport star_components(const LimitLineBundle& L, Int r, Int window);

/// h0 of aspect i twisted down by a^{i-1}_n at p^{i-1} and b^i_m at p^i must
/// be at least r+1-n-m whenever n+m <= r. Returns the first failure.
std::optional<std::pair<Int, std::pair<Int, Int>>> lls_violation(const LimitLineBundle& L,
                                                                 const VanishingTable& t);

struct SearchOptions {
    Int window = -1;        // distribution window; -1: default_window(g)
    Int aspect_window = -1; // interior aspects range over a in [-w, d+w]; -1: same as window
    unsigned threads = 1;
    Int max_genus = 6;
    Int max_tuples = 5'000'000;
};

struct SearchResult {
    Int g = 0;
    Int r = 0;
    Int d = 0;
    Int window = 0;
    Int aspect_window = 0;
    Int tuples = 0;
    Int count_exact = 0;
    Int count_with_generic = 0;
    std::vector<LimitLineBundle> witnesses; // all-exact r-positive tuples, in order
};

/// Aspect choices enumerated per component, in the order the search visits them.
std::vector<Aspect> aspect_choices(Int i, Int g, Int d, Int window);

SearchResult search_limit_bundles(Int g, Int r, Int d, const SearchOptions& opts = {});

} // namespace bnkit
