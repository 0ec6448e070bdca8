#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "bnkit/bn_numbers.hpp"

namespace bnkit {

/// Direct sum O(e_1) + ... + O(e_n) on the line, kept in the order given so
/// that summand indices stay meaningful. Comparison ignores order.
class SplitBundle {
public:
    SplitBundle() = default;
    explicit SplitBundle(std::vector<Int> degrees);
    static SplitBundle uniform(Int rank, Int degree);

    const std::vector<Int>& degrees() const { return degrees_; }
    std::vector<Int> sorted() const;
    Int rank() const { return static_cast<Int>(degrees_.size()); }
    Int degree() const;
    Int h0() const;
    Int h1() const;
    Int chi() const { return h0() - h1(); }
    // max - min <= 1
    bool balanced() const;

    SplitBundle twist(Int n) const;
    SplitBundle direct_sum(const SplitBundle& other) const;

    friend bool operator==(const SplitBundle& a, const SplitBundle& b) {
        return a.sorted() == b.sorted();
    }

private:
    std::vector<Int> degrees_;
};

SplitBundle parse_split_bundle(std::string_view text);
std::string format_split_bundle(const SplitBundle& e); // ascending

enum class Sign { positive, negative };

/// Elementary modification along a reduced divisor of `points` points toward
/// the summand at `summand`. Positive: that summand gains `points`. Negative:
/// E[D -> F] = E[D +-> F](-D).
SplitBundle modify(const SplitBundle& e, Int summand, Sign sign, Int points);

/// Short exact sequence 0 -> sub -> total -> quot -> 0 tracked by rank and
/// degree only.
struct LedgerSequence {
    SplitBundle sub;
    Int total_rank = 0;
    Int total_degree = 0;
    SplitBundle quot;

    bool additive() const {
        return sub.rank() + quot.rank() == total_rank && sub.degree() + quot.degree() == total_degree;
    }
    // An extension of O(b) by O(a) splits when a >= b - 1, so line-bundle
    // ends that close in degree pin the middle term down.
    bool determines_total() const;
    SplitBundle total() const; // only when determines_total()
};

enum class PointPosition { off_tangents, on_curve_general };

/// Degree of the pointing bundle N_{C->q} for a degree-d curve: O_C(1) when q
/// lies on no tangent line, O_C(1)(2q) when q is a general point of C.
Int pointing_degree(Int d, PointPosition q);

/// Projection from a general point q of a rational degree-d curve in P^3:
/// 0 -> O(d+2) -> N_C -> N_{pi_q}(q) = O(3d-4) -> 0.
LedgerSequence projection_ledger(Int d);

/// A bundle with a list of +1 modifications, one per node, each toward a
/// chosen summand (the pointing direction at that node).
struct ModificationRecord {
    SplitBundle base;
    std::vector<Int> pointing_summands;

    SplitBundle result() const;
};

ModificationRecord hh_restriction(const SplitBundle& normal, const std::vector<Int>& node_targets);

struct OddDegreeCertificate {
    Int d = 0;
    Int peels = 0;          // 1-secant lines removed
    Int reduced_degree = 0; // degree of the curve left after peeling
    Int sub = 0;
    Int quot = 0;
    bool balanced = false;
    // Degree of N_C once the twist dropped at each peel is restored: 4d - 2.
    Int total = 0;
    SplitBundle conclusion; // N_C
};

OddDegreeCertificate odd_degree_certificate(Int d);

} // namespace bnkit
