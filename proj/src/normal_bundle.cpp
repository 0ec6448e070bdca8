#include "bnkit/normal_bundle.hpp"

#include <algorithm>
#include <numeric>

#include "bnkit/error.hpp"
#include "bnkit/text.hpp"

namespace bnkit {

namespace {

void check_ledger(const SplitBundle& e) {
    ensure(e.h0() - e.h1() == e.degree() + e.rank(), "Riemann-Roch fails on a split bundle");
}

} // namespace

SplitBundle::SplitBundle(std::vector<Int> degrees) : degrees_(std::move(degrees)) { check_ledger(*this); }

SplitBundle SplitBundle::uniform(Int rank, Int degree) {
    return SplitBundle(std::vector<Int>(static_cast<std::size_t>(rank), degree));
}

std::vector<Int> SplitBundle::sorted() const {
    auto out = degrees_;
    std::sort(out.begin(), out.end());
    return out;
}

Int SplitBundle::degree() const { return std::accumulate(degrees_.begin(), degrees_.end(), Int{0}); }

Int SplitBundle::h0() const {
    Int n = 0;
    for (Int e : degrees_) n += std::max<Int>(0, e + 1);
    return n;
}

Int SplitBundle::h1() const {
    Int n = 0;
    for (Int e : degrees_) n += std::max<Int>(0, -e - 1);
    return n;
}

bool SplitBundle::balanced() const {
    if (degrees_.empty()) return true;
    const auto [lo, hi] = std::minmax_element(degrees_.begin(), degrees_.end());
    return *hi - *lo <= 1;
}

SplitBundle SplitBundle::twist(Int n) const {
    auto out = degrees_;
    for (Int& e : out) e += n;
    return SplitBundle(std::move(out));
}

SplitBundle SplitBundle::direct_sum(const SplitBundle& other) const {
    auto out = degrees_;
    out.insert(out.end(), other.degrees_.begin(), other.degrees_.end());
    return SplitBundle(std::move(out));
}

SplitBundle parse_split_bundle(std::string_view text) { return SplitBundle(parse_int_list(text)); }

std::string format_split_bundle(const SplitBundle& e) { return format_int_list(e.sorted()); }

SplitBundle modify(const SplitBundle& e, Int summand, Sign sign, Int points) {
    if (summand < 0 || summand >= e.rank())
        fail(ErrorKind::index_out_of_range, "summand index " + std::to_string(summand) +
                                                " outside [0, " + std::to_string(e.rank()) + ")");
    if (points < 0) fail(ErrorKind::precondition_violation, "divisor length must be >= 0");
    auto degrees = e.degrees();
    degrees[static_cast<std::size_t>(summand)] += points;
    SplitBundle out(std::move(degrees));
    if (sign == Sign::negative) out = out.twist(-points);
    ensure(out.rank() == e.rank(), "modification changed rank");
    return out;
}

bool LedgerSequence::determines_total() const {
    return sub.rank() == 1 && quot.rank() == 1 && sub.degree() >= quot.degree() - 1;
}

SplitBundle LedgerSequence::total() const {
    ensure(determines_total(), "extension class is not forced to split");
    SplitBundle out = sub.direct_sum(quot);
    ensure(out.rank() == total_rank && out.degree() == total_degree, "split total off the ledger");
    return out;
}

Int pointing_degree(Int d, PointPosition q) {
    return q == PointPosition::on_curve_general ? d + 2 : d;
}

LedgerSequence projection_ledger(Int d) {
    if (d < 3)
        fail(ErrorKind::precondition_violation, "projection ledger needs a rational curve of degree >= 3 in P^3");
    LedgerSequence seq;
    seq.sub = SplitBundle({pointing_degree(d, PointPosition::on_curve_general)});
    // N_{pi_q} = pi_q^* K_{P^2}^dual (x) K_C = O(3(d-1) - 2), then twist by q
    seq.quot = SplitBundle({3 * (d - 1) - 2 + 1});
    seq.total_rank = 2;
    seq.total_degree = 4 * d - 2; // deg N_C = (r+1)d + 2g - 2 for r = 3, g = 0
    ensure(seq.additive(), "projection sequence is not additive");
    return seq;
}

SplitBundle ModificationRecord::result() const {
    SplitBundle out = base;
    for (Int s : pointing_summands) out = modify(out, s, Sign::positive, 1);
    ensure(out.degree() == base.degree() + static_cast<Int>(pointing_summands.size()),
           "node modifications must add one degree each");
    return out;
}

ModificationRecord hh_restriction(const SplitBundle& normal, const std::vector<Int>& node_targets) {
    for (Int s : node_targets)
        if (s < 0 || s >= normal.rank())
            fail(ErrorKind::index_out_of_range, "pointing summand " + std::to_string(s) + " out of range");
    return {normal, node_targets};
}

OddDegreeCertificate odd_degree_certificate(Int d) {
    if (d < 3) fail(ErrorKind::precondition_violation, "odd-degree certificate needs d >= 3");
    if (d % 2 == 0)
        fail(ErrorKind::even_degree,
             "d = " + std::to_string(d) +
                 " is even; balancedness fails in characteristic 2 and is not certified here");
    OddDegreeCertificate c;
    c.d = d;
    c.peels = (d - 3) / 2;
    c.reduced_degree = (d + 3) / 2;

    // Projection sequence of the reduced curve, then all peeled nodes
    // specialized to one pointing direction: each adds 2p toward the sub.
    const LedgerSequence base = projection_ledger(c.reduced_degree);
    const SplitBundle modified_sub = modify(base.sub, 0, Sign::positive, 2 * c.peels);
    LedgerSequence seq{modified_sub, 2, base.total_degree + 2 * c.peels, base.quot};
    ensure(seq.additive(), "modified projection sequence is not additive");

    c.sub = seq.sub.degree();
    c.quot = seq.quot.degree();
    ensure(c.sub == (3 * d + 1) / 2 && c.quot == (3 * d + 1) / 2, "odd-degree ledger off (3d+1)/2");
    c.balanced = c.sub == c.quot;
    ensure(c.balanced, "odd-degree projection sequence is not perfectly balanced");

    // each peel dropped a twist by one point on a rank-2 bundle
    const SplitBundle modified = seq.total();
    c.conclusion = modified.twist(c.peels);
    c.total = c.conclusion.degree();
    ensure(c.total == 4 * d - 2, "restored normal bundle degree is not 4d-2");
    ensure(c.conclusion == SplitBundle::uniform(2, 2 * d - 1), "conclusion is not O(2d-1)^2");
    return c;
}

} // namespace bnkit
