#include <doctest.h>

#include <set>

#include "bnkit/error.hpp"
#include "bnkit/tableaux.hpp"
#include "oracles.hpp"

using namespace bnkit;

namespace {

// All partitions of n, largest part first.
void partitions(int n, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
    if (n == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(n, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions(n - p, p, cur, out);
        cur.pop_back();
    }
}

std::vector<Partition> partitions_up_to(int n_max) {
    std::vector<Partition> out;
    std::vector<int> cur;
    for (int n = 0; n <= n_max; ++n) partitions(n, n, cur, out);
    return out;
}

Partition transpose(const Partition& p) {
    std::vector<int> cols;
    for (int c = 1; c <= p.row_length(1); ++c) cols.push_back(p.column_length(c));
    return Partition(cols);
}

} // namespace

TEST_CASE("partition parsing and validation") {
    CHECK(parse_partition("4,2,1,1").size() == 8);
    CHECK(parse_partition("").empty());
    CHECK(format_partition(parse_partition("3, 1")) == "3,1");
    CHECK_THROWS_AS(parse_partition("1,2"), Error);
    CHECK_THROWS_AS(parse_partition("2,0"), Error);
}

TEST_CASE("hook length formula agrees with corner peeling") {
    for (const auto& p : partitions_up_to(12)) {
        CHECK(syt_count(p) == oracle::syt_by_corners(p.rows()));
        CHECK(syt_count(p) == syt_count(transpose(p)));
    }
    CHECK(syt_count_rect(2, 2) == 2);
    CHECK(syt_count_rect(3, 2) == 5);
}

TEST_CASE("cores") {
    CHECK(is_core(parse_partition("4,2,1,1"), 3));
    CHECK_FALSE(is_core(parse_partition("3"), 3));
    CHECK(is_core(parse_partition("2,1"), 2));
    CHECK_FALSE(is_core(parse_partition("2"), 2));
    CHECK(is_core(parse_partition("1"), 2));
}

TEST_CASE("last step of the first filling of (4,2,1,1)") {
    // symbol 5 fills contents 3, 0, -3
    CHECK(core_apply_residue(parse_partition("3,1,1"), 0, 3) == parse_partition("4,2,1,1"));
    CHECK(core_apply_residue(parse_partition("3,1"), 0, 3) == parse_partition("4,2"));
}

TEST_CASE("residue action keeps cores and is an involution") {
    for (int k = 2; k <= 5; ++k) {
        int cores = 0;
        for (const auto& p : partitions_up_to(11)) {
            if (!is_core(p, k)) continue;
            ++cores;
            for (int res = 0; res < k; ++res) {
                const Partition q = core_apply_residue(p, res, k);
                CHECK(is_core(q, k));
                CHECK(core_apply_residue(q, res, k) == p);
                CHECK(core_apply_residue(p, res + k, k) == q);
            }
        }
        CHECK(cores > 1);
    }
    CHECK_THROWS_AS(core_apply_residue(parse_partition("3"), 0, 3), Error);
}

TEST_CASE("the two 3-fillings of (4,2,1,1)") {
    const Partition target = parse_partition("4,2,1,1");
    CHECK(count_k_fillings(target, 3, 5) == 2);
    const auto ws = enumerate_k_fillings(target, 3, 5);
    REQUIRE(ws.size() == 2);
    std::set<std::string> words;
    for (const auto& w : ws) {
        words.insert(format_witness(w));
        CHECK(replay_witness(w, 3).back() == target);
        CHECK(satisfies_repetition_rule(filling_labels(w, 3), 3));
    }
    CHECK(words == std::set<std::string>{"0,1,2,1,0", "0,2,1,2,0"});
    CHECK(core_length(target, 3) == 5);
}

TEST_CASE("symbol count must match the core length") {
    const Partition target = parse_partition("4,2,1,1");
    try {
        count_k_fillings(target, 3, 4);
        FAIL("expected SymbolCountMismatch");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::symbol_count_mismatch);
    }
    try {
        count_k_fillings(parse_partition("3"), 3, 3);
        FAIL("expected NotACore");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::not_a_core);
    }
}

TEST_CASE("large k: fillings are standard tableaux") {
    for (const auto& p : partitions_up_to(9)) {
        if (p.empty()) continue;
        // lattice distance inside the diagram is below rows + cols
        const int k = static_cast<int>(p.rows().size()) + p.row_length(1) + 1;
        CHECK(count_k_fillings(p, k, p.size()) == oracle::syt_by_corners(p.rows()));
    }
}

TEST_CASE("every enumerated witness is valid") {
    for (int k = 2; k <= 4; ++k)
        for (const auto& p : partitions_up_to(10)) {
            if (!is_core(p, k)) continue;
            const int len = core_length(p, k);
            const auto ws = enumerate_k_fillings(p, k, len);
            CHECK(BigInt(ws.size()) == count_k_fillings(p, k, len));
            for (const auto& w : ws) {
                CHECK(replay_witness(w, k).back() == p);
                CHECK(satisfies_repetition_rule(filling_labels(w, k), k));
            }
        }
}

TEST_CASE("bridge to the rho = 0 count") {
    for (Int g = 1; g <= 10; ++g)
        for (Int r = 0; r <= g; ++r)
            for (Int d = 0; d <= 2 * g; ++d) {
                const BNIndex idx(g, r, d);
                if (rho(idx) != 0 || g - d + r < 1) continue;
                CHECK(syt_count_rect(static_cast<int>(r + 1), static_cast<int>(g - d + r)) == count_grd(idx));
            }
}

TEST_CASE("small shapes and single steps") {
    CHECK(syt_count(parse_partition("2,2")) == 2);
    CHECK(syt_count_rect(2, 3) == 5);
    for (int n = 1; n <= 10; ++n) CHECK(syt_count_rect(1, n) == 1);
    CHECK(core_apply_residue(Partition{}, 0, 3) == parse_partition("1"));
    CHECK(core_apply_residue(parse_partition("1"), 1, 3) == parse_partition("2"));
    CHECK(core_add_residue_strict(parse_partition("1"), 2, 3) == parse_partition("1,1"));
    CHECK(count_k_fillings(Partition{}, 3, 0) == 1);
    CHECK(count_k_fillings(parse_partition("2,1"), 100, 3) == 2);
}
