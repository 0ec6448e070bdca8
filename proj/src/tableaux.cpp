#include "bnkit/tableaux.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <cstdlib>

#include "bnkit/error.hpp"
#include "bnkit/text.hpp"

namespace bnkit {

Partition::Partition(std::vector<int> rows) : rows_(std::move(rows)) {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i] < 1)
            fail(ErrorKind::precondition_violation, "partition rows must be positive");
        if (i > 0 && rows_[i] > rows_[i - 1])
            fail(ErrorKind::precondition_violation, "partition rows must be weakly decreasing");
    }
}

int Partition::size() const {
    int n = 0;
    for (int r : rows_) n += r;
    return n;
}

int Partition::row_length(int row) const {
    return (row >= 1 && row <= static_cast<int>(rows_.size())) ? rows_[row - 1] : 0;
}

int Partition::column_length(int col) const {
    int n = 0;
    for (int r : rows_) {
        if (r >= col) ++n;
        else break;
    }
    return n;
}

bool Partition::contains(const Partition& other) const {
    if (other.rows_.size() > rows_.size()) return false;
    for (std::size_t i = 0; i < other.rows_.size(); ++i)
        if (other.rows_[i] > rows_[i]) return false;
    return true;
}

Partition parse_partition(std::string_view text) {
    std::vector<int> rows;
    for (Int v : parse_int_list(text)) rows.push_back(static_cast<int>(v));
    return Partition(std::move(rows));
}

std::string format_partition(const Partition& p) {
    std::vector<Int> rows(p.rows().begin(), p.rows().end());
    return format_int_list(rows);
}

std::vector<Box> addable_boxes(const Partition& p) {
    std::vector<Box> out;
    const int n = static_cast<int>(p.rows().size());
    for (int i = 1; i <= n + 1; ++i) {
        const int col = p.row_length(i) + 1;
        if (i == 1 || p.row_length(i - 1) >= col) out.push_back({i, col});
    }
    return out;
}

std::vector<Box> removable_boxes(const Partition& p) {
    std::vector<Box> out;
    const int n = static_cast<int>(p.rows().size());
    for (int i = 1; i <= n; ++i)
        if (p.row_length(i + 1) < p.row_length(i)) out.push_back({i, p.row_length(i)});
    return out;
}

std::vector<std::vector<int>> hook_lengths(const Partition& p) {
    std::vector<std::vector<int>> hooks;
    for (int i = 1; i <= static_cast<int>(p.rows().size()); ++i) {
        std::vector<int> row;
        for (int j = 1; j <= p.row_length(i); ++j)
            row.push_back((p.row_length(i) - j) + (p.column_length(j) - i) + 1);
        hooks.push_back(std::move(row));
    }
    return hooks;
}

bool is_core(const Partition& p, int k) {
    if (k < 2) fail(ErrorKind::precondition_violation, "core parameter k must be >= 2");
    for (const auto& row : hook_lengths(p))
        for (int h : row)
            if (h == k) return false;
    return true;
}

BigInt syt_count(const Partition& shape) {
    BigInt value = 1;
    for (int i = 2; i <= shape.size(); ++i) value *= i;
    BigInt hooks = 1;
    for (const auto& row : hook_lengths(shape))
        for (int h : row) hooks *= h;
    ensure(value % hooks == 0, "hook length formula is not an integer");
    return value / hooks;
}

BigInt syt_count_rect(int rows, int cols) {
    if (rows < 1 || cols < 1)
        fail(ErrorKind::precondition_violation, "rectangle dimensions must be positive");
    return syt_count(Partition(std::vector<int>(static_cast<std::size_t>(rows), cols)));
}

int mod_residue(Int residue, int k) {
    const Int m = residue % k;
    return static_cast<int>(m < 0 ? m + k : m);
}

namespace {

void require_core(const Partition& p, int k) {
    if (!is_core(p, k))
        fail(ErrorKind::not_a_core, format_partition(p) + " is not a " + std::to_string(k) + "-core");
}

Partition with_boxes(const Partition& p, const std::vector<Box>& boxes, int delta) {
    std::vector<int> rows = p.rows();
    for (const Box& b : boxes) {
        if (b.row > static_cast<int>(rows.size())) rows.resize(static_cast<std::size_t>(b.row), 0);
        rows[static_cast<std::size_t>(b.row - 1)] += delta;
    }
    while (!rows.empty() && rows.back() == 0) rows.pop_back();
    return Partition(std::move(rows));
}

std::vector<Box> of_residue(const std::vector<Box>& boxes, int residue, int k) {
    std::vector<Box> out;
    for (const Box& b : boxes)
        if (mod_residue(b.content(), k) == residue) out.push_back(b);
    return out;
}

// Strict addition without the core check on the input; callers guarantee it.
std::optional<Partition> try_add(const Partition& p, int residue, int k) {
    auto add = of_residue(addable_boxes(p), residue, k);
    if (add.empty() || !of_residue(removable_boxes(p), residue, k).empty()) return std::nullopt;
    return with_boxes(p, add, +1);
}

} // namespace

Partition core_apply_residue(const Partition& p, Int residue, int k) {
    require_core(p, k);
    const int res = mod_residue(residue, k);
    const auto add = of_residue(addable_boxes(p), res, k);
    const auto remove = of_residue(removable_boxes(p), res, k);
    ensure(add.empty() || remove.empty(), "core has both addable and removable boxes of one residue");
    Partition out = p;
    if (!add.empty()) out = with_boxes(p, add, +1);
    else if (!remove.empty()) out = with_boxes(p, remove, -1);
    ensure(is_core(out, k), "residue action left the set of cores");
    return out;
}

Partition core_add_residue_strict(const Partition& p, Int residue, int k) {
    require_core(p, k);
    auto next = try_add(p, mod_residue(residue, k), k);
    if (!next)
        fail(ErrorKind::precondition_violation,
             "residue " + std::to_string(residue) + " adds no box to " + format_partition(p));
    ensure(is_core(*next, k), "residue action left the set of cores");
    return *next;
}

std::string format_witness(const FillingWitness& w) {
    std::vector<Int> v(w.residues.begin(), w.residues.end());
    return format_int_list(v);
}

FillingWitness parse_witness(std::string_view text) {
    FillingWitness w;
    for (Int v : parse_int_list(text)) w.residues.push_back(static_cast<int>(v));
    return w;
}

std::vector<Partition> replay_witness(const FillingWitness& w, int k) {
    std::vector<Partition> chain{Partition{}};
    for (int res : w.residues) chain.push_back(core_add_residue_strict(chain.back(), res, k));
    return chain;
}

std::vector<LabeledBox> filling_labels(const FillingWitness& w, int k) {
    std::vector<LabeledBox> out;
    Partition cur;
    int step = 0;
    for (int res : w.residues) {
        ++step;
        const auto boxes = of_residue(addable_boxes(cur), mod_residue(res, k), k);
        cur = core_add_residue_strict(cur, res, k);
        for (const Box& b : boxes) out.push_back({b, step});
    }
    std::sort(out.begin(), out.end(),
              [](const LabeledBox& a, const LabeledBox& b) { return a.box < b.box; });
    return out;
}

bool satisfies_repetition_rule(const std::vector<LabeledBox>& labels, int k) {
    for (std::size_t i = 0; i < labels.size(); ++i) {
        for (std::size_t j = i + 1; j < labels.size(); ++j) {
            if (labels[i].symbol != labels[j].symbol) continue;
            const Box& a = labels[i].box;
            const Box& b = labels[j].box;
            const int distance = std::abs(a.row - b.row) + std::abs(a.col - b.col);
            if (distance % k != 0) return false;
            if (mod_residue(a.content() - b.content(), k) != 0) return false;
        }
    }
    return true;
}

namespace {

// Memoized walk over strict additions from a core toward a fixed target.
class FillingCounter {
public:
    FillingCounter(Partition target, int k) : target_(std::move(target)), k_(k) {}

    // Steps from p to the target, or -1 when unreachable.
    int distance(const Partition& p) {
        if (p == target_) return 0;
        if (auto it = distance_.find(p); it != distance_.end()) return it->second;
        int found = -1;
        for (int res = 0; res < k_; ++res) {
            auto next = try_add(p, res, k_);
            if (!next || !target_.contains(*next)) continue;
            const int sub = distance(*next);
            if (sub < 0) continue;
            ensure(found < 0 || found == sub + 1, "k-filling paths of different lengths");
            found = sub + 1;
        }
        distance_.emplace(p, found);
        return found;
    }

    BigInt count(const Partition& p) {
        if (p == target_) return 1;
        if (auto it = count_.find(p); it != count_.end()) return it->second;
        BigInt total = 0;
        for (int res = 0; res < k_; ++res) {
            auto next = try_add(p, res, k_);
            if (next && target_.contains(*next)) total += count(*next);
        }
        count_.emplace(p, total);
        return total;
    }

    void enumerate(const Partition& p, std::vector<int>& prefix, std::vector<FillingWitness>& out) {
        if (p == target_) {
            out.push_back({prefix});
            return;
        }
        for (int res = 0; res < k_; ++res) {
            auto next = try_add(p, res, k_);
            if (!next || !target_.contains(*next) || count(*next) == 0) continue;
            prefix.push_back(res);
            enumerate(*next, prefix, out);
            prefix.pop_back();
        }
    }

private:
    Partition target_;
    int k_;
    std::map<Partition, int> distance_;
    std::map<Partition, BigInt> count_;
};

void check_symbols(FillingCounter& counter, const Partition& target, int k, int symbols) {
    require_core(target, k);
    if (symbols < 0) fail(ErrorKind::precondition_violation, "symbol count must be >= 0");
    const int length = counter.distance(Partition{});
    ensure(length >= 0, "k-core unreachable from the empty partition");
    if (length != symbols)
        fail(ErrorKind::symbol_count_mismatch,
             format_partition(target) + " needs " + std::to_string(length) + " symbols, got " +
                 std::to_string(symbols));
}

} // namespace

int core_length(const Partition& target, int k) {
    require_core(target, k);
    FillingCounter counter(target, k);
    const int length = counter.distance(Partition{});
    ensure(length >= 0, "k-core unreachable from the empty partition");
    return length;
}

BigInt count_k_fillings(const Partition& target, int k, int symbols) {
    FillingCounter counter(target, k);
    check_symbols(counter, target, k, symbols);
    return counter.count(Partition{});
}

std::vector<FillingWitness> enumerate_k_fillings(const Partition& target, int k, int symbols) {
    FillingCounter counter(target, k);
    check_symbols(counter, target, k, symbols);
    std::vector<FillingWitness> out;
    std::vector<int> prefix;
    counter.enumerate(Partition{}, prefix, out);
    for (const auto& w : out) {
        ensure(replay_witness(w, k).back() == target, "k-filling witness does not replay to target");
        ensure(satisfies_repetition_rule(filling_labels(w, k), k),
               "k-filling witness breaks the repetition rule");
    }
    return out;
}

} // namespace bnkit
