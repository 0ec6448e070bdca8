#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "bnkit/bn_numbers.hpp"

namespace bnkit {

/// Integer partition stored as weakly decreasing positive row lengths.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> rows);

    const std::vector<int>& rows() const { return rows_; }
    int size() const; // number of boxes
    bool empty() const { return rows_.empty(); }
    int row_length(int row) const; // 1-based; 0 past the last row
    int column_length(int col) const;
    bool contains(const Partition& other) const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> rows_;
};

/// Parses "4,2,1,1"; the empty string is the empty partition.
Partition parse_partition(std::string_view text);
std::string format_partition(const Partition& p);

struct Box {
    int row; // 1-based
    int col; // 1-based
    int content() const { return col - row; }
    friend bool operator==(const Box&, const Box&) = default;
    friend auto operator<=>(const Box&, const Box&) = default;
};

std::vector<Box> addable_boxes(const Partition& p);
std::vector<Box> removable_boxes(const Partition& p);
std::vector<std::vector<int>> hook_lengths(const Partition& p);

/// No hook of length k (equivalently none divisible by k).
bool is_core(const Partition& p, int k);

/// Standard Young tableaux on a shape, by the hook length formula.
BigInt syt_count(const Partition& shape);
BigInt syt_count_rect(int rows, int cols);

int mod_residue(Int residue, int k);

/// The generator s_residue of the affine symmetric group acting on k-cores:
/// adds every addable box of content = residue (mod k) if there is one,
/// otherwise removes every removable such box, otherwise leaves p unchanged.
Partition core_apply_residue(const Partition& p, Int residue, int k);

/// Like core_apply_residue but only accepts moves that add boxes; throws
/// PreconditionViolation otherwise.
Partition core_add_residue_strict(const Partition& p, Int residue, int k);

/// Residues in application order, read left to right.
struct FillingWitness {
    std::vector<int> residues;
    friend bool operator==(const FillingWitness&, const FillingWitness&) = default;
};

std::string format_witness(const FillingWitness& w);
FillingWitness parse_witness(std::string_view text);

/// Replays a witness from the empty partition with strict additions and
/// returns the chain of cores, starting with the empty partition.
std::vector<Partition> replay_witness(const FillingWitness& w, int k);

/// Box -> step index (1-based) labeling induced by a witness.
struct LabeledBox {
    Box box;
    int symbol;
};
std::vector<LabeledBox> filling_labels(const FillingWitness& w, int k);

/// Checks that every symbol's boxes share a residue and sit at pairwise
/// lattice distance a multiple of k.
bool satisfies_repetition_rule(const std::vector<LabeledBox>& labels, int k);

/// Number of strict additions needed to build target from the empty
/// partition (the same for every path).
int core_length(const Partition& target, int k);

BigInt count_k_fillings(const Partition& target, int k, int symbols);
std::vector<FillingWitness> enumerate_k_fillings(const Partition& target, int k, int symbols);

} // namespace bnkit
