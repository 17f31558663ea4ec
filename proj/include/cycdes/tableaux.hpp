#pragma once

// Skew shapes in English notation, standard Young tableaux, descent sets,
// ribbon detection, and the explicit cyclic descent maps with their
// rotations for strips and near-hooks.
//
// Cells carry absolute (row, col) coordinates, rows increasing downward, so
// "lower row" comparisons in the descent rules are literal row comparisons.
// Direct sums place components strictly southwest-to-northeast.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cycdes/permcore.hpp"

namespace cycdes {

struct Cell {
    int row = 0;
    int col = 0;
    friend bool operator==(const Cell&, const Cell&) = default;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

using Partition = std::vector<int>;  // weakly decreasing positive parts

class SkewShape {
public:
    SkewShape() = default;
    /// Validates and normalizes an arbitrary cell set (rows/cols shifted so
    /// the minima are 0). Throws unless the cells form a skew diagram.
    explicit SkewShape(std::vector<Cell> cells);

    /// lambda/mu as partitions; mu may be empty.
    static SkewShape from_partitions(const Partition& lambda, const Partition& mu = {});
    /// mu^1 (+) ... (+) mu^t, components listed southwest to northeast.
    static SkewShape direct_sum(const std::vector<Partition>& components);
    /// (n-1-k, 1^k) (+) (1), the hook with a disconnected northeast cell.
    static SkewShape near_hook(int n, int k);
    /// Grammar: "5,4,2/1,1" (skew), "(1^2)+(3)" (direct sum), "nh(6,2)".
    static SkewShape parse(std::string_view text);

    int size() const { return static_cast<int>(cells_.size()); }
    const std::vector<Cell>& cells() const { return cells_; }
    bool has_cell(int row, int col) const;
    int cell_index(int row, int col) const;  // -1 when absent

    /// Connected components (4-adjacency), southwest to northeast.
    std::vector<SkewShape> components() const;
    /// Component index of each cell, numbered southwest to northeast.
    const std::vector<int>& component_ids() const { return component_ids_; }
    int component_count() const;

    bool is_connected() const;
    bool has_2x2_block() const;
    bool is_connected_ribbon() const;
    bool is_straight() const;          // mu empty after normalization
    bool is_single_row() const;
    bool is_single_column() const;
    /// Every component is a single row or a single column.
    bool is_strip() const;
    /// Matches (n-1-k, 1^k) (+) (1); returns k.
    std::optional<int> near_hook_arm() const;
    /// For straight shapes only: the partition lambda.
    Partition straight_partition() const;

    std::string str() const;

    friend bool operator==(const SkewShape& a, const SkewShape& b) {
        return a.cells_ == b.cells_;
    }
    friend auto operator<=>(const SkewShape& a, const SkewShape& b) {
        return a.cells_ <=> b.cells_;
    }

private:
    void label_components();

    std::vector<Cell> cells_;          // sorted by (row, col)
    std::vector<int> component_ids_;   // parallel to cells_
};

class Tableau {
public:
    Tableau() = default;
    /// entries aligned with shape.cells(); validated standard.
    Tableau(SkewShape shape, std::vector<int> entries);

    const SkewShape& shape() const { return shape_; }
    int size() const { return shape_.size(); }
    int entry_at(int row, int col) const;
    const std::vector<int>& entries() const { return entries_; }
    Cell cell_of(int value) const;

    /// Row lists per component: "[[1,2,5],[3],[4]] + [[6]]".
    std::string str() const;

    friend bool operator==(const Tableau&, const Tableau&) = default;
    friend auto operator<=>(const Tableau&, const Tableau&) = default;

private:
    SkewShape shape_;
    std::vector<int> entries_;
};

/// All standard fillings, lexicographic in the entry vector.
std::vector<Tableau> enumerate_syt(const SkewShape& shape);

/// Des(T) = { i : i+1 lies in a strictly lower row }.
Mask des_set_syt(const Tableau& t);

bool is_connected_ribbon(const SkewShape& shape);

/// Cyclic descents for strip shapes with >= 2 components: Des(T) plus n when
/// 1 is lower than n or 1 and n share a vertical component.
Mask cdes_strip(const Tableau& t);
/// Adds j to all entries mod n, then re-sorts within each component.
Tableau rotate_strip(const Tableau& t, int j);

/// The entry in the disconnected northeast cell of a near-hook tableau.
int delta(const Tableau& t);
/// Cyclic descents for SYT((n-1-k,1^k)+(1)): Des(T) plus n iff |Des(T)| = k.
Mask cdes_near_hook(const Tableau& t);
/// The rotation j+T prescribed by the first-column set and delta.
Tableau rotate_near_hook(const Tableau& t, int j);

/// All partitions of n, ascending lexicographic.
std::vector<Partition> partitions_of(int n);
bool is_hook(const Partition& lambda);
std::string partition_str(const Partition& lambda);

}  // namespace cycdes
