#pragma once

// Special rim hook tableaux and their permutations.

#include "kostka/core.hpp"
#include "kostka/tableaux.hpp"
#include "kostka/tunnelhooks.hpp"

#include <vector>

namespace kostka {

// Cells run from the initial (north-east) cell to the terminal (south-west)
// cell by unit south or west steps.
struct RimHook {
    std::vector<Cell> cells;

    const Cell& initial() const { return cells.front(); }
    const Cell& terminal() const { return cells.back(); }
    int rows_crossed() const { return terminal().row - initial().row; }
    friend bool operator==(const RimHook&, const RimHook&) = default;
    friend auto operator<=>(const RimHook&, const RimHook&) = default;
};

// Diagonal index of a cell: d = row - col + 1.
inline int diagonal_of(const Cell& c) { return c.row - c.col + 1; }

// Hooks are kept sorted by terminal row.
struct Srht {
    Partition shape;
    std::vector<RimHook> hooks;
    friend bool operator==(const Srht&, const Srht&) = default;
    friend auto operator<=>(const Srht&, const Srht&) = default;
};

bool is_special_rim_hook(const RimHook& h);
bool is_srht(const Srht& r);

// Sorts hooks by terminal row.
Srht normalize(Srht r);

std::vector<Srht> enumerate_srht(const Partition& shape);
Permutation perm_srt(const Srht& r);
// (j_1, ..., x_1) ... (j_k, ..., x_k) over hooks sorted by terminal row j,
// with x the initial row.
std::vector<Cycle> perm_cycles_srt(const Srht& r);
// Throws NoPreimage naming the first row i with lambda_i - i + sigma_i < 0.
Srht srht_from_perm(const Partition& shape, const Permutation& perm);
WeakComposition gamma(const Srht& r);
Partition srht_content(const Srht& r);
int srht_sign(const Srht& r);
Thc xi(const Srht& r);
bool is_srht_and_thc(const Srht& r);

// Number of initial cells on each occupied diagonal, keyed by diagonal.
std::vector<std::pair<int, int>> initial_cells_per_diagonal(const Srht& r);

}  // namespace kostka
