#pragma once

// Diagrams, immaculate tableaux and semistandard Young tableaux.

#include "kostka/core.hpp"

#include <cstddef>
#include <functional>
#include <vector>

namespace kostka {

// 1-based (row, column) coordinates.
struct Cell {
    int row = 0;
    int col = 0;
    friend bool operator==(const Cell&, const Cell&) = default;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

using Row = std::vector<int>;

// The shape is the sequence of row lengths. A row may be empty only while an
// algorithm is rewriting the tableau.
struct Tableau {
    std::vector<Row> rows;

    Composition shape() const;
    int entry(int row, int col) const { return rows[row - 1][col - 1]; }
    bool has_cell(int row, int col) const;
    int max_entry() const;
    friend bool operator==(const Tableau&, const Tableau&) = default;
    friend auto operator<=>(const Tableau&, const Tableau&) = default;
};

// Cells of C_alpha in reading order.
std::vector<Cell> diagram_cells(const Composition& shape);

bool is_immaculate(const Tableau& s);
bool is_ssyt(const Tableau& s);

// Multiplicities of 1..m. Throws InvalidContent if an entry exceeds m.
WeakComposition content(const Tableau& s, int m);

// Visits tableaux in lexicographic order of their row reading word. The
// callback may return false to stop early.
void for_each_immaculate(const Composition& shape, const WeakComposition& content,
                         const std::function<bool(const Tableau&)>& fn);
void for_each_ssyt(const Partition& shape, const WeakComposition& content,
                   const std::function<bool(const Tableau&)>& fn);

std::vector<Tableau> enumerate_immaculate(const Composition& shape, const WeakComposition& content);
std::vector<Tableau> enumerate_ssyt(const Partition& shape, const WeakComposition& content);
std::size_t count_immaculate(const Composition& shape, const WeakComposition& content);
std::size_t count_ssyt(const Partition& shape, const WeakComposition& content);

// Exchanges the multiplicities of k and k+1. Throws InvalidArgument if s is
// not a semistandard Young tableau.
Tableau bender_knuth(const Tableau& s, int k);

// Bad cells sorted by (column, row).
std::vector<Cell> bad_cells(const Tableau& s);

std::vector<int> row_multiset(const Tableau& s, int i);

}  // namespace kostka
