#pragma once

// GBPR diagrams, tunnel hooks and tunnel hook coverings.
//
// A covering is stored as (shape, permutation). Hook cells, colors and the
// cell-wise weights are recovered by replaying the hook-choosing procedure.

#include "kostka/core.hpp"
#include "kostka/tableaux.hpp"

#include <functional>
#include <vector>

namespace kostka {

enum class Color { Grey, Blue, Purple, Red };

char color_letter(Color c);

// Row i has nu_i grey cells, then blue cells up to column a_i, or red cells
// when a_i < nu_i or a_i <= 0. Every other cell is purple. Column 0 counts as
// grey in every row.
struct GBPRDiagram {
    Sequence a;
    Sequence nu;

    int rows() const { return static_cast<int>(a.size()); }
    int blue(int i) const;
    int red(int i) const;
    Color color(int row, int col) const;
};

GBPRDiagram gbpr(const Sequence& a, const Sequence& nu);

struct TunnelHook {
    int start_row = 0;
    int end_row = 0;
    Cell terminal;
    // From the initial cell to the terminal cell.
    std::vector<Cell> cells;
    int red = 0;
    int purple = 0;

    int diagonal() const { return terminal.row - terminal.col + 1; }
    int sign() const { return (end_row - start_row) % 2 == 0 ? 1 : -1; }
    // |h| - 2 * red - purple
    int weight() const { return static_cast<int>(cells.size()) - 2 * red - purple; }
};

// Stage-by-stage replay of the hook-choosing procedure.
class THCBuilder {
public:
    explicit THCBuilder(Composition shape);

    int stage() const { return stage_; }
    bool done() const { return stage_ > static_cast<int>(shape_.size()); }
    const Composition& shape() const { return shape_; }
    // Grey profile before the current stage.
    const Sequence& nu() const { return nu_; }
    GBPRDiagram diagram() const { return gbpr(shape_, nu_); }

    // One legal terminal cell per end row p in stage..l, in that order.
    std::vector<Cell> available_terminals() const;

    // Places the hook of the current row that ends in row end_row.
    const TunnelHook& choose(int end_row);

    const std::vector<TunnelHook>& hooks() const { return hooks_; }

private:
    Composition shape_;
    Sequence nu_;
    int stage_ = 1;
    std::vector<TunnelHook> hooks_;
};

struct Thc {
    Composition shape;
    Permutation perm;
    friend bool operator==(const Thc&, const Thc&) = default;
    friend auto operator<=>(const Thc&, const Thc&) = default;
};

struct ThcGeometry {
    std::vector<TunnelHook> hooks;
    // Colored diagram seen by each stage.
    std::vector<GBPRDiagram> stages;
    Sequence final_nu;
};

Sequence delta_of(const Composition& shape, const Permutation& perm);
Sequence delta(const Thc& t);
int thc_sign(const Thc& t);
// flatten(delta). Throws InvalidContent if some weight is negative.
Composition thc_content(const Thc& t);

ThcGeometry replay(const Thc& t);

// Builds a covering from one end-row choice per stage. Throws Domain if a
// choice is not legal.
Thc build_thc(const Composition& shape, const std::vector<int>& end_rows);
ThcGeometry build_thc_geometry(const Composition& shape, const std::vector<int>& end_rows);

Permutation perm_of_geometry(const ThcGeometry& g);
Permutation perm_of_thc(const Thc& t);
Thc thc_from_perm(const Composition& shape, const Permutation& perm);

std::vector<int> end_rows(const Thc& t);

// (j_1, ..., 1)(j_2, ..., 2) ... (j_l, ..., l) with j_i the end row of hook i.
std::vector<Cycle> perm_cycles_thc(const Thc& t);

// Diagonals of the terminal cells lying in row k once rows below k are removed.
std::vector<int> row_terminal_diagonals(const Thc& t, int k);
// Permutation of the covering truncated to rows 1..k, read directly.
Permutation truncated_perm(const Thc& t, int k);
// Same permutation built by the row-by-row cycle recurrence.
Permutation perm_incremental(const Thc& t, int k);

// Visits every permutation of S_l whose weights on this shape are all
// nonnegative, in lexicographic order.
void for_each_nonneg_perm(const Composition& shape,
                          const std::function<void(const Permutation&, const Sequence&)>& fn);

struct SignedThc {
    Thc thc;
    int sign;
};

std::vector<SignedThc> enumerate_thc(const Composition& content, const Composition& shape);

}  // namespace kostka
