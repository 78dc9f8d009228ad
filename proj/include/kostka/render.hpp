#pragma once

// ASCII and TikZ drawings of diagrams, coverings and tableaux.

#include "kostka/involutions.hpp"
#include "kostka/rimhooks.hpp"
#include "kostka/tableaux.hpp"
#include "kostka/tunnelhooks.hpp"

#include <string>

namespace kostka {

// One line per row listing the (row,col) coordinates of its cells.
std::string render_diagram_ascii(const Composition& shape);

// Colors as letters G, B, P, R over the given number of columns.
std::string render_gbpr_ascii(const GBPRDiagram& d, int width);

// Every covered cell shows its hook (start row) followed by the color the
// cell had when that hook was placed. Uncovered cells print as "..".
std::string render_thc_ascii(const Thc& t);

// Cells labelled by hook number, hooks numbered by terminal row.
std::string render_srht_ascii(const Srht& r);

std::string render_tableau_ascii(const Tableau& s);
std::string render_pair_ascii(SetKind kind, const Pair& x);
// One panel per step with the map applied and its selected indices.
std::string render_trace_ascii(SetKind kind, const InvolutionTrace& trace);

std::string render_diagram_tikz(const Composition& shape);
std::string render_thc_tikz(const Thc& t);
std::string render_srht_tikz(const Srht& r);
std::string render_tableau_tikz(const Tableau& s);

}  // namespace kostka
