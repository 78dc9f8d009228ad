#include "kostka/render.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace kostka {

namespace {

// Two-character label for a hook index.
std::string label(int k)
{
    std::string s = std::to_string(k);
    return s.size() == 1 ? " " + s : s;
}

std::string pad(const std::string& s, std::size_t w)
{
    return s.size() >= w ? s : std::string(w - s.size(), ' ') + s;
}

}  // namespace

std::string render_diagram_ascii(const Composition& shape)
{
    std::ostringstream out;
    for (int i = 1; i <= static_cast<int>(shape.size()); ++i) {
        for (int j = 1; j <= shape[i - 1]; ++j)
            out << (j > 1 ? " " : "") << "(" << i << "," << j << ")";
        out << "\n";
    }
    return out.str();
}

std::string render_gbpr_ascii(const GBPRDiagram& d, int width)
{
    std::ostringstream out;
    for (int i = 1; i <= d.rows(); ++i) {
        for (int j = 1; j <= width; ++j)
            out << color_letter(d.color(i, j));
        out << "\n";
    }
    return out.str();
}

std::string render_thc_ascii(const Thc& t)
{
    ThcGeometry g = replay(t);
    std::map<Cell, std::string> mark;
    int width = 0;
    for (std::size_t k = 0; k < g.hooks.size(); ++k) {
        const TunnelHook& h = g.hooks[k];
        for (const Cell& c : h.cells) {
            mark[c] = label(h.start_row) + color_letter(g.stages[k].color(c.row, c.col));
            width = std::max(width, c.col);
        }
    }
    for (int b : t.shape)
        width = std::max(width, b);
    std::ostringstream out;
    out << "shape " << to_string(t.shape) << " perm " << perm_string(t.perm) << " delta "
        << to_string(delta(t)) << " sign " << (thc_sign(t) > 0 ? "+" : "-") << "\n";
    for (int i = 1; i <= static_cast<int>(t.shape.size()); ++i) {
        for (int j = 1; j <= width; ++j) {
            auto it = mark.find({i, j});
            std::string cell = it != mark.end() ? it->second : (j <= t.shape[i - 1] ? " ??" : "  .");
            out << (j > 1 ? " " : "") << cell;
        }
        out << "\n";
    }
    return out.str();
}

std::string render_srht_ascii(const Srht& r)
{
    std::map<Cell, int> owner;
    for (std::size_t k = 0; k < r.hooks.size(); ++k)
        for (const Cell& c : r.hooks[k].cells)
            owner[c] = static_cast<int>(k) + 1;
    std::ostringstream out;
    out << "shape " << to_string(r.shape) << " perm " << perm_string(perm_srt(r)) << " sign "
        << (srht_sign(r) > 0 ? "+" : "-") << "\n";
    for (int i = 1; i <= static_cast<int>(r.shape.size()); ++i) {
        for (int j = 1; j <= r.shape[i - 1]; ++j)
            out << (j > 1 ? " " : "") << label(owner.count({i, j}) ? owner[{i, j}] : 0);
        out << "\n";
    }
    return out.str();
}

std::string render_tableau_ascii(const Tableau& s)
{
    std::size_t w = std::to_string(std::max(1, s.max_entry())).size();
    std::ostringstream out;
    for (const Row& r : s.rows) {
        for (std::size_t j = 0; j < r.size(); ++j)
            out << (j ? " " : "") << pad(std::to_string(r[j]), w);
        out << "\n";
    }
    return out.str();
}

std::string render_pair_ascii(SetKind kind, const Pair& x)
{
    std::ostringstream out;
    out << "set " << set_letter(kind) << " sign " << (pair_sign(x) > 0 ? "+" : "-") << "\n";
    out << "T: " << render_thc_ascii(x.T);
    out << "S:\n" << render_tableau_ascii(x.S);
    return out.str();
}

std::string render_trace_ascii(SetKind kind, const InvolutionTrace& trace)
{
    std::ostringstream out;
    for (std::size_t k = 0; k < trace.steps.size(); ++k) {
        const TraceStep& st = trace.steps[k];
        out << "== pair " << (k + 1) << " (" << st.map;
        for (const auto& [name, v] : st.indices)
            out << " " << name << "=" << v;
        out << ") ==\n" << render_pair_ascii(kind, st.pair);
    }
    return out.str();
}

namespace {

void tikz_box(std::ostringstream& out, int row, int col, const std::string& text)
{
    out << "  \\draw (" << col - 1 << "," << row - 1 << ") rectangle (" << col << "," << row << ");";
    if (!text.empty())
        out << " \\node at (" << col - 0.5 << "," << row - 0.5 << ") {" << text << "};";
    out << "\n";
}

const char* tikz_open = "\\begin{tikzpicture}[yscale=-1,scale=.55]\n";
const char* tikz_close = "\\end{tikzpicture}\n";

}  // namespace

std::string render_diagram_tikz(const Composition& shape)
{
    std::ostringstream out;
    out << tikz_open;
    for (const Cell& c : diagram_cells(shape))
        tikz_box(out, c.row, c.col, "");
    out << tikz_close;
    return out.str();
}

std::string render_thc_tikz(const Thc& t)
{
    ThcGeometry g = replay(t);
    std::ostringstream out;
    out << tikz_open;
    for (const Cell& c : diagram_cells(t.shape))
        tikz_box(out, c.row, c.col, "");
    for (const TunnelHook& h : g.hooks) {
        out << "  \\draw[line width=7pt,opacity=.15,line cap=round,rounded corners]";
        for (std::size_t k = 0; k < h.cells.size(); ++k)
            out << (k ? " -- " : " ") << "(" << h.cells[k].col - 0.5 << "," << h.cells[k].row - 0.5
                << ")";
        if (h.cells.size() == 1)
            out << " -- (" << h.cells[0].col - 0.5 << "," << h.cells[0].row - 0.5 << ")";
        out << ";\n";
    }
    out << tikz_close;
    return out.str();
}

std::string render_srht_tikz(const Srht& r)
{
    std::ostringstream out;
    out << tikz_open;
    for (const Cell& c : diagram_cells(r.shape))
        tikz_box(out, c.row, c.col, "");
    for (const RimHook& h : r.hooks) {
        out << "  \\draw[line width=7pt,opacity=.15,line cap=round,rounded corners]";
        for (std::size_t k = 0; k < h.cells.size(); ++k)
            out << (k ? " -- " : " ") << "(" << h.cells[k].col - 0.5 << "," << h.cells[k].row - 0.5
                << ")";
        if (h.cells.size() == 1)
            out << " -- (" << h.cells[0].col - 0.5 << "," << h.cells[0].row - 0.5 << ")";
        out << ";\n";
    }
    out << tikz_close;
    return out.str();
}

std::string render_tableau_tikz(const Tableau& s)
{
    std::ostringstream out;
    out << tikz_open;
    for (int i = 1; i <= static_cast<int>(s.rows.size()); ++i)
        for (int j = 1; j <= static_cast<int>(s.rows[i - 1].size()); ++j)
            tikz_box(out, i, j, std::to_string(s.entry(i, j)));
    out << tikz_close;
    return out.str();
}

}  // namespace kostka
