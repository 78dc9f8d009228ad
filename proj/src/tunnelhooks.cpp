#include "kostka/tunnelhooks.hpp"

#include <algorithm>

namespace kostka {

char color_letter(Color c)
{
    switch (c) {
    case Color::Grey:
        return 'G';
    case Color::Blue:
        return 'B';
    case Color::Purple:
        return 'P';
    case Color::Red:
        return 'R';
    }
    return '?';
}

int GBPRDiagram::blue(int i) const
{
    int ai = a[i - 1];
    int ni = nu[i - 1];
    return ai > 0 && ai > ni ? ai - ni : 0;
}

int GBPRDiagram::red(int i) const
{
    int ai = a[i - 1];
    int ni = nu[i - 1];
    return ai < ni || ai <= 0 ? ni - ai : 0;
}

Color GBPRDiagram::color(int row, int col) const
{
    int ni = nu[row - 1];
    if (col <= ni)
        return Color::Grey;
    int b = blue(row);
    if (b > 0)
        return col <= ni + b ? Color::Blue : Color::Purple;
    int r = red(row);
    return col <= ni + r ? Color::Red : Color::Purple;
}

GBPRDiagram gbpr(const Sequence& a, const Sequence& nu)
{
    if (a.size() != nu.size())
        throw Error(Errc::LengthMismatch, "gbpr: shape and grey profile lengths differ");
    if (!is_weak_composition(nu))
        throw Error(Errc::InvalidArgument, "gbpr: negative grey profile entry");
    return GBPRDiagram{a, nu};
}

THCBuilder::THCBuilder(Composition shape) : shape_(std::move(shape)), nu_(shape_.size(), 0)
{
    if (!is_composition(shape_))
        throw Error(Errc::InvalidArgument, "THCBuilder: shape " + to_string(shape_) +
                                               " is not a composition");
}

std::vector<Cell> THCBuilder::available_terminals() const
{
    std::vector<Cell> out;
    if (done())
        return out;
    const int l = static_cast<int>(shape_.size());
    for (int p = stage_; p <= l; ++p)
        out.push_back({p, nu_[p - 1] + 1});
    return out;
}

const TunnelHook& THCBuilder::choose(int end_row)
{
    const int l = static_cast<int>(shape_.size());
    const int r = stage_;
    if (done())
        throw Error(Errc::Domain, "THCBuilder: every row already has a hook");
    if (end_row < r || end_row > l)
        throw Error(Errc::Domain, "THCBuilder: end row " + std::to_string(end_row) +
                                      " is not available at stage " + std::to_string(r));
    TunnelHook h;
    h.start_row = r;
    h.end_row = end_row;
    const int a = shape_[r - 1];
    const int nr = nu_[r - 1];
    if (a > nr) {
        for (int c = a; c > nr; --c)
            h.cells.push_back({r, c});
    } else if (a < nr) {
        h.red = nr - a;
        for (int c = nr + h.red; c > nr; --c)
            h.cells.push_back({r, c});
    } else {
        h.purple = 1;
        h.cells.push_back({r, nr + 1});
    }
    for (int i = r + 1; i <= end_row; ++i)
        for (int c = nu_[i - 2] + 1; c > nu_[i - 1]; --c)
            h.cells.push_back({i, c});
    h.terminal = {end_row, nu_[end_row - 1] + 1};
    if (h.cells.back() != h.terminal)
        throw Error(Errc::Structural, "THCBuilder: hook does not end at its terminal cell");

    for (int i = end_row; i > r; --i)
        nu_[i - 1] = nu_[i - 2] + 1;
    nu_[r - 1] = a;
    hooks_.push_back(std::move(h));
    ++stage_;
    return hooks_.back();
}

Sequence delta_of(const Composition& shape, const Permutation& perm)
{
    if (shape.size() != perm.size())
        throw Error(Errc::LengthMismatch, "delta: shape and permutation lengths differ");
    Sequence d(shape.size());
    for (std::size_t i = 0; i < shape.size(); ++i)
        d[i] = shape[i] + perm[i] - static_cast<int>(i) - 1;
    return d;
}

Sequence delta(const Thc& t) { return delta_of(t.shape, t.perm); }

int thc_sign(const Thc& t) { return perm_sign(t.perm); }

Composition thc_content(const Thc& t) { return flatten(delta(t)); }

ThcGeometry build_thc_geometry(const Composition& shape, const std::vector<int>& end_rows)
{
    if (shape.size() != end_rows.size())
        throw Error(Errc::LengthMismatch, "build_thc: one choice per row is required");
    THCBuilder b(shape);
    ThcGeometry g;
    for (int p : end_rows) {
        g.stages.push_back(b.diagram());
        b.choose(p);
    }
    g.hooks = b.hooks();
    g.final_nu = b.nu();
    return g;
}

Thc build_thc(const Composition& shape, const std::vector<int>& end_rows)
{
    return Thc{shape, perm_of_geometry(build_thc_geometry(shape, end_rows))};
}

Permutation perm_of_geometry(const ThcGeometry& g)
{
    Permutation s;
    s.reserve(g.hooks.size());
    for (const TunnelHook& h : g.hooks)
        s.push_back(h.diagonal());
    return s;
}

namespace {

// Replays the procedure, picking at every stage the terminal on diagonal perm_r.
ThcGeometry replay_perm(const Composition& shape, const Permutation& perm)
{
    if (shape.size() != perm.size())
        throw Error(Errc::LengthMismatch, "thc_from_perm: shape " + to_string(shape) +
                                              " and permutation " + perm_string(perm) +
                                              " have different lengths");
    if (!is_permutation(perm))
        throw Error(Errc::InvalidArgument, "thc_from_perm: " + perm_string(perm) +
                                               " is not a permutation");
    THCBuilder b(shape);
    ThcGeometry g;
    for (int target : perm) {
        g.stages.push_back(b.diagram());
        int end_row = 0;
        for (const Cell& c : b.available_terminals())
            if (c.row - c.col + 1 == target)
                end_row = c.row;
        if (end_row == 0)
            throw Error(Errc::Structural, "thc_from_perm: no terminal on diagonal " +
                                              std::to_string(target));
        b.choose(end_row);
    }
    g.hooks = b.hooks();
    g.final_nu = b.nu();
    return g;
}

}  // namespace

ThcGeometry replay(const Thc& t) { return replay_perm(t.shape, t.perm); }

Permutation perm_of_thc(const Thc& t) { return perm_of_geometry(replay(t)); }

Thc thc_from_perm(const Composition& shape, const Permutation& perm)
{
    return Thc{shape, perm_of_geometry(replay_perm(shape, perm))};
}

std::vector<int> end_rows(const Thc& t)
{
    std::vector<int> out;
    for (const TunnelHook& h : replay(t).hooks)
        out.push_back(h.end_row);
    return out;
}

std::vector<Cycle> perm_cycles_thc(const Thc& t)
{
    std::vector<Cycle> cycles;
    std::vector<int> ends = end_rows(t);
    for (int i = 1; i <= static_cast<int>(ends.size()); ++i) {
        Cycle c;
        for (int j = ends[i - 1]; j >= i; --j)
            c.push_back(j);
        cycles.push_back(std::move(c));
    }
    return cycles;
}

namespace {

int leftmost_in_row(const TunnelHook& h, int k)
{
    int best = 0;
    for (const Cell& c : h.cells)
        if (c.row == k && (best == 0 || c.col < best))
            best = c.col;
    return best;
}

void check_row(const Thc& t, int k)
{
    if (k < 1 || k > static_cast<int>(t.shape.size()))
        throw Error(Errc::InvalidArgument, "row " + std::to_string(k) + " out of range");
}

}  // namespace

std::vector<int> row_terminal_diagonals(const Thc& t, int k)
{
    check_row(t, k);
    std::vector<int> out;
    for (const TunnelHook& h : replay(t).hooks) {
        if (h.start_row > k || h.end_row < k)
            continue;
        out.push_back(k - leftmost_in_row(h, k) + 1);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Permutation truncated_perm(const Thc& t, int k)
{
    check_row(t, k);
    Permutation s;
    for (const TunnelHook& h : replay(t).hooks) {
        if (h.start_row > k)
            break;
        s.push_back(h.end_row < k ? h.diagonal() : k - leftmost_in_row(h, k) + 1);
    }
    return s;
}

Permutation perm_incremental(const Thc& t, int k)
{
    check_row(t, k);
    Permutation s;
    for (int j = 1; j <= k; ++j)
        s = perm_compose(from_cycles(j, {row_terminal_diagonals(t, j)}), embed(s, j));
    return s;
}

namespace {

void nonneg_rec(const Composition& shape, int i, Permutation& perm, Sequence& d,
                std::vector<char>& used,
                const std::function<void(const Permutation&, const Sequence&)>& fn)
{
    const int l = static_cast<int>(shape.size());
    if (i == l) {
        fn(perm, d);
        return;
    }
    for (int v = std::max(1, i + 1 - shape[i]); v <= l; ++v) {
        if (used[v])
            continue;
        used[v] = 1;
        perm[i] = v;
        d[i] = shape[i] + v - i - 1;
        nonneg_rec(shape, i + 1, perm, d, used, fn);
        used[v] = 0;
    }
}

}  // namespace

void for_each_nonneg_perm(const Composition& shape,
                          const std::function<void(const Permutation&, const Sequence&)>& fn)
{
    const int l = static_cast<int>(shape.size());
    Permutation perm(l, 0);
    Sequence d(l, 0);
    std::vector<char> used(l + 1, 0);
    nonneg_rec(shape, 0, perm, d, used, fn);
}

std::vector<SignedThc> enumerate_thc(const Composition& content, const Composition& shape)
{
    if (!is_composition(content) || !is_composition(shape))
        throw Error(Errc::InvalidArgument, "enumerate_thc: arguments must be compositions");
    if (total(content) != total(shape))
        throw Error(Errc::SumMismatch, "enumerate_thc: |" + to_string(content) + "| != |" +
                                           to_string(shape) + "|");
    std::vector<SignedThc> out;
    for_each_nonneg_perm(shape, [&](const Permutation& perm, const Sequence& d) {
        std::size_t j = 0;
        for (int x : d) {
            if (x == 0)
                continue;
            if (j == content.size() || content[j] != x)
                return;
            ++j;
        }
        if (j == content.size())
            out.push_back({Thc{shape, perm}, perm_sign(perm)});
    });
    return out;
}

}  // namespace kostka
