#include "kostka/rimhooks.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace kostka {

bool is_special_rim_hook(const RimHook& h)
{
    if (h.cells.empty())
        return false;
    for (std::size_t k = 1; k < h.cells.size(); ++k) {
        const Cell& a = h.cells[k - 1];
        const Cell& b = h.cells[k];
        bool south = b.row == a.row + 1 && b.col == a.col;
        bool west = b.row == a.row && b.col == a.col - 1;
        if (!south && !west)
            return false;
    }
    return h.terminal().col == 1;
}

bool is_srht(const Srht& r)
{
    if (!is_partition(r.shape))
        return false;
    std::set<Cell> seen;
    for (const RimHook& h : r.hooks) {
        if (!is_special_rim_hook(h))
            return false;
        for (const Cell& c : h.cells) {
            if (c.row < 1 || c.row > static_cast<int>(r.shape.size()) || c.col < 1 ||
                c.col > r.shape[c.row - 1])
                return false;
            if (!seen.insert(c).second)
                return false;
        }
    }
    return static_cast<int>(seen.size()) == total(r.shape);
}

Srht normalize(Srht r)
{
    std::sort(r.hooks.begin(), r.hooks.end(), [](const RimHook& a, const RimHook& b) {
        return a.terminal().row < b.terminal().row;
    });
    return r;
}

Srht srht_from_perm(const Partition& shape, const Permutation& perm)
{
    if (!is_partition(shape))
        throw Error(Errc::InvalidArgument, "srht_from_perm: shape " + to_string(shape) +
                                               " is not a partition");
    if (shape.size() != perm.size() || !is_permutation(perm))
        throw Error(Errc::LengthMismatch, "srht_from_perm: " + perm_string(perm) +
                                              " is not a permutation of the rows of " +
                                              to_string(shape));
    for (int i = 1; i <= static_cast<int>(shape.size()); ++i)
        if (shape[i - 1] - i + perm[i - 1] < 0)
            throw Error(Errc::NoPreimage, "srht_from_perm: lambda_" + std::to_string(i) + " - " +
                                              std::to_string(i) + " + sigma_" + std::to_string(i) +
                                              " < 0");
    Srht out{shape, {}};
    Partition lam = shape;
    Permutation s = perm;
    while (!lam.empty()) {
        const int l = static_cast<int>(lam.size());
        int i = 0;
        while (s[i] != l)
            ++i;
        ++i;
        RimHook h;
        for (int x = i; x <= l; ++x) {
            int lo = x < l ? lam[x] : 1;
            for (int c = lam[x - 1]; c >= lo; --c)
                h.cells.push_back({x, c});
        }
        out.hooks.push_back(std::move(h));
        Partition next(lam.begin(), lam.begin() + (i - 1));
        for (int x = i; x < l; ++x)
            next.push_back(lam[x] - 1);
        Permutation t(s.begin(), s.begin() + (i - 1));
        for (int x = i; x < l; ++x)
            t.push_back(s[x]);
        while (!next.empty() && next.back() == 0) {
            if (t.back() != static_cast<int>(t.size()))
                throw Error(Errc::Structural, "srht_from_perm: empty row is not a fixed point");
            next.pop_back();
            t.pop_back();
        }
        lam = std::move(next);
        s = std::move(t);
    }
    return normalize(std::move(out));
}

std::vector<Srht> enumerate_srht(const Partition& shape)
{
    std::vector<Srht> out;
    for_each_nonneg_perm(shape, [&](const Permutation& perm, const Sequence&) {
        out.push_back(srht_from_perm(shape, perm));
    });
    return out;
}

namespace {

const RimHook* hook_with_initial_on(const Srht& r, int d)
{
    for (const RimHook& h : r.hooks)
        if (diagonal_of(h.initial()) == d)
            return &h;
    return nullptr;
}

}  // namespace

Permutation perm_srt(const Srht& r)
{
    Permutation s;
    for (int i = 1; i <= static_cast<int>(r.shape.size()); ++i) {
        const RimHook* h = hook_with_initial_on(r, i - r.shape[i - 1] + 1);
        s.push_back(h ? h->terminal().row : i - r.shape[i - 1]);
    }
    if (!is_permutation(s))
        throw Error(Errc::Structural, "perm_srt: rule produced " + perm_string(s) +
                                          ", which is not a permutation");
    return s;
}

std::vector<Cycle> perm_cycles_srt(const Srht& r)
{
    std::vector<Cycle> cycles;
    for (const RimHook& h : normalize(r).hooks) {
        Cycle c;
        for (int j = h.terminal().row; j >= h.initial().row; --j)
            c.push_back(j);
        cycles.push_back(std::move(c));
    }
    return cycles;
}

WeakComposition gamma(const Srht& r)
{
    WeakComposition g;
    for (int i = 1; i <= static_cast<int>(r.shape.size()); ++i) {
        const RimHook* h = hook_with_initial_on(r, i - r.shape[i - 1] + 1);
        g.push_back(h ? static_cast<int>(h->cells.size()) : 0);
    }
    return g;
}

Partition srht_content(const Srht& r) { return dec(flatten(gamma(r))); }

int srht_sign(const Srht& r)
{
    int crossed = 0;
    for (const RimHook& h : r.hooks)
        crossed += h.rows_crossed();
    return crossed % 2 == 0 ? 1 : -1;
}

Thc xi(const Srht& r) { return thc_from_perm(r.shape, perm_srt(r)); }

bool is_srht_and_thc(const Srht& r)
{
    for (const RimHook& h : r.hooks)
        if (h.initial().col != r.shape[h.initial().row - 1] || h.terminal().col != 1)
            return false;
    return true;
}

std::vector<std::pair<int, int>> initial_cells_per_diagonal(const Srht& r)
{
    std::map<int, int> count;
    for (const RimHook& h : r.hooks)
        ++count[diagonal_of(h.initial())];
    return {count.begin(), count.end()};
}

}  // namespace kostka
