#include "kostka/tableaux.hpp"

#include <algorithm>

namespace kostka {

Composition Tableau::shape() const
{
    Composition c;
    c.reserve(rows.size());
    for (const Row& r : rows)
        c.push_back(static_cast<int>(r.size()));
    return c;
}

bool Tableau::has_cell(int row, int col) const
{
    return row >= 1 && row <= static_cast<int>(rows.size()) && col >= 1 &&
           col <= static_cast<int>(rows[row - 1].size());
}

int Tableau::max_entry() const
{
    int m = 0;
    for (const Row& r : rows)
        for (int v : r)
            m = std::max(m, v);
    return m;
}

std::vector<Cell> diagram_cells(const Composition& shape)
{
    std::vector<Cell> cells;
    for (int i = 0; i < static_cast<int>(shape.size()); ++i)
        for (int j = 1; j <= shape[i]; ++j)
            cells.push_back({i + 1, j});
    return cells;
}

bool is_immaculate(const Tableau& s)
{
    for (std::size_t i = 0; i < s.rows.size(); ++i) {
        const Row& r = s.rows[i];
        if (r.empty() || r.front() < 1 || !std::is_sorted(r.begin(), r.end()))
            return false;
        if (i > 0 && s.rows[i - 1].front() >= r.front())
            return false;
    }
    return true;
}

bool is_ssyt(const Tableau& s)
{
    if (!is_immaculate(s) || !is_partition(s.shape()))
        return false;
    for (std::size_t i = 1; i < s.rows.size(); ++i)
        for (std::size_t j = 0; j < s.rows[i].size(); ++j)
            if (s.rows[i - 1][j] >= s.rows[i][j])
                return false;
    return true;
}

WeakComposition content(const Tableau& s, int m)
{
    WeakComposition c(m, 0);
    for (const Row& r : s.rows)
        for (int v : r) {
            if (v < 1 || v > m)
                throw Error(Errc::InvalidContent,
                            "content: entry " + std::to_string(v) + " outside 1.." + std::to_string(m));
            ++c[v - 1];
        }
    return c;
}

namespace {

// Cell-by-cell backtracking in reading order. The first entry of every row is
// forced to be the smallest value still available, since all later entries of
// the tableau exceed it.
class Filler {
public:
    Filler(const Composition& shape, const WeakComposition& content, bool strict_columns,
           const std::function<bool(const Tableau&)>& fn)
        : shape_(shape), remaining_(content), strict_(strict_columns), fn_(fn)
    {
        t_.rows.resize(shape.size());
        for (std::size_t i = 0; i < shape.size(); ++i)
            t_.rows[i].reserve(shape[i]);
    }

    void run()
    {
        if (shape_.empty()) {
            fn_(t_);
            return;
        }
        fill(0, 0);
    }

private:
    bool fill(int i, int j)
    {
        if (j == shape_[i]) {
            if (i + 1 == static_cast<int>(shape_.size()))
                return fn_(t_);
            return fill(i + 1, 0);
        }
        const int m = static_cast<int>(remaining_.size());
        if (j == 0) {
            int v = 0;
            while (v < m && remaining_[v] == 0)
                ++v;
            if (v == m)
                return true;
            if (i > 0 && t_.rows[i - 1][0] >= v + 1)
                return true;
            return place(i, j, v);
        }
        int lo = t_.rows[i][j - 1] - 1;
        if (strict_ && i > 0)
            lo = std::max(lo, t_.rows[i - 1][j]);
        for (int v = lo; v < m; ++v) {
            if (remaining_[v] == 0)
                continue;
            if (!place(i, j, v))
                return false;
        }
        return true;
    }

    bool place(int i, int j, int v)
    {
        --remaining_[v];
        t_.rows[i].push_back(v + 1);
        bool go_on = fill(i, j + 1);
        t_.rows[i].pop_back();
        ++remaining_[v];
        return go_on;
    }

    const Composition& shape_;
    WeakComposition remaining_;
    bool strict_;
    const std::function<bool(const Tableau&)>& fn_;
    Tableau t_;
};

void check_sizes(const char* who, const Composition& shape, const WeakComposition& content)
{
    if (!is_composition(shape))
        throw Error(Errc::InvalidArgument, std::string(who) + ": shape " + to_string(shape) +
                                               " is not a composition");
    if (!is_weak_composition(content))
        throw Error(Errc::InvalidContent, std::string(who) + ": negative content entry");
    if (total(shape) != total(content))
        throw Error(Errc::SumMismatch, std::string(who) + ": |" + to_string(shape) + "| != |" +
                                           to_string(content) + "|");
}

}  // namespace

void for_each_immaculate(const Composition& shape, const WeakComposition& content,
                         const std::function<bool(const Tableau&)>& fn)
{
    check_sizes("enumerate_immaculate", shape, content);
    Filler(shape, content, false, fn).run();
}

void for_each_ssyt(const Partition& shape, const WeakComposition& content,
                   const std::function<bool(const Tableau&)>& fn)
{
    check_sizes("enumerate_ssyt", shape, content);
    if (!is_partition(shape))
        throw Error(Errc::InvalidArgument, "enumerate_ssyt: shape " + to_string(shape) +
                                               " is not a partition");
    Filler(shape, content, true, fn).run();
}

std::vector<Tableau> enumerate_immaculate(const Composition& shape, const WeakComposition& content)
{
    std::vector<Tableau> out;
    for_each_immaculate(shape, content, [&](const Tableau& t) {
        out.push_back(t);
        return true;
    });
    return out;
}

std::vector<Tableau> enumerate_ssyt(const Partition& shape, const WeakComposition& content)
{
    std::vector<Tableau> out;
    for_each_ssyt(shape, content, [&](const Tableau& t) {
        out.push_back(t);
        return true;
    });
    return out;
}

std::size_t count_immaculate(const Composition& shape, const WeakComposition& content)
{
    std::size_t n = 0;
    for_each_immaculate(shape, content, [&](const Tableau&) {
        ++n;
        return true;
    });
    return n;
}

std::size_t count_ssyt(const Partition& shape, const WeakComposition& content)
{
    std::size_t n = 0;
    for_each_ssyt(shape, content, [&](const Tableau&) {
        ++n;
        return true;
    });
    return n;
}

Tableau bender_knuth(const Tableau& s, int k)
{
    if (!is_ssyt(s))
        throw Error(Errc::InvalidArgument, "bender_knuth: input is not semistandard");
    if (k < 1)
        throw Error(Errc::InvalidArgument, "bender_knuth: k must be positive");
    Tableau out = s;
    const int rows = static_cast<int>(s.rows.size());
    for (int i = 1; i <= rows; ++i) {
        const Row& r = s.rows[i - 1];
        // A k is paired with a k+1 directly below it, and vice versa.
        int first = -1;
        int free_k = 0;
        int free_k1 = 0;
        for (int j = 1; j <= static_cast<int>(r.size()); ++j) {
            int v = r[j - 1];
            bool is_free = false;
            if (v == k)
                is_free = !(s.has_cell(i + 1, j) && s.entry(i + 1, j) == k + 1);
            else if (v == k + 1)
                is_free = !(s.has_cell(i - 1, j) && s.entry(i - 1, j) == k);
            if (!is_free)
                continue;
            if (first < 0)
                first = j;
            (v == k ? free_k : free_k1) += 1;
        }
        if (first < 0)
            continue;
        Row& o = out.rows[i - 1];
        for (int c = 0; c < free_k1; ++c)
            o[first - 1 + c] = k;
        for (int c = 0; c < free_k; ++c)
            o[first - 1 + free_k1 + c] = k + 1;
    }
    return out;
}

std::vector<Cell> bad_cells(const Tableau& s)
{
    std::vector<Cell> out;
    for (int i = 2; i <= static_cast<int>(s.rows.size()); ++i)
        for (int j = 1; j <= static_cast<int>(s.rows[i - 1].size()); ++j)
            if (!s.has_cell(i - 1, j) || s.entry(i - 1, j) >= s.entry(i, j))
                out.push_back({i, j});
    std::sort(out.begin(), out.end(), [](const Cell& a, const Cell& b) {
        return a.col != b.col ? a.col < b.col : a.row < b.row;
    });
    return out;
}

std::vector<int> row_multiset(const Tableau& s, int i)
{
    if (i < 1 || i > static_cast<int>(s.rows.size()))
        throw Error(Errc::InvalidArgument, "row_multiset: row " + std::to_string(i) + " out of range");
    return s.rows[i - 1];
}

}  // namespace kostka
