#include "kostka/core.hpp"

#include <algorithm>
#include <numeric>

namespace kostka {

int total(const Sequence& a) { return std::accumulate(a.begin(), a.end(), 0); }

bool is_composition(const Sequence& a)
{
    return std::all_of(a.begin(), a.end(), [](int x) { return x >= 1; });
}

bool is_partition(const Sequence& a)
{
    return is_composition(a) && std::is_sorted(a.rbegin(), a.rend());
}

bool is_weak_composition(const Sequence& a)
{
    return std::all_of(a.begin(), a.end(), [](int x) { return x >= 0; });
}

std::vector<Composition> compositions_of(int n)
{
    if (n <= 0)
        throw Error(Errc::EmptyDegree, "compositions_of: degree must be positive");
    std::vector<Composition> out;
    const std::uint32_t count = 1u << (n - 1);
    out.reserve(count);
    for (std::uint32_t mask = 0; mask < count; ++mask) {
        Composition c;
        int part = 0;
        for (int pos = 1; pos <= n; ++pos) {
            ++part;
            // Position 1 is the most significant bit.
            bool cut = pos < n && ((mask >> (n - 1 - pos)) & 1u);
            if (cut || pos == n) {
                c.push_back(part);
                part = 0;
            }
        }
        out.push_back(std::move(c));
    }
    return out;
}

namespace {

void partitions_rec(int rest, int cap, Partition& cur, std::vector<Partition>& out)
{
    if (rest == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(rest, cap); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(rest - p, p, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n)
{
    if (n <= 0)
        throw Error(Errc::EmptyDegree, "partitions_of: degree must be positive");
    std::vector<Partition> out;
    Partition cur;
    partitions_rec(n, n, cur, out);
    return out;
}

Partition dec(const Sequence& a)
{
    Partition p = a;
    std::sort(p.begin(), p.end(), std::greater<int>());
    return p;
}

Composition flatten(const Sequence& a)
{
    Composition c;
    for (int x : a) {
        if (x < 0)
            throw Error(Errc::InvalidContent, "flatten: negative entry " + std::to_string(x));
        if (x > 0)
            c.push_back(x);
    }
    return c;
}

bool dominates(const Sequence& a, const Sequence& b)
{
    if (total(a) != total(b))
        throw Error(Errc::SumMismatch, "dominates: " + to_string(a) + " and " + to_string(b) +
                                           " have different sums");
    const std::size_t len = std::max(a.size(), b.size());
    long sa = 0;
    long sb = 0;
    for (std::size_t i = 0; i < len; ++i) {
        sa += i < a.size() ? a[i] : 0;
        sb += i < b.size() ? b[i] : 0;
        if (sa < sb)
            return false;
    }
    return true;
}

bool lex_geq(const Sequence& a, const Sequence& b)
{
    const std::size_t len = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < len; ++i) {
        int x = i < a.size() ? a[i] : 0;
        int y = i < b.size() ? b[i] : 0;
        if (x != y)
            return x > y;
    }
    return true;
}

bool is_permutation(const Permutation& s)
{
    std::vector<char> seen(s.size() + 1, 0);
    for (int v : s) {
        if (v < 1 || v > static_cast<int>(s.size()) || seen[v])
            return false;
        seen[v] = 1;
    }
    return true;
}

Permutation identity_perm(int l)
{
    Permutation s(l);
    std::iota(s.begin(), s.end(), 1);
    return s;
}

Permutation perm_compose(const Permutation& s, const Permutation& t)
{
    if (s.size() != t.size())
        throw Error(Errc::LengthMismatch, "perm_compose: lengths " + std::to_string(s.size()) +
                                              " and " + std::to_string(t.size()));
    Permutation r(s.size());
    for (std::size_t i = 0; i < t.size(); ++i)
        r[i] = s[t[i] - 1];
    return r;
}

Permutation perm_inverse(const Permutation& s)
{
    Permutation r(s.size());
    for (std::size_t i = 0; i < s.size(); ++i)
        r[s[i] - 1] = static_cast<int>(i) + 1;
    return r;
}

int inversions(const Permutation& s)
{
    int inv = 0;
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (s[j] < s[i])
                ++inv;
    return inv;
}

int perm_sign(const Permutation& s) { return inversions(s) % 2 == 0 ? 1 : -1; }

Sequence lehmer_code(const Permutation& s)
{
    Sequence code(s.size(), 0);
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (s[j] < s[i])
                ++code[i];
    return code;
}

Permutation lehmer_decode(const Sequence& code)
{
    const int l = static_cast<int>(code.size());
    std::vector<int> avail = identity_perm(l);
    Permutation s;
    s.reserve(l);
    for (int i = 0; i < l; ++i) {
        int c = code[i];
        if (c < 0 || c >= l - i)
            throw Error(Errc::InvalidArgument, "lehmer_decode: entry out of range at position " +
                                                   std::to_string(i + 1));
        s.push_back(avail[c]);
        avail.erase(avail.begin() + c);
    }
    return s;
}

Permutation embed(const Permutation& s, int m)
{
    if (m < static_cast<int>(s.size()))
        throw Error(Errc::InvalidArgument, "embed: target size smaller than permutation");
    Permutation r = s;
    for (int i = static_cast<int>(s.size()) + 1; i <= m; ++i)
        r.push_back(i);
    return r;
}

Permutation s_left(int k, const Permutation& s)
{
    if (k < 1 || k >= static_cast<int>(s.size()))
        throw Error(Errc::InvalidArgument, "s_left: index " + std::to_string(k) + " out of range");
    Permutation r = s;
    for (int& v : r) {
        if (v == k)
            v = k + 1;
        else if (v == k + 1)
            v = k;
    }
    return r;
}

Permutation s_right(const Permutation& s, int k)
{
    if (k < 1 || k >= static_cast<int>(s.size()))
        throw Error(Errc::InvalidArgument, "s_right: index " + std::to_string(k) + " out of range");
    Permutation r = s;
    std::swap(r[k - 1], r[k]);
    return r;
}

Permutation from_cycles(int l, const std::vector<Cycle>& cycles)
{
    Permutation r = identity_perm(l);
    for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
        const Cycle& c = *it;
        Permutation cyc = identity_perm(l);
        for (std::size_t k = 0; k < c.size(); ++k) {
            int from = c[k];
            int to = c[(k + 1) % c.size()];
            if (from < 1 || from > l || to < 1 || to > l)
                throw Error(Errc::InvalidArgument, "from_cycles: entry out of range");
            cyc[from - 1] = to;
        }
        r = perm_compose(cyc, r);
    }
    return r;
}

Permutation remove_fixed_point(const Permutation& s, int r)
{
    if (r < 1 || r > static_cast<int>(s.size()) || s[r - 1] != r)
        throw Error(Errc::Structural, "remove_fixed_point: position " + std::to_string(r) +
                                          " is not a fixed point of " + perm_string(s));
    Permutation out;
    out.reserve(s.size() - 1);
    for (int i = 1; i <= static_cast<int>(s.size()); ++i) {
        if (i == r)
            continue;
        int v = s[i - 1];
        out.push_back(v > r ? v - 1 : v);
    }
    return out;
}

void for_each_perm(int l, const std::function<void(const Permutation&)>& fn)
{
    Permutation s = identity_perm(l);
    do {
        fn(s);
    } while (std::next_permutation(s.begin(), s.end()));
}

namespace {

std::string join(const Sequence& a, const char* open, const char* close)
{
    std::string out = open;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i)
            out += ",";
        out += std::to_string(a[i]);
    }
    out += close;
    return out;
}

}  // namespace

std::string to_string(const Sequence& a) { return join(a, "(", ")"); }

std::string perm_string(const Permutation& s) { return join(s, "[", "]"); }

std::string cycles_string(const std::vector<Cycle>& cycles)
{
    std::string out;
    for (const Cycle& c : cycles)
        out += join(c, "(", ")");
    return out;
}

}  // namespace kostka
