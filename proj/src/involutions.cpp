#include "kostka/involutions.hpp"

#include "kostka/matrices.hpp"

#include <algorithm>
#include <mutex>

namespace kostka {

char set_letter(SetKind k) { return "ABCDE"[static_cast<int>(k)]; }

SetKind set_from_letter(char c)
{
    switch (c) {
    case 'A':
        return SetKind::A;
    case 'B':
        return SetKind::B;
    case 'C':
        return SetKind::C;
    case 'D':
        return SetKind::D;
    case 'E':
        return SetKind::E;
    }
    throw Error(Errc::InvalidArgument, std::string("unknown pair set '") + c + "'");
}

Sequence delta_inverse_order(const Thc& t)
{
    Sequence d = delta(t);
    Permutation inv = perm_inverse(t.perm);
    Sequence out(d.size());
    for (std::size_t k = 0; k < d.size(); ++k)
        out[k] = d[inv[k] - 1];
    return out;
}

namespace {

std::string describe(const Pair& x)
{
    std::string s = "S=[";
    for (std::size_t i = 0; i < x.S.rows.size(); ++i) {
        if (i)
            s += ",";
        s += perm_string(x.S.rows[i]);
    }
    return s + "] T=" + to_string(x.T.shape) + "/" + perm_string(x.T.perm);
}

bool valid_thc(const Thc& t)
{
    return is_composition(t.shape) && t.shape.size() == t.perm.size() && is_permutation(t.perm);
}

bool nonneg(const Sequence& d) { return is_weak_composition(d); }

bool has_content(const Tableau& s, const Sequence& c)
{
    if (s.max_entry() > static_cast<int>(c.size()))
        return false;
    return content(s, static_cast<int>(c.size())) == c;
}

}  // namespace

bool in_set(SetKind kind, const Pair& x, const Sequence& left, const Sequence& right)
{
    if (!valid_thc(x.T) || !is_immaculate(x.S))
        return false;
    const Sequence d = delta(x.T);
    switch (kind) {
    case SetKind::A:
        return x.S.shape() == left && x.T.shape == right && has_content(x.S, d);
    case SetKind::B:
        return is_ssyt(x.S) && x.S.shape() == left && x.T.shape == right &&
               is_partition(right) && nonneg(d) && has_content(x.S, delta_inverse_order(x.T));
    case SetKind::C:
        return x.S.shape() == x.T.shape && nonneg(d) && flatten(d) == left &&
               has_content(x.S, right);
    case SetKind::D:
        return is_ssyt(x.S) && x.S.shape() == x.T.shape && nonneg(d) &&
               dec(flatten(d)) == left && has_content(x.S, right);
    case SetKind::E:
        return x.S.shape() == x.T.shape && nonneg(d) && dec(flatten(d)) == left &&
               has_content(x.S, right);
    }
    return false;
}

std::pair<Sequence, Sequence> pair_indices(SetKind kind, const Pair& x)
{
    switch (kind) {
    case SetKind::A:
    case SetKind::B:
        return {x.S.shape(), x.T.shape};
    case SetKind::C:
        return {thc_content(x.T), flatten(content(x.S, x.S.max_entry()))};
    case SetKind::D:
    case SetKind::E:
        return {dec(thc_content(x.T)), flatten(content(x.S, x.S.max_entry()))};
    }
    return {};
}

void for_each_pair(SetKind kind, const Sequence& left, const Sequence& right,
                   const std::function<void(const Pair&)>& fn)
{
    const int n = total(left);
    if (total(right) != n)
        throw Error(Errc::SumMismatch, "enumerate_pairs: indices of different degree");
    Pair x;
    switch (kind) {
    case SetKind::A:
        for_each_nonneg_perm(right, [&](const Permutation& perm, const Sequence& d) {
            x.T = Thc{right, perm};
            for_each_immaculate(left, d, [&](const Tableau& s) {
                x.S = s;
                fn(x);
                return true;
            });
        });
        return;
    case SetKind::B:
        if (!is_partition(left) || !is_partition(right))
            throw Error(Errc::InvalidArgument, "enumerate_pairs: B is indexed by partitions");
        for_each_nonneg_perm(right, [&](const Permutation& perm, const Sequence&) {
            x.T = Thc{right, perm};
            for_each_ssyt(left, delta_inverse_order(x.T), [&](const Tableau& s) {
                x.S = s;
                fn(x);
                return true;
            });
        });
        return;
    case SetKind::C:
    case SetKind::D:
    case SetKind::E: {
        const bool semistandard = kind == SetKind::D;
        if (kind != SetKind::C && (!is_partition(left) || !is_partition(right)))
            throw Error(Errc::InvalidArgument, "enumerate_pairs: D and E are indexed by partitions");
        std::vector<Composition> shapes = semistandard ? partitions_of(n) : compositions_of(n);
        for (const Composition& g : shapes) {
            std::vector<Tableau> tabs =
                semistandard ? enumerate_ssyt(g, right) : enumerate_immaculate(g, right);
            if (tabs.empty())
                continue;
            for_each_nonneg_perm(g, [&](const Permutation& perm, const Sequence& d) {
                Composition c = flatten(d);
                if (kind == SetKind::C ? c != left : dec(c) != left)
                    return;
                x.T = Thc{g, perm};
                for (const Tableau& s : tabs) {
                    x.S = s;
                    fn(x);
                }
            });
        }
        return;
    }
    }
}

std::vector<Pair> enumerate_pairs(SetKind kind, const Sequence& left, const Sequence& right)
{
    std::vector<Pair> out;
    for_each_pair(kind, left, right, [&](const Pair& x) { out.push_back(x); });
    return out;
}

std::size_t count_pairs(SetKind kind, const Sequence& left, const Sequence& right)
{
    std::size_t c = 0;
    for_each_pair(kind, left, right, [&](const Pair&) { ++c; });
    return c;
}

Pair phi(const Pair& x, PhiInfo* info)
{
    const Permutation& s = x.T.perm;
    const int rows = static_cast<int>(x.S.rows.size());
    int m = 0;
    int q = 0;
    for (int i = 1; i <= rows && m == 0; ++i) {
        int best = 0;
        for (int k : x.S.rows[i - 1])
            if (best == 0 || s[k - 1] > s[best - 1])
                best = k;
        if (s[best - 1] != i) {
            m = i;
            q = best;
        }
    }
    PhiInfo local;
    if (m == 0) {
        local.fixed = true;
        if (info)
            *info = local;
        return x;
    }
    const int v = s[q - 1];
    if (v <= m)
        throw Error(Errc::Structural, "phi: sigma(q_m) <= m for " + describe(x));
    Pair y = x;
    y.T.perm = s_left(v - 1, s);
    const int p = perm_inverse(s)[v - 2];
    Row& row = y.S.rows[m - 1];
    *std::find(row.begin(), row.end(), q) = p;
    std::sort(row.begin(), row.end());
    local = {false, m, q, p};
    if (info)
        *info = local;
    return y;
}

Pair chi(const Pair& x, ChiInfo* info)
{
    const int rows = static_cast<int>(x.S.rows.size());
    int m = 0;
    for (int i = 1; i <= rows; ++i)
        if (x.S.rows[i - 1].back() != i) {
            m = i;
            break;
        }
    ChiInfo local;
    if (m == 0) {
        local.fixed = true;
        if (info)
            *info = local;
        return x;
    }
    const int q = x.S.rows[m - 1].back();
    if (q <= m)
        throw Error(Errc::Structural, "chi: q_m <= m for " + describe(x));
    Pair y = x;
    y.T.perm = s_left(q - 1, x.T.perm);
    Row& row = y.S.rows[m - 1];
    *std::find(row.begin(), row.end(), q) = q - 1;
    y.S = bender_knuth(y.S, q - 1);
    local = {false, m, q};
    if (info)
        *info = local;
    return y;
}

Pair psi(const Pair& x, PsiInfo* info)
{
    const Permutation& s = x.T.perm;
    const int l = static_cast<int>(x.S.rows.size());
    const int big = x.S.max_entry();
    auto tail_ok = [&](int i) {
        const int v = big - l + i;
        if (s[i - 1] != i)
            return false;
        for (int e : x.S.rows[i - 1])
            if (e != v)
                return false;
        for (int j = 1; j <= l; ++j)
            if (j != i && std::count(x.S.rows[j - 1].begin(), x.S.rows[j - 1].end(), v) > 0)
                return false;
        return true;
    };
    int k = l;
    while (k >= 1 && tail_ok(k))
        --k;
    PsiInfo local;
    local.k = k;
    if (k == 0) {
        local.fixed = true;
        if (info)
            *info = local;
        return x;
    }
    const int v = big - l + k;
    int r = 0;
    for (int j = 1; j <= l; ++j) {
        const Row& row = x.S.rows[j - 1];
        if (std::find(row.begin(), row.end(), v) != row.end() && (r == 0 || s[j - 1] < s[r - 1]))
            r = j;
    }
    if (r == 0)
        throw Error(Errc::Structural, "psi: no row contains " + std::to_string(v) + " in " +
                                          describe(x));
    local.r = r;
    Pair y = x;
    y.S.rows[r - 1].pop_back();
    if (s[r - 1] == k) {
        local.step = 4;
        y.S.rows.insert(y.S.rows.begin() + k, Row{v});
        y.T = Thc{y.S.shape(), s_left(k, embed(s, l + 1))};
    } else {
        local.step = 5;
        const int q = s[r - 1];
        const int p = perm_inverse(s)[q];
        local.q = q;
        local.p = p;
        y.S.rows[p - 1].push_back(v);
        Permutation t = s_left(q, s);
        if (y.S.rows[r - 1].empty()) {
            local.row_deleted = true;
            y.S.rows.erase(y.S.rows.begin() + (r - 1));
            t = remove_fixed_point(t, r);
        }
        y.T = Thc{y.S.shape(), t};
    }
    if (info)
        *info = local;
    return y;
}

Pair theta(const Pair& x, ThetaInfo* info)
{
    std::vector<Cell> bad = bad_cells(x.S);
    if (bad.empty())
        throw Error(Errc::Domain, "theta: no bad cell in " + describe(x));
    const int i = bad.front().col;
    int t = 0;
    for (const Cell& c : bad)
        if (c.col == i)
            t = std::max(t, c.row);
    const Row& upper = x.S.rows[t - 2];
    const Row& lower = x.S.rows[t - 1];
    if (static_cast<int>(upper.size()) < i - 1)
        throw Error(Errc::Structural, "theta: row above the bad cell is too short");
    Row new_upper(upper.begin(), upper.begin() + (i - 1));
    new_upper.insert(new_upper.end(), lower.begin() + i, lower.end());
    Row new_lower(lower.begin(), lower.begin() + i);
    new_lower.insert(new_lower.end(), upper.begin() + (i - 1), upper.end());
    Pair y = x;
    y.S.rows[t - 2] = std::move(new_upper);
    y.S.rows[t - 1] = std::move(new_lower);
    y.T = Thc{y.S.shape(), s_right(x.T.perm, t - 1)};
    if (info)
        *info = {i, t};
    return y;
}

std::size_t count_E(const Partition& lambda, const Partition& mu)
{
    const int n = total(lambda);
    std::size_t total_pairs = 0;
    for (const Composition& g : compositions_of(n)) {
        std::size_t tabs = count_immaculate(g, mu);
        if (tabs == 0)
            continue;
        std::size_t thcs = 0;
        for_each_nonneg_perm(g, [&](const Permutation&, const Sequence& d) {
            if (dec(flatten(d)) == lambda)
                ++thcs;
        });
        total_pairs += thcs * tabs;
    }
    return total_pairs;
}

RhoResult rho(const Pair& x, std::size_t cap)
{
    RhoResult res;
    res.trace.steps.push_back({x, "start", {}});
    const Partition lambda = dec(thc_content(x.T));
    const Partition mu = flatten(content(x.S, x.S.max_entry()));
    if (lambda == mu) {
        res.pair = x;
        return res;
    }
    if (cap == 0)
        cap = 4 * count_E(lambda, mu);
    Pair cur = x;
    for (;;) {
        PsiInfo pi;
        cur = psi(cur, &pi);
        std::map<std::string, int> idx{{"k", pi.k}, {"r", pi.r}, {"step", pi.step}};
        if (pi.step == 5) {
            idx["q"] = pi.q;
            idx["p"] = pi.p;
        }
        res.trace.steps.push_back({cur, "psi", idx});
        if (bad_cells(cur.S).empty())
            break;
        ThetaInfo ti;
        cur = theta(cur, &ti);
        res.trace.steps.push_back({cur, "theta", {{"i", ti.i}, {"t", ti.t}}});
        if (res.trace.length() > cap)
            throw Error(Errc::Structural, "rho: iteration cap exceeded from " + describe(x));
    }
    res.pair = cur;
    return res;
}

namespace {

std::vector<std::pair<Sequence, Sequence>> index_pairs(SetKind kind, int n)
{
    std::vector<Sequence> idx =
        kind == SetKind::A || kind == SetKind::C ? compositions_of(n) : partitions_of(n);
    std::vector<std::pair<Sequence, Sequence>> out;
    for (const Sequence& a : idx)
        for (const Sequence& b : idx)
            if (kind != SetKind::E || a != b)
                out.emplace_back(a, b);
    return out;
}

const char* map_name(SetKind kind)
{
    switch (kind) {
    case SetKind::A:
        return "phi";
    case SetKind::B:
        return "chi";
    case SetKind::C:
        return "psi";
    case SetKind::D:
        return "rho";
    case SetKind::E:
        return "theta";
    }
    return "";
}

// Checks one index pair. Returns an empty string on success.
std::string check_index(SetKind kind, const Sequence& left, const Sequence& right, IndexReport& rep)
{
    rep.left = left;
    rep.right = right;
    const bool diagonal = left == right;
    std::size_t cap = 0;
    if (kind == SetKind::D && !diagonal)
        cap = 4 * count_E(left, right);
    std::string failure;
    auto fail = [&](const std::string& what, const Pair& x) {
        if (failure.empty())
            failure = std::string(1, set_letter(kind)) + "_{" + to_string(left) + "," +
                      to_string(right) + "}: " + what + " at " + describe(x);
    };
    for_each_pair(kind, left, right, [&](const Pair& x) {
        if (!failure.empty())
            return;
        if (kind == SetKind::E && bad_cells(x.S).empty())
            return;
        ++rep.pairs;
        rep.signed_sum += pair_sign(x);
        Pair y;
        Pair back;
        std::size_t orbit = 1;
        switch (kind) {
        case SetKind::A:
            y = phi(x);
            back = phi(y);
            break;
        case SetKind::B:
            y = chi(x);
            back = chi(y);
            break;
        case SetKind::C:
            y = psi(x);
            back = psi(y);
            break;
        case SetKind::D: {
            RhoResult r = rho(x, cap);
            y = r.pair;
            orbit = r.trace.length();
            std::size_t psis = 0;
            for (std::size_t s = 0; s < r.trace.steps.size(); ++s) {
                const TraceStep& st = r.trace.steps[s];
                if (s > 0 && st.map != (s % 2 == 1 ? "psi" : "theta"))
                    fail("trace does not alternate psi and theta", x);
                if (st.map == "psi")
                    ++psis;
                if (!in_set(SetKind::E, st.pair, left, right))
                    fail("intermediate pair left E", st.pair);
            }
            if (!(y == x) && (orbit % 2 == 0 || psis != orbit / 2 + 1))
                fail("orbit is not psi (theta psi)^j", x);
            back = rho(y, cap).pair;
            break;
        }
        case SetKind::E: {
            ThetaInfo ti;
            y = theta(x, &ti);
            back = theta(y);
            Sequence dx = delta(x.T);
            Sequence dy = delta(y.T);
            std::swap(dx[ti.t - 2], dx[ti.t - 1]);
            if (dx != dy)
                fail("theta did not swap Delta entries t-1 and t only", x);
            if (bad_cells(y.S).empty())
                fail("theta image lies in D", x);
            break;
        }
        }
        rep.max_orbit = std::max(rep.max_orbit, orbit);
        if (!in_set(kind, y, left, right))
            fail("image is outside the pair set", x);
        if (!(back == x))
            fail("map applied twice is not the identity", x);
        if (y == x) {
            ++rep.fixed_points;
            if (!diagonal)
                fail("fixed point off the diagonal", x);
            if (pair_sign(x) != 1)
                fail("fixed point of negative sign", x);
        } else if (pair_sign(y) != -pair_sign(x)) {
            fail("sign not reversed", x);
        }
    });
    if (failure.empty() && kind != SetKind::E) {
        if (rep.signed_sum != (diagonal ? 1 : 0))
            failure = std::string(1, set_letter(kind)) + "_{" + to_string(left) + "," +
                      to_string(right) + "}: signed sum " + std::to_string(rep.signed_sum);
        else if (diagonal && (rep.pairs != 1 || rep.fixed_points != 1))
            failure = std::string(1, set_letter(kind)) + "_{" + to_string(left) + "," +
                      to_string(right) + "}: diagonal set is not a single fixed pair";
    }
    return failure;
}

}  // namespace

VerifyReport verify_involution(SetKind kind, int n, int jobs)
{
    VerifyReport report;
    report.kind = kind;
    report.map = map_name(kind);
    report.n = n;
    auto work = index_pairs(kind, n);
    report.indices.resize(work.size());
    std::vector<std::string> failures(work.size());
    parallel_for(work.size(), jobs, [&](std::size_t w) {
        failures[w] = check_index(kind, work[w].first, work[w].second, report.indices[w]);
    });
    for (std::size_t w = 0; w < work.size(); ++w) {
        const IndexReport& r = report.indices[w];
        report.pairs += r.pairs;
        report.fixed_points += r.fixed_points;
        report.max_orbit = std::max(report.max_orbit, r.max_orbit);
        if (!failures[w].empty() && report.pass) {
            report.pass = false;
            report.counterexample = failures[w];
        }
    }
    return report;
}

}  // namespace kostka
