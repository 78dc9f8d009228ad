#include "fixtures.hpp"

#include "kostka/core.hpp"
#include "kostka/involutions.hpp"
#include "kostka/rimhooks.hpp"
#include "kostka/tableaux.hpp"
#include "kostka/tunnelhooks.hpp"

#include <fstream>
#include <functional>
#include <iterator>
#include <map>
#include <stdexcept>

using namespace kostka;

namespace fixtures {

namespace {

Tableau tab(std::vector<Row> rows) { return Tableau{std::move(rows)}; }

Json covering(const Thc& t)
{
    return Json{{"thc", to_json(t)},
                {"endRows", end_rows(t)},
                {"delta", delta(t)},
                {"sign", thc_sign(t)},
                {"cycles", cycles_string(perm_cycles_thc(t))}};
}

Json fig2()
{
    Thc t = thc_from_perm({8, 7, 7, 4}, {1, 3, 4, 2});
    Json j = covering(t);
    Json terminals = Json::array();
    for (const TunnelHook& h : replay(t).hooks)
        terminals.push_back(Json::array({h.terminal.row, h.terminal.col}));
    j["terminals"] = terminals;
    return j;
}

Json fig3_phi()
{
    Pair x{tab({{1, 1, 1, 1}, {2, 2, 2}, {3, 3, 3, 3, 3, 4, 6}, {4, 5, 5, 6, 6, 6}}),
           Thc{{4, 3, 4, 3, 1, 5}, {1, 2, 4, 3, 6, 5}}};
    PhiInfo info;
    Pair y = phi(x, &info);
    return Json{{"input", to_json(SetKind::A, x)},
                {"output", to_json(SetKind::A, y)},
                {"m", info.m},
                {"q", info.q},
                {"p", info.p}};
}

Json fig4_chi()
{
    Pair x{tab({{1, 1, 1, 1, 1, 1}, {2, 2, 2, 2, 2}, {4, 4, 4, 4, 5}, {5, 5, 6, 6}}),
           Thc{{6, 5, 3, 2, 2, 2}, {1, 2, 4, 5, 3, 6}}};
    ChiInfo info;
    Pair y = chi(x, &info);
    return Json{{"input", to_json(SetKind::B, x)},
                {"output", to_json(SetKind::B, y)},
                {"m", info.m},
                {"q", info.q}};
}

Json psi_case(const Pair& x)
{
    PsiInfo info;
    Pair y = psi(x, &info);
    return Json{{"input", to_json(SetKind::C, x)},
                {"output", to_json(SetKind::C, y)},
                {"k", info.k},
                {"r", info.r},
                {"q", info.q},
                {"p", info.p},
                {"step", info.step}};
}

Json ex43_psi()
{
    return psi_case(Pair{tab({{1, 1, 2, 6}, {2, 3, 5}, {4, 4, 6, 6}}), Thc{{4, 3, 4}, {3, 2, 1}}});
}

Json ex44_psi()
{
    return psi_case(Pair{tab({{1, 1, 2, 2}, {2, 3, 5}, {4, 6, 6}, {7, 7}, {8, 8, 8}}),
                         Thc{{4, 3, 3, 2, 3}, {2, 1, 3, 4, 5}}});
}

Json rho_case(const Pair& x, int width)
{
    RhoResult r = rho(x);
    Json table = Json::array();
    for (const TraceStep& st : r.trace.steps) {
        Sequence shape = st.pair.T.shape;
        shape.resize(static_cast<std::size_t>(width), 0);
        table.push_back(Json{{"shape", shape}, {"perm", embed(st.pair.T.perm, width)}});
    }
    return Json{{"trace", to_json(SetKind::D, r.trace)},
                {"table", table},
                {"result", to_json(SetKind::D, r.pair)}};
}

Json ex53_rho() { return rho_case(Pair{tab({{1, 2}, {3, 4}, {5}}), Thc{{2, 2, 1}, {1, 3, 2}}}, 5); }

Json fig8_rho()
{
    return rho_case(Pair{tab({{1, 1, 4, 4}, {2, 2}, {3, 3}}), Thc{{4, 2, 2}, {2, 1, 3}}}, 4);
}

Json sec63_divergence()
{
    Pair x{tab({{1, 1, 1}, {2, 2}, {3}}), Thc{{3, 2, 1}, {3, 1, 2}}};
    RhoResult r = rho(x);
    Tableau recorded = tab({{1, 1, 1, 2}, {2, 3}});
    return Json{{"input", to_json(SetKind::D, x)},
                {"ours", to_json(SetKind::D, r.pair)},
                {"recorded", to_json(recorded)},
                {"differs", r.pair.S != recorded}};
}

Json fig7_theta()
{
    Tableau u = tab({{1, 1, 1, 1, 2, 2, 3, 3, 4},
                     {2, 2, 5},
                     {3, 3, 5, 5, 5},
                     {4, 4, 4, 6, 6, 7, 7},
                     {8, 8, 9, 9}});
    Composition shape = u.shape();
    Pair x{u, Thc{shape, identity_perm(static_cast<int>(shape.size()))}};
    ThetaInfo info;
    Pair y = theta(x, &info);
    Json bad = Json::array();
    for (const Cell& c : bad_cells(u))
        bad.push_back(Json::array({c.row, c.col}));
    return Json{{"input", to_json(u)},
                {"output", to_json(y.S)},
                {"badCells", bad},
                {"i", info.i},
                {"t", info.t},
                {"involutive", theta(y) == x}};
}

const Partition kFig9Shape{8, 7, 7, 4, 4, 4, 2, 2, 2};
const Permutation kFig9Perm{1, 6, 4, 3, 9, 2, 5, 8, 7};

Json fig9_srht()
{
    Srht r = srht_from_perm(kFig9Shape, kFig9Perm);
    return Json{{"srht", to_json(r)},
                {"perm", perm_srt(r)},
                {"cycles", cycles_string(perm_cycles_srt(r))},
                {"gamma", gamma(r)},
                {"sign", srht_sign(r)}};
}

Json fig10_thc()
{
    Thc t = thc_from_perm(kFig9Shape, kFig9Perm);
    Srht r = srht_from_perm(kFig9Shape, kFig9Perm);
    Json j = covering(t);
    j["xiMatches"] = xi(r) == t;
    return j;
}

Json sec6_sketch()
{
    Thc t = build_thc({2, 3, 2, 1}, {2, 4, 3, 4});
    const int l = static_cast<int>(t.shape.size());
    Json diagonals = Json::array();
    for (int k = 1; k <= l; ++k)
        diagonals.push_back(row_terminal_diagonals(t, k));
    Srht r = srht_from_perm({4, 3, 3, 3}, {2, 4, 1, 3});
    return Json{{"thc", to_json(t)},
                {"direct", perm_of_thc(t)},
                {"cycles", from_cycles(l, perm_cycles_thc(t))},
                {"incremental", perm_incremental(t, l)},
                {"cycleString", cycles_string(perm_cycles_thc(t))},
                {"rowDiagonals", diagonals},
                {"srht", to_json(r)},
                {"srhtDirect", perm_srt(r)},
                {"srhtCycles", from_cycles(4, perm_cycles_srt(r))},
                {"srhtCycleString", cycles_string(perm_cycles_srt(r))}};
}

const std::map<std::string, std::function<Json()>>& table()
{
    static const std::map<std::string, std::function<Json()>> t{
        {"fig2_thc", fig2},
        {"fig3_phi", fig3_phi},
        {"fig4_chi", fig4_chi},
        {"ex43_psi", ex43_psi},
        {"ex44_psi", ex44_psi},
        {"ex53_rho", ex53_rho},
        {"fig7_theta", fig7_theta},
        {"fig8_rho", fig8_rho},
        {"sec63_divergence", sec63_divergence},
        {"fig9_srht", fig9_srht},
        {"fig10_thc", fig10_thc},
        {"sec6_sketch", sec6_sketch},
    };
    return t;
}

}  // namespace

std::vector<std::string> names()
{
    std::vector<std::string> out;
    for (const auto& [name, fn] : table())
        out.push_back(name);
    return out;
}

Json compute(const std::string& name) { return table().at(name)(); }

std::string render(const Json& j) { return j.dump(1) + "\n"; }

std::string path(const std::string& dir, const std::string& name) { return dir + "/" + name + ".json"; }

std::string read_file(const std::string& p)
{
    std::ifstream in(p, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open " + p);
    return std::string(std::istreambuf_iterator<char>(in), {});
}

}  // namespace fixtures
