#include "kostka/io.hpp"

namespace kostka {

namespace {

[[noreturn]] void parse_fail(const std::string& what) { throw Error(Errc::Parse, what); }

const Json& field(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        parse_fail(std::string("missing field '") + key + "'");
    return j.at(key);
}

void expect_kind(const Json& j, const char* kind)
{
    const Json& k = field(j, "kind");
    if (!k.is_string() || k.get<std::string>() != kind)
        parse_fail(std::string("expected kind '") + kind + "'");
}

bool tableau_first(SetKind k) { return k == SetKind::A || k == SetKind::B; }

}  // namespace

Json parse_json(const std::string& text)
{
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        parse_fail(std::string("malformed JSON: ") + e.what());
    }
}

Sequence sequence_from_json(const Json& j)
{
    if (!j.is_array())
        parse_fail("expected an array of integers");
    Sequence s;
    for (const Json& v : j) {
        if (!v.is_number_integer())
            parse_fail("expected an array of integers");
        s.push_back(v.get<int>());
    }
    return s;
}

Json to_json(const Thc& t) { return Json{{"kind", "thc"}, {"shape", t.shape}, {"perm", t.perm}}; }

Thc thc_from_json(const Json& j)
{
    expect_kind(j, "thc");
    Thc t{sequence_from_json(field(j, "shape")), sequence_from_json(field(j, "perm"))};
    if (!is_composition(t.shape))
        parse_fail("thc shape must be a composition");
    if (t.shape.size() != t.perm.size() || !is_permutation(t.perm))
        parse_fail("thc perm must be a permutation of the rows");
    return t;
}

Json to_json(const Srht& r)
{
    Json hooks = Json::array();
    for (const RimHook& h : r.hooks) {
        Json cells = Json::array();
        for (const Cell& c : h.cells)
            cells.push_back({c.row, c.col});
        hooks.push_back(cells);
    }
    return Json{{"kind", "srht"}, {"shape", r.shape}, {"hooks", hooks}};
}

Srht srht_from_json(const Json& j)
{
    expect_kind(j, "srht");
    Srht r;
    r.shape = sequence_from_json(field(j, "shape"));
    const Json& hooks = field(j, "hooks");
    if (!hooks.is_array())
        parse_fail("srht hooks must be an array");
    for (const Json& h : hooks) {
        RimHook g;
        if (!h.is_array())
            parse_fail("srht hook must be an array of cells");
        for (const Json& c : h) {
            Sequence rc = sequence_from_json(c);
            if (rc.size() != 2)
                parse_fail("srht cell must be [row, col]");
            g.cells.push_back({rc[0], rc[1]});
        }
        r.hooks.push_back(std::move(g));
    }
    r = normalize(std::move(r));
    if (!is_srht(r))
        parse_fail("hooks do not form a special rim hook tableau of shape " + to_string(r.shape));
    return r;
}

Json to_json(const Tableau& s)
{
    Json rows = Json::array();
    for (const Row& r : s.rows)
        rows.push_back(r);
    return Json{{"kind", "tableau"}, {"shape", s.shape()}, {"rows", rows}};
}

Tableau tableau_from_json(const Json& j)
{
    expect_kind(j, "tableau");
    Tableau s;
    const Json& rows = field(j, "rows");
    if (!rows.is_array())
        parse_fail("tableau rows must be an array");
    for (const Json& r : rows)
        s.rows.push_back(sequence_from_json(r));
    if (j.contains("shape") && sequence_from_json(j.at("shape")) != s.shape())
        parse_fail("tableau shape does not match its rows");
    return s;
}

Json to_json(SetKind kind, const Pair& x)
{
    Json s = to_json(x.S);
    Json t = to_json(x.T);
    return Json{{"setKind", std::string(1, set_letter(kind))},
                {"left", tableau_first(kind) ? s : t},
                {"right", tableau_first(kind) ? t : s}};
}

SetKind pair_kind_from_json(const Json& j)
{
    const Json& k = field(j, "setKind");
    if (!k.is_string() || k.get<std::string>().size() != 1)
        parse_fail("setKind must be one of A, B, C, D, E");
    try {
        return set_from_letter(k.get<std::string>()[0]);
    } catch (const Error&) {
        parse_fail("setKind must be one of A, B, C, D, E");
    }
}

Pair pair_from_json(const Json& j)
{
    SetKind kind = pair_kind_from_json(j);
    const Json& left = field(j, "left");
    const Json& right = field(j, "right");
    Pair x;
    x.S = tableau_from_json(tableau_first(kind) ? left : right);
    x.T = thc_from_json(tableau_first(kind) ? right : left);
    return x;
}

Json to_json(SetKind kind, const InvolutionTrace& trace)
{
    Json steps = Json::array();
    for (const TraceStep& st : trace.steps)
        steps.push_back({{"map", st.map}, {"indices", st.indices}, {"pair", to_json(kind, st.pair)}});
    return Json{{"kind", "trace"}, {"steps", steps}};
}

InvolutionTrace trace_from_json(const Json& j)
{
    expect_kind(j, "trace");
    InvolutionTrace t;
    for (const Json& st : field(j, "steps")) {
        TraceStep s;
        s.map = field(st, "map").get<std::string>();
        if (st.contains("indices"))
            s.indices = st.at("indices").get<std::map<std::string, int>>();
        s.pair = pair_from_json(field(st, "pair"));
        t.steps.push_back(std::move(s));
    }
    return t;
}

Json to_json(const Matrix& m, const std::string& name)
{
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.dim(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.dim(); ++j)
            row.push_back(m.at(i, j));
        rows.push_back(row);
    }
    return Json{{"kind", "matrix"},
                {"name", name},
                {"degree", m.degree},
                {"index", m.kind == IndexKind::Compositions ? "compositions" : "partitions"},
                {"labels", m.labels},
                {"entries", rows}};
}

Json to_json(const VerifyReport& r)
{
    Json idx = Json::array();
    for (const IndexReport& ir : r.indices)
        idx.push_back({{"left", ir.left},
                       {"right", ir.right},
                       {"pairs", ir.pairs},
                       {"signedSum", ir.signed_sum},
                       {"fixedPoints", ir.fixed_points},
                       {"maxOrbit", ir.max_orbit}});
    Json j{{"setKind", std::string(1, set_letter(r.kind))},
           {"map", r.map},
           {"n", r.n},
           {"pass", r.pass},
           {"pairs", r.pairs},
           {"fixedPoints", r.fixed_points},
           {"maxOrbit", r.max_orbit},
           {"indices", idx}};
    if (!r.pass)
        j["counterexample"] = r.counterexample;
    return j;
}

std::string to_csv(const Matrix& m)
{
    std::string out;
    for (std::size_t j = 0; j < m.dim(); ++j) {
        if (j)
            out += ";";
        out += to_string(m.labels[j]);
    }
    out += "\n";
    for (std::size_t i = 0; i < m.dim(); ++i) {
        for (std::size_t j = 0; j < m.dim(); ++j) {
            if (j)
                out += ",";
            out += std::to_string(m.at(i, j));
        }
        out += "\n";
    }
    return out;
}

}  // namespace kostka
