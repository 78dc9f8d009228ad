// kostka: command-line front end.
//
// Exit codes: 0 pass, 1 counterexample or internal failure, 2 usage error.

#include "kostka/core.hpp"
#include "kostka/involutions.hpp"
#include "kostka/io.hpp"
#include "kostka/matrices.hpp"
#include "kostka/render.hpp"
#include "kostka/rimhooks.hpp"
#include "kostka/tableaux.hpp"
#include "kostka/tunnelhooks.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

using namespace kostka;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path)
{
    if (path == "-") {
        return std::string(std::istreambuf_iterator<char>(std::cin), {});
    }
    std::ifstream in(path);
    if (!in)
        throw UsageError("cannot open " + path);
    return std::string(std::istreambuf_iterator<char>(in), {});
}

std::string estimate(int n, bool compositions)
{
    double dim = compositions ? std::pow(2.0, n - 1) : 0.0;
    if (!compositions)
        dim = static_cast<double>(partitions_of(n).size());
    std::ostringstream s;
    s << "degree " << n << " needs a " << dim << " x " << dim << " matrix (" << dim * dim
      << " entries, each an exhaustive enumeration)";
    return s.str();
}

void check_cap(int n, int cap, bool compositions)
{
    if (n < 1)
        throw UsageError("degree must be positive");
    if (n > cap)
        throw UsageError("degree " + std::to_string(n) + " exceeds the cap " + std::to_string(cap) +
                         "; " + estimate(n, compositions) + ". Raise --cap to proceed.");
}

Matrix build_matrix(const std::string& kind, int n, int jobs)
{
    if (kind == "K")
        return sym_K(n, jobs);
    if (kind == "Kinv")
        return sym_Kinv(n, jobs);
    if (kind == "NK")
        return nsym_K(n, jobs);
    if (kind == "NKinv")
        return nsym_Kinv(n, jobs);
    throw UsageError("unknown matrix kind " + kind);
}

// First entry where the product differs from the identity.
Json identity_counterexample(const Matrix& p)
{
    for (std::size_t i = 0; i < p.dim(); ++i)
        for (std::size_t j = 0; j < p.dim(); ++j)
            if (p.at(i, j) != (i == j ? 1 : 0))
                return Json{{"row", p.labels[i]}, {"col", p.labels[j]}, {"value", p.at(i, j)}};
    return Json();
}

int run_matrix(int n, const std::string& kind, const std::string& format, int cap, int jobs)
{
    check_cap(n, cap, kind == "NK" || kind == "NKinv");
    Matrix m = build_matrix(kind, n, jobs);
    if (format == "csv")
        std::cout << to_csv(m);
    else
        std::cout << to_json(m, kind).dump() << "\n";
    return kExitPass;
}

int run_verify(int n, const std::string& identity, int cap, int jobs)
{
    const bool nsym = identity == "nk-nkinv" || identity == "nkinv-nk";
    check_cap(n, cap, nsym);
    Json report{{"identity", identity}, {"n", n}};
    bool pass = true;
    if (identity == "involutions") {
        Json maps = Json::array();
        for (SetKind k : {SetKind::A, SetKind::B, SetKind::C, SetKind::D, SetKind::E}) {
            for (int d = 1; d <= n && pass; ++d) {
                VerifyReport r = verify_involution(k, d, jobs);
                Json j = to_json(r);
                j.erase("indices");
                maps.push_back(j);
                if (!r.pass)
                    pass = false;
            }
        }
        report["maps"] = maps;
    } else {
        Json degrees = Json::array();
        for (int d = 1; d <= n && pass; ++d) {
            Matrix a;
            Matrix b;
            if (identity == "kkinv") {
                a = sym_K(d, jobs);
                b = sym_Kinv(d, jobs);
            } else if (identity == "kinvk") {
                a = sym_Kinv(d, jobs);
                b = sym_K(d, jobs);
            } else if (identity == "nk-nkinv") {
                a = nsym_K(d, jobs);
                b = nsym_Kinv(d, jobs);
            } else if (identity == "nkinv-nk") {
                a = nsym_Kinv(d, jobs);
                b = nsym_K(d, jobs);
            } else {
                throw UsageError("unknown identity " + identity);
            }
            Matrix p = mat_mul(a, b);
            bool ok = is_identity(p);
            Json entry{{"n", d}, {"dim", p.dim()}, {"pass", ok}};
            if (!ok) {
                entry["counterexample"] = identity_counterexample(p);
                pass = false;
            }
            degrees.push_back(entry);
        }
        report["degrees"] = degrees;
    }
    report["pass"] = pass;
    std::cout << report.dump() << "\n";
    return pass ? kExitPass : kExitCounterexample;
}

int run_enumerate(const std::string& what, int n, const Sequence& shape, const Sequence& cont,
                  const std::string& set, const Sequence& left, const Sequence& right)
{
    Json out = Json::array();
    if (what == "compositions") {
        for (const Composition& c : compositions_of(n))
            out.push_back(c);
    } else if (what == "partitions") {
        for (const Partition& p : partitions_of(n))
            out.push_back(p);
    } else if (what == "immaculate") {
        for (const Tableau& t : enumerate_immaculate(shape, cont))
            out.push_back(to_json(t));
    } else if (what == "ssyt") {
        for (const Tableau& t : enumerate_ssyt(shape, cont))
            out.push_back(to_json(t));
    } else if (what == "thc") {
        for (const SignedThc& t : enumerate_thc(cont, shape))
            out.push_back(to_json(t.thc));
    } else if (what == "srht") {
        for (const Srht& r : enumerate_srht(shape))
            out.push_back(to_json(r));
    } else if (what == "pairs") {
        if (set.size() != 1)
            throw UsageError("--set must be one of A, B, C, D, E");
        SetKind k = set_from_letter(set[0]);
        for (const Pair& x : enumerate_pairs(k, left, right))
            out.push_back(to_json(k, x));
    } else {
        throw UsageError("unknown enumeration " + what);
    }
    std::cout << out.dump() << "\n";
    return kExitPass;
}

int run_involution(const std::string& alg, const std::string& input, bool trace,
                   const std::string& format)
{
    Json j = parse_json(read_input(input));
    SetKind kind = pair_kind_from_json(j);
    Pair x = pair_from_json(j);
    auto [left, right] = pair_indices(kind, x);
    if (!in_set(kind, x, left, right))
        throw UsageError("input is not a valid pair of set " + std::string(1, set_letter(kind)));
    InvolutionTrace tr;
    tr.steps.push_back({x, "start", {}});
    Pair y;
    if (alg == "phi") {
        PhiInfo i;
        y = phi(x, &i);
        tr.steps.push_back({y, "phi", {{"m", i.m}, {"q", i.q}, {"p", i.p}}});
    } else if (alg == "chi") {
        ChiInfo i;
        y = chi(x, &i);
        tr.steps.push_back({y, "chi", {{"m", i.m}, {"q", i.q}}});
    } else if (alg == "psi") {
        PsiInfo i;
        y = psi(x, &i);
        tr.steps.push_back({y, "psi", {{"k", i.k}, {"r", i.r}, {"step", i.step}}});
    } else if (alg == "theta") {
        ThetaInfo i;
        y = theta(x, &i);
        tr.steps.push_back({y, "theta", {{"i", i.i}, {"t", i.t}}});
    } else if (alg == "rho") {
        RhoResult r = rho(x);
        y = r.pair;
        tr = r.trace;
    } else {
        throw UsageError("unknown algorithm " + alg);
    }
    if (format == "ascii") {
        std::cout << (trace ? render_trace_ascii(kind, tr) : render_pair_ascii(kind, y));
        return kExitPass;
    }
    Json out{{"result", to_json(kind, y)}};
    if (trace)
        out["trace"] = to_json(kind, tr);
    std::cout << out.dump() << "\n";
    return kExitPass;
}

Json perm_object(const Sequence& shape, const Permutation& perm)
{
    return Json{{"kind", "perm"}, {"shape", shape}, {"perm", perm}};
}

int run_bijection(const std::string& input, const Sequence& shape, const Sequence& perm,
                  const std::string& to)
{
    Json j;
    if (!input.empty())
        j = parse_json(read_input(input));
    else
        j = perm_object(shape, perm);
    const std::string kind = j.value("kind", "");
    Json out;
    if (kind == "thc") {
        Thc t = thc_from_json(j);
        out = perm_object(t.shape, perm_of_thc(t));
    } else if (kind == "srht") {
        Srht r = srht_from_json(j);
        out = to == "thc" ? to_json(xi(r)) : perm_object(r.shape, perm_srt(r));
    } else if (kind == "perm") {
        Sequence sh = sequence_from_json(j.at("shape"));
        Permutation p = sequence_from_json(j.at("perm"));
        if (to == "srht") {
            out = to_json(srht_from_perm(sh, p));
        } else {
            if (!is_composition(sh))
                throw UsageError("shape must be a composition");
            out = to_json(thc_from_perm(sh, p));
        }
    } else {
        throw UsageError("bijection input must be a thc, srht or perm object");
    }
    std::cout << out.dump() << "\n";
    return kExitPass;
}

int run_render(const std::string& input, const Sequence& diagram, bool have_diagram,
               const std::string& format)
{
    const bool tikz = format == "tikz";
    if (have_diagram || input.empty()) {
        if (diagram.empty())
            return kExitPass;
        std::cout << (tikz ? render_diagram_tikz(diagram) : render_diagram_ascii(diagram));
        return kExitPass;
    }
    Json j = parse_json(read_input(input));
    if (j.is_array()) {
        Composition c = sequence_from_json(j);
        if (!c.empty())
            std::cout << (tikz ? render_diagram_tikz(c) : render_diagram_ascii(c));
        return kExitPass;
    }
    if (j.contains("setKind")) {
        SetKind k = pair_kind_from_json(j);
        Pair x = pair_from_json(j);
        if (tikz)
            std::cout << render_thc_tikz(x.T) << render_tableau_tikz(x.S);
        else
            std::cout << render_pair_ascii(k, x);
        return kExitPass;
    }
    const std::string kind = j.value("kind", "");
    if (kind == "thc") {
        Thc t = thc_from_json(j);
        std::cout << (tikz ? render_thc_tikz(t) : render_thc_ascii(t));
    } else if (kind == "srht") {
        Srht r = srht_from_json(j);
        std::cout << (tikz ? render_srht_tikz(r) : render_srht_ascii(r));
    } else if (kind == "tableau") {
        Tableau s = tableau_from_json(j);
        std::cout << (tikz ? render_tableau_tikz(s) : render_tableau_ascii(s));
    } else if (kind == "trace") {
        const Json& steps = j.at("steps");
        if (steps.empty())
            return kExitPass;
        SetKind k = pair_kind_from_json(steps.at(0).at("pair"));
        InvolutionTrace tr = trace_from_json(j);
        if (tikz) {
            for (const TraceStep& st : tr.steps)
                std::cout << render_thc_tikz(st.pair.T) << render_tableau_tikz(st.pair.S);
        } else {
            std::cout << render_trace_ascii(k, tr);
        }
    } else {
        throw UsageError("cannot render object of kind '" + kind + "'");
    }
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Kostka matrices, tunnel hook coverings and sign-reversing involutions"};
    app.require_subcommand(1);
    app.fallthrough();
    int cap = 10;
    int jobs = 1;
    app.add_option("--cap", cap, "Largest degree accepted by matrix and verify")->capture_default_str();
    app.add_option("--jobs", jobs, "Worker threads for matrix and verify")->capture_default_str();

    int n = 0;
    std::string kind;
    std::string format = "json";
    auto* matrix = app.add_subcommand("matrix", "Print a transition matrix");
    matrix->add_option("-n,--n", n, "Degree")->required();
    matrix->add_option("--kind", kind, "K, Kinv, NK or NKinv")
        ->required()
        ->check(CLI::IsMember({"K", "Kinv", "NK", "NKinv"}));
    matrix->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

    std::string identity;
    auto* verify = app.add_subcommand("verify", "Check an identity for every degree up to n");
    verify->add_option("-n,--n", n, "Largest degree")->required();
    verify->add_option("--identity", identity, "kkinv, kinvk, nk-nkinv, nkinv-nk or involutions")
        ->required()
        ->check(CLI::IsMember({"kkinv", "kinvk", "nk-nkinv", "nkinv-nk", "involutions"}));

    std::string what;
    Sequence shape;
    Sequence cont;
    std::string set;
    Sequence left;
    Sequence right;
    auto* enumerate = app.add_subcommand("enumerate", "List combinatorial objects as JSON");
    enumerate->add_option("what", what, "compositions, partitions, immaculate, ssyt, thc, srht or pairs")
        ->required();
    enumerate->add_option("-n,--n", n, "Degree");
    enumerate->add_option("--shape", shape, "Shape, comma separated")->delimiter(',');
    enumerate->add_option("--content", cont, "Content, comma separated")->delimiter(',');
    enumerate->add_option("--set", set, "Pair set A, B, C, D or E");
    enumerate->add_option("--left", left, "Left index")->delimiter(',');
    enumerate->add_option("--right", right, "Right index")->delimiter(',');

    std::string alg;
    std::string input;
    bool trace = false;
    std::string inv_format = "json";
    auto* involution = app.add_subcommand("involution", "Apply an involution to a pair");
    auto* inv_run = involution->add_subcommand("run", "Apply one map");
    involution->require_subcommand(1);
    inv_run->add_option("--alg", alg, "phi, chi, psi, theta or rho")
        ->required()
        ->check(CLI::IsMember({"phi", "chi", "psi", "theta", "rho"}));
    inv_run->add_option("--input", input, "Pair JSON file, - for stdin")->required();
    inv_run->add_flag("--trace", trace, "Include every intermediate pair");
    inv_run->add_option("--format", inv_format, "json or ascii")->check(CLI::IsMember({"json", "ascii"}));

    std::string to = "thc";
    Sequence perm;
    auto* bijection = app.add_subcommand("bijection", "Map between permutations, coverings and rim hook tableaux");
    bijection->add_option("--input", input, "Object JSON file, - for stdin");
    bijection->add_option("--shape", shape, "Shape for a (shape, perm) input")->delimiter(',');
    bijection->add_option("--perm", perm, "Permutation for a (shape, perm) input")->delimiter(',');
    bijection->add_option("--to", to, "Target for perm and srht inputs: thc, srht or perm")
        ->check(CLI::IsMember({"thc", "srht", "perm"}));

    Sequence diagram;
    std::string render_format = "ascii";
    auto* render = app.add_subcommand("render", "Draw an object as ASCII or TikZ");
    render->add_option("--input", input, "Object JSON file, - for stdin");
    auto* diag_opt = render->add_option("--diagram", diagram, "Draw the diagram of a composition")
                         ->delimiter(',');
    render->add_option("--format", render_format, "ascii or tikz")->check(CLI::IsMember({"ascii", "tikz"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (*matrix)
            return run_matrix(n, kind, format, cap, jobs);
        if (*verify)
            return run_verify(n, identity, cap, jobs);
        if (*enumerate)
            return run_enumerate(what, n, shape, cont, set, left, right);
        if (*involution)
            return run_involution(alg, input, trace, inv_format);
        if (*bijection) {
            if (input.empty() && (shape.empty() || perm.empty()))
                throw UsageError("bijection needs --input or both --shape and --perm");
            return run_bijection(input, shape, perm, to);
        }
        if (*render) {
            const bool have_diagram = diag_opt->count() > 0;
            bool blank = true;
            for (const std::string& r : diag_opt->results())
                blank = blank && r.empty();
            if (have_diagram && blank)
                diagram.clear();
            else if (have_diagram && !is_composition(diagram))
                throw UsageError("--diagram must be a composition");
            return run_render(input, diagram, have_diagram, render_format);
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == Errc::Structural ? kExitCounterexample : kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
