// Python bindings. Structured objects cross the boundary as the same JSON
// documents the command-line tool reads and writes.

#include "kostka/core.hpp"
#include "kostka/involutions.hpp"
#include "kostka/io.hpp"
#include "kostka/matrices.hpp"
#include "kostka/render.hpp"
#include "kostka/rimhooks.hpp"
#include "kostka/tunnelhooks.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace kostka;

namespace {

py::object to_py(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

Json from_py(const py::object& o)
{
    return parse_json(py::module_::import("json").attr("dumps")(o).cast<std::string>());
}

Matrix matrix_by_name(const std::string& kind, int n, int jobs)
{
    if (kind == "K")
        return sym_K(n, jobs);
    if (kind == "Kinv")
        return sym_Kinv(n, jobs);
    if (kind == "NK")
        return nsym_K(n, jobs);
    if (kind == "NKinv")
        return nsym_Kinv(n, jobs);
    throw Error(Errc::InvalidArgument, "unknown matrix kind " + kind);
}

py::object run_involution(const std::string& alg, const py::object& pair, bool trace)
{
    Json j = from_py(pair);
    SetKind kind = pair_kind_from_json(j);
    Pair x = pair_from_json(j);
    if (alg == "rho") {
        RhoResult r = rho(x);
        Json out{{"result", to_json(kind, r.pair)}};
        if (trace)
            out["trace"] = to_json(kind, r.trace);
        return to_py(out);
    }
    Pair y;
    if (alg == "phi")
        y = phi(x);
    else if (alg == "chi")
        y = chi(x);
    else if (alg == "psi")
        y = psi(x);
    else if (alg == "theta")
        y = theta(x);
    else
        throw Error(Errc::InvalidArgument, "unknown algorithm " + alg);
    return to_py(Json{{"result", to_json(kind, y)}});
}

}  // namespace

PYBIND11_MODULE(_kostka, m)
{
    m.doc() = "Kostka matrices, tunnel hook coverings and sign-reversing involutions.";

    py::register_exception<Error>(m, "KostkaError", PyExc_ValueError);

    m.def("compositions", &compositions_of, py::arg("n"));
    m.def("partitions", &partitions_of, py::arg("n"));
    m.def("dominates", &dominates, py::arg("a"), py::arg("b"));

    m.def(
        "matrix",
        [](const std::string& kind, int n, int jobs) { return to_py(to_json(matrix_by_name(kind, n, jobs), kind)); },
        py::arg("kind"), py::arg("n"), py::arg("jobs") = 1);
    m.def(
        "verify_identity",
        [](const std::string& kind, int n, int jobs) {
            Matrix a = matrix_by_name(kind, n, jobs);
            Matrix b = matrix_by_name(kind == "K" ? "Kinv" : kind == "Kinv" ? "K" : kind == "NK" ? "NKinv" : "NK", n,
                                      jobs);
            return is_identity(mat_mul(a, b)) && is_identity(mat_mul(b, a));
        },
        py::arg("kind"), py::arg("n"), py::arg("jobs") = 1);

    m.def(
        "thc_from_perm",
        [](const Composition& shape, const Permutation& perm) { return to_py(to_json(thc_from_perm(shape, perm))); },
        py::arg("shape"), py::arg("perm"));
    m.def(
        "perm_of_thc", [](const py::object& t) { return perm_of_thc(thc_from_json(from_py(t))); }, py::arg("thc"));
    m.def(
        "delta", [](const py::object& t) { return delta(thc_from_json(from_py(t))); }, py::arg("thc"));
    m.def(
        "srht_from_perm",
        [](const Partition& shape, const Permutation& perm) { return to_py(to_json(srht_from_perm(shape, perm))); },
        py::arg("shape"), py::arg("perm"));
    m.def(
        "perm_srt", [](const py::object& r) { return perm_srt(srht_from_json(from_py(r))); }, py::arg("srht"));
    m.def(
        "xi", [](const py::object& r) { return to_py(to_json(xi(srht_from_json(from_py(r))))); }, py::arg("srht"));

    m.def(
        "enumerate_thc",
        [](const Composition& content, const Composition& shape) {
            Json out = Json::array();
            for (const SignedThc& s : enumerate_thc(content, shape))
                out.push_back(to_json(s.thc));
            return to_py(out);
        },
        py::arg("content"), py::arg("shape"));
    m.def(
        "enumerate_pairs",
        [](const std::string& set, const Sequence& left, const Sequence& right) {
            if (set.size() != 1)
                throw Error(Errc::InvalidArgument, "set must be one of A, B, C, D, E");
            SetKind k = set_from_letter(set[0]);
            Json out = Json::array();
            for_each_pair(k, left, right, [&](const Pair& x) { out.push_back(to_json(k, x)); });
            return to_py(out);
        },
        py::arg("set"), py::arg("left"), py::arg("right"));

    m.def("involution", &run_involution, py::arg("alg"), py::arg("pair"), py::arg("trace") = false);
    m.def(
        "verify_involution",
        [](const std::string& set, int n, int jobs) {
            if (set.size() != 1)
                throw Error(Errc::InvalidArgument, "set must be one of A, B, C, D, E");
            VerifyReport r;
            {
                py::gil_scoped_release release;
                r = verify_involution(set_from_letter(set[0]), n, jobs);
            }
            return to_py(to_json(r));
        },
        py::arg("set"), py::arg("n"), py::arg("jobs") = 1);

    m.def(
        "render_thc", [](const py::object& t) { return render_thc_ascii(thc_from_json(from_py(t))); }, py::arg("thc"));
}
