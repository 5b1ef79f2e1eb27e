#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bilevel/bis_solvers.hpp"
#include "bilevel/brute.hpp"
#include "bilevel/follower.hpp"
#include "bilevel/generators.hpp"
#include "bilevel/interval_dp.hpp"
#include "bilevel/io.hpp"
#include "bilevel/reductions.hpp"
#include "bilevel/single_level.hpp"

namespace py = pybind11;
using namespace bilevel;

namespace {

Owner parse_owner(const std::string& s) {
    if (s == "leader") return Owner::Leader;
    if (s == "follower") return Owner::Follower;
    fail(ErrorCode::InvalidInput, "owner must be \"leader\" or \"follower\"");
}

// Vertices as (owner, wl, wf) tuples.
BisGraph make_graph(const std::vector<std::tuple<std::string, Weight, Weight>>& vertices, std::vector<Edge> edges) {
    std::vector<Vertex> vs;
    for (const auto& [owner, wl, wf] : vertices) vs.push_back({parse_owner(owner), wl, wf});
    return BisGraph(std::move(vs), std::move(edges));
}

// Intervals as (id, start, end, owner, wl, wf) tuples.
IntervalInstance make_intervals(const std::vector<std::tuple<Id, Coord, Coord, std::string, Weight, Weight>>& xs) {
    std::vector<Interval> out;
    for (const auto& [id, a, b, owner, wl, wf] : xs) out.push_back({id, a, b, parse_owner(owner), wl, wf});
    return IntervalInstance(std::move(out));
}

Variant variant_of(const std::string& s) { return Variant::parse(s); }

B2cnfFormula formula_of(const std::string& json) { return b2cnf_from_json(parse_json(json)); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Bilevel independent set and interval selection solvers";

    static py::exception<Error> error(m, "BilevelError", PyExc_RuntimeError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            const py::object& cls = error;
            py::object exc = cls(py::str(e.what()));
            exc.attr("code") = py::str(std::string(to_string(e.code())));
            PyErr_SetObject(error.ptr(), exc.ptr());
        }
    });

    py::class_<Variant>(m, "Variant")
        .def(py::init(&variant_of), py::arg("text"))
        .def("__str__", &Variant::to_string)
        .def("__repr__", [](const Variant& v) { return "Variant('" + v.to_string() + "')"; })
        .def(py::self == py::self);
    m.def("all_variants", [] {
        std::vector<std::string> out;
        for (const auto& v : all_variants()) out.push_back(v.to_string());
        return out;
    });

    py::class_<BisGraph>(m, "BisGraph")
        .def(py::init(&make_graph), py::arg("vertices"), py::arg("edges"))
        .def("__len__", &BisGraph::size)
        .def_property_readonly("edges", &BisGraph::edges)
        .def_property_readonly("leaders", &BisGraph::leaders)
        .def_property_readonly("followers", &BisGraph::followers)
        .def("owner", [](const BisGraph& g, Id v) { return std::string(to_string(g.owner(v))); })
        .def("weights", [](const BisGraph& g, Id v) { return std::pair(g.vertex(v).wl, g.vertex(v).wf); })
        .def("to_json", [](const BisGraph& g) { return to_json(g).dump(); })
        .def_static("from_json", [](const std::string& s) { return graph_from_json(parse_json(s)); })
        .def(py::self == py::self);

    py::class_<IntervalInstance>(m, "IntervalInstance")
        .def(py::init(&make_intervals), py::arg("intervals"))
        .def("__len__", &IntervalInstance::size)
        .def("leaders", &IntervalInstance::leaders)
        .def("followers", &IntervalInstance::followers)
        .def("to_graph", &to_interval_graph)
        .def("to_json", [](const IntervalInstance& i) { return to_json(i).dump(); })
        .def_static("from_json", [](const std::string& s) { return intervals_from_json(parse_json(s)); })
        .def(py::self == py::self);

    py::class_<BilevelOutcome>(m, "BilevelOutcome")
        .def_readonly("leader_set", &BilevelOutcome::leader_set)
        .def_readonly("follower_set", &BilevelOutcome::follower_set)
        .def_readonly("leader_value", &BilevelOutcome::leader_value)
        .def_readonly("follower_value", &BilevelOutcome::follower_value)
        .def("to_json", [](const BilevelOutcome& o) { return to_json(o).dump(); })
        .def("__repr__", [](const BilevelOutcome& o) { return to_json(o).dump(); });

    py::class_<Target>(m, "Target")
        .def_property_readonly("variant", [](const Target& t) { return t.variant.to_string(); })
        .def_readonly("threshold", &Target::threshold);

    py::class_<ReductionOutput>(m, "ReductionOutput")
        .def_readonly("graph", &ReductionOutput::graph)
        .def_readonly("targets", &ReductionOutput::targets)
        .def_readonly("constants", &ReductionOutput::constants)
        .def_readonly("labels", &ReductionOutput::labels);

    auto solver = [](auto f) {
        return [f](const BisGraph& g) {
            py::gil_scoped_release release;
            return f(g);
        };
    };
    m.def("solve_cb_db_o", solver(&solve_cb_db_o), py::arg("graph"));
    m.def("solve_cs_db_o_bipartite", solver(&solve_cs_db_o_bipartite), py::arg("graph"));
    m.def("solve_cs_db_p_bipartite", solver(&solve_cs_db_p_bipartite), py::arg("graph"));
    m.def(
        "solve",
        [](const BisGraph& g, const Variant& v, unsigned threads) {
            py::gil_scoped_release release;
            return solve(g, v, {threads});
        },
        py::arg("graph"), py::arg("variant"), py::arg("threads") = 1);
    m.def(
        "solve_enum_leader",
        [](const BisGraph& g, const Variant& v, unsigned threads) {
            py::gil_scoped_release release;
            return solve_enum_leader(g, v, {threads});
        },
        py::arg("graph"), py::arg("variant"), py::arg("threads") = 1);
    m.def(
        "solve_bisel", [](const IntervalInstance& i, const std::string& s) { return solve_bisel(i, parse_setting(s)); },
        py::arg("instance"), py::arg("setting"));
    m.def("verify_certificate", &verify_certificate, py::arg("graph"), py::arg("variant"), py::arg("leader"),
          py::arg("claimed"));

    m.def(
        "react", [](const BisGraph& g, const IdSet& l, const Variant& v) { return react(g, make_id_set(l), v); },
        py::arg("graph"), py::arg("leader"), py::arg("variant"));
    m.def(
        "react_intervals",
        [](const IntervalInstance& i, const IdSet& l, const std::string& s) {
            return react_intervals(i, make_id_set(l), parse_setting(s));
        },
        py::arg("instance"), py::arg("leader"), py::arg("setting"));

    m.def(
        "brute_force", [](const BisGraph& g, const Variant& v) { return brute_force(g, v); }, py::arg("graph"),
        py::arg("variant"));
    m.def(
        "brute_bisel", [](const IntervalInstance& i, const std::string& s) { return brute_bisel(i, parse_setting(s)); },
        py::arg("instance"), py::arg("setting"));
    m.def(
        "brute_follower",
        [](const BisGraph& g, const IdSet& l, const Variant& v) { return brute_follower(g, make_id_set(l), v); },
        py::arg("graph"), py::arg("leader"), py::arg("variant"));
    m.def(
        "decide_vc_brute", [](std::size_t n, std::vector<Edge> edges, int k) { return decide_vc_brute(PlainGraph(n, std::move(edges)), k); },
        py::arg("n"), py::arg("edges"), py::arg("k"));
    m.def(
        "decide_b2cnf_brute", [](const std::string& json) { return decide_b2cnf_brute(formula_of(json)); },
        py::arg("formula_json"));

    auto reduction = [](ReductionOutput (*f)(const PlainGraph&, int)) {
        return [f](std::size_t n, std::vector<Edge> edges, int k) { return f(PlainGraph(n, std::move(edges)), k); };
    };
    m.def("vc_to_bis", reduction(&vc_to_bis), py::arg("n"), py::arg("edges"), py::arg("k"));
    m.def("planar_vc_to_bipartite_bis", reduction(&planar_vc_to_bipartite_bis), py::arg("n"), py::arg("edges"),
          py::arg("k"));
    m.def("vc_to_bipartite_bis", reduction(&vc_to_bipartite_bis), py::arg("n"), py::arg("edges"), py::arg("k"));
    m.def("is_to_bis", reduction(&is_to_bis), py::arg("n"), py::arg("edges"), py::arg("k"));
    m.def(
        "b2cnf_to_bis", [](const std::string& json) { return b2cnf_to_bis(formula_of(json)); }, py::arg("formula_json"));

    m.def("gen_random_graph", &gen_random_graph, py::arg("n"), py::arg("edge_prob"), py::arg("leader_fraction"),
          py::arg("max_weight"), py::arg("bipartite"), py::arg("seed"));
    m.def("gen_random_intervals", &gen_random_intervals, py::arg("n"), py::arg("coord_max"),
          py::arg("leader_fraction"), py::arg("max_weight"), py::arg("seed"));
    m.def(
        "bench_dp",
        [](const std::vector<std::size_t>& sizes, std::uint64_t seed) {
            std::vector<std::pair<std::size_t, double>> out;
            for (const auto& row : bench_dp(sizes, seed)) out.emplace_back(row.n, row.milliseconds);
            return out;
        },
        py::arg("sizes"), py::arg("seed"));
    m.def("is_bipartite", [](const BisGraph& g) { return is_bipartite(g); }, py::arg("graph"));
}
