// Python module exposing the core operations: ring construction, graph
// building, closures, distance analytics and the check suites.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ccgraph/analytics.hpp"
#include "ccgraph/errors.hpp"
#include "ccgraph/graph.hpp"
#include "ccgraph/identities.hpp"
#include "ccgraph/io.hpp"
#include "ccgraph/matrix.hpp"
#include "ccgraph/ring.hpp"
#include "ccgraph/verifier.hpp"

namespace py = pybind11;
using namespace ccgraph;

namespace {

// RingPtr points at a const handle, which pybind11 cannot hold directly, and
// the graph holds no reference back to its ring; two value wrappers keep the
// Python lifetimes simple.
struct PyRing {
    RingPtr ring;
    const RingHandle& r() const { return *ring; }
};

struct PyGraph {
    std::shared_ptr<CommutationGraph> graph;
};

PyGraph build_graph_py(const PyRing& ring, unsigned threads) {
    GraphBuildOptions opts;
    opts.threads = threads;
    return PyGraph{std::make_shared<CommutationGraph>(
        build_commutation_graph(ring.r(), opts))};
}

py::dict result_to_dict(const CheckResult& r) {
    py::dict d;
    d["check_id"] = r.check_id;
    d["ring"] = r.ring;
    d["status"] = to_string(r.status);
    d["expected"] = r.expected.dump();
    d["actual"] = r.actual.dump();
    d["witness"] = r.witness.is_null() ? std::string("null") : r.witness.dump();
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Commutation graphs of finite rings";

    py::register_exception<SpecError>(m, "SpecError", PyExc_ValueError);
    py::register_exception<SizeGuardError>(m, "SizeGuardError",
                                           PyExc_ValueError);
    py::register_exception<IoError>(m, "IoError", PyExc_OSError);

    py::class_<PyRing>(m, "Ring")
        .def_property_readonly(
            "spec", [](const PyRing& p) { return p.r().descriptor().render(); })
        .def_property_readonly("size",
                               [](const PyRing& p) { return p.r().size(); })
        .def("add",
             [](const PyRing& p, ElementId a, ElementId b) {
                 return p.r().add(a, b);
             },
             py::arg("a"), py::arg("b"))
        .def("sub",
             [](const PyRing& p, ElementId a, ElementId b) {
                 return p.r().sub(a, b);
             },
             py::arg("a"), py::arg("b"))
        .def("neg", [](const PyRing& p, ElementId a) { return p.r().neg(a); },
             py::arg("a"))
        .def("mul",
             [](const PyRing& p, ElementId a, ElementId b) {
                 return p.r().mul(a, b);
             },
             py::arg("a"), py::arg("b"))
        .def("pow",
             [](const PyRing& p, ElementId a, std::uint64_t e) {
                 return p.r().pow(a, e);
             },
             py::arg("a"), py::arg("e"))
        .def("one", [](const PyRing& p) { return p.r().one(); })
        .def("render",
             [](const PyRing& p, ElementId a) { return p.r().render_element(a); },
             py::arg("a"))
        .def("is_unit",
             [](const PyRing& p, ElementId a) { return p.r().is_unit(a); },
             py::arg("a"))
        .def("is_nilpotent",
             [](const PyRing& p, ElementId a) { return p.r().is_nilpotent(a); },
             py::arg("a"))
        .def("is_left_zero_divisor",
             [](const PyRing& p, ElementId a) {
                 return p.r().is_left_zero_divisor(a);
             },
             py::arg("a"))
        .def("is_right_zero_divisor",
             [](const PyRing& p, ElementId a) {
                 return p.r().is_right_zero_divisor(a);
             },
             py::arg("a"))
        .def("try_inverse",
             [](const PyRing& p, ElementId a) { return p.r().try_inverse(a); },
             py::arg("a"))
        .def("units", [](const PyRing& p) { return p.r().units(); })
        .def_property_readonly(
            "is_matrix_ring",
            [](const PyRing& p) { return p.r().is_matrix_ring(); })
        .def_property_readonly(
            "is_product", [](const PyRing& p) { return p.r().is_product(); })
        .def("__len__", [](const PyRing& p) { return p.r().size(); })
        .def("__repr__", [](const PyRing& p) {
            return "Ring(" + p.r().descriptor().render() + ")";
        });

    py::class_<PyGraph>(m, "Graph")
        .def_property_readonly(
            "vertex_count",
            [](const PyGraph& g) { return g.graph->vertex_count; })
        .def_property_readonly(
            "edge_count", [](const PyGraph& g) { return g.graph->edge_count; })
        .def_property_readonly(
            "component_count",
            [](const PyGraph& g) { return g.graph->component_count; })
        .def("neighbors",
             [](const PyGraph& g, ElementId v) {
                 auto span = g.graph->neighbors(v);
                 return std::vector<ElementId>(span.begin(), span.end());
             },
             py::arg("v"))
        .def("component_of",
             [](const PyGraph& g, ElementId v) {
                 if (v >= g.graph->vertex_count)
                     throw py::index_error("vertex out of range");
                 return g.graph->component[v];
             },
             py::arg("v"))
        .def("adjacent",
             [](const PyGraph& g, ElementId u, ElementId v) {
                 return g.graph->adjacent(u, v);
             },
             py::arg("u"), py::arg("v"))
        .def("__repr__", [](const PyGraph& g) {
            return "Graph(vertices=" + std::to_string(g.graph->vertex_count) +
                   ", edges=" + std::to_string(g.graph->edge_count) + ")";
        });

    m.def(
        "build_ring",
        [](const std::string& spec, bool allow_large) {
            BuildOptions opts;
            opts.allow_large = allow_large;
            return PyRing{build_ring(spec, opts)};
        },
        py::arg("spec"), py::arg("allow_large") = false,
        "Construct a ring from a spec string like 'Z(12)' or 'M(2,GF(3))'.");

    m.def("build_graph", &build_graph_py, py::arg("ring"),
          py::arg("threads") = 0,
          "Build the graph whose edges join cd and dc over all pairs.");

    m.def(
        "closure",
        [](const PyGraph& g, ElementId seed) {
            if (seed >= g.graph->vertex_count)
                throw py::index_error("vertex out of range");
            ClosureResult cl = closure(*g.graph, seed);
            py::dict d;
            d["seed"] = seed;
            d["members"] = cl.members;
            d["levels"] = cl.levels;
            d["max_level"] = cl.max_level;
            return d;
        },
        py::arg("graph"), py::arg("seed"),
        "Members and levels of the smallest closed set containing the seed.");

    m.def(
        "is_commutatively_closed",
        [](const PyRing& ring, const std::vector<ElementId>& subset) {
            ClosednessResult res = is_commutatively_closed(ring.r(), subset);
            return py::make_tuple(res.closed, res.counterexample);
        },
        py::arg("ring"), py::arg("subset"),
        "Whether cd in the subset forces dc in it; returns (closed, "
        "counterexample).");

    m.def(
        "distance",
        [](const PyGraph& g, ElementId a, ElementId b) {
            return distance(*g.graph, a, b);
        },
        py::arg("graph"), py::arg("a"), py::arg("b"),
        "Shortest path length, or None when a and b are not connected.");

    m.def(
        "diameter",
        [](const PyGraph& g, unsigned threads) {
            return ring_diameter(*g.graph, threads);
        },
        py::arg("graph"), py::arg("threads") = 0,
        "Greatest finite distance over the whole graph.");

    m.def(
        "girth",
        [](const PyGraph& g, unsigned threads) {
            return ring_girth(*g.graph, threads);
        },
        py::arg("graph"), py::arg("threads") = 0,
        "Shortest cycle length, or None when acyclic.");

    m.def(
        "class_diameter",
        [](const PyGraph& g, ElementId a) { return class_diameter(*g.graph, a); },
        py::arg("graph"), py::arg("a"));

    m.def(
        "class_girth",
        [](const PyGraph& g, ElementId a) { return class_girth(*g.graph, a); },
        py::arg("graph"), py::arg("a"));

    m.def(
        "stabilization_depth",
        [](const PyGraph& g, ElementId a) {
            return stabilization_depth(*g.graph, a);
        },
        py::arg("graph"), py::arg("a"),
        "Levels until the closure stops growing from the seed.");

    m.def(
        "export_graph",
        [](const PyGraph& g, const PyRing& ring, const std::string& format) {
            auto fmt = parse_format(format);
            if (!fmt)
                throw SpecError("unknown export format '" + format + "'", 0);
            return export_graph(*g.graph, ring.r(), *fmt);
        },
        py::arg("graph"), py::arg("ring"), py::arg("format"),
        "Serialize the graph as dot, json, csv or edgelist text.");

    m.def("suite_names", &suite_names, "Names of the available check suites.");

    m.def(
        "run_suite",
        [](const std::string& suite, const std::vector<std::string>& rings,
           std::uint64_t seed, unsigned threads, bool allow_large) {
            SuiteOptions opts;
            opts.seed = seed;
            opts.threads = threads;
            opts.allow_large = allow_large;
            Report rep = run_suite(suite, rings, opts);
            py::dict d;
            d["suite"] = rep.suite;
            d["seed"] = rep.seed;
            d["passed"] = rep.passed;
            d["failed"] = rep.failed;
            d["skipped"] = rep.skipped;
            py::list results;
            for (const CheckResult& r : rep.results)
                results.append(result_to_dict(r));
            d["results"] = results;
            d["json"] = report_to_json(rep).dump(2);
            return d;
        },
        py::arg("suite"), py::arg("rings") = std::vector<std::string>{},
        py::arg("seed") = 0, py::arg("threads") = 0,
        py::arg("allow_large") = false,
        "Run a check suite; empty rings means the suite defaults.");

    m.def("default_suite_rings", &default_suite_rings, py::arg("suite"));

    m.def(
        "jordan_type",
        [](const PyRing& ring, ElementId a) {
            if (!ring.r().is_matrix_ring())
                throw SpecError("jordan_type needs a matrix ring", 0);
            const FiniteField& f = *ring.r().base_field();
            MatrixRep mrep = ring.r().decode_matrix(a);
            auto nu = nilpotency_index(f, mrep);
            py::dict d;
            d["nilpotent"] = nu.has_value();
            d["nilpotency_index"] = nu;
            if (nu)
                d["partition"] = jordan_partition(f, mrep).blocks;
            else
                d["partition"] = py::none();
            d["char_poly"] = char_poly(f, mrep).coefficients;
            return d;
        },
        py::arg("ring"), py::arg("element"),
        "Nilpotency data and characteristic polynomial of a matrix element.");
}
