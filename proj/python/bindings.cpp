#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rtdg/coloring.hpp"
#include "rtdg/errors.hpp"
#include "rtdg/expr.hpp"
#include "rtdg/graph.hpp"
#include "rtdg/graph_io.hpp"
#include "rtdg/space.hpp"
#include "rtdg/verify.hpp"

namespace py = pybind11;
using namespace rtdg;

namespace {

py::int_ to_py(const BigInt& x) {
    return py::int_(py::str(x.str()));
}

SpaceSpec space_of(const std::string& text) {
    return SpaceSpec::parse(text);
}

std::pair<SpaceSpec, DistanceSet> instance_of(const std::string& space, const std::string& distances) {
    SpaceSpec spec = SpaceSpec::parse(space);
    DistanceSet d = DistanceSet::parse(distances);
    d.require_valid_for(spec);
    return {spec, d};
}

py::dict report_to_dict(const VerificationReport& r) {
    py::dict out;
    out["claim"] = r.claim;
    out["space"] = r.space.to_string();
    out["distances"] = r.distances.values();
    out["status"] = to_string(r.status);
    out["evidence"] = r.evidence;
    out["seconds"] = r.seconds;
    return out;
}

py::list reports_to_list(const std::vector<VerificationReport>& reports) {
    py::list out;
    for (const auto& r : reports) out.append(report_to_dict(r));
    return out;
}

py::dict expr_stats_dict(const GraphExpr& e) {
    py::dict out;
    out["expr"] = expr_to_string(e);
    out["vertices"] = to_py(expr_vertex_count(e));
    out["edges"] = to_py(expr_edge_count(e));
    out["degree"] = to_py(expr_degree(e));
    out["components"] = to_py(expr_component_count(e));
    out["chromatic"] = to_py(expr_chromatic(e));
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Distance graphs of finite spaces under the Rosenbloom-Tsfasman metric";

    py::register_exception<Error>(m, "RTDGError", PyExc_RuntimeError);
    py::register_exception<NoPreimageError>(m, "NoPreimageError", PyExc_ValueError);

    m.def("space_cardinality",
          [](const std::string& space) { return to_py(space_of(space).cardinality()); },
          py::arg("space"), "Number of points of the space given as a spec string.");

    m.def("rt_distance",
          [](const std::string& space, const std::vector<int>& x, const std::vector<int>& y) {
              SpaceSpec spec = space_of(space);
              return rt_distance(Point(spec, x), Point(spec, y));
          },
          py::arg("space"), py::arg("x"), py::arg("y"),
          "RT distance between two points given by their coordinates.");

    m.def("build_graph",
          [](const std::string& space, const std::string& distances, std::size_t max_points) {
              auto [spec, d] = instance_of(space, distances);
              DistanceGraph dg = build_distance_graph(spec, d, max_points);
              py::dict out;
              out["space"] = spec.to_string();
              out["distances"] = d.values();
              out["vertex_count"] = dg.graph.vertex_count();
              py::list labels;
              for (const Point& p : dg.labels) labels.append(p.coords());
              out["labels"] = labels;
              out["edges"] = dg.graph.edges();
              return out;
          },
          py::arg("space"), py::arg("distances"), py::arg("max_points") = kDefaultMaxPoints,
          "Brute-force distance graph as a dict with labels and a sorted edge list.");

    m.def("graph_json",
          [](const std::string& space, const std::string& distances, std::size_t max_points) {
              auto [spec, d] = instance_of(space, distances);
              DistanceGraph dg = build_distance_graph(spec, d, max_points);
              return document_to_json(GraphDocument::from_distance_graph(dg));
          },
          py::arg("space"), py::arg("distances"), py::arg("max_points") = kDefaultMaxPoints,
          "The graph JSON document, byte-identical to the CLI artifact.");

    m.def("graph_dot",
          [](const std::string& space, const std::string& distances, std::size_t max_points) {
              auto [spec, d] = instance_of(space, distances);
              DistanceGraph dg = build_distance_graph(spec, d, max_points);
              return document_to_dot(GraphDocument::from_distance_graph(dg));
          },
          py::arg("space"), py::arg("distances"), py::arg("max_points") = kDefaultMaxPoints);

    m.def("formula",
          [](const std::string& space, const std::string& distances) {
              auto [spec, d] = instance_of(space, distances);
              return expr_to_string(expr_for_space(spec, d));
          },
          py::arg("space"), py::arg("distances"),
          "Closed-form decomposition as a normalized expression string.");

    m.def("formula_stats",
          [](const std::string& space, const std::string& distances) {
              auto [spec, d] = instance_of(space, distances);
              return expr_stats_dict(expr_for_space(spec, d));
          },
          py::arg("space"), py::arg("distances"),
          "Exact vertex/edge/degree/component/chromatic counts of the closed form.");

    m.def("expr_stats",
          [](const std::string& text) { return expr_stats_dict(expr_parse(text)); },
          py::arg("expr"), "Parse an expression string and report its exact counts.");

    m.def("verify_structure",
          [](const std::string& space, const std::string& distances) {
              auto [spec, d] = instance_of(space, distances);
              return report_to_dict(verify_structure_theorem(spec, d));
          },
          py::arg("space"), py::arg("distances"),
          "Brute-force graph vs. evaluated closed form, isomorphism witness re-verified.");

    m.def("verify_metric_axioms",
          [](const std::string& space) { return report_to_dict(verify_metric_axioms(space_of(space))); },
          py::arg("space"));

    m.def("verify_embedding",
          [](int n, const std::string& distances) {
              SpaceSpec spec = SpaceSpec::sn(n);
              DistanceSet d = DistanceSet::parse(distances);
              d.require_valid_for(spec);
              return report_to_dict(verify_sn_embedding(n, d));
          },
          py::arg("n"), py::arg("distances"),
          "Word encoding of permutations into Z_n^n preserves RT distances and edges.");

    m.def("verify_suite_zq",
          [](int q, int n) { return reports_to_list(verify_corollary_suite_zq(q, n)); },
          py::arg("q"), py::arg("n"));

    m.def("verify_suite_sn", [](int n) { return reports_to_list(verify_corollary_suite_sn(n)); },
          py::arg("n"));

    m.def("chromatic",
          [](const std::string& space, const std::string& distances) {
              auto [spec, d] = instance_of(space, distances);
              DistanceGraph dg = build_distance_graph(spec, d);
              ChromaticResult res = chromatic_number_exact(dg.graph);
              py::dict out;
              out["formula"] = to_py(chromatic_formula(spec, d));
              out["lower"] = res.lower;
              out["upper"] = res.upper;
              out["exact"] = res.exact;
              return out;
          },
          py::arg("space"), py::arg("distances"),
          "Closed-form chromatic number next to the exact solver's result or bounds.");

    m.def("recover_zq",
          [](int q, const py::int_& degree) {
              return recover_distance_set_zq(q, BigInt(py::str(degree).cast<std::string>())).values();
          },
          py::arg("q"), py::arg("degree"),
          "Distance set whose word-space degree equals the given value; raises NoPreimageError.");

    m.def("recover_sn",
          [](const py::int_& degree) {
              return recover_distance_set_sn(BigInt(py::str(degree).cast<std::string>())).values();
          },
          py::arg("degree"),
          "Distance set whose permutation-space degree equals the given value.");

    m.def("report_json_line",
          [](const std::string& space, const std::string& distances) {
              auto [spec, d] = instance_of(space, distances);
              return report_to_json_line(verify_structure_theorem(spec, d));
          },
          py::arg("space"), py::arg("distances"),
          "One structure report serialized exactly as the CLI emits it.");
}
