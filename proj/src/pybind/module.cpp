#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <utility>
#include <vector>

#include "gnorm/cliques.hpp"
#include "gnorm/cycles.hpp"
#include "gnorm/graph.hpp"
#include "gnorm/graph_io.hpp"
#include "gnorm/normality.hpp"
#include "gnorm/sampling.hpp"
#include "gnorm/stars.hpp"

namespace py = pybind11;

namespace {

using EdgeList = std::vector<std::pair<int, int>>;

gnorm::Graph make_graph(int n, const EdgeList& edges) {
    std::vector<gnorm::Edge> converted(edges.begin(), edges.end());
    return gnorm::Graph::from_edges(n, converted);
}

std::vector<std::vector<int>> family_lists(const std::vector<gnorm::VertexSet>& family) {
    std::vector<std::vector<int>> out;
    out.reserve(family.size());
    for (const auto& s : family) out.push_back(s.members());
    return out;
}

std::vector<gnorm::VertexSet> family_sets(int n, const std::vector<std::vector<int>>& lists) {
    std::vector<gnorm::VertexSet> out;
    out.reserve(lists.size());
    for (const auto& members : lists) {
        gnorm::VertexSet s(n);
        for (int v : members) s.set(v);
        out.push_back(std::move(s));
    }
    return out;
}

py::dict decide(int n, const EdgeList& edges, std::uint64_t budget_nodes, std::int64_t budget_ms) {
    const gnorm::Graph g = make_graph(n, edges);
    const gnorm::DecideResult res = gnorm::decide_normal(g, {budget_nodes, budget_ms});
    py::dict out;
    out["outcome"] = std::string(gnorm::to_string(res.outcome));
    out["nodes"] = res.nodes;
    if (res.certificate) {
        out["cliques"] = family_lists(res.certificate->cliques);
        out["independents"] = family_lists(res.certificate->independents);
    } else {
        out["cliques"] = py::none();
        out["independents"] = py::none();
    }
    return out;
}

py::dict verify(int n, const EdgeList& edges, const std::vector<std::vector<int>>& cliques,
                const std::vector<std::vector<int>>& independents) {
    const gnorm::Graph g = make_graph(n, edges);
    const gnorm::NormalCertificate cert{family_sets(n, cliques), family_sets(n, independents)};
    const gnorm::VerifyResult r = gnorm::verify_certificate(g, cert);
    std::vector<std::string> messages;
    for (const auto& v : r.violations) messages.push_back(v.describe());
    py::dict out;
    out["valid"] = r.valid;
    out["violations"] = messages;
    return out;
}

py::dict star_covering(int n, const EdgeList& edges, const std::vector<std::vector<int>>& cliques,
                       const std::vector<std::vector<int>>& independents) {
    const gnorm::Graph g = make_graph(n, edges);
    const gnorm::NormalCertificate cert{family_sets(n, cliques), family_sets(n, independents)};
    const gnorm::StarCovering cover = gnorm::to_star_covering(g, cert);
    py::list stars;
    for (const auto& star : cover.stars) {
        py::dict item;
        item["center"] = star.center;
        item["leaves"] = star.leaves.members();
        stars.append(item);
    }
    py::dict out;
    out["centers"] = cover.centers.members();
    out["stars"] = stars;
    out["cliques"] = family_lists(cover.certificate.cliques);
    out["independents"] = family_lists(cover.certificate.independents);
    return out;
}

}  // namespace

PYBIND11_MODULE(_gnorm, m) {
    m.doc() = "exact graph normality decisions and star covering machinery";

    m.def("decide", &decide, py::arg("n"), py::arg("edges"),
          py::arg("budget_nodes") = 50000000ULL, py::arg("budget_ms") = -1,
          "Decide normality; returns outcome, node count, and certificate families.");
    m.def("verify", &verify, py::arg("n"), py::arg("edges"), py::arg("cliques"),
          py::arg("independents"), "Validate a certificate; returns validity and violations.");
    m.def("star_covering", &star_covering, py::arg("n"), py::arg("edges"), py::arg("cliques"),
          py::arg("independents"),
          "Reduce a certificate of a triangle-free graph to a star covering.");

    m.def(
        "girth",
        [](int n, const EdgeList& edges) -> std::optional<int> {
            return gnorm::girth(make_graph(n, edges));
        },
        py::arg("n"), py::arg("edges"), "Shortest cycle length, or None for forests.");
    m.def(
        "count_short_cycles",
        [](int n, const EdgeList& edges, int max_len) {
            return gnorm::count_short_cycles(make_graph(n, edges), max_len);
        },
        py::arg("n"), py::arg("edges"), py::arg("max_len"));
    m.def(
        "short_cycle_transversal",
        [](int n, const EdgeList& edges, int max_len) {
            return gnorm::short_cycle_transversal(make_graph(n, edges), max_len).members();
        },
        py::arg("n"), py::arg("edges"), py::arg("max_len"),
        "Vertices meeting every cycle of length at most max_len.");

    m.def(
        "maximal_cliques",
        [](int n, const EdgeList& edges) {
            return family_lists(gnorm::maximal_cliques(make_graph(n, edges)));
        },
        py::arg("n"), py::arg("edges"));
    m.def(
        "independence_number",
        [](int n, const EdgeList& edges) {
            return gnorm::independence_number(make_graph(n, edges));
        },
        py::arg("n"), py::arg("edges"));

    m.def(
        "sample_gnp",
        [](int n, double p, std::uint64_t seed, std::uint64_t trial) {
            return gnorm::sample_gnp(n, p, seed, trial).edges();
        },
        py::arg("n"), py::arg("p"), py::arg("seed") = 1, py::arg("trial") = 0,
        "Seeded G(n, p) sample as an edge list.");

    m.def(
        "to_graph6", [](int n, const EdgeList& edges) { return gnorm::to_graph6(make_graph(n, edges)); },
        py::arg("n"), py::arg("edges"));
    m.def(
        "from_graph6",
        [](const std::string& text) {
            const gnorm::Graph g = gnorm::from_graph6(text);
            return py::make_tuple(g.vertex_count(), g.edges());
        },
        py::arg("text"), "Returns (n, edges).");
}
