#include "lpa/socle.hpp"

#include <map>

#include "lpa/errors.hpp"

namespace lpa {

namespace {

// A line point's tree is a bifurcation-free, cycle-free chain; with finitely
// many vertices it must end in a sink.
VertexId terminal_sink_of(const Graph& g, VertexId u) {
    VertexId at = u;
    while (!g.out(at).empty()) {
        if (g.owns_bundle(at) || g.out(at).size() != 1)
            throw InternalError("terminal_sink_of called off a line point");
        at = g.decl(g.out(at).front()).dst;
    }
    return at;
}

}  // namespace

SocleReport socle_report(const Graph& g) {
    SocleReport report;
    report.line_points = line_points(g);
    VertexSet pl(report.line_points.begin(), report.line_points.end());
    report.closure_H = hereditary_saturated_closure(g, pl);
    report.socle_is_zero = report.line_points.empty();
    report.socle_is_everything = report.closure_H.size() == g.vertex_count();

    std::map<VertexId, std::vector<VertexId>> by_sink;
    for (VertexId u : report.line_points) by_sink[terminal_sink_of(g, u)].push_back(u);
    for (auto& [sink, cls] : by_sink)
        report.components.push_back(SocleComponent{sink, cls, count_paths_into(g, sink)});
    return report;
}

MinimalIdealVerdict minimal_vertex_ideal(const Graph& g, VertexId u, std::size_t max_degree) {
    MinimalIdealVerdict v;
    v.graph_verdict = is_line_point(g, u);
    v.corner = classify_corner(g, u, max_degree);
    v.algebra_verdict = (v.corner == CornerClass::Field);
    v.agree = (v.graph_verdict == v.algebra_verdict);
    return v;
}

}  // namespace lpa
