#pragma once

#include <vector>

#include "lpa/algebra.hpp"
#include "lpa/closure.hpp"

namespace lpa {

// One homogeneous component of the socle: a full matrix algebra of the given
// size over K, spanned by the matrix units { p w q* : r(p) = r(q) = w } of a
// terminal sink w reached through line points.
struct SocleComponent {
    VertexId terminal_sink;
    std::vector<VertexId> line_class;  // line points whose line ends at the sink
    ExtendedNat size;                  // number of paths into the sink
};

struct SocleReport {
    std::vector<VertexId> line_points;
    VertexSet closure_H;
    std::vector<SocleComponent> components;
    bool socle_is_zero;        // iff there are no line points
    bool socle_is_everything;  // iff the closure is all of E^0
};

SocleReport socle_report(const Graph& g);

struct MinimalIdealVerdict {
    bool graph_verdict;       // u is a line point
    CornerClass corner;       // bounded corner probe
    bool algebra_verdict;     // corner probe says field
    bool agree;               // the two must agree (corner criterion)
};

// Minimality of L_K(E)u via the line-point criterion, cross-checked against
// the corner being the base field. Disagreement indicates an internal error.
MinimalIdealVerdict minimal_vertex_ideal(const Graph& g, VertexId u, std::size_t max_degree = 8);

}  // namespace lpa
