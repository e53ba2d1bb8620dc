#pragma once

#include <string>
#include <vector>

#include "lpa/graph.hpp"

namespace lpa {

// One infinite tail attached at a singular vertex of E. Sink tails are plain
// chains v0 -> t1 -> t2 -> ...; emitter tails replace s^-1(v0) by the chain
// plus one edge g_j from each tail vertex to r(e_j), where e_1, e_2, ... lists
// s^-1(v0): concrete edges in declaration order, then bundle members
// round-robin over the bundles. The range sequence of the g_j is therefore a
// finite prefix followed by a periodic part, which keeps line-point queries
// on the infinite graph decidable.
struct TailDescriptor {
    enum class Kind { SinkTail, EmitterTail };
    VertexId base;
    Kind kind;
    // emitter tails only:
    std::vector<EdgeRef> enumeration_prefix;  // concrete edges of s^-1(base)
    std::vector<VertexId> prefix_ranges;      // their ranges
    std::vector<VertexId> cycle_ranges;       // bundle ranges, round-robin period
};

// Symbolic representation of a desingularization F of E: the core is E with
// every infinite emitter's outgoing edges removed; F itself is core + tails.
// F is row-finite, has no bundles, and every tail vertex of an emitter tail
// has out-degree exactly 2.
struct DesingGraph {
    Graph core;
    std::vector<TailDescriptor> tails;

    const TailDescriptor* tail_at(VertexId v) const;
};

DesingGraph desingularize(const Graph& g);

// P_l(F), symbolically: core vertices that are line points of F, plus the
// tail families consisting entirely of line points (exactly the sink tails;
// emitter tail vertices always bifurcate).
struct SymbolicLinePoints {
    std::vector<VertexId> core_points;
    std::vector<VertexId> sink_tail_bases;

    bool empty() const { return core_points.empty() && sink_tail_bases.empty(); }
};

SymbolicLinePoints line_points_desing(const DesingGraph& d);

// Finite approximation for export: core plus the first `depth` vertices of
// each tail. Cut vertices become artificial sinks, so the truncation is not
// a faithful model of F.
struct TruncatedGraph {
    Graph graph;
    std::vector<std::string> cut_vertices;
    std::vector<std::string> generated_vertices;
};

TruncatedGraph truncate(const DesingGraph& d, std::size_t depth);

// Checks P_l(E) = P_l(F) /\ E^0 and the nonemptiness biconditional, with
// P_l(E) computed independently on E and P_l(F) traced through descriptors.
bool verify_desing_lemma(const Graph& g);

}  // namespace lpa
