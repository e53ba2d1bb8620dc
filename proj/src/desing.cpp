#include "lpa/desing.hpp"

#include <algorithm>
#include <set>

#include "lpa/errors.hpp"

namespace lpa {

const TailDescriptor* DesingGraph::tail_at(VertexId v) const {
    for (const auto& t : tails)
        if (t.base == v) return &t;
    return nullptr;
}

DesingGraph desingularize(const Graph& g) {
    DesingGraph d;
    for (VertexId v = 0; v < g.vertex_count(); ++v) d.core.add_vertex(g.vertex_name(v));
    for (EdgeId e = 0; e < g.decl_count(); ++e) {
        const auto& decl = g.decl(e);
        if (g.classify(decl.src) == VertexClass::InfiniteEmitter) continue;  // removed edges
        if (decl.is_bundle) continue;  // unreachable: bundle owners are emitters
        d.core.add_edge(decl.name, decl.src, decl.dst);
    }
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        switch (g.classify(v)) {
            case VertexClass::Sink:
                d.tails.push_back(TailDescriptor{v, TailDescriptor::Kind::SinkTail, {}, {}, {}});
                break;
            case VertexClass::InfiniteEmitter: {
                TailDescriptor t{v, TailDescriptor::Kind::EmitterTail, {}, {}, {}};
                for (EdgeId e : g.out(v)) {
                    if (g.decl(e).is_bundle) {
                        t.cycle_ranges.push_back(g.decl(e).dst);
                    } else {
                        t.enumeration_prefix.push_back(EdgeRef{e, 0});
                        t.prefix_ranges.push_back(g.decl(e).dst);
                    }
                }
                d.tails.push_back(std::move(t));
                break;
            }
            case VertexClass::Regular:
                break;
        }
    }
    return d;
}

SymbolicLinePoints line_points_desing(const DesingGraph& d) {
    const Graph& core = d.core;
    SymbolicLinePoints result;
    for (VertexId v = 0; v < core.vertex_count(); ++v) {
        // Walk T_F(v): emitter-tail bases have out-degree 2 in F (f_1 and
        // g_1), sink-tail bases continue into a harmless infinite chain,
        // regular vertices keep their core edges.
        std::set<VertexId> seen;
        VertexId at = v;
        bool line = true;
        while (true) {
            if (!seen.insert(at).second) {
                line = false;  // cycle in the core
                break;
            }
            const TailDescriptor* t = d.tail_at(at);
            if (t && t->kind == TailDescriptor::Kind::EmitterTail) {
                line = false;  // bifurcation at the tail base and all along it
                break;
            }
            if (t) break;  // sink tail: out-degree 1 forever, no return to core
            const auto& outs = core.out(at);
            if (outs.size() >= 2) {
                line = false;
                break;
            }
            if (outs.empty())
                throw InternalError("desingularized core has a sink without a tail");
            at = core.decl(outs.front()).dst;
        }
        if (line) result.core_points.push_back(v);
    }
    for (const auto& t : d.tails)
        if (t.kind == TailDescriptor::Kind::SinkTail) result.sink_tail_bases.push_back(t.base);
    return result;
}

namespace {

std::string fresh_name(const Graph& g, std::string name) {
    while (g.find_vertex(name) || g.find_decl(name)) name += "_";
    return name;
}

}  // namespace

TruncatedGraph truncate(const DesingGraph& d, std::size_t depth) {
    if (depth == 0) throw InputError("truncate: depth must be positive");
    TruncatedGraph out;
    const Graph& core = d.core;
    for (VertexId v = 0; v < core.vertex_count(); ++v) out.graph.add_vertex(core.vertex_name(v));
    for (EdgeId e = 0; e < core.decl_count(); ++e) {
        const auto& decl = core.decl(e);
        out.graph.add_edge(decl.name, decl.src, decl.dst);
    }
    for (const auto& t : d.tails) {
        const std::string base = core.vertex_name(t.base);
        std::vector<std::string> tail_names;
        for (std::size_t k = 1; k <= depth; ++k) {
            std::string name = fresh_name(out.graph, base + "_t" + std::to_string(k));
            out.graph.add_vertex(name);
            out.generated_vertices.push_back(name);
            tail_names.push_back(name);
        }
        std::string prev = base;
        for (std::size_t k = 1; k <= depth; ++k) {
            out.graph.add_edge(fresh_name(out.graph, base + "_f" + std::to_string(k)), prev,
                               tail_names[k - 1]);
            if (t.kind == TailDescriptor::Kind::EmitterTail) {
                // g_k leaves v_{k-1} toward r(e_k) of the enumeration.
                VertexId rk;
                if (k - 1 < t.prefix_ranges.size()) {
                    rk = t.prefix_ranges[k - 1];
                } else {
                    std::size_t idx = (k - 1 - t.prefix_ranges.size()) % t.cycle_ranges.size();
                    rk = t.cycle_ranges[idx];
                }
                out.graph.add_edge(fresh_name(out.graph, base + "_g" + std::to_string(k)), prev,
                                   core.vertex_name(rk));
            }
            prev = tail_names[k - 1];
        }
        out.cut_vertices.push_back(tail_names.back());
    }
    return out;
}

bool verify_desing_lemma(const Graph& g) {
    DesingGraph d = desingularize(g);
    SymbolicLinePoints sym = line_points_desing(d);

    // (1) P_l(E) = P_l(F) /\ E^0
    std::vector<VertexId> direct = line_points(g);
    if (direct != sym.core_points) return false;

    // (2) P_l(E) nonempty iff P_l(F) nonempty
    if (direct.empty() != sym.empty()) return false;

    // Nonzero-socle biconditional between E and F: both sides reduce to
    // nonemptiness of the respective line point sets.
    bool socle_E = !direct.empty();
    bool socle_F = !sym.empty();
    return socle_E == socle_F;
}

}  // namespace lpa
