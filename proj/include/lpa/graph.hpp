#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lpa/numbers.hpp"

namespace lpa {

using VertexId = std::uint32_t;

// Index into Graph's unified edge/bundle declaration table.
using EdgeId = std::uint32_t;

// A single edge of E^1: either a concrete declared edge (member == 0) or the
// member-th edge of an omega-bundle (member >= 1).
struct EdgeRef {
    EdgeId id = 0;
    std::uint32_t member = 0;

    friend auto operator<=>(const EdgeRef&, const EdgeRef&) = default;
};

// Finite path: a source vertex plus composable steps. Empty steps = the
// vertex itself (length-0 path).
struct Path {
    VertexId source = 0;
    std::vector<EdgeRef> steps;

    std::size_t length() const { return steps.size(); }
    bool is_vertex() const { return steps.empty(); }

    friend bool operator==(const Path&, const Path&) = default;
};

// (steps lexicographic, then source). Two distinct paths with equal nonempty
// step sequences cannot exist, so the source tiebreak only matters for
// length-0 paths.
bool path_less(const Path& a, const Path& b);

enum class VertexClass { Sink, Regular, InfiniteEmitter };

// Directed multigraph with named vertices, named edges and named
// omega-bundles (countably infinite families of parallel edges). A vertex
// owning a bundle is an infinite emitter. Immutable once built; all
// operations on it are pure.
class Graph {
public:
    // Declaration-order record; edges and bundles share one table and one
    // id namespace.
    struct EdgeDecl {
        std::string name;
        VertexId src;
        VertexId dst;
        bool is_bundle;
    };

    VertexId add_vertex(const std::string& name);
    EdgeId add_edge(const std::string& name, const std::string& src, const std::string& dst);
    EdgeId add_bundle(const std::string& name, const std::string& src, const std::string& dst);
    EdgeId add_edge(const std::string& name, VertexId src, VertexId dst);
    EdgeId add_bundle(const std::string& name, VertexId src, VertexId dst);

    std::size_t vertex_count() const { return vertex_names_.size(); }
    std::size_t decl_count() const { return decls_.size(); }
    const std::string& vertex_name(VertexId v) const;
    const EdgeDecl& decl(EdgeId e) const;

    std::optional<VertexId> find_vertex(const std::string& name) const;
    std::optional<EdgeId> find_decl(const std::string& name) const;
    VertexId vertex(const std::string& name) const;  // throws InputError

    // Outgoing declarations of v in declaration order.
    const std::vector<EdgeId>& out(VertexId v) const;
    const std::vector<EdgeId>& in(VertexId v) const;

    VertexId src(EdgeRef e) const { return decl(e.id).src; }
    VertexId dst(EdgeRef e) const { return decl(e.id).dst; }

    std::size_t concrete_out_degree(VertexId v) const;
    bool owns_bundle(VertexId v) const;

    VertexClass classify(VertexId v) const;
    bool is_regular(VertexId v) const { return classify(v) == VertexClass::Regular; }
    bool is_sink(VertexId v) const { return classify(v) == VertexClass::Sink; }

    // Earliest declared edge out of a regular vertex; relation (4) rewrites
    // happen only at this edge.
    EdgeId special_edge(VertexId v) const;

    std::string edge_ref_name(EdgeRef e) const;

    bool valid_path(const Path& p) const;
    VertexId range(const Path& p) const;
    Path concat(const Path& a, const Path& b) const;  // requires range(a) == b.source
    Path vertex_path(VertexId v) const { return Path{v, {}}; }

private:
    void check_vertex(VertexId v) const;
    EdgeId add_decl(const std::string& name, VertexId src, VertexId dst, bool is_bundle);

    std::vector<std::string> vertex_names_;
    std::vector<EdgeDecl> decls_;
    std::map<std::string, VertexId> vertex_index_;
    std::map<std::string, EdgeId> decl_index_;
    std::vector<std::vector<EdgeId>> out_;
    std::vector<std::vector<EdgeId>> in_;
};

// ---- graph_core operations ----

std::map<VertexId, VertexClass> classify_vertices(const Graph& g);

// T(v): all vertices reachable from v, including v.
std::vector<VertexId> tree(const Graph& g, VertexId v);

// A line point has neither bifurcations nor cycles anywhere in its tree.
// Any bundle counts as a bifurcation.
bool is_line_point(const Graph& g, VertexId v);
std::vector<VertexId> line_points(const Graph& g);

struct CycleWithoutExits {
    VertexId base;  // lexicographically smallest vertex on the cycle
    Path cycle;
};

// Cycles that admit no exit, one per rotation class, ordered by base vertex.
// A cycle without exits can only pass through vertices of out-degree exactly
// one, so these are orbits of the unique-successor map.
std::vector<CycleWithoutExits> cycles_without_exits(const Graph& g);

struct ConditionLResult {
    bool holds;
    std::optional<CycleWithoutExits> witness;  // first exitless cycle if not
};
ConditionLResult condition_L(const Graph& g);

// The path algebra KE is semiprime iff reachability is symmetric.
bool path_algebra_semiprime(const Graph& g);

// Number of paths ending at w (the length-0 path included); omega when a
// cycle or a bundle feeds into w.
ExtendedNat count_paths_into(const Graph& g, VertexId w);

struct PathFilter {
    std::optional<VertexId> from;
    std::optional<VertexId> to;
    std::size_t max_len = 0;
    std::uint32_t max_bundle_index = 1;
};

// All matching paths, ordered by (length, steps lexicographic, source).
std::vector<Path> enumerate_paths(const Graph& g, const PathFilter& filter);

}  // namespace lpa
