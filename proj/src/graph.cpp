#include "lpa/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "lpa/errors.hpp"

namespace lpa {

bool path_less(const Path& a, const Path& b) {
    if (a.steps != b.steps) {
        return std::lexicographical_compare(a.steps.begin(), a.steps.end(), b.steps.begin(),
                                            b.steps.end());
    }
    return a.source < b.source;
}

VertexId Graph::add_vertex(const std::string& name) {
    if (vertex_index_.count(name) || decl_index_.count(name))
        throw InputError("duplicate identifier: " + name);
    VertexId v = static_cast<VertexId>(vertex_names_.size());
    vertex_names_.push_back(name);
    vertex_index_.emplace(name, v);
    out_.emplace_back();
    in_.emplace_back();
    return v;
}

EdgeId Graph::add_decl(const std::string& name, VertexId src, VertexId dst, bool is_bundle) {
    check_vertex(src);
    check_vertex(dst);
    if (vertex_index_.count(name) || decl_index_.count(name))
        throw InputError("duplicate identifier: " + name);
    EdgeId e = static_cast<EdgeId>(decls_.size());
    decls_.push_back(EdgeDecl{name, src, dst, is_bundle});
    decl_index_.emplace(name, e);
    out_[src].push_back(e);
    in_[dst].push_back(e);
    return e;
}

EdgeId Graph::add_edge(const std::string& name, VertexId src, VertexId dst) {
    return add_decl(name, src, dst, false);
}

EdgeId Graph::add_bundle(const std::string& name, VertexId src, VertexId dst) {
    return add_decl(name, src, dst, true);
}

EdgeId Graph::add_edge(const std::string& name, const std::string& src, const std::string& dst) {
    return add_edge(name, vertex(src), vertex(dst));
}

EdgeId Graph::add_bundle(const std::string& name, const std::string& src, const std::string& dst) {
    return add_bundle(name, vertex(src), vertex(dst));
}

void Graph::check_vertex(VertexId v) const {
    if (v >= vertex_names_.size()) throw InputError("unknown vertex index");
}

const std::string& Graph::vertex_name(VertexId v) const {
    check_vertex(v);
    return vertex_names_[v];
}

const Graph::EdgeDecl& Graph::decl(EdgeId e) const {
    if (e >= decls_.size()) throw InputError("unknown edge index");
    return decls_[e];
}

std::optional<VertexId> Graph::find_vertex(const std::string& name) const {
    auto it = vertex_index_.find(name);
    if (it == vertex_index_.end()) return std::nullopt;
    return it->second;
}

std::optional<EdgeId> Graph::find_decl(const std::string& name) const {
    auto it = decl_index_.find(name);
    if (it == decl_index_.end()) return std::nullopt;
    return it->second;
}

VertexId Graph::vertex(const std::string& name) const {
    auto v = find_vertex(name);
    if (!v) throw InputError("unknown vertex: " + name);
    return *v;
}

const std::vector<EdgeId>& Graph::out(VertexId v) const {
    check_vertex(v);
    return out_[v];
}

const std::vector<EdgeId>& Graph::in(VertexId v) const {
    check_vertex(v);
    return in_[v];
}

std::size_t Graph::concrete_out_degree(VertexId v) const {
    std::size_t n = 0;
    for (EdgeId e : out(v))
        if (!decls_[e].is_bundle) ++n;
    return n;
}

bool Graph::owns_bundle(VertexId v) const {
    for (EdgeId e : out(v))
        if (decls_[e].is_bundle) return true;
    return false;
}

VertexClass Graph::classify(VertexId v) const {
    if (owns_bundle(v)) return VertexClass::InfiniteEmitter;
    return out(v).empty() ? VertexClass::Sink : VertexClass::Regular;
}

EdgeId Graph::special_edge(VertexId v) const {
    if (!is_regular(v)) throw InputError("special edge requested at non-regular vertex");
    return out(v).front();
}

std::string Graph::edge_ref_name(EdgeRef e) const {
    const EdgeDecl& d = decl(e.id);
    if (!d.is_bundle) return d.name;
    return d.name + "[" + std::to_string(e.member) + "]";
}

bool Graph::valid_path(const Path& p) const {
    if (p.source >= vertex_names_.size()) return false;
    VertexId at = p.source;
    for (const EdgeRef& e : p.steps) {
        if (e.id >= decls_.size()) return false;
        const EdgeDecl& d = decls_[e.id];
        if (d.is_bundle ? e.member == 0 : e.member != 0) return false;
        if (d.src != at) return false;
        at = d.dst;
    }
    return true;
}

VertexId Graph::range(const Path& p) const {
    return p.steps.empty() ? p.source : decl(p.steps.back().id).dst;
}

Path Graph::concat(const Path& a, const Path& b) const {
    if (range(a) != b.source) throw InputError("non-composable path concatenation");
    Path r = a;
    r.steps.insert(r.steps.end(), b.steps.begin(), b.steps.end());
    return r;
}

// ---- operations ----

std::map<VertexId, VertexClass> classify_vertices(const Graph& g) {
    std::map<VertexId, VertexClass> m;
    for (VertexId v = 0; v < g.vertex_count(); ++v) m.emplace(v, g.classify(v));
    return m;
}

std::vector<VertexId> tree(const Graph& g, VertexId v) {
    g.vertex_name(v);  // validates
    std::vector<bool> seen(g.vertex_count(), false);
    std::deque<VertexId> work{v};
    seen[v] = true;
    while (!work.empty()) {
        VertexId u = work.front();
        work.pop_front();
        for (EdgeId e : g.out(u)) {
            VertexId w = g.decl(e).dst;
            if (!seen[w]) {
                seen[w] = true;
                work.push_back(w);
            }
        }
    }
    std::vector<VertexId> result;
    for (VertexId u = 0; u < g.vertex_count(); ++u)
        if (seen[u]) result.push_back(u);
    return result;
}

bool is_line_point(const Graph& g, VertexId v) {
    g.vertex_name(v);
    // Walk the unique forward chain; any bundle or out-degree >= 2 is a
    // bifurcation, any revisit is a cycle.
    std::set<VertexId> visited;
    VertexId at = v;
    while (true) {
        if (!visited.insert(at).second) return false;  // cycle
        if (g.owns_bundle(at)) return false;
        const auto& outs = g.out(at);
        if (outs.size() >= 2) return false;
        if (outs.empty()) return true;  // reached a sink
        at = g.decl(outs.front()).dst;
    }
}

std::vector<VertexId> line_points(const Graph& g) {
    std::vector<VertexId> r;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (is_line_point(g, v)) r.push_back(v);
    return r;
}

std::vector<CycleWithoutExits> cycles_without_exits(const Graph& g) {
    // A cycle with no exit passes only through vertices of out-degree
    // exactly one (and no bundles); such cycles are the periodic orbits of
    // the unique-successor map restricted to those vertices.
    const std::size_t n = g.vertex_count();
    auto eligible = [&](VertexId v) {
        return !g.owns_bundle(v) && g.out(v).size() == 1;
    };

    std::vector<int> state(n, 0);  // 0 unvisited, 1 on stack, 2 done
    std::vector<CycleWithoutExits> found;
    for (VertexId start = 0; start < n; ++start) {
        if (state[start] != 0 || !eligible(start)) continue;
        std::vector<VertexId> chain;
        VertexId at = start;
        while (eligible(at) && state[at] == 0) {
            state[at] = 1;
            chain.push_back(at);
            at = g.decl(g.out(at).front()).dst;
        }
        if (state[at] == 1) {
            // Found the entry point of a new cycle.
            auto it = std::find(chain.begin(), chain.end(), at);
            std::vector<VertexId> cycle(it, chain.end());
            VertexId base = *std::min_element(cycle.begin(), cycle.end());
            Path p{base, {}};
            VertexId u = base;
            do {
                EdgeId e = g.out(u).front();
                p.steps.push_back(EdgeRef{e, 0});
                u = g.decl(e).dst;
            } while (u != base);
            found.push_back(CycleWithoutExits{base, std::move(p)});
        }
        for (VertexId u : chain) state[u] = 2;
    }
    std::sort(found.begin(), found.end(),
              [](const CycleWithoutExits& a, const CycleWithoutExits& b) { return a.base < b.base; });
    return found;
}

ConditionLResult condition_L(const Graph& g) {
    auto cycles = cycles_without_exits(g);
    if (cycles.empty()) return {true, std::nullopt};
    return {false, cycles.front()};
}

bool path_algebra_semiprime(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (VertexId v = 0; v < n; ++v)
        for (VertexId w : tree(g, v)) reach[v][w] = true;
    for (VertexId v = 0; v < n; ++v)
        for (VertexId w = 0; w < n; ++w)
            if (reach[v][w] && !reach[w][v]) return false;
    return true;
}

ExtendedNat count_paths_into(const Graph& g, VertexId w) {
    g.vertex_name(w);
    const std::size_t n = g.vertex_count();

    // Ancestors of w (w itself included).
    std::vector<bool> anc(n, false);
    std::deque<VertexId> work{w};
    anc[w] = true;
    while (!work.empty()) {
        VertexId u = work.front();
        work.pop_front();
        for (EdgeId e : g.in(u)) {
            VertexId s = g.decl(e).src;
            if (!anc[s]) {
                anc[s] = true;
                work.push_back(s);
            }
        }
    }

    // A bundle whose range can reach w contributes infinitely many paths.
    for (EdgeId e = 0; e < g.decl_count(); ++e)
        if (g.decl(e).is_bundle && anc[g.decl(e).dst]) return ExtendedNat::omega();

    // A cycle touching an ancestor pumps arbitrarily long paths into w.
    // Within the ancestor set, detect any directed cycle by DFS colors.
    std::vector<int> color(n, 0);
    for (VertexId s = 0; s < n; ++s) {
        if (!anc[s] || color[s] != 0) continue;
        std::vector<std::pair<VertexId, std::size_t>> frames;
        frames.emplace_back(s, 0);
        color[s] = 1;
        while (!frames.empty()) {
            VertexId u = frames.back().first;
            std::size_t i = frames.back().second;
            const auto& outs = g.out(u);
            bool advanced = false;
            while (i < outs.size()) {
                VertexId t = g.decl(outs[i]).dst;
                ++i;
                if (!anc[t]) continue;
                if (color[t] == 1) return ExtendedNat::omega();
                if (color[t] == 0) {
                    frames.back().second = i;
                    color[t] = 1;
                    frames.emplace_back(t, 0);
                    advanced = true;
                    break;
                }
            }
            if (!advanced) {
                color[u] = 2;
                frames.pop_back();
            }
        }
    }

    // Acyclic now: f(u) = number of paths u -> w; memo in reverse topological
    // order via simple recursion (depth bounded by |ancestors|).
    std::vector<Integer> memo(n);
    std::vector<bool> have(n, false);
    auto count = [&](auto&& self, VertexId u) -> const Integer& {
        if (have[u]) return memo[u];
        Integer total = (u == w) ? 1 : 0;
        for (EdgeId e : g.out(u)) {
            VertexId t = g.decl(e).dst;
            if (anc[t]) total += self(self, t);
        }
        memo[u] = total;
        have[u] = true;
        return memo[u];
    };
    Integer sum = 0;
    for (VertexId u = 0; u < n; ++u)
        if (anc[u]) sum += count(count, u);
    return ExtendedNat(sum);
}

std::vector<Path> enumerate_paths(const Graph& g, const PathFilter& filter) {
    std::vector<Path> result;
    std::vector<Path> level;
    if (filter.from) {
        g.vertex_name(*filter.from);
        level.push_back(g.vertex_path(*filter.from));
    } else {
        for (VertexId v = 0; v < g.vertex_count(); ++v) level.push_back(g.vertex_path(v));
    }
    if (filter.to) g.vertex_name(*filter.to);

    auto emit = [&](const std::vector<Path>& paths) {
        for (const Path& p : paths)
            if (!filter.to || g.range(p) == *filter.to) result.push_back(p);
    };
    emit(level);
    for (std::size_t len = 1; len <= filter.max_len; ++len) {
        std::vector<Path> next;
        for (const Path& p : level) {
            VertexId at = g.range(p);
            for (EdgeId e : g.out(at)) {
                if (g.decl(e).is_bundle) {
                    for (std::uint32_t k = 1; k <= filter.max_bundle_index; ++k) {
                        Path q = p;
                        q.steps.push_back(EdgeRef{e, k});
                        next.push_back(std::move(q));
                    }
                } else {
                    Path q = p;
                    q.steps.push_back(EdgeRef{e, 0});
                    next.push_back(std::move(q));
                }
            }
        }
        std::sort(next.begin(), next.end(), path_less);
        emit(next);
        level = std::move(next);
        if (level.empty()) break;
    }
    return result;
}

}  // namespace lpa
