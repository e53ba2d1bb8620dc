#include "support.hpp"

#include <map>
#include <stdexcept>

#include "lpa/errors.hpp"

namespace lpa::test {

namespace {

const std::map<std::string, std::string>& corpus_sources() {
    static const std::map<std::string, std::string> sources = {
        {"LINE5",
         "vertex v1 v2 v3 v4 v5\n"
         "edge e1 : v1 -> v2\n"
         "edge e2 : v2 -> v3\n"
         "edge e3 : v3 -> v4\n"
         "edge e4 : v4 -> v5\n"},
        {"LOOP1",
         "vertex v\n"
         "edge c : v -> v\n"},
        {"ROSE2",
         "vertex v\n"
         "edge f1 : v -> v\n"
         "edge f2 : v -> v\n"},
        {"TOEPLITZ",
         "vertex v w\n"
         "edge c : v -> v\n"
         "edge e : v -> w\n"},
        {"EINF",
         "vertex v w\n"
         "bundle b : v -> w\n"},
        {"EN2M2",
         "vertex v2 v1\n"
         "edge e1 : v2 -> v1\n"
         "edge f1 : v1 -> v1\n"
         "edge f2 : v1 -> v1\n"},
    };
    return sources;
}

}  // namespace

const std::string& corpus_text(const std::string& name) {
    auto it = corpus_sources().find(name);
    if (it == corpus_sources().end()) throw std::runtime_error("no corpus graph " + name);
    return it->second;
}

Graph corpus_graph(const std::string& name) { return parse_graph(corpus_text(name)); }

std::vector<std::string> corpus_names() {
    return {"LINE5", "LOOP1", "ROSE2", "TOEPLITZ", "EINF", "EN2M2"};
}

namespace {

Graph random_graph_sized(Rng& rng, int max_v, int max_e, int max_b) {
    Graph g;
    int nv = rng.range(1, max_v);
    for (int i = 0; i < nv; ++i) g.add_vertex("v" + std::to_string(i));
    int ne = rng.range(0, max_e);
    for (int i = 0; i < ne; ++i) {
        VertexId a = static_cast<VertexId>(rng.next(nv));
        VertexId b = static_cast<VertexId>(rng.next(nv));
        g.add_edge("e" + std::to_string(i), a, b);
    }
    int nb = rng.range(0, max_b);
    for (int i = 0; i < nb; ++i) {
        VertexId a = static_cast<VertexId>(rng.next(nv));
        VertexId b = static_cast<VertexId>(rng.next(nv));
        g.add_bundle("b" + std::to_string(i), a, b);
    }
    return g;
}

}  // namespace

Graph random_graph(Rng& rng) { return random_graph_sized(rng, 8, 12, 2); }

Graph small_random_graph(Rng& rng) { return random_graph_sized(rng, 4, 5, 1); }

namespace {

// Random composable path of length <= want starting anywhere; shortens when
// it hits a sink.
Path random_forward_path(const Graph& g, Rng& rng, int want) {
    Path p{static_cast<VertexId>(rng.next(g.vertex_count())), {}};
    for (int i = 0; i < want; ++i) {
        const auto& outs = g.out(g.range(p));
        if (outs.empty()) break;
        EdgeId e = outs[rng.next(outs.size())];
        std::uint32_t member = g.decl(e).is_bundle ? static_cast<std::uint32_t>(rng.range(1, 3)) : 0;
        p.steps.push_back(EdgeRef{e, member});
    }
    return p;
}

// Random path of length <= want ending at `end` (built backwards).
Path random_backward_path(const Graph& g, Rng& rng, VertexId end, int want) {
    std::vector<EdgeRef> rev;
    VertexId at = end;
    for (int i = 0; i < want; ++i) {
        const auto& ins = g.in(at);
        if (ins.empty()) break;
        EdgeId e = ins[rng.next(ins.size())];
        std::uint32_t member = g.decl(e).is_bundle ? static_cast<std::uint32_t>(rng.range(1, 3)) : 0;
        rev.push_back(EdgeRef{e, member});
        at = g.decl(e).src;
    }
    Path p{at, {}};
    for (auto it = rev.rbegin(); it != rev.rend(); ++it) p.steps.push_back(*it);
    return p;
}

}  // namespace

Element random_element(const Graph& g, Rng& rng, int max_terms, int max_len) {
    for (int attempt = 0; attempt < 200; ++attempt) {
        Element x;
        int terms = rng.range(1, max_terms);
        for (int t = 0; t < terms; ++t) {
            int total = rng.range(0, max_len);
            int a = rng.range(0, total);
            Path p = random_forward_path(g, rng, a);
            Path q = random_backward_path(g, rng, g.range(p), total - a);
            int coeff = 0;
            while (coeff == 0) coeff = rng.range(-3, 3);
            add_monomial_normalized(g, p, q, Rational(coeff), x);
        }
        if (!x.is_zero()) return x;
    }
    throw std::runtime_error("random_element: could not build a nonzero element");
}

bool line_point_oracle(const Graph& g, VertexId u) {
    PathFilter f;
    f.from = u;
    f.max_len = g.vertex_count();
    f.max_bundle_index = 2;
    std::vector<VertexId> t;
    for (const Path& p : enumerate_paths(g, f)) {
        VertexId w = g.range(p);
        if (std::find(t.begin(), t.end(), w) == t.end()) t.push_back(w);
    }
    for (VertexId w : t) {
        if (g.owns_bundle(w) || g.out(w).size() >= 2) return false;
        // any closed path through w means a cycle at some vertex of T(u)
        PathFilter back;
        back.from = w;
        back.to = w;
        back.max_len = g.vertex_count();
        back.max_bundle_index = 1;
        for (const Path& p : enumerate_paths(g, back))
            if (p.length() >= 1) return false;
    }
    return true;
}

bool hereditary_saturated_oracle(const Graph& g, const VertexSet& s) {
    for (VertexId v : s)
        for (EdgeId e : g.out(v))
            if (!s.count(g.decl(e).dst)) return false;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (s.count(v) || !g.is_regular(v)) continue;
        bool all_in = true;
        for (EdgeId e : g.out(v))
            if (!s.count(g.decl(e).dst)) all_in = false;
        if (all_in) return false;
    }
    return true;
}

VertexSet closure_oracle(const Graph& g, const VertexSet& s) {
    const std::size_t n = g.vertex_count();
    if (n > 20) throw std::runtime_error("closure_oracle: too many vertices");
    VertexSet best;
    bool have = false;
    for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
        VertexSet t;
        for (std::size_t v = 0; v < n; ++v)
            if (mask & (1ull << v)) t.insert(static_cast<VertexId>(v));
        bool contains = true;
        for (VertexId v : s)
            if (!t.count(v)) contains = false;
        if (!contains || !hereditary_saturated_oracle(g, t)) continue;
        if (!have) {
            best = t;
            have = true;
        } else {
            VertexSet inter;
            for (VertexId v : best)
                if (t.count(v)) inter.insert(v);
            best = inter;
        }
    }
    if (!have) throw std::runtime_error("closure_oracle: no hereditary saturated superset");
    return best;
}

std::size_t count_paths_oracle(const Graph& g, VertexId w, std::size_t max_len,
                               std::uint32_t max_bundle_index) {
    PathFilter f;
    f.to = w;
    f.max_len = max_len;
    f.max_bundle_index = max_bundle_index;
    return enumerate_paths(g, f).size();
}

}  // namespace lpa::test
