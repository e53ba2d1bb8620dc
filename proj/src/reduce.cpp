#include "lpa/reduce.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

#include "lpa/errors.hpp"

namespace lpa {

Element token_element(const Graph& g, const GeneratorToken& t) {
    switch (t.kind) {
        case GeneratorToken::Kind::Vertex:
            return vertex_element(g, t.vertex);
        case GeneratorToken::Kind::Edge:
            return edge_element(g, t.edge);
        case GeneratorToken::Kind::Ghost:
            return ghost_element(g, t.edge);
    }
    throw InternalError("unreachable token kind");
}

Element replay_witness(const Graph& g, const Element& x, const ReductionWitness& w) {
    Element acc = x;
    for (const auto& t : w.right) acc = multiply(g, acc, token_element(g, t));
    for (auto it = w.left.rbegin(); it != w.left.rend(); ++it)
        acc = multiply(g, token_element(g, *it), acc);
    return acc;
}

namespace {

// Stable textual key for BFS deduplication.
std::string element_key(const Element& x) {
    std::ostringstream os;
    for (const auto& [m, c] : x.terms()) {
        os << m.p.source << ':';
        for (const auto& e : m.p.steps) os << e.id << '.' << e.member << ',';
        os << '/' << m.q.source << ':';
        for (const auto& e : m.q.steps) os << e.id << '.' << e.member << ',';
        os << '=' << c.get_str() << ';';
    }
    return os.str();
}

std::optional<VertexId> goal_vertex(const Element& x) {
    if (x.term_count() != 1) return std::nullopt;
    const auto& [m, c] = *x.terms().begin();
    if (!m.is_vertex()) return std::nullopt;
    return m.p.source;
}

std::optional<VertexId> goal_cycle_corner(const Graph& g, const Element& x,
                                          const std::set<VertexId>& exitless_vertices) {
    if (x.is_zero()) return std::nullopt;
    std::optional<VertexId> base;
    for (const auto& [m, c] : x.terms()) {
        VertexId w = m.p.source;
        if (m.q.source != w || g.range(m.p) != w) return std::nullopt;
        if (base && *base != w) return std::nullopt;
        base = w;
    }
    if (base && exitless_vertices.count(*base)) return base;
    return std::nullopt;
}

std::optional<WitnessKind> goal_kind(const Graph& g, const Element& x,
                                     const std::set<VertexId>& exitless_vertices) {
    if (goal_vertex(x)) return WitnessKind::Vertex;
    if (goal_cycle_corner(g, x, exitless_vertices)) return WitnessKind::CycleCorner;
    return std::nullopt;
}

std::set<VertexId> exitless_cycle_vertices(const Graph& g) {
    std::set<VertexId> s;
    for (const auto& c : cycles_without_exits(g)) {
        VertexId at = c.base;
        for (const auto& e : c.cycle.steps) {
            s.insert(at);
            at = g.dst(e);
        }
    }
    return s;
}

// Vertices, then edges, then ghost edges, each in declaration order. Bundle
// member indices: those appearing in x plus one fresh index per bundle.
std::vector<GeneratorToken> generator_tokens(const Graph& g, const Element& x) {
    std::map<EdgeId, std::set<std::uint32_t>> bundle_indices;
    for (EdgeId e = 0; e < g.decl_count(); ++e)
        if (g.decl(e).is_bundle) bundle_indices[e] = {1};
    for (const auto& [m, c] : x.terms())
        for (const Path* side : {&m.p, &m.q})
            for (const auto& ref : side->steps)
                if (ref.member != 0) bundle_indices[ref.id].insert(ref.member);
    for (auto& [e, idx] : bundle_indices) idx.insert(*idx.rbegin() + 1);

    std::vector<GeneratorToken> tokens;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        tokens.push_back({GeneratorToken::Kind::Vertex, v, {}});
    for (auto kind : {GeneratorToken::Kind::Edge, GeneratorToken::Kind::Ghost}) {
        for (EdgeId e = 0; e < g.decl_count(); ++e) {
            if (g.decl(e).is_bundle) {
                for (std::uint32_t k : bundle_indices[e])
                    tokens.push_back({kind, 0, EdgeRef{e, k}});
            } else {
                tokens.push_back({kind, 0, EdgeRef{e, 0}});
            }
        }
    }
    return tokens;
}

struct SearchNode {
    std::string parent;
    bool left_side = false;
    GeneratorToken token;
    std::size_t depth = 0;
};

}  // namespace

ReductionWitness reduce(const Graph& g, const Element& x, std::size_t bound) {
    if (x.is_zero()) throw InputError("reduce: zero element");
    const std::set<VertexId> exitless = exitless_cycle_vertices(g);

    auto finish = [&](std::vector<GeneratorToken> left, std::vector<GeneratorToken> right,
                      const Element& result, WitnessKind kind) {
        ReductionWitness w{std::move(left), std::move(right), result, kind};
        if (replay_witness(g, x, w) != result)
            throw InternalError("reduce: witness replay does not reproduce the result");
        if (w.kind == WitnessKind::Vertex && !goal_vertex(w.result))
            throw InternalError("reduce: vertex witness is not a vertex multiple");
        return w;
    };

    if (auto kind = goal_kind(g, x, exitless)) return finish({}, {}, x, *kind);

    // Ghost-stripping: right-multiply by a maximal-length ghost side of x;
    // on cancellation retry the next candidate.
    Element start = x;
    std::vector<GeneratorToken> strip_tokens;
    {
        std::vector<Path> candidates;
        for (const auto& [m, c] : x.terms())
            if (!m.q.is_vertex()) candidates.push_back(m.q);
        std::sort(candidates.begin(), candidates.end(), [](const Path& a, const Path& b) {
            if (a.length() != b.length()) return a.length() > b.length();
            return path_less(a, b);
        });
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
        for (const Path& q : candidates) {
            if (q.length() > bound) continue;
            Element y = multiply(g, x, path_element(g, q));
            if (y.is_zero()) continue;
            start = std::move(y);
            for (const auto& e : q.steps) strip_tokens.push_back({GeneratorToken::Kind::Edge, 0, e});
            break;
        }
    }
    if (auto kind = goal_kind(g, start, exitless)) return finish({}, strip_tokens, start, *kind);

    // BFS over single-generator multiplications on either side.
    const std::vector<GeneratorToken> tokens = generator_tokens(g, x);
    std::map<std::string, SearchNode> nodes;
    std::map<std::string, Element> values;
    std::deque<std::string> queue;

    const std::string root = element_key(start);
    nodes[root] = SearchNode{"", false, {}, strip_tokens.size()};
    values[root] = start;
    queue.push_back(root);

    auto reconstruct = [&](const std::string& key, const Element& result, WitnessKind kind) {
        std::vector<GeneratorToken> left;
        std::vector<GeneratorToken> right;
        std::string at = key;
        while (at != root) {
            const SearchNode& n = nodes.at(at);
            if (n.left_side)
                left.push_back(n.token);  // outermost multiplier first
            else
                right.push_back(n.token);
            at = n.parent;
        }
        std::reverse(right.begin(), right.end());
        right.insert(right.begin(), strip_tokens.begin(), strip_tokens.end());
        return finish(std::move(left), std::move(right), result, kind);
    };

    while (!queue.empty()) {
        std::string key = queue.front();
        queue.pop_front();
        const std::size_t depth = nodes.at(key).depth;
        if (depth >= bound) continue;
        const Element current = values.at(key);
        for (bool left_side : {true, false}) {
            for (const auto& tok : tokens) {
                Element next = left_side ? multiply(g, token_element(g, tok), current)
                                         : multiply(g, current, token_element(g, tok));
                if (next.is_zero()) continue;
                std::string nkey = element_key(next);
                if (nodes.count(nkey)) continue;
                nodes[nkey] = SearchNode{key, left_side, tok, depth + 1};
                values[nkey] = next;
                if (auto kind = goal_kind(g, next, exitless)) return reconstruct(nkey, next, *kind);
                queue.push_back(nkey);
            }
        }
    }
    throw BoundExceeded("reduce: no witness within bound " + std::to_string(bound), nodes.size());
}

GradedVertexWitness graded_ideal_vertex_check(const Graph& g, const Element& x,
                                              std::size_t bound) {
    GradedVertexWitness out;
    out.base = reduce(g, x, bound);

    if (out.base.kind == WitnessKind::Vertex) {
        const auto& [m, c] = *out.base.result.terms().begin();
        out.vertex = m.p.source;
        out.scale = c;
        out.final_element = out.base.result;
        return out;
    }

    // Cycle corner: extract the top homogeneous component k c^t and multiply
    // by c^{-t} on the left.
    out.used_component = true;
    auto comps = homogeneous_components(out.base.result);
    const auto& [degree, comp] = *comps.rbegin();
    out.component_degree = degree;
    if (comp.term_count() != 1)
        throw InternalError("cycle corner component is not a single Laurent term");
    const auto& [mono, coeff] = *comp.terms().begin();

    Element final_el = comp;
    if (degree > 0) {
        // left-multiply by (c^t)*: ghost tokens in reverse edge order
        for (auto it = mono.p.steps.rbegin(); it != mono.p.steps.rend(); ++it)
            out.post_left.push_back({GeneratorToken::Kind::Ghost, 0, *it});
    } else if (degree < 0) {
        for (const auto& e : mono.q.steps)
            out.post_left.push_back({GeneratorToken::Kind::Edge, 0, e});
    }
    for (auto it = out.post_left.rbegin(); it != out.post_left.rend(); ++it)
        final_el = multiply(g, token_element(g, *it), final_el);

    auto v = goal_vertex(final_el);
    if (!v) throw InternalError("graded vertex check did not land on a vertex");
    out.vertex = *v;
    out.scale = final_el.terms().begin()->second;
    out.final_element = std::move(final_el);
    return out;
}

SpotCheck semiprime_spotcheck(const Graph& g, const Element& x, std::size_t bound) {
    if (x.is_zero()) throw InputError("semiprime_spotcheck: zero element");

    std::size_t tried = 0;
    auto attempt = [&](const Monomial& m) -> std::optional<SpotCheck> {
        ++tried;
        Element mid = multiply(g, monomial_element(g, m), x);
        if (mid.is_zero()) return std::nullopt;
        Element prod = multiply(g, x, mid);
        if (prod.is_zero()) return std::nullopt;
        return SpotCheck{m, std::move(prod)};
    };

    // The involution of a term of x is the natural candidate: for a single
    // monomial x it always works.
    for (const auto& [m, c] : x.terms()) {
        Monomial candidate{m.q, m.p};
        if (candidate.total_length() > bound) continue;
        if (auto hit = attempt(candidate)) return *hit;
    }

    // Fall back to all normal monomials by total length.
    std::uint32_t max_member = 2;
    for (const auto& [m, c] : x.terms())
        for (const Path* side : {&m.p, &m.q})
            for (const auto& ref : side->steps)
                if (ref.member != 0) max_member = std::max(max_member, ref.member + 1);

    for (std::size_t total = 0; total <= bound; ++total) {
        std::vector<Monomial> batch;
        for (std::size_t a = 0; a <= total; ++a) {
            PathFilter pf;
            pf.max_len = a;
            pf.max_bundle_index = max_member;
            for (const Path& p : enumerate_paths(g, pf)) {
                if (p.length() != a) continue;
                PathFilter qf;
                qf.max_len = total - a;
                qf.max_bundle_index = max_member;
                qf.to = g.range(p);
                for (const Path& q : enumerate_paths(g, qf)) {
                    if (q.length() != total - a) continue;
                    Monomial m{p, q};
                    if (is_normal_monomial(g, m)) batch.push_back(std::move(m));
                }
            }
        }
        std::sort(batch.begin(), batch.end(), MonomialLess{});
        for (const Monomial& m : batch)
            if (auto hit = attempt(m)) return *hit;
    }
    throw BoundExceeded("semiprime_spotcheck: no witness of length <= " + std::to_string(bound),
                        tried);
}

}  // namespace lpa
