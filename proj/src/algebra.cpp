#include "lpa/algebra.hpp"

#include <algorithm>
#include <set>

#include "lpa/errors.hpp"

namespace lpa {

std::vector<Monomial> corner_basis(const Graph& g, VertexId v, std::size_t max_degree,
                                   std::uint32_t max_bundle_index) {
    g.vertex_name(v);
    if (max_degree == 0) throw InputError("max_degree must be positive");
    PathFilter f;
    f.from = v;
    f.max_len = max_degree / 2;
    f.max_bundle_index = max_bundle_index;
    std::vector<Path> paths = enumerate_paths(g, f);

    std::vector<Monomial> basis;
    for (const Path& p : paths) {
        for (const Path& q : paths) {
            if (g.range(p) != g.range(q)) continue;
            Monomial m{p, q};
            if (is_normal_monomial(g, m)) basis.push_back(std::move(m));
        }
    }
    std::sort(basis.begin(), basis.end(), MonomialLess{});
    return basis;
}

namespace {

// The cycle without exits based at v, when there is one.
std::optional<Path> exitless_cycle_at(const Graph& g, VertexId v) {
    for (const auto& c : cycles_without_exits(g)) {
        bool on_cycle = false;
        VertexId at = c.base;
        for (const EdgeRef& e : c.cycle.steps) {
            if (at == v) on_cycle = true;
            at = g.dst(e);
        }
        if (!on_cycle) continue;
        // rotate so the cycle is based at v
        Path rot{v, {}};
        at = c.base;
        std::vector<std::pair<VertexId, EdgeRef>> order;
        for (const EdgeRef& e : c.cycle.steps) {
            order.emplace_back(at, e);
            at = g.dst(e);
        }
        std::size_t start = 0;
        while (order[start].first != v) ++start;
        for (std::size_t i = 0; i < order.size(); ++i)
            rot.steps.push_back(order[(start + i) % order.size()].second);
        return rot;
    }
    return std::nullopt;
}

}  // namespace

CornerClass classify_corner(const Graph& g, VertexId v, std::size_t max_degree,
                            std::uint32_t max_bundle_index) {
    std::vector<Monomial> basis = corner_basis(g, v, max_degree, max_bundle_index);

    if (auto cycle = exitless_cycle_at(g, v)) {
        // Expected basis: powers c^i with |i| * l(c) within the bound.
        std::vector<Monomial> expected;
        Path acc{v, {}};
        expected.push_back(Monomial{acc, acc});
        while (acc.steps.size() + cycle->steps.size() <= max_degree / 2) {
            acc.steps.insert(acc.steps.end(), cycle->steps.begin(), cycle->steps.end());
            expected.push_back(Monomial{acc, g.vertex_path(v)});
            expected.push_back(Monomial{g.vertex_path(v), acc});
        }
        std::sort(expected.begin(), expected.end(), MonomialLess{});
        if (basis == expected) return CornerClass::Laurent;
        return CornerClass::Other;
    }
    if (basis.size() == 1 && basis.front().is_vertex()) return CornerClass::Field;
    return CornerClass::Other;
}

int monomial_type(const Graph& g, VertexId u, const Monomial& m) {
    if (!is_line_point(g, u)) throw InputError("monomial_type: vertex is not a line point");
    if (!is_normal_monomial(g, m)) throw InputError("monomial_type: monomial is not normal");
    if (m.q.source != u) throw InputError("monomial_type: ghost side does not end at the vertex");

    if (m.p.is_vertex() && m.q.is_vertex()) return 1;
    if (m.q.is_vertex()) return 2;  // real path into u (source != u: no closed paths at u)

    // L = edges with both endpoints in T(u); the ghost side always runs
    // along L, and in a normal monomial the real side stays outside L.
    std::set<VertexId> t;
    for (VertexId w : tree(g, u)) t.insert(w);
    auto in_line = [&](const EdgeRef& e) { return t.count(g.src(e)) && t.count(g.dst(e)); };
    for (const EdgeRef& e : m.q.steps)
        if (!in_line(e))
            throw InternalError("monomial_type: ghost edge outside the line of a line point");
    if (m.p.is_vertex()) return 4;
    for (const EdgeRef& e : m.p.steps)
        if (in_line(e))
            throw InternalError("monomial_type: normal mixed monomial with real edge on the line");
    return 3;
}

Ck2Report ck2_decomposition(const Graph& g, VertexId u) {
    VertexClass cls = g.classify(u);
    if (cls == VertexClass::InfiniteEmitter)
        throw InputError("ck2_decomposition: " + g.vertex_name(u) +
                         " is an infinite emitter; relation (4) does not apply");
    if (cls == VertexClass::Sink)
        throw InputError("ck2_decomposition: " + g.vertex_name(u) + " is a sink");

    Ck2Report report;
    report.vertex = u;
    Element sum;
    for (EdgeId e : g.out(u)) {
        Path p{u, {EdgeRef{e, 0}}};
        Element ee = monomial_element(g, Monomial{p, p});
        sum += ee;
        report.idempotents.push_back(std::move(ee));
    }
    report.sum_is_vertex = (sum == vertex_element(g, u));
    report.pairwise_orthogonal = true;
    for (std::size_t i = 0; i < report.idempotents.size(); ++i)
        for (std::size_t j = i + 1; j < report.idempotents.size(); ++j) {
            if (!multiply(g, report.idempotents[i], report.idempotents[j]).is_zero() ||
                !multiply(g, report.idempotents[j], report.idempotents[i]).is_zero())
                report.pairwise_orthogonal = false;
        }
    return report;
}

}  // namespace lpa
