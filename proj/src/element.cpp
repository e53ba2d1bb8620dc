#include "lpa/element.hpp"

#include "lpa/errors.hpp"

namespace lpa {

namespace {

// True when e is the special edge of its (regular) source, i.e. relation (4)
// may rewrite a junction pair (e, e). Bundle members never qualify: their
// source is an infinite emitter and relation (4) does not apply there.
bool is_special(const Graph& g, const EdgeRef& e) {
    if (e.member != 0) return false;
    VertexId v = g.decl(e.id).src;
    return g.is_regular(v) && g.special_edge(v) == e.id;
}

}  // namespace

bool is_normal_monomial(const Graph& g, const Monomial& m) {
    if (!g.valid_path(m.p) || !g.valid_path(m.q)) return false;
    if (g.range(m.p) != g.range(m.q)) return false;
    if (m.p.is_vertex() || m.q.is_vertex()) return true;
    const EdgeRef& a = m.p.steps.back();
    const EdgeRef& b = m.q.steps.back();
    return !(a == b && is_special(g, a));
}

void Element::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Element& Element::operator+=(const Element& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

Element& Element::operator-=(const Element& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

Element Element::scaled(const Rational& c) const {
    Element r;
    if (c == 0) return r;
    for (const auto& [m, k] : terms_) r.add_term(m, k * c);
    return r;
}

void add_monomial_normalized(const Graph& g, const Path& p, const Path& q, const Rational& c,
                             Element& acc) {
    if (c == 0) return;
    if (!p.steps.empty() && !q.steps.empty() && p.steps.back() == q.steps.back() &&
        is_special(g, p.steps.back())) {
        VertexId v = g.decl(p.steps.back().id).src;
        Path ps = p;
        Path qs = q;
        ps.steps.pop_back();
        qs.steps.pop_back();
        add_monomial_normalized(g, ps, qs, c, acc);
        for (EdgeId e : g.out(v)) {
            if (e == p.steps.back().id) continue;
            Path pe = ps;
            Path qe = qs;
            pe.steps.push_back(EdgeRef{e, 0});
            qe.steps.push_back(EdgeRef{e, 0});
            acc.add_term(Monomial{std::move(pe), std::move(qe)}, -c);
        }
        return;
    }
    acc.add_term(Monomial{p, q}, c);
}

Element vertex_element(const Graph& g, VertexId v) {
    Element r;
    r.add_term(Monomial{g.vertex_path(v), g.vertex_path(v)}, 1);
    return r;
}

Element edge_element(const Graph& g, EdgeRef e) {
    Path p{g.src(e), {e}};
    Path q = g.vertex_path(g.dst(e));
    Element r;
    r.add_term(Monomial{std::move(p), std::move(q)}, 1);
    return r;
}

Element ghost_element(const Graph& g, EdgeRef e) { return involution(edge_element(g, e)); }

Element path_element(const Graph& g, const Path& p) {
    if (!g.valid_path(p)) throw InputError("invalid path");
    Element r;
    r.add_term(Monomial{p, g.vertex_path(g.range(p))}, 1);
    return r;
}

Element monomial_element(const Graph& g, const Monomial& m) {
    if (!g.valid_path(m.p) || !g.valid_path(m.q) || g.range(m.p) != g.range(m.q))
        throw InputError("invalid monomial");
    Element r;
    add_monomial_normalized(g, m.p, m.q, 1, r);
    return r;
}

namespace {

// True when `prefix` is an initial segment of `full` (sources included);
// fills `rest` with the remaining steps.
bool initial_segment(const Path& prefix, const Path& full, std::vector<EdgeRef>& rest) {
    if (prefix.source != full.source) return false;
    if (prefix.steps.size() > full.steps.size()) return false;
    if (!std::equal(prefix.steps.begin(), prefix.steps.end(), full.steps.begin())) return false;
    rest.assign(full.steps.begin() + static_cast<std::ptrdiff_t>(prefix.steps.size()),
                full.steps.end());
    return true;
}

}  // namespace

Element multiply(const Graph& g, const Element& x, const Element& y) {
    for (const Element* side : {&x, &y})
        for (const auto& [m, c] : side->terms())
            if (!g.valid_path(m.p) || !g.valid_path(m.q))
                throw InputError("multiply: element does not belong to this graph");
    Element acc;
    std::vector<EdgeRef> rest;
    for (const auto& [m1, c1] : x.terms()) {
        for (const auto& [m2, c2] : y.terms()) {
            // (p1 q1*)(p2 q2*): q1* meets p2.
            if (initial_segment(m1.q, m2.p, rest)) {
                // p2 = q1 . u  =>  (p1.u) q2*
                Path p = m1.p;
                p.steps.insert(p.steps.end(), rest.begin(), rest.end());
                add_monomial_normalized(g, p, m2.q, c1 * c2, acc);
            } else if (initial_segment(m2.p, m1.q, rest)) {
                // q1 = p2 . u  =>  p1 (q2.u)*
                Path q = m2.q;
                q.steps.insert(q.steps.end(), rest.begin(), rest.end());
                add_monomial_normalized(g, m1.p, q, c1 * c2, acc);
            }
            // otherwise the product of these monomials is zero
        }
    }
    return acc;
}

Element involution(const Element& x) {
    Element r;
    for (const auto& [m, c] : x.terms()) r.add_term(Monomial{m.q, m.p}, c);
    return r;
}

std::map<int, Element> homogeneous_components(const Element& x) {
    std::map<int, Element> parts;
    for (const auto& [m, c] : x.terms()) parts[m.degree()].add_term(m, c);
    return parts;
}

}  // namespace lpa
