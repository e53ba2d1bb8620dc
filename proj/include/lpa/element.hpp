#pragma once

#include <map>
#include <vector>

#include "lpa/graph.hpp"
#include "lpa/numbers.hpp"

namespace lpa {

// Monomial p q* with r(p) = r(q). The algebra stores only NORMAL monomials:
// p and q never both end in the special edge of that edge's source. Relation
// (4) at a regular vertex v rewrites
//   p'g g* q'*  ->  p'q'* - sum over e in s^-1(v), e != g, of (p'e)(q'e)*
// where g is the special edge of v; the replacement terms are normal at the
// junction and the first term is strictly shorter, so rewriting terminates.
struct Monomial {
    Path p;
    Path q;

    int degree() const { return static_cast<int>(p.length()) - static_cast<int>(q.length()); }
    std::size_t total_length() const { return p.length() + q.length(); }
    bool is_vertex() const { return p.is_vertex() && q.is_vertex(); }

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

// Canonical term order: (degree, total length, p, q). Within one
// (degree, total length) class both side lengths are fixed, so the path
// comparison is positionwise.
struct MonomialLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        if (a.total_length() != b.total_length()) return a.total_length() < b.total_length();
        if (a.p != b.p) return path_less(a.p, b.p);
        return path_less(a.q, b.q);
    }
};

bool is_normal_monomial(const Graph& g, const Monomial& m);

// Finite formal sum of normal monomials with nonzero rational coefficients.
// The zero element is the empty sum. Values are immutable in spirit: all
// arithmetic returns fresh elements.
class Element {
public:
    using Terms = std::map<Monomial, Rational, MonomialLess>;

    Element() = default;

    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    // Combines coefficients; drops the term when it cancels. The monomial
    // must already be normal.
    void add_term(const Monomial& m, const Rational& c);

    Element& operator+=(const Element& other);
    Element& operator-=(const Element& other);
    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    Element scaled(const Rational& c) const;

    friend bool operator==(const Element&, const Element&) = default;

private:
    Terms terms_;
};

// Adds c * (p q*) to acc, rewriting special-edge junctions to normal form.
void add_monomial_normalized(const Graph& g, const Path& p, const Path& q, const Rational& c,
                             Element& acc);

Element vertex_element(const Graph& g, VertexId v);
Element edge_element(const Graph& g, EdgeRef e);        // the real edge
Element ghost_element(const Graph& g, EdgeRef e);       // e*
Element path_element(const Graph& g, const Path& p);    // p as a product of edges
Element monomial_element(const Graph& g, const Monomial& m);  // normalized p q*

// The product in L_K(E). Monomials combine when one ghost side is a prefix
// of the facing real side; the junction is then renormalized (relation (4)).
Element multiply(const Graph& g, const Element& x, const Element& y);

// pq* -> qp*, extended linearly. Normality is symmetric in p and q, so no
// renormalization happens.
Element involution(const Element& x);

// Partition of terms by degree l(p) - l(q); the components sum back to x.
std::map<int, Element> homogeneous_components(const Element& x);

}  // namespace lpa
