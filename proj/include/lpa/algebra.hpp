#pragma once

#include <vector>

#include "lpa/element.hpp"

namespace lpa {

// All normal monomials p q* with s(p) = s(q) = v and both side lengths at
// most floor(max_degree / 2); these are linearly independent, so they form a
// basis of the degree-bounded slice of v L_K(E) v. Bundle members are
// truncated at max_bundle_index.
std::vector<Monomial> corner_basis(const Graph& g, VertexId v, std::size_t max_degree,
                                   std::uint32_t max_bundle_index = 3);

enum class CornerClass { Field, Laurent, Other };

// Field when the bounded corner basis is {v} and v does not sit on a cycle
// without exits; Laurent when v is based on a cycle without exits and the
// basis consists exactly of the bounded powers of that cycle.
CornerClass classify_corner(const Graph& g, VertexId v, std::size_t max_degree,
                            std::uint32_t max_bundle_index = 3);

// Classification of normal monomials generating L_K(E)u for a line point u:
//   1 = the vertex u itself
//   2 = a real path into u
//   3 = mixed, real part outside the line L of T(u), ghost part along it
//   4 = a pure ghost path along L
int monomial_type(const Graph& g, VertexId u, const Monomial& m);

struct Ck2Report {
    VertexId vertex;
    std::vector<Element> idempotents;  // e e* for e in s^-1(vertex)
    bool sum_is_vertex;
    bool pairwise_orthogonal;
};

// Relation (4) at a regular vertex: the e e* are pairwise orthogonal
// idempotents summing to the vertex. Errors out at sinks and infinite
// emitters (no CK2 relation there).
Ck2Report ck2_decomposition(const Graph& g, VertexId u);

}  // namespace lpa
