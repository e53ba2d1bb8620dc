#pragma once

#include <optional>
#include <vector>

#include "lpa/element.hpp"

namespace lpa {

// One generator of L_K(E), used as a left or right multiplier.
struct GeneratorToken {
    enum class Kind { Vertex, Edge, Ghost };
    Kind kind;
    VertexId vertex = 0;  // Kind::Vertex
    EdgeRef edge;         // Kind::Edge / Kind::Ghost

    friend bool operator==(const GeneratorToken&, const GeneratorToken&) = default;
};

Element token_element(const Graph& g, const GeneratorToken& t);

enum class WitnessKind { Vertex, CycleCorner };

// left = (mu_1, ..., mu_r), right = (nu_1, ..., nu_s):
//   result = mu_1 ... mu_r . x . nu_1 ... nu_s
// kind Vertex: result is a nonzero rational multiple of one vertex.
// kind CycleCorner: result is nonzero and lives in w L_K(E) w for a vertex w
// based on a cycle without exits (so it is a Laurent polynomial in the cycle).
struct ReductionWitness {
    std::vector<GeneratorToken> left;
    std::vector<GeneratorToken> right;
    Element result;
    WitnessKind kind = WitnessKind::Vertex;
};

Element replay_witness(const Graph& g, const Element& x, const ReductionWitness& w);

// Finds multipliers linking x to a vertex or to an exitless-cycle corner:
// first the deterministic ghost-stripping move (right-multiply by a
// maximal-length ghost side of x, retrying shorter candidates on
// cancellation), then breadth-first search over single-generator left/right
// multiplications, at most `bound` tokens in total. The returned witness is
// replay-verified before being handed out. Throws BoundExceeded when the
// search space within the bound is exhausted.
ReductionWitness reduce(const Graph& g, const Element& x, std::size_t bound);

// Constructive form of "every graded nonzero ideal contains a vertex": from
// a cycle-corner witness, take the top homogeneous component k c^t and
// left-multiply by c^{-t}, which lands on the base vertex.
struct GradedVertexWitness {
    VertexId vertex;
    ReductionWitness base;
    bool used_component = false;      // cycle-corner branch taken
    int component_degree = 0;         // degree of the extracted component
    std::vector<GeneratorToken> post_left;  // extra left multipliers after extraction
    Rational scale;                   // final_element = scale * vertex idempotent
    Element final_element;
};

GradedVertexWitness graded_ideal_vertex_check(const Graph& g, const Element& x,
                                              std::size_t bound);

// Semiprimeness spot check: a normal monomial m with x m x != 0. Searches the
// involutions of x's own terms first, then all normal monomials of total
// length at most `bound`.
struct SpotCheck {
    Monomial witness;
    Element product;  // x m x
};

SpotCheck semiprime_spotcheck(const Graph& g, const Element& x, std::size_t bound);

}  // namespace lpa
