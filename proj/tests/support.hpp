#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "lpa/algebra.hpp"
#include "lpa/closure.hpp"
#include "lpa/format.hpp"

namespace lpa::test {

// Test corpus, given as .lpg sources so building them also exercises the
// parser. Same content as the files under graphs/.
const std::string& corpus_text(const std::string& name);
Graph corpus_graph(const std::string& name);
std::vector<std::string> corpus_names();  // LINE5, LOOP1, ROSE2, TOEPLITZ, EINF, EN2M2

// Deterministic RNG. Draws use explicit modulo so results do not depend on
// the standard library's distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}
    std::uint64_t next(std::uint64_t n) { return eng_() % n; }  // [0, n)
    int range(int lo, int hi) { return lo + static_cast<int>(next(static_cast<std::uint64_t>(hi - lo + 1))); }
private:
    std::mt19937_64 eng_;
};

// Random graph within the acceptance envelope (<= 8 vertices, <= 12 edges,
// <= 2 bundles).
Graph random_graph(Rng& rng);

// Sparse variant (<= 4 vertices, <= 5 edges, <= 1 bundle) for tests whose
// oracle enumerates paths exhaustively.
Graph small_random_graph(Rng& rng);

// Random nonzero element: up to max_terms monomials of total length at most
// max_len, coefficients in {-3..3} \ {0}. Bundle members use indices 1..3.
Element random_element(const Graph& g, Rng& rng, int max_terms = 3, int max_len = 3);

// ---- independent brute-force oracles ----

// Line-point decision by path enumeration (no reuse of is_line_point).
bool line_point_oracle(const Graph& g, VertexId u);

// Definition check, not a closure computation.
bool hereditary_saturated_oracle(const Graph& g, const VertexSet& s);

// Least hereditary saturated superset by intersecting over all subsets
// (feasible for <= 12 vertices).
VertexSet closure_oracle(const Graph& g, const VertexSet& s);

// |{paths into w of length <= max_len}| with bundles truncated.
std::size_t count_paths_oracle(const Graph& g, VertexId w, std::size_t max_len,
                               std::uint32_t max_bundle_index);

}  // namespace lpa::test
