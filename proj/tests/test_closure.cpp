#include <algorithm>

#include "doctest.h"
#include "lpa/errors.hpp"
#include "support.hpp"

using namespace lpa;
using namespace lpa::test;

namespace {

VertexSet set_of(const Graph& g, std::initializer_list<const char*> names) {
    VertexSet s;
    for (const char* n : names) s.insert(g.vertex(n));
    return s;
}

}  // namespace

TEST_CASE("closure on the corpus") {
    Graph line5 = corpus_graph("LINE5");
    CHECK(hereditary_saturated_closure(line5, set_of(line5, {"v5"})) ==
          set_of(line5, {"v1", "v2", "v3", "v4", "v5"}));

    Graph toeplitz = corpus_graph("TOEPLITZ");
    CHECK(hereditary_saturated_closure(toeplitz, set_of(toeplitz, {"w"})) ==
          set_of(toeplitz, {"w"}));

    Graph einf = corpus_graph("EINF");
    CHECK(hereditary_saturated_closure(einf, set_of(einf, {"w"})) == set_of(einf, {"w"}));

    CHECK_THROWS_AS(hereditary_saturated_closure(line5, VertexSet{42}), InputError);
}

TEST_CASE("is_hereditary_saturated") {
    Graph toeplitz = corpus_graph("TOEPLITZ");
    CHECK(is_hereditary_saturated(toeplitz, set_of(toeplitz, {"w"})));

    Graph line5 = corpus_graph("LINE5");
    CHECK(!is_hereditary_saturated(line5, set_of(line5, {"v3"})));

    for (const auto& name : corpus_names()) {
        Graph g = corpus_graph(name);
        CHECK(is_hereditary_saturated(g, {}));  // empty set is vacuously closed
    }
}

TEST_CASE("closure is extensive, monotone, idempotent") {
    Rng rng(5150);
    for (const auto& name : corpus_names()) {
        Graph g = corpus_graph(name);
        for (int trial = 0; trial < 20; ++trial) {
            VertexSet s, t;
            for (VertexId v = 0; v < g.vertex_count(); ++v) {
                if (rng.next(2)) s.insert(v);
                if (rng.next(2)) t.insert(v);
            }
            VertexSet cs = hereditary_saturated_closure(g, s);
            for (VertexId v : s) CHECK(cs.count(v));           // extensive
            CHECK(hereditary_saturated_closure(g, cs) == cs);  // idempotent
            if (std::includes(t.begin(), t.end(), s.begin(), s.end())) {
                VertexSet ct = hereditary_saturated_closure(g, t);
                CHECK(std::includes(ct.begin(), ct.end(), cs.begin(), cs.end()));  // monotone
            }
        }
    }
}

TEST_CASE("closure is least among hereditary saturated supersets") {
    Rng rng(99);
    std::vector<Graph> graphs;
    for (const auto& name : corpus_names()) graphs.push_back(corpus_graph(name));
    for (int i = 0; i < 25; ++i) graphs.push_back(random_graph(rng));
    for (const Graph& g : graphs) {
        for (int trial = 0; trial < 5; ++trial) {
            VertexSet s;
            for (VertexId v = 0; v < g.vertex_count(); ++v)
                if (rng.next(3) == 0) s.insert(v);
            CHECK(hereditary_saturated_closure(g, s) == closure_oracle(g, s));
        }
    }
}

TEST_CASE("line points lie in their own closure") {
    for (const auto& name : corpus_names()) {
        Graph g = corpus_graph(name);
        VertexSet pl;
        for (VertexId v : line_points(g)) pl.insert(v);
        VertexSet h = hereditary_saturated_closure(g, pl);
        for (VertexId v : pl) CHECK(h.count(v));
    }
}

TEST_CASE("simplicity") {
    SimplicityReport rose = is_simple(corpus_graph("ROSE2"));
    CHECK(rose.simple);

    SimplicityReport loop = is_simple(corpus_graph("LOOP1"));
    CHECK(!loop.simple);
    CHECK(loop.cycle_witness.has_value());  // Condition (L) fails

    Graph toeplitz = corpus_graph("TOEPLITZ");
    SimplicityReport t = is_simple(toeplitz);
    CHECK(!t.simple);
    REQUIRE(t.vertex_witness.has_value());
    CHECK(toeplitz.vertex_name(*t.vertex_witness) == "w");
}
