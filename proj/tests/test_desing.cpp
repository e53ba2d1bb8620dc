#include <algorithm>

#include "doctest.h"
#include "lpa/desing.hpp"
#include "lpa/errors.hpp"
#include "support.hpp"

using namespace lpa;
using namespace lpa::test;

TEST_CASE("desingularize the corpus") {
    Graph line5 = corpus_graph("LINE5");
    DesingGraph d5 = desingularize(line5);
    REQUIRE(d5.tails.size() == 1);
    CHECK(d5.tails[0].kind == TailDescriptor::Kind::SinkTail);
    CHECK(d5.core.vertex_name(d5.tails[0].base) == "v5");
    CHECK(d5.core.decl_count() == line5.decl_count());  // core unchanged

    Graph einf = corpus_graph("EINF");
    DesingGraph de = desingularize(einf);
    REQUIRE(de.tails.size() == 2);  // emitter tail at v, sink tail at w
    const TailDescriptor* tv = de.tail_at(einf.vertex("v"));
    REQUIRE(tv != nullptr);
    CHECK(tv->kind == TailDescriptor::Kind::EmitterTail);
    CHECK(tv->enumeration_prefix.empty());
    CHECK(tv->cycle_ranges == std::vector<VertexId>{einf.vertex("w")});  // every g_j lands on w
    const TailDescriptor* tw = de.tail_at(einf.vertex("w"));
    REQUIRE(tw != nullptr);
    CHECK(tw->kind == TailDescriptor::Kind::SinkTail);
    CHECK(de.core.decl_count() == 0);  // the bundle is removed

    Graph rose2 = corpus_graph("ROSE2");
    DesingGraph dr = desingularize(rose2);
    CHECK(dr.tails.empty());  // no singular vertices: F = E
    CHECK(dr.core.decl_count() == rose2.decl_count());
}

TEST_CASE("emitter enumeration order: concrete edges first, then bundles round-robin") {
    Graph g = parse_graph(
        "vertex v a b c\n"
        "edge e0 : v -> a\n"
        "bundle b1 : v -> b\n"
        "bundle b2 : v -> c\n");
    DesingGraph d = desingularize(g);
    const TailDescriptor* t = d.tail_at(g.vertex("v"));
    REQUIRE(t != nullptr);
    CHECK(t->prefix_ranges == std::vector<VertexId>{g.vertex("a")});
    CHECK(t->cycle_ranges == std::vector<VertexId>{g.vertex("b"), g.vertex("c")});

    // g_1 -> a, then b, c, b, c, ... visible in a truncation
    TruncatedGraph tr = truncate(d, 4);
    auto range_of = [&](const std::string& name) {
        auto e = tr.graph.find_decl(name);
        REQUIRE(e.has_value());
        return tr.graph.vertex_name(tr.graph.decl(*e).dst);
    };
    CHECK(range_of("v_g1") == "a");
    CHECK(range_of("v_g2") == "b");
    CHECK(range_of("v_g3") == "c");
    CHECK(range_of("v_g4") == "b");
}

TEST_CASE("line points of the desingularization") {
    Graph line5 = corpus_graph("LINE5");
    auto s5 = line_points_desing(desingularize(line5));
    CHECK(s5.core_points.size() == 5);
    CHECK(s5.sink_tail_bases.size() == 1);

    Graph einf = corpus_graph("EINF");
    auto se = line_points_desing(desingularize(einf));
    REQUIRE(se.core_points.size() == 1);
    CHECK(einf.vertex_name(se.core_points[0]) == "w");

    Graph toeplitz = corpus_graph("TOEPLITZ");
    auto st = line_points_desing(desingularize(toeplitz));
    REQUIRE(st.core_points.size() == 1);
    CHECK(toeplitz.vertex_name(st.core_points[0]) == "w");

    Graph rose2 = corpus_graph("ROSE2");
    CHECK(line_points_desing(desingularize(rose2)).empty());
}

TEST_CASE("truncation") {
    Graph einf = corpus_graph("EINF");
    TruncatedGraph t = truncate(desingularize(einf), 2);
    CHECK(t.graph.vertex_count() == 6);  // v, w, v_t1, v_t2, w_t1, w_t2
    CHECK(t.cut_vertices.size() == 2);
    // emitter tail vertices have out-degree 2 until the cut
    CHECK(t.graph.out(t.graph.vertex("v")).size() == 2);
    CHECK(t.graph.out(t.graph.vertex("v_t1")).size() == 2);
    CHECK(t.graph.out(t.graph.vertex("v_t2")).empty());
    // sink tail vertices have out-degree 1
    CHECK(t.graph.out(t.graph.vertex("w")).size() == 1);
    CHECK(t.graph.out(t.graph.vertex("w_t1")).size() == 1);

    // truncations serialize in the graph format and parse back
    Graph reparsed = parse_graph(print_graph(t.graph));
    CHECK(print_graph(reparsed) == print_graph(t.graph));

    // tail-free DesingGraph: truncation is the core
    Graph rose2 = corpus_graph("ROSE2");
    TruncatedGraph tr = truncate(desingularize(rose2), 1);
    CHECK(tr.graph.vertex_count() == rose2.vertex_count());
    CHECK(tr.cut_vertices.empty());

    // sink tails extend a line graph
    Graph line5 = corpus_graph("LINE5");
    TruncatedGraph t5 = truncate(desingularize(line5), 3);
    CHECK(t5.graph.vertex_count() == 8);  // LINE8 shape
    auto lps = line_points(t5.graph);
    CHECK(lps.size() == 8);

    CHECK_THROWS_AS(truncate(desingularize(line5), 0), InputError);
}

TEST_CASE("generated names avoid collisions") {
    Graph g = parse_graph(
        "vertex s s_t1\n"
        "edge s_f1 : s_t1 -> s\n");
    // s is a sink; its tail wants s_t1/s_f1 which are taken
    TruncatedGraph t = truncate(desingularize(g), 1);
    CHECK(t.graph.find_vertex("s_t1_").has_value());
    Graph reparsed = parse_graph(print_graph(t.graph));
    CHECK(print_graph(reparsed) == print_graph(t.graph));
}

TEST_CASE("desingularization lemma on corpus and random graphs") {
    for (const auto& name : corpus_names()) CHECK(verify_desing_lemma(corpus_graph(name)));
    Rng rng(314159);
    for (int i = 0; i < 60; ++i) CHECK(verify_desing_lemma(random_graph(rng)));
}

TEST_CASE("F is row-finite with bounded out-degrees") {
    Rng rng(271828);
    for (int i = 0; i < 30; ++i) {
        Graph g = random_graph(rng);
        DesingGraph d = desingularize(g);
        std::size_t core_max = 0;
        for (VertexId v = 0; v < g.vertex_count(); ++v)
            if (!g.owns_bundle(v)) core_max = std::max(core_max, g.out(v).size());
        TruncatedGraph t = truncate(d, 3);
        CHECK(t.graph.vertex_count() == d.core.vertex_count() + 3 * d.tails.size());
        for (VertexId v = 0; v < t.graph.vertex_count(); ++v) {
            CHECK(!t.graph.owns_bundle(v));
            CHECK(t.graph.out(v).size() <= std::max<std::size_t>(2, core_max));
        }
        // tail vertices emit exactly 2 (emitter tails) or 1 (sink tails)
        // until the artificial cut
        for (const auto& tail : d.tails) {
            std::size_t want = tail.kind == TailDescriptor::Kind::EmitterTail ? 2 : 1;
            std::string base = d.core.vertex_name(tail.base);
            CHECK(t.graph.out(t.graph.vertex(base)).size() == want);
            for (int k = 1; k < 3; ++k)
                CHECK(t.graph.out(t.graph.vertex(base + "_t" + std::to_string(k))).size() == want);
        }
    }
}
