#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"

using namespace tropdiv;
using namespace fixtures;

TEST_CASE("valence counts loops twice") {
    auto g = single_loop();
    CHECK(g->valence(0) == 2);
    auto s = star3();
    CHECK(s->valence(s->vertex_index("c")) == 3);
    CHECK(s->valence(s->vertex_index("a")) == 1);
}

TEST_CASE("build validation") {
    CHECK_THROWS_AS(Multigraph::build({}, {}), Error);
    CHECK_THROWS_AS(Multigraph::build({"a", "b"}, {}), Error);           // disconnected
    CHECK_THROWS_AS(Multigraph::build({"a", "a"}, {{"a", "a"}}), Error); // duplicate id
    CHECK_THROWS_AS(Multigraph::build({"a"}, {{"a", "b"}}), Error);      // unknown endpoint
    CHECK_NOTHROW(Multigraph::build({"v1", "v2"},
                                    {{"v1", "v1"}, {"v1", "v2"}, {"v2", "v2"}}));
}

TEST_CASE("genus") {
    CHECK(star3()->genus() == 0);
    CHECK(lollipop_graph()->genus() == 1);
    CHECK(barbell_graph()->genus() == 2);
    CHECK(cycle4()->genus() == 1);
}

TEST_CASE("canonical divisor") {
    auto l = lollipop_graph();
    Divisor k = canonical_divisor(l);
    CHECK(k.coeffs == std::vector<long long>{1, 0});  // valence-1 end contributes nothing
    auto b = barbell_graph();
    CHECK(canonical_divisor(b).coeffs == std::vector<long long>{1, 1});
    CHECK(canonical_divisor(single_loop()).coeffs == std::vector<long long>{0});
}

TEST_CASE("valence sum and canonical degree") {
    for (auto g : {single_loop(), star3(), cycle4(), lollipop_graph(), barbell_graph()}) {
        long long total = 0;
        for (int v = 0; v < g->num_vertices(); ++v) total += g->valence(v);
        CHECK(total == 2 * g->num_edges());
    }
    // deg K = 2g - 2 whenever no vertex has valence 1.
    for (auto g : {single_loop(), cycle4(), barbell_graph()})
        CHECK(canonical_divisor(g).degree() == 2 * g->genus() - 2);
}

TEST_CASE("loop removal keeps structure") {
    auto b = barbell_graph();
    auto stripped = b->without_loops();
    CHECK(stripped->num_edges() == 1);
    CHECK(stripped->num_vertices() == 2);
}
