#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "tropdiv/model.hpp"
#include "tropdiv/moves.hpp"

using namespace tropdiv;
using namespace fixtures;

TEST_CASE("radial function") {
    auto two = two_edge_curve();
    int v = two->graph()->vertex_index("v");
    PLFunction f = radial_function(two, v, Rat(1, 2));
    CHECK(f.at_vertex(v) == Rat(0));
    CHECK(f.eval(two->make_point(0, Rat(3, 4))) == Rat(1, 4));
    CHECK(f.at_vertex(0) == Rat(1, 2));  // capped at s
    MetricDivisor d = pl_div(f);
    CHECK(d.at(two->vertex_point(v)) == -2);
    CHECK(d.at(two->make_point(0, Rat(1, 2))) == 1);
    CHECK(d.at(two->make_point(1, Rat(1, 2))) == 1);
    CHECK(d.degree() == 0);
}

TEST_CASE("edge move pushes the outermost chips to the ends") {
    auto seg = one_edge_curve();
    MetricDivisor d(seg);
    d.add(seg->make_point(0, Rat(1, 3)), 1);
    d.add(seg->make_point(0, Rat(2, 3)), 1);
    PLFunction f = edge_move_function(d, 0);
    MetricDivisor moved = d + pl_div(f);
    CHECK(moved.is_effective());
    CHECK(moved.degree() == 2);
    CHECK(moved.at(seg->vertex_point(0)) == 1);
    CHECK(moved.at(seg->vertex_point(1)) == 1);
}

TEST_CASE("concentrate_degree leaves at most one interior chip per edge") {
    auto seg = one_edge_curve();
    MetricDivisor d(seg);
    d.add(seg->make_point(0, Rat(1, 3)), 1);
    d.add(seg->make_point(0, Rat(2, 3)), 1);
    MetricDivisor out = concentrate_degree(d);
    CHECK(out.at(seg->vertex_point(0)) == 1);
    CHECK(out.at(seg->vertex_point(1)) == 1);
    CHECK(metric_linearly_equivalent(d, out));

    // Three chips: one remains inside, the rest reach the ends.
    auto lol = lollipop_curve();
    MetricDivisor d3(lol);
    d3.add(lol->make_point(1, Rat(1, 4)), 1);
    d3.add(lol->make_point(1, Rat(1, 2)), 1);
    d3.add(lol->make_point(1, Rat(3, 4)), 1);
    MetricDivisor out3 = concentrate_degree(d3);
    CHECK(metric_linearly_equivalent(d3, out3));
    for (int e = 0; e < 2; ++e) {
        long long interior = 0;
        for (auto& [p, k] : out3.coeffs)
            if (!p.is_vertex() && p.edge == e && k > 0) interior += k;
        CHECK(interior <= 1);
    }
}

TEST_CASE("metric effectivize via the schedule") {
    auto lol = lollipop_curve();  // c_C = 18
    MetricDivisor d(lol);
    d.add(lol->vertex_point(0), 20);
    d.add(lol->vertex_point(1), -1);
    auto res = metric_effectivize(d);
    REQUIRE(res.found);
    CHECK_FALSE(res.used_model_fallback);
    CHECK(res.representative.is_effective());
    CHECK(res.representative.degree() == 19);
    CHECK(metric_linearly_equivalent(d, res.representative));
    CHECK(res.rounds >= 1);
}

TEST_CASE("metric effectivize below the constant and on empty classes") {
    auto lol = lollipop_curve();
    MetricDivisor d(lol);
    d.add(lol->vertex_point(0), 2);
    d.add(lol->make_point(0, Rat(1, 2)), -1);
    auto res = metric_effectivize(d);
    REQUIRE(res.found);
    CHECK(res.used_model_fallback);
    CHECK(res.representative.is_effective());
    CHECK(metric_linearly_equivalent(d, res.representative));

    MetricDivisor neg(lol);
    neg.add(lol->vertex_point(0), -2);
    CHECK_FALSE(metric_effectivize(neg).found);

    auto circle = unit_metric(single_loop());
    MetricDivisor cls(circle);
    cls.add(circle->vertex_point(0), 1);
    cls.add(circle->make_point(0, Rat(1, 2)), -1);
    CHECK_FALSE(metric_effectivize(cls).found);  // degree 0, nontrivial class

    MetricDivisor already(lol);
    already.add(lol->vertex_point(1), 1);
    auto triv = metric_effectivize(already);
    CHECK(triv.found);
    CHECK(triv.representative == already);
}
