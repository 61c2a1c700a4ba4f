#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "tropdiv/asymptotics.hpp"
#include "tropdiv/specialization.hpp"

using namespace tropdiv;
using namespace fixtures;

namespace {

// Dual segment of the conic degeneration: vx -- vy -- vz.
PointMap conic_map() {
    auto c = unit_metric(
        Multigraph::build({"vx", "vy", "vz"}, {{"vx", "vy"}, {"vy", "vz"}}));
    PointMap rho;
    rho.curve = c;
    rho.assignments["P"] = c->vertex_point(1);
    rho.assignments["Q"] = c->vertex_point(1);
    return rho;
}

// Dual cycle of the elliptic degeneration with marked points w and vz.
PointMap elliptic_map() {
    auto c = unit_metric(
        Multigraph::build({"w", "vz", "u"}, {{"w", "vz"}, {"vz", "u"}, {"u", "w"}}));
    PointMap rho;
    rho.curve = c;
    rho.assignments["P+"] = c->vertex_point(0);
    rho.assignments["P-"] = c->vertex_point(0);
    rho.assignments["Pinf"] = c->vertex_point(1);
    return rho;
}

TropPoly2 elliptic_poly() {
    // min{1 + 3x, 1 + 3y, 1, x + y}
    return TropPoly2::build({{Rat(1), 3, 0}, {Rat(1), 0, 3}, {Rat(1), 0, 0}, {Rat(0), 1, 1}});
}

bool has_vertex(const CornerLocus& l, const Rat& x, const Rat& y) {
    for (auto& v : l.vertices)
        if (v.first == x && v.second == y) return true;
    return false;
}

bool has_ray_dir(const CornerLocus& l, long long dx, long long dy) {
    for (auto& r : l.rays)
        if (r.second.first == dx && r.second.second == dy) return true;
    return false;
}

}  // namespace

TEST_CASE("pushforward of the conic and elliptic fixtures") {
    auto rho = conic_map();
    MetricDivisor d = pushforward({{"P", 1}, {"Q", 1}}, rho);
    CHECK(d.degree() == 2);
    CHECK(d.at(rho.curve->vertex_point(1)) == 2);  // 2 v_y
    CHECK(d.coeffs.size() == 1);

    auto rho2 = elliptic_map();
    MetricDivisor e = pushforward({{"P+", 1}, {"P-", 1}, {"Pinf", 1}}, rho2);
    CHECK(e.degree() == 3);
    CHECK(e.at(rho2.curve->vertex_point(0)) == 2);  // 2w + v_z
    CHECK(e.at(rho2.curve->vertex_point(1)) == 1);

    CHECK(pushforward({}, rho).coeffs.empty());
    CHECK_THROWS_AS(pushforward({{"missing", 1}}, rho), Error);
}

TEST_CASE("volume compatibility") {
    auto r1 = vol_compat({{"P", 1}, {"Q", 1}}, conic_map());
    CHECK(r1.deg_source == 2);
    CHECK(r1.deg_target == 2);
    CHECK(r1.vol_target == Rat(2));
    CHECK(r1.equal);

    auto r2 = vol_compat({{"P+", 1}, {"P-", 1}, {"Pinf", 1}}, elliptic_map());
    CHECK(r2.vol_target == Rat(3));
    CHECK(r2.equal);

    auto r0 = vol_compat({}, conic_map());
    CHECK(r0.vol_target == Rat(0));
    CHECK(r0.equal);
}

TEST_CASE("degree preservation on random pushforwards") {
    std::mt19937 rng(37);
    std::uniform_int_distribution<long long> coeff(-5, 5);
    auto rho = elliptic_map();
    std::uniform_int_distribution<int> edge(0, 2);
    std::uniform_int_distribution<int> num(1, 3);
    for (int trial = 0; trial < 100; ++trial) {
        PointMap r;
        r.curve = rho.curve;
        std::map<std::string, long long> d;
        long long deg = 0;
        for (int i = 0; i < 4; ++i) {
            std::string label = "p" + std::to_string(i);
            r.assignments[label] = r.curve->make_point(edge(rng), Rat(num(rng), 4));
            long long a = coeff(rng);
            d[label] = a;
            deg += a;
        }
        MetricDivisor push = pushforward(d, r);
        CHECK(push.degree() == deg);
        CHECK(vol_compat(d, r).equal == (tropical_volume(deg) == Rat(std::max(deg, 0LL))));
    }
}

TEST_CASE("tropical polynomial construction and evaluation") {
    CHECK_THROWS_AS(TropPoly2::build({}), Error);
    // Duplicate exponent pairs merge by min coefficient.
    TropPoly2 merged = TropPoly2::build({{Rat(5), 1, 1}, {Rat(2), 1, 1}});
    REQUIRE(merged.terms.size() == 1);
    CHECK(merged.terms[0].c == Rat(2));

    TropPoly2 f = elliptic_poly();
    auto mid = eval_trop_poly(f, Rat(1, 2), Rat(1, 2));
    CHECK(mid.value == Rat(1));
    CHECK(mid.argmin.size() == 2);  // the constant term and x+y: on the locus
    auto vtx = eval_trop_poly(f, Rat(1), Rat(0));
    CHECK(vtx.value == Rat(1));
    CHECK(vtx.argmin.size() >= 3);  // trivalent vertex
    auto off = eval_trop_poly(f, Rat(3), Rat(3));
    CHECK(off.value == Rat(1));  // the constant term wins alone
    CHECK(off.argmin.size() == 1);
}

TEST_CASE("corner locus of the elliptic polynomial") {
    CornerLocus l = corner_locus(elliptic_poly());
    REQUIRE(l.vertices.size() == 3);
    CHECK(has_vertex(l, Rat(1), Rat(0)));
    CHECK(has_vertex(l, Rat(0), Rat(1)));
    CHECK(has_vertex(l, Rat(-1), Rat(-1)));
    CHECK(l.edges.size() == 3);  // triangle
    REQUIRE(l.rays.size() == 3);
    CHECK(has_ray_dir(l, 1, 0));
    CHECK(has_ray_dir(l, 0, 1));
    CHECK(has_ray_dir(l, -1, -1));
    // Every reported vertex really attains the min with multiplicity >= 3,
    // and every edge midpoint with multiplicity >= 2.
    TropPoly2 f = elliptic_poly();
    for (auto& v : l.vertices)
        CHECK(eval_trop_poly(f, v.first, v.second).argmin.size() >= 3);
    for (auto& e : l.edges) {
        Rat mx = (e.first.first + e.second.first) * Rat(1, 2);
        Rat my = (e.first.second + e.second.second) * Rat(1, 2);
        CHECK(eval_trop_poly(f, mx, my).argmin.size() >= 2);
    }
}

TEST_CASE("degenerate and simple loci") {
    CHECK_THROWS_AS(corner_locus(TropPoly2::build({{Rat(1), 2, 2}})), Error);
    // min{x, y}: the diagonal, no vertices, two opposite rays.
    CornerLocus diag = corner_locus(TropPoly2::build({{Rat(0), 1, 0}, {Rat(0), 0, 1}}));
    CHECK(diag.vertices.empty());
    CHECK(diag.edges.empty());
    REQUIRE(diag.rays.size() == 2);
    CHECK((has_ray_dir(diag, 1, 1) && has_ray_dir(diag, -1, -1)));
    // min{0, x, y, x+y}: vertex at the origin with four rays.
    CornerLocus cross = corner_locus(
        TropPoly2::build({{Rat(0), 0, 0}, {Rat(0), 1, 0}, {Rat(0), 0, 1}, {Rat(0), 1, 1}}));
    REQUIRE(cross.vertices.size() == 1);
    CHECK(has_vertex(cross, Rat(0), Rat(0)));
    CHECK(cross.edges.empty());
    CHECK(cross.rays.size() == 4);
    CHECK(has_ray_dir(cross, 1, 0));
    CHECK(has_ray_dir(cross, -1, 0));
    CHECK(has_ray_dir(cross, 0, 1));
    CHECK(has_ray_dir(cross, 0, -1));
}

TEST_CASE("corner locus is invariant under a common constant shift") {
    TropPoly2 f = elliptic_poly();
    std::vector<TropTerm> shifted = f.terms;
    for (auto& t : shifted) t.c = t.c + Rat(7, 2);
    CornerLocus a = corner_locus(f);
    CornerLocus b = corner_locus(TropPoly2::build(shifted));
    CHECK(a.vertices == b.vertices);
    CHECK(a.edges == b.edges);
    CHECK(a.rays == b.rays);
}
