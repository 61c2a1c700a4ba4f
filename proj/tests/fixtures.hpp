// Shared fixture builders for the test suites.
#pragma once

#include "tropdiv/divisor.hpp"
#include "tropdiv/metric.hpp"

namespace fixtures {

using namespace tropdiv;

inline GraphPtr single_loop() { return Multigraph::build({"v"}, {{"v", "v"}}); }

inline GraphPtr star3() {
    return Multigraph::build({"c", "a", "b", "d"}, {{"c", "a"}, {"c", "b"}, {"c", "d"}});
}

inline GraphPtr cycle4() {
    return Multigraph::build({"v0", "v1", "v2", "v3"},
                             {{"v0", "v1"}, {"v1", "v2"}, {"v2", "v3"}, {"v3", "v0"}});
}

inline GraphPtr triangle() {
    return Multigraph::build({"v0", "v1", "v2"}, {{"v0", "v1"}, {"v1", "v2"}, {"v2", "v0"}});
}

// Loop at v plus a bridge to the leaf u.
inline GraphPtr lollipop_graph() { return Multigraph::build({"v", "u"}, {{"v", "v"}, {"v", "u"}}); }

// Loops at v1 and v2 joined by a bridge.
inline GraphPtr barbell_graph() {
    return Multigraph::build({"v1", "v2"}, {{"v1", "v1"}, {"v1", "v2"}, {"v2", "v2"}});
}

inline MetricPtr unit_metric(const GraphPtr& g) {
    return MetricGraph::build(g, std::vector<Rat>(g->num_edges(), Rat(1)));
}

inline MetricPtr lollipop_curve() { return unit_metric(lollipop_graph()); }
inline MetricPtr barbell_curve() { return unit_metric(barbell_graph()); }

// Single segment v1 -- v2 of length 1.
inline MetricPtr one_edge_curve() {
    return unit_metric(Multigraph::build({"v1", "v2"}, {{"v1", "v2"}}));
}

// Two unit segments u -- v -- w.
inline MetricPtr two_edge_curve() {
    return unit_metric(Multigraph::build({"u", "v", "w"}, {{"u", "v"}, {"v", "w"}}));
}

inline Divisor div_at(const GraphPtr& g, const std::string& id, long long k) {
    Divisor d = zero_divisor(g);
    d.coeffs[g->vertex_index(id)] = k;
    return d;
}

}  // namespace fixtures
