// Metric multigraphs with rational edge lengths: points, metric divisors,
// path metric, essential vertices and topological edges.
#pragma once

#include <map>
#include <memory>
#include <vector>

#include "tropdiv/multigraph.hpp"
#include "tropdiv/rat.hpp"

namespace tropdiv {

class MetricGraph;
using MetricPtr = std::shared_ptr<const MetricGraph>;

// Canonical point address: either a vertex, or an edge interior offset in
// (0, length).
struct Point {
    int vertex = -1;  // >= 0 for vertex points
    int edge = -1;    // >= 0 for interior points
    Rat offset;       // interior only

    bool is_vertex() const { return vertex >= 0; }

    friend bool operator==(const Point& a, const Point& b) {
        return a.vertex == b.vertex && a.edge == b.edge && a.offset == b.offset;
    }
    friend bool operator<(const Point& a, const Point& b) {
        if (a.vertex != b.vertex) return a.vertex > b.vertex;  // vertices first, by index
        if (a.edge != b.edge) return a.edge < b.edge;
        return a.offset < b.offset;
    }
};

class MetricGraph {
public:
    static MetricPtr build(GraphPtr g, std::vector<Rat> lengths);

    const GraphPtr& graph() const { return graph_; }
    const Rat& length(int e) const { return lengths_[e]; }
    const std::vector<Rat>& lengths() const { return lengths_; }

    // V(C): vertices of valence != 2; a bare cycle gets the first declared
    // vertex as base point.
    const std::vector<int>& essential_vertices() const { return essential_; }
    bool is_essential(int v) const { return essential_mask_[v]; }

    // #E(C): edges after smoothing the non-essential valence-2 vertices.
    int num_topological_edges() const { return topo_edges_; }

    Point vertex_point(int v) const;
    // Canonicalizes offsets 0 / length(e) to endpoint vertices.
    Point make_point(int e, const Rat& offset) const;

    Rat distance(const Point& p, const Point& q) const;
    Rat vertex_distance(int u, int v) const { return vv_dist_[u][v]; }

    bool same_structure(const MetricGraph& o) const {
        return graph_->same_structure(*o.graph_) && lengths_ == o.lengths_;
    }

private:
    GraphPtr graph_;
    std::vector<Rat> lengths_;
    std::vector<int> essential_;
    std::vector<char> essential_mask_;
    int topo_edges_ = 0;
    std::vector<std::vector<Rat>> vv_dist_;
};

struct MetricDivisor {
    MetricPtr curve;
    std::map<Point, long long> coeffs;  // nonzero entries only

    MetricDivisor() = default;
    explicit MetricDivisor(MetricPtr c) : curve(std::move(c)) {}

    long long degree() const;
    bool is_effective() const;
    long long at(const Point& p) const;
    void add(const Point& p, long long k);  // drops entries hitting zero

    MetricDivisor operator+(const MetricDivisor& o) const;
    MetricDivisor operator-(const MetricDivisor& o) const;
    MetricDivisor operator*(long long k) const;
    bool operator==(const MetricDivisor& o) const;

    MetricDivisor positive_part() const;
    MetricDivisor negative_part() const;
};

MetricDivisor metric_zero(const MetricPtr& c);
// K = sum over essential v of max(val(v) - 2, 0) v.
MetricDivisor metric_canonical(const MetricPtr& c);

// c_C = 2(#V(C)+1)(#E(C)+1).
long long constant_c(const MetricGraph& c);

}  // namespace tropdiv
