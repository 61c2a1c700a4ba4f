#include "tropdiv/metric.hpp"

#include <algorithm>

namespace tropdiv {

MetricPtr MetricGraph::build(GraphPtr g, std::vector<Rat> lengths) {
    if (!g) throw Error(ErrorCode::Empty, "metric graph without multigraph");
    if ((int)lengths.size() != g->num_edges())
        throw Error(ErrorCode::BadInput, "length count != edge count");
    for (auto& l : lengths)
        if (l.sign() <= 0) throw Error(ErrorCode::BadInput, "edge lengths must be positive");

    auto c = std::make_shared<MetricGraph>();
    c->graph_ = std::move(g);
    c->lengths_ = std::move(lengths);

    const auto& graph = *c->graph_;
    int n = graph.num_vertices();
    c->essential_mask_.assign(n, 0);
    for (int v = 0; v < n; ++v)
        if (graph.valence(v) != 2) {
            c->essential_mask_[v] = 1;
            c->essential_.push_back(v);
        }
    if (c->essential_.empty()) {  // bare cycle: fix a base point
        c->essential_mask_[0] = 1;
        c->essential_.push_back(0);
    }
    int suppressed = n - (int)c->essential_.size();
    c->topo_edges_ = graph.num_edges() - suppressed;

    // All-pairs vertex distances (Floyd-Warshall; loops never shorten paths).
    const Rat inf(INT64_MAX / 4);
    c->vv_dist_.assign(n, std::vector<Rat>(n, inf));
    for (int v = 0; v < n; ++v) c->vv_dist_[v][v] = Rat(0);
    for (int e = 0; e < graph.num_edges(); ++e) {
        auto [a, b] = graph.edges()[e];
        if (a == b) continue;
        auto& d = c->vv_dist_[a][b];
        d = Rat::min(d, c->lengths_[e]);
        c->vv_dist_[b][a] = d;
    }
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Rat via = c->vv_dist_[i][k] + c->vv_dist_[k][j];
                if (via < c->vv_dist_[i][j]) c->vv_dist_[i][j] = via;
            }
    return c;
}

Point MetricGraph::vertex_point(int v) const {
    if (v < 0 || v >= graph_->num_vertices())
        throw Error(ErrorCode::UnknownVertex, "vertex index");
    Point p;
    p.vertex = v;
    return p;
}

Point MetricGraph::make_point(int e, const Rat& offset) const {
    if (e < 0 || e >= graph_->num_edges()) throw Error(ErrorCode::BadInput, "edge index");
    if (offset.sign() < 0 || offset > lengths_[e])
        throw Error(ErrorCode::BadInput, "point offset out of range");
    if (offset.is_zero()) return vertex_point(graph_->edges()[e].first);
    if (offset == lengths_[e]) return vertex_point(graph_->edges()[e].second);
    Point p;
    p.edge = e;
    p.offset = offset;
    return p;
}

namespace {

// (vertex, distance-from-point) anchors covering all shortest paths.
std::vector<std::pair<int, Rat>> anchors(const MetricGraph& c, const Point& p) {
    if (p.is_vertex()) return {{p.vertex, Rat(0)}};
    auto [a, b] = c.graph()->edges()[p.edge];
    return {{a, p.offset}, {b, c.length(p.edge) - p.offset}};
}

}  // namespace

Rat MetricGraph::distance(const Point& p, const Point& q) const {
    Rat best(INT64_MAX / 4);
    if (!p.is_vertex() && !q.is_vertex() && p.edge == q.edge)
        best = Rat::abs(p.offset - q.offset);
    if (p == q) return Rat(0);
    for (auto& [u, du] : anchors(*this, p))
        for (auto& [v, dv] : anchors(*this, q)) best = Rat::min(best, du + vv_dist_[u][v] + dv);
    return best;
}

long long MetricDivisor::degree() const {
    long long d = 0;
    for (auto& [p, k] : coeffs) d += k;
    return d;
}

bool MetricDivisor::is_effective() const {
    for (auto& [p, k] : coeffs)
        if (k < 0) return false;
    return true;
}

long long MetricDivisor::at(const Point& p) const {
    auto it = coeffs.find(p);
    return it == coeffs.end() ? 0 : it->second;
}

void MetricDivisor::add(const Point& p, long long k) {
    if (k == 0) return;
    auto [it, fresh] = coeffs.emplace(p, k);
    if (!fresh && (it->second += k) == 0) coeffs.erase(it);
}

namespace {

void check_same_curve(const MetricDivisor& a, const MetricDivisor& b) {
    if (a.curve.get() == b.curve.get()) return;
    if (!a.curve || !b.curve || !a.curve->same_structure(*b.curve))
        throw Error(ErrorCode::GraphMismatch, "divisors live on different curves");
}

}  // namespace

MetricDivisor MetricDivisor::operator+(const MetricDivisor& o) const {
    check_same_curve(*this, o);
    MetricDivisor r = *this;
    for (auto& [p, k] : o.coeffs) r.add(p, k);
    return r;
}

MetricDivisor MetricDivisor::operator-(const MetricDivisor& o) const {
    check_same_curve(*this, o);
    MetricDivisor r = *this;
    for (auto& [p, k] : o.coeffs) r.add(p, -k);
    return r;
}

MetricDivisor MetricDivisor::operator*(long long k) const {
    MetricDivisor r(curve);
    if (k != 0)
        for (auto& [p, c] : coeffs) r.coeffs[p] = c * k;
    return r;
}

bool MetricDivisor::operator==(const MetricDivisor& o) const {
    check_same_curve(*this, o);
    return coeffs == o.coeffs;
}

MetricDivisor MetricDivisor::positive_part() const {
    MetricDivisor r(curve);
    for (auto& [p, k] : coeffs)
        if (k > 0) r.coeffs[p] = k;
    return r;
}

MetricDivisor MetricDivisor::negative_part() const {
    MetricDivisor r(curve);
    for (auto& [p, k] : coeffs)
        if (k < 0) r.coeffs[p] = k;
    return r;
}

MetricDivisor metric_zero(const MetricPtr& c) { return MetricDivisor(c); }

MetricDivisor metric_canonical(const MetricPtr& c) {
    MetricDivisor k(c);
    for (int v : c->essential_vertices())
        k.add(c->vertex_point(v), std::max(c->graph()->valence(v) - 2, 0));
    return k;
}

long long constant_c(const MetricGraph& c) {
    return 2LL * ((long long)c.essential_vertices().size() + 1) *
           (c.num_topological_edges() + 1);
}

}  // namespace tropdiv
