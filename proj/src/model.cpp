#include "tropdiv/model.hpp"

#include <algorithm>
#include <functional>

namespace tropdiv {

SubdivisionModel build_model(const MetricPtr& c, const std::vector<const MetricDivisor*>& divs,
                             long long extra_factor) {
    if (extra_factor < 1) throw Error(ErrorCode::BadInput, "extra_factor must be >= 1");
    const auto& g = *c->graph();
    long long lambda = 1;
    for (int e = 0; e < g.num_edges(); ++e) lambda = lcm_ll(lambda, c->length(e).den());
    for (auto* d : divs)
        for (auto& [p, k] : d->coeffs)
            if (!p.is_vertex()) lambda = lcm_ll(lambda, p.offset.den());
    lambda *= extra_factor;
    auto unit_count = [&](int e) { return (Rat(lambda) * c->length(e)).num(); };
    for (int e = 0; e < g.num_edges(); ++e)
        if (g.is_loop(e) && unit_count(e) < 2) {
            lambda *= 2;
            break;
        }

    SubdivisionModel m;
    m.curve = c;
    m.lambda = lambda;
    std::vector<std::string> ids = g.vertex_ids();
    std::vector<std::pair<int, int>> edges;
    m.edge_path.resize(g.num_edges());
    for (int e = 0; e < g.num_edges(); ++e) {
        auto [a, b] = g.edges()[e];
        long long units = unit_count(e);
        auto& path = m.edge_path[e];
        path.push_back(a);
        for (long long k = 1; k < units; ++k) {
            path.push_back((int)ids.size());
            ids.push_back("@e" + std::to_string(e) + "+" + std::to_string(k));
        }
        path.push_back(b);
        for (long long k = 0; k < units; ++k) edges.emplace_back(path[k], path[k + 1]);
    }
    m.graph = Multigraph::build_indexed(std::move(ids), std::move(edges));
    return m;
}

Divisor to_model(const SubdivisionModel& m, const MetricDivisor& d) {
    std::vector<long long> c(m.graph->num_vertices(), 0);
    for (auto& [p, k] : d.coeffs) {
        if (p.is_vertex()) {
            c[p.vertex] += k;
            continue;
        }
        Rat pos = p.offset * Rat(m.lambda);
        if (!pos.is_integer())
            throw Error(ErrorCode::BadInput, "support point off the model lattice");
        c[m.edge_path[p.edge][pos.num()]] += k;
    }
    return Divisor(m.graph, std::move(c));
}

MetricDivisor from_model(const SubdivisionModel& m, const Divisor& d) {
    const auto& g = *m.curve->graph();
    MetricDivisor out(m.curve);
    std::vector<char> placed(m.graph->num_vertices(), 0);
    for (int v = 0; v < g.num_vertices(); ++v) {
        placed[v] = 1;
        out.add(m.curve->vertex_point(v), d.coeffs[v]);
    }
    for (int e = 0; e < g.num_edges(); ++e)
        for (size_t k = 1; k + 1 < m.edge_path[e].size(); ++k) {
            int mv = m.edge_path[e][k];
            placed[mv] = 1;
            out.add(m.curve->make_point(e, Rat((long long)k, m.lambda)), d.coeffs[mv]);
        }
    for (int v = 0; v < m.graph->num_vertices(); ++v)
        if (!placed[v] && d.coeffs[v] != 0)
            throw Error(ErrorCode::BadInput, "model vertex without curve position");
    return out;
}

PLFunction pl_from_model(const SubdivisionModel& m, const std::vector<long long>& x) {
    const auto& g = *m.curve->graph();
    std::vector<std::vector<std::pair<Rat, Rat>>> samples(g.num_edges());
    for (int e = 0; e < g.num_edges(); ++e)
        for (size_t k = 0; k < m.edge_path[e].size(); ++k)
            samples[e].push_back({Rat((long long)k, m.lambda), Rat(x[m.edge_path[e][k]], m.lambda)});
    return PLFunction::build(m.curve, std::move(samples));
}

long long metric_bn_rank(const MetricDivisor& d) {
    long long deg = d.degree();
    if (deg < 0) return -1;
    auto m = build_model(d.curve, {&d}, deg + 1);
    return bn_rank(to_model(m, d));
}

bool metric_linearly_equivalent(const MetricDivisor& a, const MetricDivisor& b) {
    if (!a.curve->same_structure(*b.curve))
        throw Error(ErrorCode::GraphMismatch, "divisors live on different curves");
    if (a.degree() != b.degree()) return false;
    auto m = build_model(a.curve, {&a, &b});
    MetricDivisor b2 = b;
    b2.curve = a.curve;
    return reduce(to_model(m, a)).coeffs == reduce(to_model(m, b2)).coeffs;
}

bool metric_has_effective(const MetricDivisor& d) {
    if (d.degree() < 0) return false;
    if (d.is_effective()) return true;
    auto m = build_model(d.curve, {&d});
    return has_effective(to_model(m, d));
}

MetricDivisor metric_model_reduce(const MetricDivisor& d) {
    auto m = build_model(d.curve, {&d});
    return from_model(m, reduce(to_model(m, d)));
}

namespace {

long long binom(long long n, long long k) {
    __int128 r = 1;
    for (long long i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > 4000000) return 4000001;
    }
    return (long long)r;
}

}  // namespace

std::vector<PLFunction> complete_series_generators(const MetricDivisor& d) {
    long long deg = d.degree();
    std::vector<PLFunction> out;
    if (deg < 0) return out;
    auto m = build_model(d.curve, {&d}, deg + 1);
    Divisor dm = to_model(m, d);
    auto base = reduce_full(dm, 0);
    int n = m.graph->num_vertices();
    if (binom(n + deg - 1, deg) > 4000000)
        throw Error(ErrorCode::BoundExceeded, "generator enumeration too large");

    std::vector<long long> e(n, 0);
    std::function<void(int, long long)> rec = [&](int v, long long left) {
        if (v == n - 1) {
            e[v] = left;
            Divisor cand(m.graph, e);
            auto red = reduce_full(cand, 0);
            if (red.reduced.coeffs == base.reduced.coeffs) {
                // div(x) = Lx and D - L x_D = E - L x_E, so phi = x_E - x_D
                // satisfies D + div(phi) = E.
                std::vector<long long> phi(n);
                for (int i = 0; i < n; ++i) phi[i] = red.firings[i] - base.firings[i];
                out.push_back(pl_from_model(m, phi));
            }
            e[v] = 0;
            return;
        }
        for (long long c = 0; c <= left; ++c) {
            e[v] = c;
            rec(v + 1, left - c);
        }
        e[v] = 0;
    };
    rec(0, deg);
    return out;
}

}  // namespace tropdiv
