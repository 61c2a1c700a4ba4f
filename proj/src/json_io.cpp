#include "tropdiv/json_io.hpp"

namespace tropdiv {

namespace {

long long edge_index(const std::string& id, const Multigraph& g) {
    if (id.size() < 2 || id[0] != 'e') throw Error(ErrorCode::BadInput, "bad edge id " + id);
    long long e = std::stoll(id.substr(1));
    if (e < 0 || e >= g.num_edges()) throw Error(ErrorCode::BadInput, "unknown edge id " + id);
    return e;
}

}  // namespace

GraphPtr parse_graph(const Json& j) {
    std::vector<std::string> vertices = j.at("vertices").get<std::vector<std::string>>();
    std::vector<std::pair<std::string, std::string>> edges;
    for (auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<std::string>(), e.at(1).get<std::string>());
    return Multigraph::build(std::move(vertices), std::move(edges));
}

Json graph_to_json(const Multigraph& g) {
    Json j;
    j["vertices"] = g.vertex_ids();
    j["edges"] = Json::array();
    for (auto [a, b] : g.edges())
        j["edges"].push_back(Json::array({g.vertex_ids()[a], g.vertex_ids()[b]}));
    return j;
}

Divisor parse_divisor(const Json& j) {
    GraphPtr g = parse_graph(j.at("graph"));
    std::vector<long long> coeffs(g->num_vertices(), 0);
    for (auto& [id, v] : j.at("coeffs").items()) coeffs[g->vertex_index(id)] = v.get<long long>();
    return Divisor(std::move(g), std::move(coeffs));
}

Json divisor_to_json(const Divisor& d) {
    Json j;
    j["graph"] = graph_to_json(*d.graph);
    Json coeffs = Json::object();
    for (int v = 0; v < d.graph->num_vertices(); ++v)
        if (d.coeffs[v] != 0) coeffs[d.graph->vertex_ids()[v]] = d.coeffs[v];
    j["coeffs"] = std::move(coeffs);
    return j;
}

MetricPtr parse_metric(const Json& j) {
    GraphPtr g = parse_graph(j);
    std::vector<Rat> lengths(g->num_edges(), Rat(1));
    if (j.contains("lengths"))
        for (auto& [id, v] : j.at("lengths").items())
            lengths[edge_index(id, *g)] = parse_rat(v.get<std::string>());
    return MetricGraph::build(std::move(g), std::move(lengths));
}

Json metric_to_json(const MetricGraph& c) {
    Json j = graph_to_json(*c.graph());
    Json lengths = Json::object();
    for (int e = 0; e < c.graph()->num_edges(); ++e)
        lengths["e" + std::to_string(e)] = to_string(c.length(e));
    j["lengths"] = std::move(lengths);
    return j;
}

Point parse_point(const Json& j, const MetricPtr& c) {
    if (j.contains("vertex")) return c->vertex_point(c->graph()->vertex_index(j.at("vertex")));
    long long e = edge_index(j.at("edge").get<std::string>(), *c->graph());
    return c->make_point((int)e, parse_rat(j.at("offset").get<std::string>()));
}

Json point_to_json(const Point& p, const MetricGraph& c) {
    Json j;
    if (p.is_vertex()) {
        j["vertex"] = c.graph()->vertex_ids()[p.vertex];
    } else {
        j["edge"] = "e" + std::to_string(p.edge);
        j["offset"] = to_string(p.offset);
    }
    return j;
}

MetricDivisor parse_metric_divisor(const Json& j) {
    MetricPtr c = parse_metric(j.at("metric"));
    MetricDivisor d(c);
    for (auto& entry : j.at("coeffs"))
        d.add(parse_point(entry.at("point"), c), entry.at("coeff").get<long long>());
    return d;
}

Json metric_divisor_to_json(const MetricDivisor& d) {
    Json j;
    j["metric"] = metric_to_json(*d.curve);
    j["coeffs"] = Json::array();
    for (auto& [p, k] : d.coeffs) {
        Json entry;
        entry["point"] = point_to_json(p, *d.curve);
        entry["coeff"] = k;
        j["coeffs"].push_back(std::move(entry));
    }
    return j;
}

PLFunction parse_plfunction(const Json& j, const MetricPtr& c) {
    std::vector<std::vector<std::pair<Rat, Rat>>> samples(c->graph()->num_edges());
    for (auto& [id, arr] : j.at("edges").items()) {
        auto& s = samples[edge_index(id, *c->graph())];
        for (auto& pair : arr)
            s.push_back({parse_rat(pair.at(0).get<std::string>()),
                         parse_rat(pair.at(1).get<std::string>())});
    }
    return PLFunction::build(c, std::move(samples));
}

Json plfunction_to_json(const PLFunction& f) {
    Json edges = Json::object();
    for (int e = 0; e < f.curve()->graph()->num_edges(); ++e) {
        Json arr = Json::array();
        for (auto& [t, v] : f.edge_samples(e))
            arr.push_back(Json::array({to_string(t), to_string(v)}));
        edges["e" + std::to_string(e)] = std::move(arr);
    }
    Json j;
    j["edges"] = std::move(edges);
    return j;
}

PointMap parse_point_map(const Json& j) {
    PointMap m;
    m.curve = parse_metric(j.at("metric"));
    for (auto& [label, p] : j.at("assignments").items())
        m.assignments.emplace(label, parse_point(p, m.curve));
    return m;
}

TropPoly2 parse_trop_poly(const Json& j) {
    std::vector<TropTerm> terms;
    for (auto& t : j.at("terms")) {
        TropTerm term;
        term.c = parse_rat(t.at("c").get<std::string>());
        term.a = t.at("a").get<long long>();
        term.b = t.at("b").get<long long>();
        terms.push_back(term);
    }
    return TropPoly2::build(std::move(terms));
}

Json trace_to_json(const FiringTrace& t, const Multigraph& g) {
    Json rounds = Json::array();
    for (auto& r : t.rounds) {
        Json round;
        Json fired = Json::array();
        for (int v : r.fired) fired.push_back(g.vertex_ids()[v]);
        round["fired"] = std::move(fired);
        Json after = Json::object();
        for (int v = 0; v < g.num_vertices(); ++v)
            if (r.after.coeffs[v] != 0) after[g.vertex_ids()[v]] = r.after.coeffs[v];
        round["after"] = std::move(after);
        rounds.push_back(std::move(round));
    }
    Json j;
    j["rounds"] = std::move(rounds);
    return j;
}

Json rank_interval_to_json(const RankInterval& r) {
    Json j;
    j["lower"] = r.lower;
    j["upper"] = r.upper;
    j["exact"] = r.exact;
    j["witness"] = r.witness;
    return j;
}

Json corner_locus_to_json(const CornerLocus& l) {
    auto pt = [](const Pt2& p) {
        return Json::array({to_string(p.first), to_string(p.second)});
    };
    Json j;
    j["vertices"] = Json::array();
    for (auto& v : l.vertices) j["vertices"].push_back(pt(v));
    j["edges"] = Json::array();
    for (auto& [a, b] : l.edges) j["edges"].push_back(Json::array({pt(a), pt(b)}));
    j["rays"] = Json::array();
    for (auto& [base, dir] : l.rays) {
        Json ray;
        ray["base"] = pt(base);
        ray["dir"] = Json::array({dir.first, dir.second});
        j["rays"].push_back(std::move(ray));
    }
    return j;
}

}  // namespace tropdiv
