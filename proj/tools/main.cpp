// Command-line front end: parse JSON inputs, dispatch to the library, emit
// JSON results (and CSV plot data for rank sequences).
#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "tropdiv/asymptotics.hpp"
#include "tropdiv/json_io.hpp"
#include "tropdiv/model.hpp"
#include "tropdiv/moves.hpp"

using namespace tropdiv;

namespace {

Json load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::BadInput, "cannot open " + path);
    Json j;
    in >> j;
    return j;
}

struct Options {
    std::string graph, divisor, metric, functions, functions2, map, poly;
    std::string out, csv, base;
    int L = 8;
    bool require_exact = false;
};

void emit(const Options& opt, const Json& j) {
    std::string text = j.dump(2) + "\n";
    if (opt.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream os(opt.out);
        if (!os) throw Error(ErrorCode::BadInput, "cannot write " + opt.out);
        os << text;
    }
}

// Divisor files may embed their graph or rely on --graph.
Divisor load_divisor(const Options& opt) {
    Json j = load(opt.divisor);
    if (!j.contains("graph") && !opt.graph.empty()) j["graph"] = load(opt.graph);
    return parse_divisor(j);
}

MetricDivisor load_metric_divisor(const Options& opt) {
    Json j = load(opt.divisor);
    if (!j.contains("metric") && !opt.metric.empty()) j["metric"] = load(opt.metric);
    return parse_metric_divisor(j);
}

bool divisor_is_metric(const Options& opt) {
    if (!opt.metric.empty()) return true;
    return load(opt.divisor).contains("metric");
}

struct FunctionSet {
    MetricPtr curve;
    std::vector<PLFunction> functions;
};

FunctionSet load_functions(const std::string& path) {
    Json j = load(path);
    FunctionSet fs;
    fs.curve = parse_metric(j.at("metric"));
    for (auto& f : j.at("functions")) fs.functions.push_back(parse_plfunction(f, fs.curve));
    return fs;
}

int base_index(const Options& opt, const Multigraph& g) {
    return opt.base.empty() ? 0 : g.vertex_index(opt.base);
}

int run(const std::string& cmd, const Options& opt) {
    if (cmd == "rank") {
        Json j;
        if (divisor_is_metric(opt)) {
            j["rank"] = metric_bn_rank(load_metric_divisor(opt));
        } else {
            j["rank"] = bn_rank(load_divisor(opt));
        }
        emit(opt, j);
    } else if (cmd == "reduce") {
        Divisor d = load_divisor(opt);
        auto res = reduce_full(d, base_index(opt, *d.graph));
        Json j;
        j["reduced"] = divisor_to_json(res.reduced);
        Json firings = Json::object();
        for (int v = 0; v < d.graph->num_vertices(); ++v)
            if (res.firings[v] != 0) firings[d.graph->vertex_ids()[v]] = res.firings[v];
        j["firings"] = std::move(firings);
        emit(opt, j);
    } else if (cmd == "effectivize") {
        Json j;
        if (divisor_is_metric(opt)) {
            auto res = metric_effectivize(load_metric_divisor(opt));
            j["found"] = res.found;
            j["representative"] = metric_divisor_to_json(res.representative);
            j["rounds"] = res.rounds;
            j["used_model_fallback"] = res.used_model_fallback;
        } else {
            auto res = effectivize(load_divisor(opt));
            j["found"] = res.found;
            j["representative"] = divisor_to_json(res.representative);
            j["trace"] = trace_to_json(res.trace, *res.representative.graph);
        }
        emit(opt, j);
    } else if (cmd == "volume") {
        long long deg = divisor_is_metric(opt) ? load_metric_divisor(opt).degree()
                                               : load_divisor(opt).degree();
        Json j;
        j["degree"] = deg;
        j["volume"] = to_string(tropical_volume(deg));
        j["big"] = is_big(deg);
        emit(opt, j);
    } else if (cmd == "chi") {
        Json j;
        if (divisor_is_metric(opt)) {
            MetricDivisor d = load_metric_divisor(opt);
            MetricDivisor k = metric_canonical(d.curve);
            j["chi_bn"] = metric_bn_rank(d) - metric_bn_rank(k - d);
            auto chi_ind = ind_euler_char(d);
            if (chi_ind) {
                j["chi_ind"] = *chi_ind;
            } else {
                j["chi_ind"] = nullptr;
                if (opt.require_exact) {
                    emit(opt, j);
                    return 2;
                }
            }
        } else {
            j["chi"] = euler_char(load_divisor(opt));
        }
        emit(opt, j);
    } else if (cmd == "rank-seq") {
        RankSequence seq;
        long long C;
        if (divisor_is_metric(opt)) {
            MetricDivisor d = load_metric_divisor(opt);
            seq = rank_sequence(d.degree(), opt.L,
                                [&](long long l) { return metric_bn_rank(d * l); });
            C = constant_c(*d.curve);
        } else {
            Divisor d = load_divisor(opt);
            seq = rank_sequence(d, opt.L);
            C = constant_C(*d.graph);
        }
        if (!opt.csv.empty()) {
            std::ofstream os(opt.csv);
            if (!os) throw Error(ErrorCode::BadInput, "cannot write " + opt.csv);
            write_rank_csv(os, seq, C);
        }
        Json j;
        j["degree"] = seq.degree;
        j["values"] = seq.values;
        j["normalized"] = Json::array();
        for (auto& r : seq.normalized) j["normalized"].push_back(to_string(r));
        j["constant"] = C;
        emit(opt, j);
    } else if (cmd == "rr-residual") {
        Divisor d = load_divisor(opt);
        Json j;
        j["residuals"] = rr_residual_sequence(d, opt.L);
        j["bound"] = rr_residual_bound(*d.graph);
        emit(opt, j);
    } else if (cmd == "ind-rank") {
        RankInterval r;
        if (!opt.functions.empty()) {
            auto fs = load_functions(opt.functions);
            MetricDivisor d = load_metric_divisor(opt);
            r = ind_rank_bounds(fs.functions, d);
        } else {
            r = ind_rank(load_metric_divisor(opt));
        }
        emit(opt, rank_interval_to_json(r));
        if (opt.require_exact && !r.exact) return 2;
    } else if (cmd == "dependence") {
        auto fs = load_functions(opt.functions);
        auto witness = decide_dependence(fs.functions);
        Json j;
        j["dependent"] = witness.has_value();
        if (witness) {
            Json w = Json::array();
            for (auto& t : *witness) w.push_back(t.infinite ? "inf" : to_string(t.value));
            j["witness"] = std::move(w);
        }
        emit(opt, j);
    } else if (cmd == "product") {
        auto f1 = load_functions(opt.functions);
        auto f2 = load_functions(opt.functions2);
        auto prod = module_product(f1.functions, f2.functions);
        Json j;
        j["metric"] = metric_to_json(*f1.curve);
        j["functions"] = Json::array();
        for (auto& f : prod) j["functions"].push_back(plfunction_to_json(f));
        emit(opt, j);
    } else if (cmd == "pushforward") {
        PointMap rho = parse_point_map(load(opt.map));
        Json dj = load(opt.divisor);
        std::map<std::string, long long> d;
        for (auto& [label, k] : dj.at("coeffs").items()) d[label] = k.get<long long>();
        auto rep = vol_compat(d, rho);
        Json j;
        j["pushforward"] = metric_divisor_to_json(pushforward(d, rho));
        j["deg_source"] = rep.deg_source;
        j["deg_target"] = rep.deg_target;
        j["vol_target"] = to_string(rep.vol_target);
        j["equal"] = rep.equal;
        emit(opt, j);
    } else if (cmd == "corner-locus") {
        auto locus = corner_locus(parse_trop_poly(load(opt.poly)));
        emit(opt, corner_locus_to_json(locus));
        if (!opt.csv.empty()) {
            std::ofstream os(opt.csv);
            if (!os) throw Error(ErrorCode::BadInput, "cannot write " + opt.csv);
            os << "x,y\n";
            for (auto& v : locus.vertices)
                os << to_string(v.first) << ',' << to_string(v.second) << '\n';
        }
    } else {
        throw Error(ErrorCode::BadInput, "unknown subcommand " + cmd);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact divisor theory on multigraphs and tropical curves"};
    app.require_subcommand(1);
    Options opt;
    std::vector<CLI::App*> subs;
    for (const char* name : {"rank", "reduce", "effectivize", "volume", "chi", "rank-seq",
                             "rr-residual", "ind-rank", "dependence", "product", "pushforward",
                             "corner-locus"}) {
        auto* s = app.add_subcommand(name);
        s->add_option("--graph", opt.graph);
        s->add_option("--divisor", opt.divisor);
        s->add_option("--metric", opt.metric);
        s->add_option("--functions", opt.functions);
        s->add_option("--functions2", opt.functions2);
        s->add_option("--map", opt.map);
        s->add_option("--poly", opt.poly);
        s->add_option("--L", opt.L);
        s->add_option("--base", opt.base);
        s->add_flag("--require-exact", opt.require_exact);
        s->add_option("--out", opt.out);
        s->add_option("--csv", opt.csv);
        subs.push_back(s);
    }
    CLI11_PARSE(app, argc, argv);
    try {
        return run(app.get_subcommands().front()->get_name(), opt);
    } catch (const Error& e) {
        Json err;
        err["error"] = error_code_name(e.code);
        err["message"] = e.what();
        std::cerr << err.dump(2) << "\n";
        return 1;
    } catch (const std::exception& e) {
        Json err;
        err["error"] = "BadInput";
        err["message"] = e.what();
        std::cerr << err.dump(2) << "\n";
        return 1;
    }
}
