#include "tropdiv/moves.hpp"

#include <algorithm>

#include "tropdiv/model.hpp"

namespace tropdiv {

PLFunction radial_function(const MetricPtr& c, int v, const Rat& s) {
    if (s.sign() < 0) throw Error(ErrorCode::BadInput, "radius must be >= 0");
    const auto& g = *c->graph();
    std::vector<std::vector<std::pair<Rat, Rat>>> samples(g.num_edges());
    for (int e = 0; e < g.num_edges(); ++e) {
        auto [a, b] = g.edges()[e];
        Rat L = c->length(e);
        Rat da = c->vertex_distance(a, v), db = c->vertex_distance(b, v);
        auto f = [&](const Rat& t) { return Rat::min(Rat::min(da + t, db + L - t), s); };
        std::vector<Rat> offs{Rat(0), L, (db + L - da) / Rat(2), s - da, db + L - s};
        std::sort(offs.begin(), offs.end());
        for (auto& t : offs) {
            if (t.sign() < 0 || t > L) continue;
            if (!samples[e].empty() && samples[e].back().first == t) continue;
            samples[e].push_back({t, f(t)});
        }
    }
    return PLFunction::build(c, std::move(samples));
}

namespace {

struct Chain {
    std::vector<std::pair<int, bool>> edges;  // (edge index, traversed forward?)
    int v_start = -1, v_end = -1;             // essential endpoints
    std::vector<Rat> cum;                     // cumulative lengths, cum[0] = 0
};

std::vector<Chain> topological_chains(const MetricGraph& c) {
    const auto& g = *c.graph();
    int n = g.num_vertices();
    // All edge-ends per vertex, loops contributing both ends.
    std::vector<std::vector<std::pair<int, bool>>> ends(n);  // (edge, leaving via first end?)
    for (int e = 0; e < g.num_edges(); ++e) {
        auto [a, b] = g.edges()[e];
        ends[a].push_back({e, true});
        ends[b].push_back({e, false});
    }
    std::vector<char> used(g.num_edges(), 0);
    std::vector<Chain> chains;
    for (int v : c.essential_vertices()) {
        for (auto [e0, fwd0] : ends[v]) {
            if (used[e0]) continue;
            used[e0] = 1;
            Chain ch;
            ch.v_start = v;
            ch.edges.push_back({e0, fwd0});
            auto [a0, b0] = g.edges()[e0];
            int cur = fwd0 ? b0 : a0;
            while (!c.is_essential(cur)) {
                bool advanced = false;
                for (auto [e, fwd] : ends[cur]) {
                    if (used[e]) continue;
                    used[e] = 1;
                    ch.edges.push_back({e, fwd});
                    auto [a, b] = g.edges()[e];
                    cur = fwd ? b : a;
                    advanced = true;
                    break;
                }
                if (!advanced) throw Error(ErrorCode::BadInput, "broken chain walk");
            }
            ch.v_end = cur;
            ch.cum.push_back(Rat(0));
            for (auto [e, fwd] : ch.edges) ch.cum.push_back(ch.cum.back() + c.length(e));
            chains.push_back(std::move(ch));
        }
    }
    return chains;
}

Rat chain_length(const Chain& ch) { return ch.cum.back(); }

// Positions of chips strictly inside the chain, with coefficients.
std::vector<std::pair<Rat, long long>> interior_chips(const MetricGraph& c, const Chain& ch,
                                                      const MetricDivisor& d, bool positive_only) {
    std::vector<std::pair<Rat, long long>> out;
    const auto& g = *c.graph();
    for (size_t i = 0; i < ch.edges.size(); ++i) {
        auto [e, fwd] = ch.edges[i];
        Rat L = c.length(e);
        for (auto& [p, k] : d.coeffs) {
            if (p.is_vertex() || p.edge != e) continue;
            if (positive_only && k < 0) continue;
            out.push_back({ch.cum[i] + (fwd ? p.offset : L - p.offset), k});
        }
        if (i + 1 < ch.edges.size()) {  // junction vertex inside the chain
            auto [a, b] = g.edges()[e];
            int jv = fwd ? b : a;
            long long k = d.at(c.vertex_point(jv));
            if (k != 0 && (!positive_only || k > 0)) out.push_back({ch.cum[i + 1], k});
        }
    }
    std::sort(out.begin(), out.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    return out;
}

// PL function that is zero off the chain and follows the given r-profile
// (breakpoint positions in chain coordinates) along it.
PLFunction chain_profile(const MetricPtr& c, const Chain& ch,
                         const std::vector<std::pair<Rat, Rat>>& profile) {
    const auto& g = *c->graph();
    auto value_at = [&](const Rat& r) {
        auto it = std::upper_bound(profile.begin(), profile.end(), r,
                                   [](const Rat& x, const auto& s) { return x < s.first; });
        if (it == profile.begin()) return profile.front().second;
        if (it == profile.end()) return profile.back().second;
        auto prev = it - 1;
        Rat slope = (it->second - prev->second) / (it->first - prev->first);
        return prev->second + slope * (r - prev->first);
    };
    std::vector<std::vector<std::pair<Rat, Rat>>> samples(g.num_edges());
    for (int e = 0; e < g.num_edges(); ++e)
        samples[e] = {{Rat(0), Rat(0)}, {c->length(e), Rat(0)}};
    for (size_t i = 0; i < ch.edges.size(); ++i) {
        auto [e, fwd] = ch.edges[i];
        Rat L = c->length(e);
        std::vector<Rat> offs{Rat(0), L};
        for (auto& [r, val] : profile)
            if (ch.cum[i] < r && r < ch.cum[i + 1])
                offs.push_back(fwd ? r - ch.cum[i] : L - (r - ch.cum[i]));
        std::sort(offs.begin(), offs.end());
        samples[e].clear();
        for (auto& t : offs) {
            if (!samples[e].empty() && samples[e].back().first == t) continue;
            Rat r = fwd ? ch.cum[i] + t : ch.cum[i] + (L - t);
            samples[e].push_back({t, value_at(r)});
        }
    }
    return PLFunction::build(c, std::move(samples));
}

std::optional<PLFunction> chain_move(const MetricDivisor& d, const Chain& ch) {
    const auto& c = *d.curve;
    auto chips = interior_chips(c, ch, d, true);
    long long total = 0;
    for (auto& [r, k] : chips) total += k;
    if (total < 2) return std::nullopt;

    Rat L = chain_length(ch);
    Rat s1 = chips.front().first;             // nearest chip from the start
    Rat s2 = L - chips.back().first;          // nearest chip from the end
    bool reversed = s2 < s1 || (s1 == s2 && ch.v_end < ch.v_start);
    Rat a = reversed ? s2 : s1;               // slope -1 span from the chosen start
    Rat b = reversed ? s1 : s2;
    // Profile in oriented chain coordinates: dip to -a, climb back over [L-b, L-b+a].
    std::vector<std::pair<Rat, Rat>> prof{{Rat(0), Rat(0)}, {a, -a}, {L - b, -a},
                                          {L - b + a, Rat(0)}, {L, Rat(0)}};
    std::vector<std::pair<Rat, Rat>> clean;
    for (auto& [r, v] : prof) {
        Rat rr = reversed ? L - r : r;
        if (!clean.empty() && clean.back().first == rr) continue;
        clean.push_back({rr, v});
    }
    if (reversed) std::reverse(clean.begin(), clean.end());
    return chain_profile(d.curve, ch, clean);
}

}  // namespace

PLFunction edge_move_function(const MetricDivisor& d, int chain_index) {
    auto chains = topological_chains(*d.curve);
    if (chain_index < 0 || chain_index >= (int)chains.size())
        throw Error(ErrorCode::BadInput, "chain index out of range");
    auto f = chain_move(d, chains[chain_index]);
    if (!f) throw Error(ErrorCode::BadInput, "chain carries fewer than two interior chips");
    return *f;
}

MetricDivisor concentrate_degree(const MetricDivisor& d) {
    auto chains = topological_chains(*d.curve);
    MetricDivisor f = d;
    for (long long guard = 0;; ++guard) {
        if (guard > 1000000) throw Error(ErrorCode::BoundExceeded, "concentration did not settle");
        bool moved = false;
        for (auto& ch : chains) {
            auto mv = chain_move(f, ch);
            if (mv) {
                f = f + pl_div(*mv);
                moved = true;
                break;
            }
        }
        if (!moved) return f;
    }
}

MetricEffectivizeResult metric_effectivize(const MetricDivisor& d) {
    MetricEffectivizeResult out;
    out.representative = d;
    if (d.is_effective()) {
        out.found = true;
        return out;
    }
    if (d.degree() < 0) return out;
    const auto& c = *d.curve;

    auto fallback = [&]() {
        out.used_model_fallback = true;
        auto red = metric_model_reduce(d);
        out.found = red.is_effective();
        if (out.found) out.representative = red;
        return out;
    };
    if (d.degree() < constant_c(c)) return fallback();

    MetricDivisor f = d;
    for (out.rounds = 0; out.rounds < 10000; ++out.rounds) {
        f = concentrate_degree(f);
        if (f.is_effective()) {
            out.found = true;
            out.representative = f;
            return out;
        }
        // Essential vertices ready to fire their radial move.
        std::vector<int> firing;
        for (int v : c.essential_vertices())
            if (f.at(c.vertex_point(v)) >= c.graph()->valence(v)) firing.push_back(v);
        if (firing.empty()) {
            out.schedule_clean = false;
            return fallback();
        }
        for (int v : firing) {
            Point pv = c.vertex_point(v);
            std::optional<Rat> s;
            for (int w : c.essential_vertices())
                if (w != v) {
                    Rat dw = c.vertex_distance(v, w);
                    s = s ? Rat::min(*s, dw) : dw;
                }
            for (auto& [p, k] : f.coeffs)
                if (k < 0 && !(p == pv)) {
                    Rat dp = c.distance(pv, p);
                    s = s ? Rat::min(*s, dp) : dp;
                }
            if (!s || s->sign() <= 0) {
                out.schedule_clean = false;
                return fallback();
            }
            PLFunction fv = radial_function(d.curve, v, *s);
            MetricDivisor dv = pl_div(fv);
            if (dv.at(pv) != -c.graph()->valence(v)) out.schedule_clean = false;
            f = f + dv;
        }
    }
    out.schedule_clean = false;
    return fallback();
}

}  // namespace tropdiv
