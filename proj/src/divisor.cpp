#include "tropdiv/divisor.hpp"

#include <algorithm>
#include <climits>
#include <numeric>

namespace tropdiv {

namespace {

void check_same_graph(const Divisor& a, const Divisor& b) {
    if (a.graph.get() == b.graph.get()) return;
    if (!a.graph || !b.graph || !a.graph->same_structure(*b.graph))
        throw Error(ErrorCode::GraphMismatch, "divisors live on different graphs");
}

constexpr long long kRoundCap = 1000000;

}  // namespace

Divisor::Divisor(GraphPtr g, std::vector<long long> c) : graph(std::move(g)), coeffs(std::move(c)) {
    if (!graph) throw Error(ErrorCode::Empty, "divisor without graph");
    if ((int)coeffs.size() != graph->num_vertices())
        throw Error(ErrorCode::BadInput, "coefficient count != vertex count");
}

long long Divisor::degree() const {
    return std::accumulate(coeffs.begin(), coeffs.end(), 0LL);
}

bool Divisor::is_effective() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](long long c) { return c >= 0; });
}

Divisor Divisor::operator+(const Divisor& o) const {
    check_same_graph(*this, o);
    Divisor r = *this;
    for (size_t i = 0; i < coeffs.size(); ++i) r.coeffs[i] += o.coeffs[i];
    return r;
}

Divisor Divisor::operator-(const Divisor& o) const {
    check_same_graph(*this, o);
    Divisor r = *this;
    for (size_t i = 0; i < coeffs.size(); ++i) r.coeffs[i] -= o.coeffs[i];
    return r;
}

Divisor Divisor::operator*(long long k) const {
    Divisor r = *this;
    for (auto& c : r.coeffs) c *= k;
    return r;
}

bool Divisor::operator==(const Divisor& o) const {
    check_same_graph(*this, o);
    return coeffs == o.coeffs;
}

Divisor Divisor::positive_part() const {
    Divisor r = *this;
    for (auto& c : r.coeffs) c = std::max(c, 0LL);
    return r;
}

Divisor Divisor::negative_part() const {
    Divisor r = *this;
    for (auto& c : r.coeffs) c = std::min(c, 0LL);
    return r;
}

std::vector<int> Divisor::f_set() const {
    std::vector<int> s;
    for (int v = 0; v < graph->num_vertices(); ++v)
        if (coeffs[v] >= graph->valence(v)) s.push_back(v);
    return s;
}

Divisor zero_divisor(const GraphPtr& g) {
    return Divisor(g, std::vector<long long>(g->num_vertices(), 0));
}

Divisor canonical_divisor(const GraphPtr& g) { return Divisor(g, g->canonical_coeffs()); }

Divisor fire_set(const Divisor& d, const std::vector<int>& s) {
    const auto& g = *d.graph;
    std::vector<char> in(g.num_vertices(), 0);
    for (int v : s) {
        if (v < 0 || v >= g.num_vertices())
            throw Error(ErrorCode::UnknownVertex, "fire_set vertex index");
        in[v] = 1;
    }
    Divisor r = d;
    for (auto [a, b] : g.edges()) {
        if (a == b) continue;
        if (in[a] && !in[b]) {
            r.coeffs[a]--;
            r.coeffs[b]++;
        } else if (in[b] && !in[a]) {
            r.coeffs[b]--;
            r.coeffs[a]++;
        }
    }
    return r;
}

namespace {

// Appends `times` identical set-firing rounds to the trace.
void record_rounds(std::optional<FiringTrace>& trace, const Divisor& start,
                   const std::vector<int>& set, long long times, const Divisor& end) {
    if (!trace) return;
    if ((long long)trace->rounds.size() + times > kRoundCap)
        throw Error(ErrorCode::BoundExceeded, "firing trace too long");
    Divisor cur = start;
    for (long long i = 0; i < times; ++i) {
        cur = fire_set(cur, set);
        trace->rounds.push_back({set, cur});
    }
    if (!(cur == end)) throw Error(ErrorCode::BadInput, "trace reconstruction mismatch");
}

}  // namespace

ReduceResult reduce_full(const Divisor& d, int q, bool want_trace) {
    const auto& g = *d.graph;
    int n = g.num_vertices();
    if (q < 0 || q >= n) throw Error(ErrorCode::UnknownVertex, "base vertex");

    ReduceResult res;
    res.firings.assign(n, 0);
    if (want_trace) res.trace = FiringTrace{};

    std::vector<long long> c = d.coeffs;
    auto depth = g.bfs_depths(q);
    int maxd = *std::max_element(depth.begin(), depth.end());

    // Phase 1: make every v != q nonnegative, deepest levels first. Un-firing
    // the set {depth >= k} only raises the depth-k boundary and leaves deeper
    // vertices untouched.
    for (int k = maxd; k >= 1; --k) {
        long long t = 0;
        for (int v = 0; v < n; ++v) {
            if (depth[v] != k || c[v] >= 0) continue;
            long long gain = 0;  // edges from v to depth k-1
            for (auto [e, w] : g.incident(v))
                if (depth[w] < k) ++gain;
            t = std::max(t, (-c[v] + gain - 1) / gain);
        }
        if (t == 0) continue;
        std::vector<int> complement;
        for (int v = 0; v < n; ++v)
            if (depth[v] < k) complement.push_back(v);
        Divisor before(d.graph, c);
        for (auto [a, b] : g.edges()) {
            if (a == b) continue;
            bool ia = depth[a] >= k, ib = depth[b] >= k;
            if (ia && !ib) {
                c[a] += t;
                c[b] -= t;
            } else if (ib && !ia) {
                c[b] += t;
                c[a] -= t;
            }
        }
        for (int v : complement) res.firings[v] += t;
        record_rounds(res.trace, before, complement, t, Divisor(d.graph, c));
    }

    // Phase 2: Dhar burning from q; fire the unburnt set until superstable.
    for (long long round = 0;; ++round) {
        if (round > kRoundCap) throw Error(ErrorCode::BoundExceeded, "q-reduction did not settle");
        std::vector<char> burnt(n, 0);
        burnt[q] = 1;
        bool changed = true;
        while (changed) {
            changed = false;
            for (int v = 0; v < n; ++v) {
                if (burnt[v]) continue;
                long long heat = 0;
                for (auto [e, w] : g.incident(v))
                    if (burnt[w]) ++heat;
                if (heat > c[v]) {
                    burnt[v] = 1;
                    changed = true;
                }
            }
        }
        std::vector<int> unburnt;
        for (int v = 0; v < n; ++v)
            if (!burnt[v]) unburnt.push_back(v);
        if (unburnt.empty()) break;
        long long m = -1;
        for (int v : unburnt) {
            long long boundary = 0;
            for (auto [e, w] : g.incident(v))
                if (burnt[w]) ++boundary;
            if (boundary > 0) {
                long long lim = c[v] / boundary;
                m = m < 0 ? lim : std::min(m, lim);
            }
        }
        if (m < 1) m = 1;
        Divisor before(d.graph, c);
        for (auto [a, b] : g.edges()) {
            if (a == b) continue;
            bool ia = !burnt[a], ib = !burnt[b];
            if (ia && !ib) {
                c[a] -= m;
                c[b] += m;
            } else if (ib && !ia) {
                c[b] -= m;
                c[a] += m;
            }
        }
        for (int v : unburnt) res.firings[v] += m;
        record_rounds(res.trace, before, unburnt, m, Divisor(d.graph, c));
    }

    long long base = res.firings[q];
    for (auto& x : res.firings) x -= base;
    res.reduced = Divisor(d.graph, std::move(c));
    return res;
}

Divisor reduce(const Divisor& d, int q) { return reduce_full(d, q).reduced; }

bool linearly_equivalent(const Divisor& a, const Divisor& b) {
    check_same_graph(a, b);
    if (a.degree() != b.degree()) return false;
    return reduce(a).coeffs == reduce(b).coeffs;
}

bool has_effective(const Divisor& d) {
    if (d.degree() < 0) return false;
    if (d.is_effective()) return true;
    return reduce(d).is_effective();
}

long long constant_C(const Multigraph& g) {
    return 2LL * (g.num_edges() + 1) * (g.num_vertices() + 1);
}

RankEngine::RankEngine(GraphPtr g) : graph_(std::move(g)) {}

long long RankEngine::rank(const Divisor& d) {
    if (!d.graph->same_structure(*graph_))
        throw Error(ErrorCode::GraphMismatch, "rank engine bound to another graph");
    return rank(d.coeffs);
}

long long RankEngine::rank(const std::vector<long long>& coeffs) {
    long long deg = std::accumulate(coeffs.begin(), coeffs.end(), 0LL);
    if (deg < 0) return -1;
    return rank_reduced(reduce(Divisor(graph_, coeffs)).coeffs);
}

long long RankEngine::rank_reduced(std::vector<long long> red) {
    auto it = memo_.find(red);
    if (it != memo_.end()) return it->second;
    long long ans;
    if (red[0] < 0) {
        ans = -1;
    } else {
        // r(D) = 1 + min_v r(D - v); the minimum realizes the adversarial chip.
        ans = LLONG_MAX;
        for (int v = 0; v < graph_->num_vertices(); ++v) {
            red[v] -= 1;
            long long sub = rank_reduced(reduce(Divisor(graph_, red)).coeffs);
            red[v] += 1;
            ans = std::min(ans, sub);
            if (ans == -1) break;
        }
        ans += 1;
    }
    memo_.emplace(std::move(red), ans);
    return ans;
}

long long bn_rank(const Divisor& d) {
    RankEngine eng(d.graph);
    return eng.rank(d);
}

EffectivizeResult effectivize(const Divisor& d) {
    EffectivizeResult out;
    out.representative = d;
    if (d.degree() < 0) return out;
    if (d.is_effective()) {
        out.found = true;
        return out;
    }
    if (d.degree() >= constant_C(*d.graph)) {
        Divisor e = d;
        for (long long round = 0;; ++round) {
            if (round > kRoundCap) throw Error(ErrorCode::BoundExceeded, "schedule round cap hit");
            auto s = e.f_set();
            if (s.empty()) throw Error(ErrorCode::ScheduleStalled, "empty F-set before effectivity");
            e = fire_set(e, s);
            out.trace.rounds.push_back({s, e});
            if (e.is_effective()) break;
        }
        out.found = true;
        out.representative = e;
        return out;
    }
    auto rr = reduce_full(d, 0, true);
    if (rr.reduced.is_effective()) {
        out.found = true;
        out.representative = rr.reduced;
        out.trace = *rr.trace;
    }
    return out;
}

EffectivizeResult effectivize_saturated(const Divisor& d) {
    const auto& g = *d.graph;
    if (d.degree() < 2 * constant_C(g))
        throw Error(ErrorCode::BadInput, "saturation needs deg >= 2 C_G");
    EffectivizeResult out;
    Divisor e = d;
    for (long long round = 0;; ++round) {
        if (round > kRoundCap) throw Error(ErrorCode::BoundExceeded, "saturation round cap hit");
        bool saturated = true;
        for (int v = 0; v < g.num_vertices() && saturated; ++v)
            if (e.coeffs[v] < g.valence(v)) saturated = false;
        if (saturated) break;
        std::vector<int> s;  // F_2 set
        for (int v = 0; v < g.num_vertices(); ++v)
            if (e.coeffs[v] >= 2 * g.valence(v)) s.push_back(v);
        if (s.empty()) throw Error(ErrorCode::ScheduleStalled, "empty F_2-set before saturation");
        e = fire_set(e, s);
        out.trace.rounds.push_back({s, e});
    }
    out.found = true;
    out.representative = e;
    return out;
}

long long euler_char(RankEngine& engine, const Divisor& d) {
    Divisor k = canonical_divisor(d.graph);
    return engine.rank(d) - engine.rank(k - d);
}

long long euler_char(const Divisor& d) {
    RankEngine eng(d.graph);
    return euler_char(eng, d);
}

}  // namespace tropdiv
