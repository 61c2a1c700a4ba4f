#include "tropdiv/plfunction.hpp"

#include <algorithm>
#include <optional>

namespace tropdiv {

namespace {

using Samples = std::vector<std::pair<Rat, Rat>>;

// Slope of the segment between consecutive samples; throws unless integral.
long long segment_slope(const std::pair<Rat, Rat>& a, const std::pair<Rat, Rat>& b) {
    Rat s = (b.second - a.second) / (b.first - a.first);
    if (!s.is_integer()) throw Error(ErrorCode::BadInput, "non-integer slope");
    return s.num();
}

Samples drop_collinear(const Samples& in) {
    Samples out;
    for (auto& p : in) {
        while (out.size() >= 2 &&
               segment_slope(out[out.size() - 2], out.back()) == segment_slope(out.back(), p))
            out.pop_back();
        out.push_back(p);
    }
    return out;
}

Samples with_offsets(const Samples& in, const std::vector<Rat>& offsets) {
    Samples out = in;
    for (auto& t : offsets) {
        auto it = std::lower_bound(out.begin(), out.end(), t,
                                   [](const auto& s, const Rat& x) { return s.first < x; });
        if (it != out.end() && it->first == t) continue;
        auto prev = it - 1;
        Rat val = prev->second + Rat(segment_slope(*prev, *it)) * (t - prev->first);
        out.insert(it, {t, val});
    }
    return out;
}

}  // namespace

PLFunction PLFunction::build(MetricPtr curve, std::vector<std::vector<std::pair<Rat, Rat>>> samples) {
    if (!curve) throw Error(ErrorCode::Empty, "function without curve");
    const auto& g = *curve->graph();
    if ((int)samples.size() != g.num_edges())
        throw Error(ErrorCode::BadInput, "sample list count != edge count");
    std::vector<std::optional<Rat>> vertex_val(g.num_vertices());
    auto meet = [&](int v, const Rat& val) {
        if (!vertex_val[v])
            vertex_val[v] = val;
        else if (*vertex_val[v] != val)
            throw Error(ErrorCode::BadInput, "discontinuous at vertex " + g.vertex_ids()[v]);
    };
    for (int e = 0; e < g.num_edges(); ++e) {
        auto& s = samples[e];
        if (s.size() < 2 || !s.front().first.is_zero() || s.back().first != curve->length(e))
            throw Error(ErrorCode::BadInput, "edge samples must span [0, length]");
        for (size_t i = 1; i < s.size(); ++i) {
            if (!(s[i - 1].first < s[i].first))
                throw Error(ErrorCode::BadInput, "offsets must increase");
            segment_slope(s[i - 1], s[i]);
        }
        s = drop_collinear(s);
        meet(g.edges()[e].first, s.front().second);
        meet(g.edges()[e].second, s.back().second);
    }
    PLFunction f;
    f.curve_ = std::move(curve);
    f.samples_ = std::move(samples);
    return f;
}

PLFunction PLFunction::constant(MetricPtr curve, const Rat& value) {
    std::vector<Samples> s(curve->graph()->num_edges());
    for (int e = 0; e < curve->graph()->num_edges(); ++e)
        s[e] = {{Rat(0), value}, {curve->length(e), value}};
    return build(std::move(curve), std::move(s));
}

Rat PLFunction::at_vertex(int v) const {
    for (int e = 0; e < curve_->graph()->num_edges(); ++e) {
        auto [a, b] = curve_->graph()->edges()[e];
        if (a == v) return samples_[e].front().second;
        if (b == v) return samples_[e].back().second;
    }
    throw Error(ErrorCode::UnknownVertex, "vertex index");
}

Rat PLFunction::eval(const Point& p) const {
    if (p.is_vertex()) return at_vertex(p.vertex);
    const auto& s = samples_[p.edge];
    auto it = std::upper_bound(s.begin(), s.end(), p.offset,
                               [](const Rat& x, const auto& sm) { return x < sm.first; });
    auto prev = it - 1;
    if (it == s.end()) return prev->second;
    return prev->second + Rat(segment_slope(*prev, *it)) * (p.offset - prev->first);
}

long long PLFunction::slope_after(int e, const Rat& t) const {
    const auto& s = samples_[e];
    auto it = std::upper_bound(s.begin(), s.end(), t,
                               [](const Rat& x, const auto& sm) { return x < sm.first; });
    if (it == s.end() || it == s.begin())
        throw Error(ErrorCode::BadInput, "offset outside edge interior");
    return segment_slope(*(it - 1), *it);
}

PLFunction PLFunction::operator+(const PLFunction& o) const {
    if (!curve_->same_structure(*o.curve_))
        throw Error(ErrorCode::GraphMismatch, "functions on different curves");
    std::vector<Samples> out(samples_.size());
    for (size_t e = 0; e < samples_.size(); ++e) {
        std::vector<Rat> offs;
        for (auto& [t, v] : o.samples_[e]) offs.push_back(t);
        Samples a = with_offsets(samples_[e], offs);
        offs.clear();
        for (auto& [t, v] : samples_[e]) offs.push_back(t);
        Samples b = with_offsets(o.samples_[e], offs);
        for (size_t i = 0; i < a.size(); ++i) out[e].push_back({a[i].first, a[i].second + b[i].second});
    }
    return build(curve_, std::move(out));
}

PLFunction PLFunction::operator-(const PLFunction& o) const { return *this + (o * -1); }

PLFunction PLFunction::operator+(const Rat& c) const {
    PLFunction f = *this;
    for (auto& edge : f.samples_)
        for (auto& [t, v] : edge) v += c;
    return f;
}

PLFunction PLFunction::operator*(long long k) const {
    PLFunction f = *this;
    for (auto& edge : f.samples_)
        for (auto& [t, v] : edge) v *= Rat(k);
    if (k == 0)
        for (auto& edge : f.samples_) edge = {edge.front(), edge.back()};
    return f;
}

bool PLFunction::proportional(const PLFunction& o) const {
    PLFunction d = *this - o;
    Rat c = d.samples_.front().front().second;
    for (auto& edge : d.samples_)
        for (auto& [t, v] : edge)
            if (v != c) return false;
    return true;
}

bool PLFunction::operator==(const PLFunction& o) const {
    return curve_->same_structure(*o.curve_) && samples_ == o.samples_;
}

PLFunction PLFunction::refined_along(const PLFunction& o) const {
    if (!curve_->same_structure(*o.curve_))
        throw Error(ErrorCode::GraphMismatch, "functions on different curves");
    PLFunction f = *this;
    for (size_t e = 0; e < samples_.size(); ++e) {
        std::vector<Rat> offs;
        for (auto& [t, v] : o.samples_[e]) offs.push_back(t);
        f.samples_[e] = with_offsets(f.samples_[e], offs);
    }
    return f;
}

MetricDivisor pl_div(const PLFunction& f) {
    const auto& c = *f.curve();
    const auto& g = *c.graph();
    MetricDivisor d(f.curve());
    std::vector<long long> vertex_out(g.num_vertices(), 0);  // sum of outgoing slopes
    for (int e = 0; e < g.num_edges(); ++e) {
        const auto& s = f.edge_samples(e);
        for (size_t i = 1; i + 1 < s.size(); ++i) {
            long long left = segment_slope(s[i - 1], s[i]);
            long long right = segment_slope(s[i], s[i + 1]);
            d.add(c.make_point(e, s[i].first), left - right);
        }
        auto [a, b] = g.edges()[e];
        vertex_out[a] += segment_slope(s[0], s[1]);
        vertex_out[b] -= segment_slope(s[s.size() - 2], s.back());
    }
    for (int v = 0; v < g.num_vertices(); ++v) d.add(c.vertex_point(v), -vertex_out[v]);
    return d;
}

bool in_R(const MetricDivisor& d, const PLFunction& f) {
    if (!d.curve->same_structure(*f.curve()))
        throw Error(ErrorCode::GraphMismatch, "divisor and function on different curves");
    MetricDivisor dv = pl_div(f);
    dv.curve = d.curve;
    return (d + dv).is_effective();
}

}  // namespace tropdiv
