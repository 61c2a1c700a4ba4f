#include "tropdiv/specialization.hpp"

#include <algorithm>
#include <numeric>

#include "tropdiv/asymptotics.hpp"

namespace tropdiv {

MetricDivisor pushforward(const std::map<std::string, long long>& d, const PointMap& rho) {
    MetricDivisor out(rho.curve);
    long long deg = 0;
    for (auto& [label, k] : d) {
        auto it = rho.assignments.find(label);
        if (it == rho.assignments.end())
            throw Error(ErrorCode::UnassignedLabel, "no target for point " + label);
        out.add(it->second, k);
        deg += k;
    }
    if (out.degree() != deg) throw Error(ErrorCode::BadInput, "internal: degree not preserved");
    return out;
}

VolCompatReport vol_compat(const std::map<std::string, long long>& d, const PointMap& rho) {
    VolCompatReport rep;
    MetricDivisor pushed = pushforward(d, rho);
    for (auto& [label, k] : d) rep.deg_source += k;
    rep.deg_target = pushed.degree();
    rep.vol_target = tropical_volume(rep.deg_target);
    rep.equal = rep.vol_target == tropical_volume(rep.deg_source);
    return rep;
}

TropPoly2 TropPoly2::build(std::vector<TropTerm> terms) {
    if (terms.empty()) throw Error(ErrorCode::Empty, "polynomial needs at least one term");
    TropPoly2 f;
    for (auto& t : terms) {
        bool merged = false;
        for (auto& u : f.terms)
            if (u.a == t.a && u.b == t.b) {
                u.c = Rat::min(u.c, t.c);
                merged = true;
                break;
            }
        if (!merged) f.terms.push_back(t);
    }
    return f;
}

TropEval eval_trop_poly(const TropPoly2& f, const Rat& x, const Rat& y) {
    TropEval out;
    for (int i = 0; i < (int)f.terms.size(); ++i) {
        Rat v = f.terms[i].c + Rat(f.terms[i].a) * x + Rat(f.terms[i].b) * y;
        if (out.argmin.empty() || v < out.value) {
            out.value = v;
            out.argmin = {i};
        } else if (v == out.value) {
            out.argmin.push_back(i);
        }
    }
    return out;
}

namespace {

std::pair<long long, long long> primitive(long long dx, long long dy) {
    long long g = std::gcd(dx < 0 ? -dx : dx, dy < 0 ? -dy : dy);
    return {dx / g, dy / g};
}

Pt2 at(const Pt2& p0, const std::pair<long long, long long>& dir, const Rat& t) {
    return {p0.first + Rat(dir.first) * t, p0.second + Rat(dir.second) * t};
}

}  // namespace

CornerLocus corner_locus(const TropPoly2& f) {
    int n = (int)f.terms.size();
    if (n < 2) throw Error(ErrorCode::DegeneratePolynomial, "fewer than two distinct terms");
    CornerLocus out;
    std::vector<Pt2> verts;
    std::vector<std::pair<Pt2, Pt2>> edges;
    std::vector<std::pair<Pt2, std::pair<long long, long long>>> rays;

    auto push_vertex = [&](const Pt2& p) {
        if (std::find(verts.begin(), verts.end(), p) == verts.end()) verts.push_back(p);
    };

    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            long long da = f.terms[i].a - f.terms[j].a;
            long long db = f.terms[i].b - f.terms[j].b;
            Rat dc = f.terms[i].c - f.terms[j].c;
            if (da == 0 && db == 0) continue;  // merged duplicates never reach here
            // Tie line da*x + db*y + dc = 0, direction (-db, da).
            auto dir = primitive(-db, da);
            Pt2 p0 = da != 0 ? Pt2{-dc / Rat(da), Rat(0)} : Pt2{Rat(0), -dc / Rat(db)};
            // Clip to where the pair attains the global min.
            bool empty = false, has_lo = false, has_hi = false;
            Rat tlo, thi;
            for (int k = 0; k < n && !empty; ++k) {
                if (k == i || k == j) continue;
                Rat alpha = Rat(f.terms[i].a - f.terms[k].a) * Rat(dir.first) +
                            Rat(f.terms[i].b - f.terms[k].b) * Rat(dir.second);
                Rat beta = (f.terms[i].c - f.terms[k].c) +
                           Rat(f.terms[i].a - f.terms[k].a) * p0.first +
                           Rat(f.terms[i].b - f.terms[k].b) * p0.second;
                if (alpha.is_zero()) {
                    if (beta.sign() > 0) empty = true;
                } else {
                    Rat bound = -beta / alpha;
                    if (alpha.sign() > 0) {
                        if (!has_hi || bound < thi) thi = bound;
                        has_hi = true;
                    } else {
                        if (!has_lo || bound > tlo) tlo = bound;
                        has_lo = true;
                    }
                }
            }
            if (empty || (has_lo && has_hi && thi < tlo)) continue;
            if (has_lo && has_hi) {
                Pt2 p = at(p0, dir, tlo), q = at(p0, dir, thi);
                push_vertex(p);
                if (p == q) continue;
                push_vertex(q);
                auto seg = std::minmax(p, q);
                if (std::find(edges.begin(), edges.end(),
                              std::make_pair(seg.first, seg.second)) == edges.end())
                    edges.push_back({seg.first, seg.second});
            } else if (has_lo || has_hi) {
                Pt2 base = at(p0, dir, has_lo ? tlo : thi);
                auto rd = has_lo ? dir : std::make_pair(-dir.first, -dir.second);
                push_vertex(base);
                if (std::find(rays.begin(), rays.end(), std::make_pair(base, rd)) == rays.end())
                    rays.push_back({base, rd});
            } else {
                // Whole line: two opposite rays from the base point, no vertex.
                rays.push_back({p0, dir});
                rays.push_back({p0, {-dir.first, -dir.second}});
            }
        }

    // Keep only genuine vertices (min attained by >= 3 terms).
    for (auto& p : verts)
        if ((int)eval_trop_poly(f, p.first, p.second).argmin.size() >= 3)
            out.vertices.push_back(p);
    out.edges = std::move(edges);
    out.rays = std::move(rays);
    return out;
}

}  // namespace tropdiv
