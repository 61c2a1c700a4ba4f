#include "tropdiv/tropical.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <tuple>

#include "tropdiv/model.hpp"

namespace tropdiv {

namespace {

using Samples = std::vector<std::pair<Rat, Rat>>;

long long seg_slope(const std::pair<Rat, Rat>& a, const std::pair<Rat, Rat>& b) {
    return ((b.second - a.second) / (b.first - a.first)).num();
}

}  // namespace

PLFunction trop_min(const PLFunction& f, const PLFunction& g) {
    PLFunction a = f.refined_along(g);
    PLFunction b = g.refined_along(f);
    const auto& c = *f.curve();
    std::vector<Samples> out(c.graph()->num_edges());
    for (int e = 0; e < c.graph()->num_edges(); ++e) {
        const auto& sa = a.edge_samples(e);
        const auto& sb = b.edge_samples(e);
        for (size_t i = 0; i < sa.size(); ++i) {
            if (i > 0) {
                // Insert the crossing point when the two graphs swap order.
                Rat d1 = sa[i - 1].second - sb[i - 1].second;
                Rat d2 = sa[i].second - sb[i].second;
                if (d1.sign() * d2.sign() < 0) {
                    Rat t = sa[i - 1].first +
                            (sa[i].first - sa[i - 1].first) * d1 / (d1 - d2);
                    Rat slope = (sa[i].second - sa[i - 1].second) /
                                (sa[i].first - sa[i - 1].first);
                    Rat val = sa[i - 1].second + slope * (t - sa[i - 1].first);
                    out[e].push_back({t, val});
                }
            }
            out[e].push_back({sa[i].first, Rat::min(sa[i].second, sb[i].second)});
        }
    }
    return PLFunction::build(f.curve(), std::move(out));
}

PLFunction trop_combination(const std::vector<TropicalNumber>& a,
                            const std::vector<PLFunction>& phis) {
    if (a.size() != phis.size()) throw Error(ErrorCode::BadInput, "coefficient count mismatch");
    std::optional<PLFunction> acc;
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].infinite) continue;
        PLFunction term = phis[i] + a[i].value;
        acc = acc ? trop_min(*acc, term) : term;
    }
    if (!acc) throw Error(ErrorCode::AllInfinite, "all coefficients infinite");
    return *acc;
}

namespace {

// One refinement segment: per function, value at the left end and slope.
struct Segment {
    Rat tau_max;
    std::vector<Rat> value;
    std::vector<long long> slope;
};

std::vector<Segment> common_segments(const std::vector<const PLFunction*>& fs) {
    const auto& c = *fs.front()->curve();
    std::vector<Segment> out;
    for (int e = 0; e < c.graph()->num_edges(); ++e) {
        std::vector<Rat> offs;
        for (auto* f : fs)
            for (auto& [t, v] : f->edge_samples(e)) offs.push_back(t);
        std::sort(offs.begin(), offs.end());
        offs.erase(std::unique(offs.begin(), offs.end()), offs.end());
        for (size_t i = 1; i < offs.size(); ++i) {
            Segment s;
            s.tau_max = offs[i] - offs[i - 1];
            for (auto* f : fs) {
                Rat v1 = f->eval(c.make_point(e, offs[i - 1]));
                Rat v2 = f->eval(c.make_point(e, offs[i]));
                s.value.push_back(v1);
                s.slope.push_back(((v2 - v1) / s.tau_max).num());
            }
            out.push_back(std::move(s));
        }
    }
    return out;
}

// Is index i the strict unique minimizer somewhere on [0, tau_max]?
bool unique_min_somewhere(const Segment& s, size_t i, const std::vector<Rat>& shift) {
    // Feasible tau interval: box [0, tau_max] closed, constraint bounds strict.
    Rat lo(0), hi = s.tau_max;
    bool lo_strict = false, hi_strict = false;
    for (size_t j = 0; j < s.value.size(); ++j) {
        if (j == i) continue;
        // (value_i + shift_i - value_j - shift_j) + (slope_i - slope_j) tau < 0
        Rat dc = s.value[i] + shift[i] - s.value[j] - shift[j];
        long long ds = s.slope[i] - s.slope[j];
        if (ds == 0) {
            if (dc.sign() >= 0) return false;
        } else {
            Rat bound = -dc / Rat(ds);
            if (ds > 0) {
                if (bound < hi || (bound == hi && !hi_strict)) {
                    hi = bound;
                    hi_strict = true;
                }
            } else {
                if (bound > lo || (bound == lo && !lo_strict)) {
                    lo = bound;
                    lo_strict = true;
                }
            }
        }
    }
    if (lo < hi) return true;
    return lo == hi && !lo_strict && !hi_strict;
}

}  // namespace

bool is_dependent_with(const std::vector<TropicalNumber>& a,
                       const std::vector<PLFunction>& phis) {
    if (a.size() != phis.size()) throw Error(ErrorCode::BadInput, "coefficient count mismatch");
    std::vector<const PLFunction*> fs;
    std::vector<Rat> shift;
    for (size_t i = 0; i < a.size(); ++i)
        if (!a[i].infinite) {
            fs.push_back(&phis[i]);
            shift.push_back(a[i].value);
        }
    if (fs.empty()) throw Error(ErrorCode::AllInfinite, "all coefficients infinite");
    if (fs.size() == 1) return false;
    for (auto& s : common_segments(fs))
        for (size_t i = 0; i < fs.size(); ++i)
            if (unique_min_somewhere(s, i, shift)) return false;
    return true;
}

namespace {

// Affine form w . a + c over the free coefficients.
struct AffForm {
    std::vector<Rat> w;
    Rat c;

    AffForm(int d) : w(d) {}
    AffForm operator-(const AffForm& o) const {
        AffForm r = *this;
        for (size_t k = 0; k < w.size(); ++k) r.w[k] -= o.w[k];
        r.c -= o.c;
        return r;
    }
    AffForm scaled(const Rat& f) const {
        AffForm r = *this;
        for (auto& x : r.w) x *= f;
        r.c *= f;
        return r;
    }
    bool constant() const {
        return std::all_of(w.begin(), w.end(), [](const Rat& x) { return x.is_zero(); });
    }
    Rat eval(const std::vector<Rat>& a) const {
        Rat v = c;
        for (size_t k = 0; k < w.size(); ++k) v += w[k] * a[k];
        return v;
    }
};

// Conjunction of strict inequalities form < 0.
using Region = std::vector<AffForm>;

// Hyperplane w . a + c = 0 with integer, normalized coefficients.
struct Plane {
    std::vector<long long> w;
    long long c = 0;
    friend bool operator<(const Plane& a, const Plane& b) {
        return std::tie(a.w, a.c) < std::tie(b.w, b.c);
    }
};

std::optional<Plane> normalize_plane(const AffForm& f) {
    long long den = f.c.den();
    for (auto& x : f.w) den = lcm_ll(den, x.den());
    Plane p;
    p.c = f.c.num() * (den / f.c.den());
    long long g = p.c < 0 ? -p.c : p.c;
    for (auto& x : f.w) {
        p.w.push_back(x.num() * (den / x.den()));
        long long ax = p.w.back() < 0 ? -p.w.back() : p.w.back();
        g = std::gcd(g, ax);
    }
    bool all_zero = std::all_of(p.w.begin(), p.w.end(), [](long long x) { return x == 0; });
    if (all_zero) return std::nullopt;
    if (g > 1) {
        p.c /= g;
        for (auto& x : p.w) x /= g;
    }
    for (auto& x : p.w) {
        if (x > 0) break;
        if (x < 0) {
            p.c = -p.c;
            for (auto& y : p.w) y = -y;
            break;
        }
    }
    return p;
}

// Solve the d x d system given by the planes; nullopt when singular.
std::optional<std::vector<Rat>> solve_planes(const std::vector<const Plane*>& ps, int d) {
    std::vector<std::vector<Rat>> m(d, std::vector<Rat>(d + 1));
    for (int r = 0; r < d; ++r) {
        for (int k = 0; k < d; ++k) m[r][k] = Rat(ps[r]->w[k]);
        m[r][d] = Rat(-ps[r]->c);
    }
    for (int col = 0; col < d; ++col) {
        int piv = -1;
        for (int r = col; r < d; ++r)
            if (!m[r][col].is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) return std::nullopt;
        std::swap(m[col], m[piv]);
        Rat inv = Rat(1) / m[col][col];
        for (int k = col; k <= d; ++k) m[col][k] *= inv;
        for (int r = 0; r < d; ++r) {
            if (r == col || m[r][col].is_zero()) continue;
            Rat f = m[r][col];
            for (int k = col; k <= d; ++k) m[r][k] -= f * m[col][k];
        }
    }
    std::vector<Rat> a(d);
    for (int r = 0; r < d; ++r) a[r] = m[r][d];
    return a;
}

bool avoids_all(const std::vector<Region>& regions, const std::vector<Rat>& a) {
    for (auto& reg : regions) {
        bool inside = true;
        for (auto& f : reg)
            if (f.eval(a).sign() >= 0) {
                inside = false;
                break;
            }
        if (inside) return false;
    }
    return true;
}

}  // namespace

std::optional<std::vector<TropicalNumber>> decide_dependence(const std::vector<PLFunction>& phis,
                                                             int max_size) {
    int r = (int)phis.size();
    if (r > max_size) throw Error(ErrorCode::BoundExceeded, "tuple too large for exact decision");
    if (r < 2) return std::nullopt;
    for (int i = 1; i < r; ++i)
        if (!phis[0].curve()->same_structure(*phis[i].curve()))
            throw Error(ErrorCode::GraphMismatch, "functions on different curves");

    for (unsigned mask = 0; mask < (1u << r); ++mask) {
        std::vector<int> sub;
        for (int i = 0; i < r; ++i)
            if (mask & (1u << i)) sub.push_back(i);
        if (sub.size() < 2) continue;
        int d = (int)sub.size() - 1;  // a[sub[0]] pinned to 0

        std::vector<const PLFunction*> fs;
        for (int i : sub) fs.push_back(&phis[i]);
        auto segs = common_segments(fs);

        // var(k): affine form of a_{sub[k]}.
        auto var = [&](int k) {
            AffForm f(d);
            if (k > 0) f.w[k - 1] = Rat(1);
            return f;
        };

        // Bad regions: "index i is strict unique minimizer somewhere on seg".
        std::vector<Region> regions;
        bool hopeless = false;
        for (auto& s : segs) {
            for (int i = 0; i < (int)fs.size() && !hopeless; ++i) {
                Region reg;
                std::vector<AffForm> lowers, uppers;  // strict bounds on tau
                bool empty = false;
                for (int j = 0; j < (int)fs.size(); ++j) {
                    if (j == i) continue;
                    AffForm dc = var(i) - var(j);
                    dc.c += s.value[i] - s.value[j];
                    long long ds = s.slope[i] - s.slope[j];
                    if (ds == 0) {
                        if (dc.constant() && dc.c.sign() >= 0) empty = true;
                        else if (!(dc.constant() && dc.c.sign() < 0)) reg.push_back(dc);
                    } else {
                        AffForm bound = dc.scaled(Rat(-1, ds));  // tau </> bound
                        (ds > 0 ? uppers : lowers).push_back(bound);
                    }
                }
                if (empty) continue;
                auto push = [&](AffForm f) {  // f < 0 required
                    if (f.constant()) {
                        if (f.c.sign() >= 0) empty = true;
                    } else {
                        reg.push_back(std::move(f));
                    }
                };
                for (auto& u : uppers) {
                    AffForm f(d);  // 0 < u, i.e. -u < 0
                    f = f - u;
                    push(std::move(f));
                }
                for (auto& l : lowers) {
                    AffForm f = l;  // l < tau_max
                    f.c -= s.tau_max;
                    push(std::move(f));
                }
                for (auto& l : lowers)
                    for (auto& u : uppers) push(l - u);
                if (empty) continue;
                if (reg.empty()) {  // whole a-space bad for this pattern
                    hopeless = true;
                    break;
                }
                regions.push_back(std::move(reg));
            }
            if (hopeless) break;
        }
        if (hopeless) continue;

        std::set<Plane> planes;
        for (auto& reg : regions)
            for (auto& f : reg)
                if (auto p = normalize_plane(f)) planes.insert(*p);

        // Box large enough to contain every arrangement vertex (Cramer bound).
        long long A = 1;
        for (auto& p : planes) {
            for (auto x : p.w) A = std::max(A, x < 0 ? -x : x);
            A = std::max(A, p.c < 0 ? -p.c : p.c);
        }
        __int128 bb = 1;
        for (int k = 0; k < d; ++k) bb *= (__int128)A * (k + 1);
        if (bb > (__int128)1e17) throw Error(ErrorCode::BoundExceeded, "coefficient bound too large");
        long long B = (long long)bb + 1;
        for (int k = 0; k < d; ++k) {
            Plane pos, neg;
            pos.w.assign(d, 0);
            neg.w.assign(d, 0);
            pos.w[k] = 1;
            pos.c = -B;
            neg.w[k] = 1;
            neg.c = B;
            planes.insert(pos);
            planes.insert(neg);
        }

        std::vector<const Plane*> all;
        for (auto& p : planes) all.push_back(&p);
        int h = (int)all.size();
        __int128 combos = 1;
        for (int k = 0; k < d; ++k) combos = combos * (h - k) / (k + 1);
        if (combos > 500000) throw Error(ErrorCode::BoundExceeded, "arrangement too large");

        std::optional<std::vector<Rat>> witness;
        std::vector<Rat> origin(d, Rat(0));
        if (avoids_all(regions, origin)) witness = origin;
        std::vector<int> idx(d);
        std::function<void(int, int)> pick = [&](int from, int k) {
            if (witness) return;
            if (k == d) {
                std::vector<const Plane*> ps;
                for (int t : idx) ps.push_back(all[t]);
                auto a = solve_planes(ps, d);
                if (a && avoids_all(regions, *a)) witness = *a;
                return;
            }
            for (int t = from; t < h; ++t) {
                idx[k] = t;
                pick(t + 1, k + 1);
            }
        };
        if (!witness && d > 0) pick(0, 0);

        if (witness) {
            std::vector<TropicalNumber> a(r);
            a[sub[0]] = TropicalNumber(Rat(0));
            for (int k = 1; k <= d; ++k) a[sub[k]] = TropicalNumber((*witness)[k - 1]);
            if (!is_dependent_with(a, phis))
                throw Error(ErrorCode::BadInput, "internal: witness failed verification");
            return a;
        }
    }
    return std::nullopt;
}

std::set<long long> slope_spectrum(const std::vector<PLFunction>& gens, int edge, const Rat& offset,
                                   bool forward) {
    std::set<long long> out;
    for (auto& g : gens) {
        if (forward) {
            out.insert(g.slope_after(edge, offset));
        } else {
            const auto& s = g.edge_samples(edge);
            auto it = std::lower_bound(s.begin(), s.end(), offset,
                                       [](const auto& sm, const Rat& x) { return sm.first < x; });
            if (it == s.begin() || it == s.end())
                throw Error(ErrorCode::BadInput, "no backward direction at this offset");
            out.insert(-seg_slope(*(it - 1), *it));
        }
    }
    return out;
}

RankInterval ind_rank_bounds(const std::vector<PLFunction>& gens, const MetricDivisor& d) {
    RankInterval out;
    if (gens.empty()) {
        out.exact = true;
        return out;
    }
    out.upper = d.degree() + 1;
    out.lower = 1;
    out.witness = {0};

    std::vector<const PLFunction*> fs;
    for (auto& g : gens) fs.push_back(&g);
    const auto& c = *gens.front().curve();
    for (int e = 0; e < c.graph()->num_edges(); ++e) {
        std::vector<Rat> offs;
        for (auto* f : fs)
            for (auto& [t, v] : f->edge_samples(e)) offs.push_back(t);
        std::sort(offs.begin(), offs.end());
        offs.erase(std::unique(offs.begin(), offs.end()), offs.end());
        for (size_t i = 1; i < offs.size(); ++i) {
            // Distinct constant slopes on a shared segment certify independence.
            std::map<long long, int> first_with_slope;
            for (size_t k = 0; k < fs.size(); ++k)
                first_with_slope.emplace(fs[k]->slope_after(e, offs[i - 1]), (int)k);
            if ((long long)first_with_slope.size() > out.lower) {
                out.lower = (long long)first_with_slope.size();
                out.witness.clear();
                for (auto& [s, k] : first_with_slope) out.witness.push_back(k);
                std::sort(out.witness.begin(), out.witness.end());
            }
        }
    }
    if (out.lower < out.upper && (int)gens.size() <= 5 && (long long)gens.size() > out.lower) {
        try {
            if (!decide_dependence(gens)) {
                out.lower = (long long)gens.size();
                out.witness.resize(gens.size());
                for (size_t k = 0; k < gens.size(); ++k) out.witness[k] = (int)k;
            }
        } catch (const Error&) {
            // bound exceeded: keep the slope certificate
        }
    }
    out.upper = std::max(out.upper, out.lower);
    out.exact = out.lower == out.upper;
    return out;
}

std::vector<PLFunction> module_product(const std::vector<PLFunction>& gens1,
                                       const std::vector<PLFunction>& gens2) {
    std::vector<PLFunction> out;
    for (auto& f : gens1)
        for (auto& g : gens2) {
            PLFunction h = f + g;
            bool dup = false;
            for (auto& o : out)
                if (o.proportional(h)) {
                    dup = true;
                    break;
                }
            if (!dup) out.push_back(std::move(h));
        }
    return out;
}

RankInterval ind_rank(const MetricDivisor& d) {
    return ind_rank_bounds(complete_series_generators(d), d);
}

std::optional<long long> ind_euler_char(const MetricDivisor& d) {
    RankInterval a = ind_rank(d);
    MetricDivisor k = metric_canonical(d.curve);
    RankInterval b = ind_rank(k - d);
    if (!a.exact || !b.exact) return std::nullopt;
    return a.lower - b.lower;
}

}  // namespace tropdiv
