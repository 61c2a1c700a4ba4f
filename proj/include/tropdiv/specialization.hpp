// Specialization layer: divisor pushforward along a point assignment,
// volume-compatibility reports, and corner loci of bivariate min-plus
// polynomials.
#pragma once

#include "tropdiv/metric.hpp"

namespace tropdiv {

struct PointMap {
    MetricPtr curve;
    std::map<std::string, Point> assignments;
};

// sum a_i rho(p_i); coincident targets merge. Degree preservation asserted.
MetricDivisor pushforward(const std::map<std::string, long long>& d, const PointMap& rho);

struct VolCompatReport {
    long long deg_source = 0;
    long long deg_target = 0;
    Rat vol_target;
    bool equal = false;
};

VolCompatReport vol_compat(const std::map<std::string, long long>& d, const PointMap& rho);

struct TropTerm {
    Rat c;
    long long a = 0, b = 0;  // exponents of the two variables
};

struct TropPoly2 {
    std::vector<TropTerm> terms;
    // Merges duplicate exponent pairs by min coefficient; rejects empty input.
    static TropPoly2 build(std::vector<TropTerm> terms);
};

struct TropEval {
    Rat value;
    std::vector<int> argmin;  // term indices attaining the min
};

TropEval eval_trop_poly(const TropPoly2& f, const Rat& x, const Rat& y);

using Pt2 = std::pair<Rat, Rat>;

struct CornerLocus {
    std::vector<Pt2> vertices;                                   // min multiplicity >= 3
    std::vector<std::pair<Pt2, Pt2>> edges;                      // bounded segments
    std::vector<std::pair<Pt2, std::pair<long long, long long>>> rays;  // base, primitive direction
};

// Exact locus where the min is attained at least twice.
CornerLocus corner_locus(const TropPoly2& f);

}  // namespace tropdiv
