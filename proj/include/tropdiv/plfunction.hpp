// Continuous piecewise-linear functions with integer slopes on a metric
// graph, their divisors, and R(D) membership.
#pragma once

#include "tropdiv/metric.hpp"

namespace tropdiv {

class PLFunction {
public:
    // samples[e]: (offset, value) pairs, offsets strictly increasing from 0
    // to length(e). Validates continuity at vertices and integer slopes.
    static PLFunction build(MetricPtr curve, std::vector<std::vector<std::pair<Rat, Rat>>> samples);
    static PLFunction constant(MetricPtr curve, const Rat& value);

    const MetricPtr& curve() const { return curve_; }
    const std::vector<std::pair<Rat, Rat>>& edge_samples(int e) const { return samples_[e]; }

    Rat at_vertex(int v) const;
    Rat eval(const Point& p) const;

    // Slope toward increasing offset on the segment containing offset t of
    // edge e (t strictly inside a segment, or a segment's left endpoint).
    long long slope_after(int e, const Rat& t) const;

    PLFunction operator+(const PLFunction& o) const;
    PLFunction operator-(const PLFunction& o) const;
    PLFunction operator+(const Rat& c) const;
    PLFunction operator*(long long k) const;  // integer scaling keeps slopes integral

    // Equality up to an additive constant.
    bool proportional(const PLFunction& o) const;
    bool operator==(const PLFunction& o) const;

    // Inserts breakpoints of o (values unchanged); used for common refinements.
    PLFunction refined_along(const PLFunction& o) const;

private:
    MetricPtr curve_;
    std::vector<std::vector<std::pair<Rat, Rat>>> samples_;
};

// ord_p = -(sum of outgoing slopes at p); degree always 0.
MetricDivisor pl_div(const PLFunction& f);

// D + div(f) >= 0.
bool in_R(const MetricDivisor& d, const PLFunction& f);

}  // namespace tropdiv
