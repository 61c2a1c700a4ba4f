// Subdivision models: rescale a metric graph by a common denominator and
// split every edge into unit pieces, producing a loopless multigraph whose
// combinatorial divisor theory computes the metric one.
#pragma once

#include "tropdiv/divisor.hpp"
#include "tropdiv/plfunction.hpp"

namespace tropdiv {

struct SubdivisionModel {
    MetricPtr curve;
    GraphPtr graph;    // loopless, all edges of length 1/lambda in the original metric
    long long lambda;  // scale factor
    std::vector<std::vector<int>> edge_path;  // model vertices along each original edge
};

// lambda clears all edge lengths and all support offsets of the given
// divisors, times extra_factor; loops always get split at least in half.
SubdivisionModel build_model(const MetricPtr& c, const std::vector<const MetricDivisor*>& divs,
                             long long extra_factor = 1);

// Requires every support offset to land on a lattice vertex.
Divisor to_model(const SubdivisionModel& m, const MetricDivisor& d);
MetricDivisor from_model(const SubdivisionModel& m, const Divisor& d);

// Integer vertex values x on the model become the function with value
// x_k / lambda at lattice offset k / lambda (slopes stay integral).
PLFunction pl_from_model(const SubdivisionModel& m, const std::vector<long long>& x);

long long metric_bn_rank(const MetricDivisor& d);
bool metric_linearly_equivalent(const MetricDivisor& a, const MetricDivisor& b);
bool metric_has_effective(const MetricDivisor& d);

// q-reduction on the model, pulled back to the curve.
MetricDivisor metric_model_reduce(const MetricDivisor& d);

// All functions x_D - x_E with E effective lattice divisor equivalent to D
// on the (deg+1)-refined model; generates R(D) as a tropical module.
std::vector<PLFunction> complete_series_generators(const MetricDivisor& d);

}  // namespace tropdiv
