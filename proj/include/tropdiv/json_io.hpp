// JSON formats for graphs, divisors, metric data, PL functions, polynomials
// and results. Rationals travel as strings "p/q" in lowest terms; output uses
// insertion-ordered objects so identical inputs give byte-identical bytes.
#pragma once

#include <json.hpp>

#include "tropdiv/divisor.hpp"
#include "tropdiv/plfunction.hpp"
#include "tropdiv/specialization.hpp"
#include "tropdiv/tropical.hpp"

namespace tropdiv {

using Json = nlohmann::ordered_json;

GraphPtr parse_graph(const Json& j);
Json graph_to_json(const Multigraph& g);

Divisor parse_divisor(const Json& j);
Json divisor_to_json(const Divisor& d);

MetricPtr parse_metric(const Json& j);
Json metric_to_json(const MetricGraph& c);

Point parse_point(const Json& j, const MetricPtr& c);
Json point_to_json(const Point& p, const MetricGraph& c);

MetricDivisor parse_metric_divisor(const Json& j);
Json metric_divisor_to_json(const MetricDivisor& d);

PLFunction parse_plfunction(const Json& j, const MetricPtr& c);
Json plfunction_to_json(const PLFunction& f);

PointMap parse_point_map(const Json& j);
TropPoly2 parse_trop_poly(const Json& j);

Json trace_to_json(const FiringTrace& t, const Multigraph& g);
Json rank_interval_to_json(const RankInterval& r);
Json corner_locus_to_json(const CornerLocus& l);

}  // namespace tropdiv
