// Constructive effectivization on metric graphs: the edge move concentrating
// degree at essential vertices and the radial vertex move, both realized as
// explicit PL functions so equivalence is exact by construction.
#pragma once

#include "tropdiv/plfunction.hpp"

namespace tropdiv {

// Radial function min(d(., v), s) around a vertex.
PLFunction radial_function(const MetricPtr& c, int v, const Rat& s);

// One edge move: takes the two positive interior chips nearest the ends of e
// and pushes them toward the endpoints. Returns the applied function.
PLFunction edge_move_function(const MetricDivisor& d, int e);

// Iterates edge moves until every edge interior carries positive degree <= 1.
MetricDivisor concentrate_degree(const MetricDivisor& d);

struct MetricEffectivizeResult {
    bool found = false;
    MetricDivisor representative;
    int rounds = 0;          // vertex-move rounds of the schedule
    bool schedule_clean = true;  // every radial divisor matched its nominal form
    bool used_model_fallback = false;
};

// Schedule of concentrate_degree + simultaneous radial moves when
// deg(D) >= c_C; otherwise decides via the subdivision model.
MetricEffectivizeResult metric_effectivize(const MetricDivisor& d);

}  // namespace tropdiv
