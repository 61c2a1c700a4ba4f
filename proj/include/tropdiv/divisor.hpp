// Divisors on multigraphs: chip-firing, q-reduction, linear equivalence,
// Baker-Norine rank, the firing-schedule effectivization, Euler characteristic.
#pragma once

#include <map>
#include <optional>
#include <vector>

#include "tropdiv/multigraph.hpp"

namespace tropdiv {

struct Divisor {
    GraphPtr graph;
    std::vector<long long> coeffs;  // one per vertex

    Divisor() = default;
    Divisor(GraphPtr g, std::vector<long long> c);

    long long degree() const;
    bool is_effective() const;

    Divisor operator+(const Divisor& o) const;
    Divisor operator-(const Divisor& o) const;
    Divisor operator*(long long k) const;
    bool operator==(const Divisor& o) const;

    // Unique effective / anti-effective split D = D+ + D-.
    Divisor positive_part() const;
    Divisor negative_part() const;

    // { v | d_v >= val(v) } (loops counting 2).
    std::vector<int> f_set() const;
};

Divisor zero_divisor(const GraphPtr& g);
Divisor canonical_divisor(const GraphPtr& g);

// One round of set-firing: every v in S sends a chip along each incident
// non-loop edge; transfers inside S cancel.
Divisor fire_set(const Divisor& d, const std::vector<int>& s);

struct FiringRound {
    std::vector<int> fired;  // vertex indices, ascending
    Divisor after;
};

struct FiringTrace {
    std::vector<FiringRound> rounds;
};

struct ReduceResult {
    Divisor reduced;
    // Net firing count per vertex (x_q = 0): reduced = d - L x.
    std::vector<long long> firings;
    std::optional<FiringTrace> trace;
};

// Unique q-reduced representative (Dhar burning on the loop-deleted graph).
ReduceResult reduce_full(const Divisor& d, int q, bool want_trace = false);
Divisor reduce(const Divisor& d, int q = 0);

bool linearly_equivalent(const Divisor& a, const Divisor& b);
bool has_effective(const Divisor& d);

// C_G = 2(#E+1)(#V+1).
long long constant_C(const Multigraph& g);

// Memoized Baker-Norine rank on one graph. Uses the recursion
// r(D) = -1 if |D| empty, else 1 + min_v r(D - v), keyed by q-reduced form.
class RankEngine {
public:
    explicit RankEngine(GraphPtr g);
    long long rank(const Divisor& d);
    long long rank(const std::vector<long long>& coeffs);
    const GraphPtr& graph() const { return graph_; }

private:
    GraphPtr graph_;
    std::map<std::vector<long long>, long long> memo_;  // keyed by reduced coeffs
    long long rank_reduced(std::vector<long long> red);
};

long long bn_rank(const Divisor& d);

struct EffectivizeResult {
    bool found = false;
    Divisor representative;
    FiringTrace trace;
};

// For deg(D) >= C_G runs the simultaneous F-set schedule; below that falls
// back to q-reduction with a reconstructed trace.
EffectivizeResult effectivize(const Divisor& d);

// Continues the schedule past effectivity until every coefficient is at
// least the valence. Requires deg(D) >= 2 C_G.
EffectivizeResult effectivize_saturated(const Divisor& d);

long long euler_char(const Divisor& d);
long long euler_char(RankEngine& engine, const Divisor& d);

}  // namespace tropdiv
