// Min-plus semiring over PL functions: tropical combinations, exact
// dependence decision at desk scale, slope spectra, independence-rank
// intervals, module products, independence Euler characteristic.
#pragma once

#include <optional>
#include <set>

#include "tropdiv/metric.hpp"
#include "tropdiv/plfunction.hpp"

namespace tropdiv {

struct TropicalNumber {
    bool infinite = true;
    Rat value;

    TropicalNumber() = default;
    TropicalNumber(Rat v) : infinite(false), value(std::move(v)) {}
    static TropicalNumber inf() { return TropicalNumber(); }

    friend TropicalNumber operator+(const TropicalNumber& a, const TropicalNumber& b) {  // min
        if (a.infinite) return b;
        if (b.infinite) return a;
        return TropicalNumber(Rat::min(a.value, b.value));
    }
    friend TropicalNumber operator*(const TropicalNumber& a, const TropicalNumber& b) {  // plus
        if (a.infinite || b.infinite) return inf();
        return TropicalNumber(a.value + b.value);
    }
    friend bool operator==(const TropicalNumber& a, const TropicalNumber& b) {
        return a.infinite == b.infinite && (a.infinite || a.value == b.value);
    }
};

// Pointwise min of the two functions, exact on the common refinement.
PLFunction trop_min(const PLFunction& f, const PLFunction& g);

// min_i (a_i + phi_i); indices with a_i infinite drop out.
PLFunction trop_combination(const std::vector<TropicalNumber>& a,
                            const std::vector<PLFunction>& phis);

// True iff at every point of the curve the minimum is attained at least twice.
bool is_dependent_with(const std::vector<TropicalNumber>& a,
                       const std::vector<PLFunction>& phis);

// Exact decision: a coefficient vector witnessing dependence, or nullopt when
// the tuple is tropically independent. Tuples of size > max_size are refused.
std::optional<std::vector<TropicalNumber>> decide_dependence(const std::vector<PLFunction>& phis,
                                                             int max_size = 5);

// Outgoing slopes at offset t of edge e over all generators; forward means
// the direction of increasing offset.
std::set<long long> slope_spectrum(const std::vector<PLFunction>& gens, int edge, const Rat& offset,
                                   bool forward);

struct RankInterval {
    long long lower = 0;
    long long upper = 0;
    bool exact = false;
    std::vector<int> witness;  // generator indices of a certified independent tuple
};

RankInterval ind_rank_bounds(const std::vector<PLFunction>& gens, const MetricDivisor& d);

// All pairwise sums, deduplicated up to additive constants.
std::vector<PLFunction> module_product(const std::vector<PLFunction>& gens1,
                                       const std::vector<PLFunction>& gens2);

// r_ind(D) - r_ind(K - D) via complete-series generators; nullopt when either
// interval fails to close.
std::optional<long long> ind_euler_char(const MetricDivisor& d);
RankInterval ind_rank(const MetricDivisor& d);  // on complete-series generators

}  // namespace tropdiv
