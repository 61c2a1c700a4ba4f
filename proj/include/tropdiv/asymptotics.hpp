// Tropical volume, rank sequences r(lD), bigness, asymptotic RR residuals.
// Generic over rank providers so the same machinery serves multigraphs and
// metric curves.
#pragma once

#include <functional>
#include <iosfwd>
#include <vector>

#include "tropdiv/divisor.hpp"
#include "tropdiv/rat.hpp"

namespace tropdiv {

// Computes r(lD) (or chi(lD)) for a fixed divisor; l >= 1.
using RankProvider = std::function<long long(long long l)>;

struct RankSequence {
    long long degree = 0;  // deg(D)
    int L = 0;
    std::vector<long long> values;  // values[l-1] = r(lD)
    std::vector<Rat> normalized;    // r(lD)/l
};

// Closed form max{deg, 0}.
Rat tropical_volume(long long degree);
Rat tropical_volume(const Divisor& d);

bool is_big(long long degree);
bool is_big(const Divisor& d);

RankSequence rank_sequence(long long degree, int L, const RankProvider& rank_of_l);
RankSequence rank_sequence(const Divisor& d, int L);

// residual(l) = chi(lD) - deg(D)*l for l = 1..L.
std::vector<long long> rr_residual_sequence(long long degree, int L, const RankProvider& chi_of_l);
std::vector<long long> rr_residual_sequence(const Divisor& d, int L);

// Bound constant for BN residuals: C_G + |deg K_G| + 1.
long long rr_residual_bound(const Multigraph& g);

// Columns: l, rank, rank_over_l, deg_times_l, lower_bound (= l*deg - C).
void write_rank_csv(std::ostream& os, const RankSequence& seq, long long C);

}  // namespace tropdiv
