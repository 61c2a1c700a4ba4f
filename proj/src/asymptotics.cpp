#include "tropdiv/asymptotics.hpp"

#include <cstdlib>
#include <ostream>

namespace tropdiv {

Rat tropical_volume(long long degree) { return Rat(std::max(degree, 0LL)); }

Rat tropical_volume(const Divisor& d) { return tropical_volume(d.degree()); }

bool is_big(long long degree) { return degree > 0; }

bool is_big(const Divisor& d) { return is_big(d.degree()); }

RankSequence rank_sequence(long long degree, int L, const RankProvider& rank_of_l) {
    if (L < 1) throw Error(ErrorCode::BadInput, "horizon must be >= 1");
    RankSequence seq;
    seq.degree = degree;
    seq.L = L;
    for (long long l = 1; l <= L; ++l) {
        long long r = rank_of_l(l);
        seq.values.push_back(r);
        seq.normalized.push_back(Rat(r, l));
    }
    return seq;
}

RankSequence rank_sequence(const Divisor& d, int L) {
    RankEngine eng(d.graph);
    return rank_sequence(d.degree(), L, [&](long long l) { return eng.rank(d * l); });
}

std::vector<long long> rr_residual_sequence(long long degree, int L, const RankProvider& chi_of_l) {
    if (L < 1) throw Error(ErrorCode::BadInput, "horizon must be >= 1");
    std::vector<long long> res;
    for (long long l = 1; l <= L; ++l) res.push_back(chi_of_l(l) - degree * l);
    return res;
}

std::vector<long long> rr_residual_sequence(const Divisor& d, int L) {
    RankEngine eng(d.graph);
    return rr_residual_sequence(d.degree(), L,
                                [&](long long l) { return euler_char(eng, d * l); });
}

long long rr_residual_bound(const Multigraph& g) {
    long long degk = 0;
    for (long long c : g.canonical_coeffs()) degk += c;
    return constant_C(g) + std::llabs(degk) + 1;
}

void write_rank_csv(std::ostream& os, const RankSequence& seq, long long C) {
    os << "l,rank,rank_over_l,deg_times_l,lower_bound\n";
    for (int i = 0; i < seq.L; ++i) {
        long long l = i + 1;
        os << l << ',' << seq.values[i] << ',' << to_string(seq.normalized[i]) << ','
           << seq.degree * l << ',' << seq.degree * l - C << '\n';
    }
}

}  // namespace tropdiv
