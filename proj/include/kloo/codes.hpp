#pragma once

// The binary codes attached to O(3,q) and Sp(2,q): the trace vector over a
// fixed group enumeration, the q dual codewords tr(a Tr g_i), and the weight
// distribution of the big code computed two independent ways — a
// constrained-composition dynamic program over the trace counts, and the
// MacWilliams transform of the analytically known dual spectrum.

#include <cstdint>
#include <gmpxx.h>
#include <map>
#include <vector>

#include "kloo/field.hpp"
#include "kloo/groups.hpp"

namespace kloo {

struct TraceVector {
    GroupCode which = GroupCode::O3;
    std::vector<Fe> v;  // Tr g_i, i = 1..N
};

// Entries in lexicographic enumeration order; N = q(q^2-1), guarded at
// q <= 2^10.  The seed_order overload applies a deterministic Fisher-Yates
// shuffle — weights and spectra must not change, which tests rely on.
TraceVector build_trace_vector(const FieldCtx& F, GroupCode which);
TraceVector build_trace_vector(const FieldCtx& F, GroupCode which, std::uint64_t seed_order);

struct DualCodeword {
    Fe a = 0;
    std::vector<std::uint64_t> bits;  // packed, N positions
    std::int64_t weight = 0;
};

// c(a) = (tr(a Tr g_1), ..., tr(a Tr g_N)).  For a != 0 the weight is
// checked against its Kloosterman closed form,
//   O3:  (q/2) ((q^2-1) - lambda(a) K(lambda;a))
//   Sp2: (N - q K(lambda;a)) / 2.
DualCodeword dual_codeword(const FieldCtx& F, const TraceVector& tv, Fe a);

// weight -> multiplicity over all q values of a.  The q codewords are
// checked pairwise distinct (a -> c(a) is injective).
std::map<std::int64_t, std::int64_t> dual_weight_spectrum(const FieldCtx& F, GroupCode which);
std::map<std::int64_t, std::int64_t> dual_weight_spectrum(const FieldCtx& F,
                                                          const TraceVector& tv);

struct WeightDistribution {
    std::int64_t n = 0;  // code length N
    bool full = false;
    std::vector<mpz_class> counts;  // index j; size n+1 when full
    int j_max() const { return static_cast<int>(counts.size()) - 1; }
};

// weight_distribution_dp(F, which, kFullDistribution) computes all N+1
// coefficients (needs N <= 600); a j_max in [0, 64] truncates the DP at
// degree j_max, which is what the moment recursions consume.
inline constexpr int kFullDistribution = -1;
inline constexpr std::int64_t kMaxFullLength = 600;
inline constexpr int kMaxTruncatedDegree = 64;

WeightDistribution weight_distribution_dp(const FieldCtx& F, GroupCode which, int j_max);
WeightDistribution weight_distribution_dp(const FieldCtx& F, const TraceDistribution& dist,
                                          int j_max);

// Binary Krawtchouk values K_j(w; n) for j = 0..j_max, by the exact integer
// three-term recurrence (the divisions are checked exact).
std::vector<mpz_class> krawtchouk_row(std::int64_t n, std::int64_t w, std::int64_t j_max);

// Full distribution of the primal code from its dual's spectrum:
//   counts[j] = 2^-dual_dim  sum_w  spectrum[w] K_j(w; n).
// The spectrum must total 2^dual_dim; every division must come out exact.
WeightDistribution macwilliams(const std::map<std::int64_t, std::int64_t>& dual_spectrum,
                               std::int64_t n, int dual_dim);

// D_j = C_j - Chat_j for j <= j_max, the O3-minus-Sp2 difference.
std::vector<mpz_class> d_sequence(const FieldCtx& F, int j_max);

// binomial with the convention C(n,k) = 0 for k < 0 or k > n
mpz_class binom(std::int64_t n, std::int64_t k);

}  // namespace kloo
