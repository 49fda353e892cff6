#pragma once

// The arithmetic identities tying the weight distributions back to
// Kloosterman moments: Stirling numbers, the Pless power-moment identity for
// the dual spectra, the recursion computing all moments MK^h from the Sp2
// distribution, and the recursion computing the trace-one odd moments T1K^h
// from the difference sequence D_j.  Everything is exact; every claimed
// integrality is checked and violations throw.

#include <cstdint>
#include <gmpxx.h>
#include <map>
#include <utility>
#include <vector>

#include "kloo/char_sums.hpp"
#include "kloo/codes.hpp"
#include "kloo/field.hpp"
#include "kloo/groups.hpp"

namespace kloo {

inline constexpr int kMaxRecursionExponent = 15;

// S(h,t) by the alternating sum  t! S(h,t) = sum_j (-1)^(t-j) C(t,j) j^h,
// with the division by t! checked exact.
mpz_class stirling2(int h, int t);

// All S(h,t) for h <= h_max via the recurrence
// S(h,t) = t S(h-1,t) + S(h-1,t-1); the constructor cross-checks every
// entry against the alternating-sum form.
class StirlingTable {
  public:
    explicit StirlingTable(int h_max);
    const mpz_class& at(int h, int t) const;
    int h_max() const { return static_cast<int>(rows_.size()) - 1; }

  private:
    std::vector<std::vector<mpz_class>> rows_;
};

struct PowerMomentCheck {
    int h = 0;
    mpz_class lhs;  // sum_w w^h * (dual multiplicity of w)
    mpz_class rhs;  // the C_j / Stirling expression
};

// Pless power moments of the dual spectrum, using only C_j for
// j <= min(N, h):
//   sum_w w^h B_w =
//     sum_j (-1)^j C_j sum_{t=j}^{h} t! S(h,t) 2^(r-t) C(N-j, N-t).
// Throws IdentityViolation when the two sides differ.
PowerMomentCheck pless_power_moment(const FieldCtx& F, GroupCode which, int h);
PowerMomentCheck pless_power_moment(const std::map<std::int64_t, std::int64_t>& dual_spectrum,
                                    const WeightDistribution& wd, int r, int h);

// MK^h for h = 0..h_max from the Sp2 weight coefficients alone:
// MK^0 = q-1, then each h isolates the j=h binomial term of
//   sum_j (-1)^j C(h,j) (q^2-1)^(h-j) (q/2)^h MK^j
//     = q sum_j (-1)^j Chat_j sum_t t! S(h,t) 2^(-t) C(N-j, N-t).
std::vector<mpz_class> mk_recursion(const FieldCtx& F, int h_max);
std::vector<mpz_class> mk_recursion(const FieldCtx& F, int h_max,
                                    const WeightDistribution& sp2);

// T1K^h for odd h <= h_max_odd from the difference sequence D_j = C_j - Chat_j:
//   T1K^h = - sum_{j odd < h} C(h,j) (q^2-1)^(h-j) T1K^j
//           + q^(1-h) sum_j (-1)^j D_j sum_t t! S(h,t) 2^(h-t-1) C(N-j, N-t).
// Keys of the result are the odd h.
std::map<int, mpz_class> t1k_recursion(const FieldCtx& F, int h_max_odd);
std::map<int, mpz_class> t1k_recursion(const FieldCtx& F, int h_max_odd,
                                       const std::vector<mpz_class>& d);

// Closed forms for the first moments, split by trace:
//   T0K = 1 + (-1)^r q/2,   T1K = (-1)^(r+1) q/2.
// Checked against direct summation; returns {T0K, T1K}.
std::pair<std::int64_t, std::int64_t> first_moment_closed_forms(const FieldCtx& F);

}  // namespace kloo
