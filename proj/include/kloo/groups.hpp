#pragma once

// The groups behind the codes: Sp(2,q) = SL(2,q), its lift into O(3,q),
// exact trace distributions, Gauss sums (enumerated and in closed form),
// q-binomial coefficients and group orders.  Sp(4,q) is reachable too, as
// the brute-force oracle for the n=2 Gauss-sum formula.

#include <array>
#include <cstdint>
#include <gmpxx.h>
#include <vector>

#include "kloo/char_sums.hpp"
#include "kloo/field.hpp"

namespace kloo {

enum class GroupCode { O3, Sp2 };

const char* group_code_name(GroupCode which);

// Row-major [[a,b],[c,d]] with ad + bc = 1 (det 1 in characteristic 2);
// such matrices are exactly Sp(2,q).
struct Mat2 {
    Fe a, b, c, d;
    Fe trace() const { return a ^ d; }
};

// The O(3,q) matrix [[A,B,0],[C,D,0],[g,h,1]] written in its blocks.
// g and h are forced: g^2 = AC and h^2 = BD (a 1x1 alternating matrix is
// zero), and AD + CB = 1.
struct O3Element {
    Fe a, b, c, d;  // symplectic 2x2 block
    Fe g, h;
    Fe trace;  // a + d + 1
};

// The unique preimage of w under the drop-last-row-and-column isomorphism
// O(3,q) -> Sp(2,q); Tr lift(w) = Tr w + 1.
O3Element lift_to_o3(const FieldCtx& F, const Mat2& w);

// Membership relations of the ambient orthogonal group, checked on the
// assembled 3x3 matrix: AC + g^2 = 0, BD + h^2 = 0, AD + CB = 1.
bool o3_relations_hold(const FieldCtx& F, const O3Element& e);

// Visits every element of SL(2,q) exactly once, in lexicographic
// (a,b,c,d) bit-encoding order.  q(q^2-1) elements.
template <typename Fn>
void for_each_sl2(const FieldCtx& F, Fn&& fn) {
    const std::uint32_t q = F.q();
    for (Fe b = 1; b < q; ++b) {  // a = 0 forces bc = 1
        const Fe c = F.inv(b);
        for (Fe d = 0; d < q; ++d) fn(Mat2{0, b, c, d});
    }
    for (Fe a = 1; a < q; ++a) {
        const Fe ia = F.inv(a);
        for (Fe b = 0; b < q; ++b) {
            for (Fe c = 0; c < q; ++c) fn(Mat2{a, b, c, F.mul(ia, 1 ^ F.mul(b, c))});
        }
    }
}

struct TraceDistribution {
    std::uint32_t q = 0;
    GroupCode which = GroupCode::O3;
    std::vector<std::int64_t> count;  // index = trace value bit-encoding
    std::int64_t total() const;
};

// Exact counts from a single enumeration pass.  For O3 the result is
// checked against the three-case closed form before it is returned, and
// surjectivity of the trace (every count positive) is enforced.
TraceDistribution trace_distribution(const FieldCtx& F, GroupCode which);

// n(beta) for O(3,q): q^2 at beta = 1, else q^2 +- q by tr((beta-1)^-1).
std::int64_t o3_trace_count_formula(const FieldCtx& F, Fe beta);

// sum_w lambda(a Tr w) over the group, read off the trace distribution.
// For O3 the value is checked against lambda(a) q K(lambda;a), for Sp2
// against q K(lambda;a).
std::int64_t gauss_sum_bruteforce(const FieldCtx& F, GroupCode which, Fe a);
std::int64_t gauss_sum_bruteforce(const FieldCtx& F, const TraceDistribution& dist, Fe a);

// Gauss sum of O(2n+1,q) at psi = lambda, n <= 3:
//   lambda(1) q^(n(n+1)/2) sum_{r even} q^(rn-r^2/4) [n r]_q
//       prod_{j=1}^{r/2} (q^(2j-1)-1) K_GL(n-r,q)(lambda;1).
mpz_class gauss_sum_formula(const FieldCtx& F, int n);

// Gaussian binomial [n r]_q; 0 outside 0 <= r <= n, division always exact.
mpz_class qbinom(int n, int r, std::uint64_t q);

// |O(2n+1,q)| = |Sp(2n,q)| = q^(n^2) prod_{j=1}^n (q^(2j)-1).
mpz_class group_order(int n, std::uint64_t q);

// --- Sp(4,q), the n=2 oracle ---

using Mat4 = std::array<Fe, 16>;  // row-major

// All w with w^T J w = J found by filtering every 4x4 matrix; only
// feasible for q = 2 (2^16 candidates).
std::vector<Mat4> enumerate_sp4_filter(const FieldCtx& F);

// Closure of a symplectic transvection generating set.  Experimental: the
// result is certified by comparing its size against |Sp(4,q)|, which also
// proves the generators generate.  Guarded to q <= 4.
std::vector<Mat4> enumerate_sp4_closure(const FieldCtx& F);

std::int64_t sp4_gauss_sum(const FieldCtx& F, const std::vector<Mat4>& elems, Fe a = 1);

}  // namespace kloo
