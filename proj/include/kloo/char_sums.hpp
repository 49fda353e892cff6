#pragma once

// Kloosterman sums K(psi;a) = sum_{alpha != 0} psi(alpha + a/alpha) over
// GF(2^r), their GL(t,q) analogues, and exact power moments split by the
// trace of the argument.

#include <cstdint>
#include <gmpxx.h>
#include <vector>

#include "kloo/field.hpp"

namespace kloo {

// Single value of K(psi_c; a) with psi_c(x) = lambda(c x).  O(q).
std::int64_t kloosterman(const FieldCtx& F, Fe c, Fe a);

// Dense cache of K(psi_c; a) for every a in F_q^*.  Downstream consumers
// (moments, Gauss sums, dual codeword weights) all re-read these values, so
// they are computed once and frozen.  Every entry is checked against the
// Weil bound K^2 <= 4q.
class KloostermanTable {
  public:
    explicit KloostermanTable(const FieldCtx& F, Fe c = 1);

    std::int64_t at(Fe a) const {
        if (a == 0) throw DomainError("Kloosterman sum undefined at a=0");
        return vals_[a];
    }
    Fe c() const { return c_; }

  private:
    Fe c_;
    std::vector<std::int64_t> vals_;  // index a; [0] unused
};

// Exact h-th power moments of K(psi_c; .), whole and split by tr(a).
// mk[h] = t0k[h] + t1k[h] always; mk[0] = q-1 and mk[1] = 1 for every c
// (substituting a -> c^2 a reduces the c != 1 moments to the c = 1 ones).
struct MomentTable {
    std::uint32_t q = 0;
    Fe c = 1;
    std::vector<mpz_class> mk, t0k, t1k;  // index h = 0..h_max
    int h_max() const { return static_cast<int>(mk.size()) - 1; }
};

inline constexpr int kMaxMomentExponent = 16;

MomentTable moments(const FieldCtx& F, int h_max, Fe c = 1);
MomentTable moments(const FieldCtx& F, int h_max, const KloostermanTable& table);

// K_GL(t,q)(psi;a) by the two-step recursion
//   K_GL(t) = q^(t-1) K_GL(t-1) K + q^(2t-2) (q^(t-1)-1) K_GL(t-2),
// anchored at K_GL(0) = 1 and K_GL(1) = K(psi;a).
mpz_class gl_kloosterman(const FieldCtx& F, int t, Fe a);

// Same sum taken literally: sum over every invertible t x t matrix w of
// lambda(Tr w + a Tr w^-1).  Guarded by q^(t^2) <= 2^24.
mpz_class gl_kloosterman_bruteforce(const FieldCtx& F, int t, Fe a);

// sum_{a != 0} lambda(a beta) K(lambda;a); checked against the closed form
// q lambda(beta^-1) + 1 (beta != 0) resp. 1 (beta = 0) before returning.
std::int64_t fourier_identity_check(const FieldCtx& F, Fe beta);
std::int64_t fourier_identity_check(const FieldCtx& F, Fe beta, const KloostermanTable& table);

}  // namespace kloo
