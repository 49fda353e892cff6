#include "kloo/char_sums.hpp"

#include <string>

namespace kloo {

std::int64_t kloosterman(const FieldCtx& F, Fe c, Fe a) {
    if (c == 0) throw DomainError("psi_0 is the trivial character; c must be nonzero");
    if (a == 0) throw DomainError("Kloosterman sum undefined at a=0");
    std::int64_t sum = 0;
    for (Fe alpha = 1; alpha < F.q(); ++alpha) {
        sum += F.lambda(F.mul(c, F.add(alpha, F.mul(a, F.inv(alpha)))));
    }
    return sum;
}

KloostermanTable::KloostermanTable(const FieldCtx& F, Fe c) : c_(c) {
    if (c == 0) throw DomainError("psi_0 is the trivial character; c must be nonzero");
    const std::uint32_t q = F.q();
    vals_.assign(q, 0);
    for (Fe a = 1; a < q; ++a) {
        const std::int64_t k = kloosterman(F, c, a);
        if (k * k > 4 * static_cast<std::int64_t>(q))
            throw IdentityViolation("Weil bound violated at a=" + std::to_string(a),
                                    std::to_string(k * k), "<= " + std::to_string(4 * q));
        vals_[a] = k;
    }
}

MomentTable moments(const FieldCtx& F, int h_max, Fe c) {
    return moments(F, h_max, KloostermanTable(F, c));
}

MomentTable moments(const FieldCtx& F, int h_max, const KloostermanTable& table) {
    if (h_max < 0 || h_max > kMaxMomentExponent)
        throw ConfigError("moment exponent h_max=" + std::to_string(h_max) + " out of range [0, " +
                          std::to_string(kMaxMomentExponent) + "]");
    MomentTable t;
    t.q = F.q();
    t.c = table.c();
    t.mk.assign(h_max + 1, 0);
    t.t0k.assign(h_max + 1, 0);
    t.t1k.assign(h_max + 1, 0);
    mpz_class pw;
    for (Fe a = 1; a < F.q(); ++a) {
        const std::int64_t k = table.at(a);
        std::vector<mpz_class>& side = F.trace(a) ? t.t1k : t.t0k;
        pw = 1;
        for (int h = 0; h <= h_max; ++h) {
            side[h] += pw;
            if (h < h_max) pw *= k;
        }
    }
    for (int h = 0; h <= h_max; ++h) t.mk[h] = t.t0k[h] + t.t1k[h];
    if (t.mk[0] != F.q() - 1)
        throw IdentityViolation("MK^0 != q-1", t.mk[0].get_str(), std::to_string(F.q() - 1));
    if (h_max >= 1 && t.mk[1] != 1)
        throw IdentityViolation("MK^1 != 1", t.mk[1].get_str(), "1");
    return t;
}

mpz_class gl_kloosterman(const FieldCtx& F, int t, Fe a) {
    if (t < 0) throw DomainError("GL dimension must be nonnegative");
    if (a == 0) throw DomainError("Kloosterman sum undefined at a=0");
    const mpz_class q = F.q();
    mpz_class prev2 = 1;  // K_GL(0)
    if (t == 0) return prev2;
    mpz_class prev1 = kloosterman(F, 1, a);  // K_GL(1)
    const mpz_class k1 = prev1;
    mpz_class qp = 1;  // q^(t-1) rolling
    for (int tt = 2; tt <= t; ++tt) {
        qp *= q;  // q^(tt-1)
        mpz_class cur = qp * prev1 * k1 + qp * qp * (qp - 1) * prev2;
        prev2 = prev1;
        prev1 = cur;
    }
    return prev1;
}

namespace {

// Gauss-Jordan inverse of a t x t matrix over F_q, row-major.
// Returns false if singular.
bool mat_inv(const FieldCtx& F, const std::vector<Fe>& m, int t, std::vector<Fe>& out) {
    std::vector<Fe> a(m);
    out.assign(t * t, 0);
    for (int i = 0; i < t; ++i) out[i * t + i] = 1;
    for (int col = 0; col < t; ++col) {
        int piv = -1;
        for (int row = col; row < t; ++row) {
            if (a[row * t + col] != 0) {
                piv = row;
                break;
            }
        }
        if (piv < 0) return false;
        if (piv != col) {
            for (int j = 0; j < t; ++j) {
                std::swap(a[piv * t + j], a[col * t + j]);
                std::swap(out[piv * t + j], out[col * t + j]);
            }
        }
        const Fe scale = F.inv(a[col * t + col]);
        for (int j = 0; j < t; ++j) {
            a[col * t + j] = F.mul(scale, a[col * t + j]);
            out[col * t + j] = F.mul(scale, out[col * t + j]);
        }
        for (int row = 0; row < t; ++row) {
            const Fe f = a[row * t + col];
            if (row == col || f == 0) continue;
            for (int j = 0; j < t; ++j) {
                a[row * t + j] ^= F.mul(f, a[col * t + j]);
                out[row * t + j] ^= F.mul(f, out[col * t + j]);
            }
        }
    }
    return true;
}

}  // namespace

mpz_class gl_kloosterman_bruteforce(const FieldCtx& F, int t, Fe a) {
    if (t < 0) throw DomainError("GL dimension must be nonnegative");
    if (a == 0) throw DomainError("Kloosterman sum undefined at a=0");
    if (t == 0) return 1;
    const std::uint64_t q = F.q();
    std::uint64_t total = 1;
    for (int i = 0; i < t * t; ++i) {
        if (total > (std::uint64_t{1} << 24) / q)
            throw SizeError("GL(" + std::to_string(t) + "," + std::to_string(q) +
                            ") enumeration exceeds q^(t^2) <= 2^24");
        total *= q;
    }
    mpz_class sum = 0;
    std::vector<Fe> w(t * t), wi;
    for (std::uint64_t enc = 0; enc < total; ++enc) {
        std::uint64_t x = enc;
        for (int i = 0; i < t * t; ++i) {
            w[i] = static_cast<Fe>(x % q);
            x /= q;
        }
        if (!mat_inv(F, w, t, wi)) continue;
        Fe tr = 0, tri = 0;
        for (int i = 0; i < t; ++i) {
            tr ^= w[i * t + i];
            tri ^= wi[i * t + i];
        }
        sum += F.lambda(tr ^ F.mul(a, tri));
    }
    return sum;
}

std::int64_t fourier_identity_check(const FieldCtx& F, Fe beta) {
    return fourier_identity_check(F, beta, KloostermanTable(F, 1));
}

std::int64_t fourier_identity_check(const FieldCtx& F, Fe beta, const KloostermanTable& table) {
    // characteristic 2: lambda(-a beta) = lambda(a beta)
    std::int64_t lhs = 0;
    for (Fe a = 1; a < F.q(); ++a) lhs += F.lambda(F.mul(a, beta)) * table.at(a);
    const std::int64_t rhs =
        beta == 0 ? 1 : static_cast<std::int64_t>(F.q()) * F.lambda(F.inv(beta)) + 1;
    if (lhs != rhs)
        throw IdentityViolation("Kloosterman Fourier identity failed at beta=" +
                                    std::to_string(beta),
                                std::to_string(lhs), std::to_string(rhs));
    return lhs;
}

}  // namespace kloo
