#include "kloo/identities.hpp"

#include <cstdlib>
#include <string>

#include "kloo/errors.hpp"

namespace kloo {

namespace {

mpq_class pow2_signed(long e) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e >= 0 ? e : -e));
    if (e >= 0) return mpq_class(p);
    return mpq_class(mpz_class(1), p);  // already canonical: den a power of 2
}

// sum_{t=j}^{h} t! S(h,t) 2^(offset-t) C(N-j, N-t), with the binomial in the
// small form C(N-j, t-j); both vanish exactly when t < j or t > N.
mpq_class stirling_inner(const StirlingTable& S, int h, std::int64_t n, int j, long offset) {
    mpq_class acc(0);
    for (int t = j; t <= h; ++t) {
        mpz_class f;
        mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(t));
        mpz_class term = f * S.at(h, t) * binom(n - j, t - j);
        if (term == 0) continue;
        acc += mpq_class(term) * pow2_signed(offset - t);
    }
    return acc;
}

mpz_class require_integer(const mpq_class& v, const std::string& what) {
    if (v.get_den() != 1)
        throw IdentityViolation(what + " is not an integer", v.get_num().get_str(),
                                v.get_den().get_str());
    return v.get_num();
}

}  // namespace

mpz_class stirling2(int h, int t) {
    if (h < 0 || t < 0) throw ConfigError("stirling2 needs h, t >= 0");
    if (t > h) return 0;
    mpz_class s = 0;
    for (int j = 0; j <= t; ++j) {
        mpz_class term;
        mpz_ui_pow_ui(term.get_mpz_t(), static_cast<unsigned long>(j),
                      static_cast<unsigned long>(h));  // 0^0 = 1
        term *= binom(t, j);
        if ((t - j) & 1)
            s -= term;
        else
            s += term;
    }
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(t));
    if (!mpz_divisible_p(s.get_mpz_t(), f.get_mpz_t()))
        throw IdentityViolation("Stirling alternating sum not divisible by t!", s.get_str(),
                                f.get_str());
    mpz_class out;
    mpz_divexact(out.get_mpz_t(), s.get_mpz_t(), f.get_mpz_t());
    return out;
}

StirlingTable::StirlingTable(int h_max) {
    if (h_max < 0) throw ConfigError("StirlingTable needs h_max >= 0");
    rows_.resize(h_max + 1);
    rows_[0] = {mpz_class(1)};
    for (int h = 1; h <= h_max; ++h) {
        rows_[h].assign(h + 1, mpz_class(0));
        for (int t = 0; t <= h; ++t) {
            if (t <= h - 1) rows_[h][t] += t * rows_[h - 1][t];
            if (t >= 1 && t - 1 <= h - 1) rows_[h][t] += rows_[h - 1][t - 1];
            mpz_class alt = stirling2(h, t);
            if (rows_[h][t] != alt)
                throw IdentityViolation("Stirling recurrence vs alternating sum (h=" +
                                            std::to_string(h) + ", t=" + std::to_string(t) + ")",
                                        rows_[h][t].get_str(), alt.get_str());
        }
    }
}

const mpz_class& StirlingTable::at(int h, int t) const {
    static const mpz_class kZero(0);
    if (h < 0 || h >= static_cast<int>(rows_.size()))
        throw ConfigError("StirlingTable::at h out of range");
    if (t < 0 || t > h) return kZero;
    return rows_[h][t];
}

PowerMomentCheck pless_power_moment(const std::map<std::int64_t, std::int64_t>& dual_spectrum,
                                    const WeightDistribution& wd, int r, int h) {
    if (h < 0 || h > kMaxRecursionExponent)
        throw ConfigError("power moment exponent must be in [0, " +
                          std::to_string(kMaxRecursionExponent) + "]");
    const std::int64_t n = wd.n;
    const int j_hi = static_cast<int>(std::min<std::int64_t>(n, h));
    if (wd.j_max() < j_hi)
        throw ConfigError("weight distribution truncated below min(N, h)");

    PowerMomentCheck row;
    row.h = h;
    for (const auto& [w, cnt] : dual_spectrum) {
        mpz_class p;
        mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(w),
                      static_cast<unsigned long>(h));
        row.lhs += p * cnt;
    }

    StirlingTable S(h);
    mpq_class rhs(0);
    for (int j = 0; j <= j_hi; ++j) {
        mpq_class term = mpq_class(wd.counts[j]) * stirling_inner(S, h, n, j, r);
        if (j & 1)
            rhs -= term;
        else
            rhs += term;
    }
    row.rhs = require_integer(rhs, "power-moment right side (h=" + std::to_string(h) + ")");
    if (row.lhs != row.rhs)
        throw IdentityViolation("dual power moment vs weight-coefficient expression (h=" +
                                    std::to_string(h) + ")",
                                row.lhs.get_str(), row.rhs.get_str());
    return row;
}

PowerMomentCheck pless_power_moment(const FieldCtx& F, GroupCode which, int h) {
    const std::int64_t q = F.q();
    const std::int64_t n = q * (q * q - 1);
    auto spectrum = dual_weight_spectrum(F, which);
    WeightDistribution wd =
        weight_distribution_dp(F, which, static_cast<int>(std::min<std::int64_t>(n, h)));
    return pless_power_moment(spectrum, wd, F.r(), h);
}

std::vector<mpz_class> mk_recursion(const FieldCtx& F, int h_max,
                                    const WeightDistribution& sp2) {
    if (h_max < 0 || h_max > kMaxRecursionExponent)
        throw ConfigError("moment recursion exponent must be in [0, " +
                          std::to_string(kMaxRecursionExponent) + "]");
    const std::int64_t q = F.q();
    const std::int64_t n = q * (q * q - 1);
    if (sp2.n != n) throw ConfigError("weight distribution is for a different code length");
    if (sp2.j_max() < std::min<std::int64_t>(n, h_max))
        throw ConfigError("weight distribution truncated below min(N, h_max)");

    StirlingTable S(h_max);
    std::vector<mpz_class> mk;
    mk.reserve(h_max + 1);
    mk.emplace_back(q - 1);
    const mpz_class qq1 = mpz_class(q) * q - 1;
    for (int h = 1; h <= h_max; ++h) {
        mpq_class rhs(0);
        const int j_hi = static_cast<int>(std::min<std::int64_t>(n, h));
        for (int j = 0; j <= j_hi; ++j) {
            mpq_class term = mpq_class(sp2.counts[j]) * stirling_inner(S, h, n, j, 0);
            if (j & 1)
                rhs -= term;
            else
                rhs += term;
        }
        rhs *= q;
        mpz_class low = 0;
        for (int j = 0; j < h; ++j) {
            mpz_class pw;
            mpz_pow_ui(pw.get_mpz_t(), qq1.get_mpz_t(), static_cast<unsigned long>(h - j));
            mpz_class term = binom(h, j) * pw * mk[j];
            if (j & 1)
                low -= term;
            else
                low += term;
        }
        // rhs = (q/2)^h sum_j (-1)^j C(h,j) (q^2-1)^(h-j) MK^j; peel off j=h.
        mpq_class val = rhs * pow2_signed(-static_cast<long>(F.r() - 1) * h) - mpq_class(low);
        if (h & 1) val = -val;
        mk.push_back(require_integer(val, "moment recursion step (q=" + std::to_string(q) +
                                              ", h=" + std::to_string(h) + ")"));
    }
    return mk;
}

std::vector<mpz_class> mk_recursion(const FieldCtx& F, int h_max) {
    const std::int64_t q = F.q();
    const std::int64_t n = q * (q * q - 1);
    const int j_max = static_cast<int>(std::min<std::int64_t>(n, h_max));
    return mk_recursion(F, h_max, weight_distribution_dp(F, GroupCode::Sp2, j_max));
}

std::map<int, mpz_class> t1k_recursion(const FieldCtx& F, int h_max_odd,
                                       const std::vector<mpz_class>& d) {
    if (h_max_odd < 1 || h_max_odd > kMaxRecursionExponent || (h_max_odd % 2) == 0)
        throw ConfigError("trace-one recursion exponent must be odd and in [1, " +
                          std::to_string(kMaxRecursionExponent) + "]");
    const std::int64_t q = F.q();
    const std::int64_t n = q * (q * q - 1);
    if (static_cast<int>(d.size()) < std::min<std::int64_t>(n, h_max_odd) + 1)
        throw ConfigError("difference sequence shorter than min(N, h_max) + 1");

    StirlingTable S(h_max_odd);
    const mpz_class qq1 = mpz_class(q) * q - 1;
    std::map<int, mpz_class> t1;
    for (int h = 1; h <= h_max_odd; h += 2) {
        mpz_class first = 0;
        for (int j = 1; j <= h - 2; j += 2) {
            mpz_class pw;
            mpz_pow_ui(pw.get_mpz_t(), qq1.get_mpz_t(), static_cast<unsigned long>(h - j));
            first += binom(h, j) * pw * t1.at(j);
        }
        mpq_class second(0);
        const int j_hi = static_cast<int>(std::min<std::int64_t>(n, h));
        for (int j = 0; j <= j_hi; ++j) {
            mpq_class term = mpq_class(d[j]) * stirling_inner(S, h, n, j, h - 1);
            if (j & 1)
                second -= term;
            else
                second += term;
        }
        second *= pow2_signed(-static_cast<long>(F.r()) * (h - 1));  // q^(1-h)
        mpq_class val = second - mpq_class(first);
        t1[h] = require_integer(val, "trace-one recursion step (q=" + std::to_string(q) +
                                         ", h=" + std::to_string(h) + ")");
    }
    return t1;
}

std::map<int, mpz_class> t1k_recursion(const FieldCtx& F, int h_max_odd) {
    const std::int64_t q = F.q();
    const std::int64_t n = q * (q * q - 1);
    const int j_max = static_cast<int>(std::min<std::int64_t>(n, h_max_odd));
    std::vector<mpz_class> d = d_sequence(F, j_max);
    return t1k_recursion(F, h_max_odd, d);
}

std::pair<std::int64_t, std::int64_t> first_moment_closed_forms(const FieldCtx& F) {
    const std::int64_t half_q = static_cast<std::int64_t>(F.q()) / 2;
    const bool r_even = (F.r() % 2) == 0;
    const std::int64_t t0_closed = 1 + (r_even ? half_q : -half_q);
    const std::int64_t t1_closed = r_even ? -half_q : half_q;

    std::int64_t t0 = 0, t1 = 0;
    for (std::uint64_t a = 1; a < F.q(); ++a) {
        std::int64_t k = kloosterman(F, 1, static_cast<Fe>(a));
        (F.trace(static_cast<Fe>(a)) ? t1 : t0) += k;
    }
    if (t0 != t0_closed)
        throw IdentityViolation("trace-zero first moment vs closed form", std::to_string(t0),
                                std::to_string(t0_closed));
    if (t1 != t1_closed)
        throw IdentityViolation("trace-one first moment vs closed form", std::to_string(t1),
                                std::to_string(t1_closed));
    return {t0, t1};
}

}  // namespace kloo
