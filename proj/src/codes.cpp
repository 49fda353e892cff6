#include "kloo/codes.hpp"

#include <cassert>
#include <set>
#include <sstream>

#include "kloo/char_sums.hpp"
#include "kloo/errors.hpp"

namespace kloo {

namespace {

constexpr std::uint32_t kMaxTraceVectorQ = 1u << 10;

std::int64_t expected_dual_weight(const FieldCtx& F, GroupCode which, Fe a) {
    if (a == 0) return 0;
    const std::int64_t q = F.q();
    const std::int64_t k = kloosterman(F, 1, a);
    if (which == GroupCode::O3) return (q / 2) * ((q * q - 1) - F.lambda(a) * k);
    const std::int64_t n = q * (q * q - 1);
    return (n - q * k) / 2;
}

}  // namespace

mpz_class binom(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n || n < 0) return 0;
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

TraceVector build_trace_vector(const FieldCtx& F, GroupCode which) {
    if (F.q() > kMaxTraceVectorQ)
        throw SizeError("trace vector needs q <= 2^10, got q=" + std::to_string(F.q()));
    TraceVector tv;
    tv.which = which;
    const std::uint64_t q = F.q();
    tv.v.reserve(q * (q * q - 1));
    for_each_sl2(F, [&](const Mat2& m) {
        Fe t = m.trace();
        if (which == GroupCode::O3) t ^= 1;  // Tr of the O(3,q) lift = Tr w + 1
        tv.v.push_back(t);
    });
    return tv;
}

TraceVector build_trace_vector(const FieldCtx& F, GroupCode which, std::uint64_t seed_order) {
    TraceVector tv = build_trace_vector(F, which);
    // Fisher-Yates with an explicit xorshift state, so the permutation is
    // identical across platforms for a given seed.
    std::uint64_t s = seed_order ? seed_order : 0x9e3779b97f4a7c15ull;
    auto next = [&s]() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return s;
    };
    for (std::size_t i = tv.v.size(); i > 1; --i) {
        std::size_t j = static_cast<std::size_t>(next() % i);
        std::swap(tv.v[i - 1], tv.v[j]);
    }
    return tv;
}

DualCodeword dual_codeword(const FieldCtx& F, const TraceVector& tv, Fe a) {
    DualCodeword cw;
    cw.a = a;
    const std::size_t n = tv.v.size();
    cw.bits.assign((n + 63) / 64, 0);
    std::int64_t w = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (F.trace(F.mul(a, tv.v[i]))) {
            cw.bits[i / 64] |= 1ull << (i % 64);
            ++w;
        }
    }
    cw.weight = w;
    return cw;
}

std::map<std::int64_t, std::int64_t> dual_weight_spectrum(const FieldCtx& F,
                                                          const TraceVector& tv) {
    std::map<std::int64_t, std::int64_t> spectrum;
    std::set<std::vector<std::uint64_t>> seen;
    for (std::uint64_t a = 0; a < F.q(); ++a) {
        DualCodeword cw = dual_codeword(F, tv, static_cast<Fe>(a));
        spectrum[cw.weight] += 1;
        seen.insert(cw.bits);
    }
    if (seen.size() != F.q()) {
        std::ostringstream lhs, rhs;
        lhs << seen.size();
        rhs << F.q();
        throw IdentityViolation("a -> (tr(a Tr g_i))_i is not injective", lhs.str(), rhs.str());
    }
    return spectrum;
}

std::map<std::int64_t, std::int64_t> dual_weight_spectrum(const FieldCtx& F, GroupCode which) {
    TraceVector tv = build_trace_vector(F, which);
    // Independent of the spectrum itself: every nonzero a must hit the
    // Kloosterman closed form for its weight.
    for (std::uint64_t a = 1; a < F.q(); ++a) {
        DualCodeword cw = dual_codeword(F, tv, static_cast<Fe>(a));
        std::int64_t want = expected_dual_weight(F, which, static_cast<Fe>(a));
        if (cw.weight != want)
            throw IdentityViolation(
                "dual codeword weight vs Kloosterman closed form (" +
                    std::string(group_code_name(which)) + ", a=" + std::to_string(a) + ")",
                std::to_string(cw.weight), std::to_string(want));
    }
    return dual_weight_spectrum(F, tv);
}

WeightDistribution weight_distribution_dp(const FieldCtx& F, const TraceDistribution& dist,
                                          int j_max) {
    const std::uint64_t q = F.q();
    std::int64_t n = 0;
    for (std::int64_t c : dist.count) n += c;

    int cap;
    bool full = (j_max == kFullDistribution);
    if (full) {
        if (n > kMaxFullLength)
            throw SizeError("full weight distribution needs N <= " +
                            std::to_string(kMaxFullLength) + ", got N=" + std::to_string(n));
        cap = static_cast<int>(n);
    } else {
        if (j_max < 0 || j_max > kMaxTruncatedDegree)
            throw ConfigError("truncation degree must be in [0, " +
                              std::to_string(kMaxTruncatedDegree) + "], got " +
                              std::to_string(j_max));
        cap = j_max;
    }

    // dp[s][j] = number of ways to pick multiplicities nu_beta for the
    // symbols handled so far with sum j and XOR_{nu_beta odd} beta = s.
    // Parity is all that matters in characteristic 2: even nu leaves the
    // running XOR alone, odd nu folds beta in.
    std::vector<std::vector<mpz_class>> dp(q), nxt(q);
    for (std::uint64_t s = 0; s < q; ++s) {
        dp[s].assign(cap + 1, mpz_class(0));
        nxt[s].assign(cap + 1, mpz_class(0));
    }
    dp[0][0] = 1;

    for (std::uint64_t beta = 0; beta < q; ++beta) {
        const std::int64_t nb = dist.count[beta];
        if (nb == 0) continue;
        std::vector<mpz_class> choose(std::min<std::int64_t>(nb, cap) + 1);
        for (std::size_t nu = 0; nu < choose.size(); ++nu)
            choose[nu] = binom(nb, static_cast<std::int64_t>(nu));
        for (std::uint64_t s = 0; s < q; ++s)
            for (int j = 0; j <= cap; ++j) nxt[s][j] = 0;
        for (std::uint64_t s = 0; s < q; ++s) {
            const std::uint64_t s_flip = s ^ beta;
            for (int j = 0; j <= cap; ++j) {
                const mpz_class& cur = dp[s][j];
                if (cur == 0) continue;
                const int nu_hi = std::min<int>(static_cast<int>(choose.size()) - 1, cap - j);
                for (int nu = 0; nu <= nu_hi; ++nu) {
                    mpz_class& slot = nxt[(nu & 1) ? s_flip : s][j + nu];
                    mpz_addmul(slot.get_mpz_t(), cur.get_mpz_t(), choose[nu].get_mpz_t());
                }
            }
        }
        dp.swap(nxt);
    }

    WeightDistribution wd;
    wd.n = n;
    wd.full = full;
    wd.counts = std::move(dp[0]);
    assert(wd.counts[0] == 1);
    return wd;
}

WeightDistribution weight_distribution_dp(const FieldCtx& F, GroupCode which, int j_max) {
    return weight_distribution_dp(F, trace_distribution(F, which), j_max);
}

std::vector<mpz_class> krawtchouk_row(std::int64_t n, std::int64_t w, std::int64_t j_max) {
    if (n < 0 || w < 0 || w > n || j_max < 0)
        throw ConfigError("krawtchouk row needs 0 <= w <= n and j_max >= 0");
    std::vector<mpz_class> row(j_max + 1);
    row[0] = 1;
    if (j_max >= 1) row[1] = n - 2 * w;
    for (std::int64_t j = 1; j < j_max; ++j) {
        // (j+1) K_{j+1} = (n-2w) K_j - (n-j+1) K_{j-1}
        mpz_class t = mpz_class(n - 2 * w) * row[j] - mpz_class(n - j + 1) * row[j - 1];
        if (!mpz_divisible_ui_p(t.get_mpz_t(), static_cast<unsigned long>(j + 1)))
            throw IdentityViolation("Krawtchouk recurrence step not divisible by j+1",
                                    t.get_str(), std::to_string(j + 1));
        mpz_divexact_ui(row[j + 1].get_mpz_t(), t.get_mpz_t(),
                        static_cast<unsigned long>(j + 1));
    }
    return row;
}

WeightDistribution macwilliams(const std::map<std::int64_t, std::int64_t>& dual_spectrum,
                               std::int64_t n, int dual_dim) {
    mpz_class total = 0;
    for (const auto& [w, cnt] : dual_spectrum) {
        if (w < 0 || w > n) throw ConfigError("dual spectrum has weight outside [0, n]");
        total += cnt;
    }
    mpz_class dual_size;
    mpz_ui_pow_ui(dual_size.get_mpz_t(), 2, static_cast<unsigned long>(dual_dim));
    if (total != dual_size)
        throw ConfigError("dual spectrum totals " + total.get_str() + ", expected 2^" +
                          std::to_string(dual_dim));

    WeightDistribution wd;
    wd.n = n;
    wd.full = true;
    wd.counts.assign(n + 1, mpz_class(0));
    for (const auto& [w, cnt] : dual_spectrum) {
        std::vector<mpz_class> row = krawtchouk_row(n, w, n);
        mpz_class c(static_cast<long>(cnt));
        for (std::int64_t j = 0; j <= n; ++j)
            mpz_addmul(wd.counts[j].get_mpz_t(), c.get_mpz_t(), row[j].get_mpz_t());
    }
    for (std::int64_t j = 0; j <= n; ++j) {
        if (!mpz_divisible_p(wd.counts[j].get_mpz_t(), dual_size.get_mpz_t()))
            throw IdentityViolation("MacWilliams coefficient not divisible by |dual|",
                                    wd.counts[j].get_str(), dual_size.get_str());
        mpz_divexact(wd.counts[j].get_mpz_t(), wd.counts[j].get_mpz_t(), dual_size.get_mpz_t());
    }
    return wd;
}

std::vector<mpz_class> d_sequence(const FieldCtx& F, int j_max) {
    WeightDistribution c = weight_distribution_dp(F, GroupCode::O3, j_max);
    WeightDistribution chat = weight_distribution_dp(F, GroupCode::Sp2, j_max);
    std::vector<mpz_class> d(j_max + 1);
    for (int j = 0; j <= j_max; ++j) d[j] = c.counts[j] - chat.counts[j];
    return d;
}

}  // namespace kloo
