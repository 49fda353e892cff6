#include "kloo/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "kloo/char_sums.hpp"
#include "kloo/codes.hpp"
#include "kloo/errors.hpp"
#include "kloo/field.hpp"
#include "kloo/groups.hpp"
#include "kloo/identities.hpp"

namespace kloo {

namespace {

void fail(const std::string& what, const std::string& lhs, const std::string& rhs) {
    throw IdentityViolation(what, lhs, rhs);
}

std::string check_first_moments(int r, const VerifyOptions&) {
    FieldCtx F(r);
    auto [t0, t1] = first_moment_closed_forms(F);
    return "T0K=" + std::to_string(t0) + " T1K=" + std::to_string(t1);
}

std::string check_frobenius(int r, const VerifyOptions&) {
    FieldCtx F(r);
    KloostermanTable kt(F);  // construction enforces the Weil bound
    for (Fe a = 1; a < F.q(); ++a) {
        Fe x = a;
        for (int s = 1; s < r; ++s) {
            x = F.sq(x);
            if (kt.at(x) != kt.at(a))
                fail("K invariant under squaring the argument (a=" + std::to_string(a) +
                         ", s=" + std::to_string(s) + ")",
                     std::to_string(kt.at(x)), std::to_string(kt.at(a)));
        }
    }
    return "squaring-orbit invariance and Weil bound, all a";
}

std::string check_fourier(int r, const VerifyOptions&) {
    FieldCtx F(r);
    KloostermanTable kt(F);
    for (std::uint32_t beta = 0; beta < F.q(); ++beta)
        fourier_identity_check(F, static_cast<Fe>(beta), kt);  // throws on mismatch
    return "sum_a lambda(a beta) K(a), all beta";
}

std::string check_trace_counts(int r, const VerifyOptions&) {
    FieldCtx F(r);
    // trace_distribution(O3) re-derives every count from the three-case
    // formula and insists all are positive.
    TraceDistribution o3 = trace_distribution(F, GroupCode::O3);
    TraceDistribution sp = trace_distribution(F, GroupCode::Sp2);
    for (std::uint32_t b = 0; b < F.q(); ++b) {
        if (sp.count[b] != o3.count[b ^ 1])
            fail("Sp2 counts are the O3 counts shifted by 1 (beta=" + std::to_string(b) + ")",
                 std::to_string(sp.count[b]), std::to_string(o3.count[b ^ 1]));
    }
    return "n(beta) three-case formula, all beta positive";
}

std::string check_gauss_o3(int r, const VerifyOptions&) {
    FieldCtx F(r);
    TraceDistribution o3 = trace_distribution(F, GroupCode::O3);
    TraceDistribution sp = trace_distribution(F, GroupCode::Sp2);
    // gauss_sum_bruteforce checks each sum against its Kloosterman closed
    // form internally.
    for (Fe a = 1; a < F.q(); ++a) {
        gauss_sum_bruteforce(F, o3, a);
        gauss_sum_bruteforce(F, sp, a);
    }
    return "lambda(a Tr w) sums vs q K(lambda;a) forms, all a";
}

std::string check_gauss_formula(int r, const VerifyOptions&) {
    FieldCtx F(r);
    TraceDistribution o3 = trace_distribution(F, GroupCode::O3);
    mpz_class brute = gauss_sum_bruteforce(F, o3, 1);
    mpz_class formula = gauss_sum_formula(F, 1);
    if (brute != formula)
        fail("odd-orthogonal Gauss sum formula, n=1", brute.get_str(), formula.get_str());
    std::string detail = "n=1 formula vs enumeration";
    if (r == 1) {
        std::vector<Mat4> sp4 = enumerate_sp4_filter(F);
        mpz_class o5 = F.lambda(1) * sp4_gauss_sum(F, sp4, 1);
        mpz_class f2 = gauss_sum_formula(F, 2);
        if (o5 != f2) fail("odd-orthogonal Gauss sum formula, n=2", o5.get_str(), f2.get_str());
        detail += "; n=2 over " + std::to_string(sp4.size()) + " elements";
    }
    return detail;
}

std::string check_gl_recursion(int r, const VerifyOptions&) {
    FieldCtx F(r);
    const int t_max = (r == 1) ? 3 : (r == 2 ? 2 : 1);
    for (int t = 1; t <= t_max; ++t) {
        for (Fe a = 1; a < F.q(); ++a) {
            mpz_class rec = gl_kloosterman(F, t, a);
            mpz_class brute = gl_kloosterman_bruteforce(F, t, a);
            if (rec != brute)
                fail("GL(t,q) Kloosterman recursion vs brute force (t=" + std::to_string(t) +
                         ", a=" + std::to_string(a) + ")",
                     rec.get_str(), brute.get_str());
        }
    }
    return "t <= " + std::to_string(t_max) + ", all a";
}

std::string check_dual_injectivity(int r, const VerifyOptions&) {
    FieldCtx F(r);
    // dual_weight_spectrum throws unless the q codewords are pairwise
    // distinct and every weight matches its closed form.
    auto o3 = dual_weight_spectrum(F, GroupCode::O3);
    auto sp = dual_weight_spectrum(F, GroupCode::Sp2);
    std::int64_t no3 = 0, nsp = 0;
    for (const auto& [w, c] : o3) no3 += c;
    for (const auto& [w, c] : sp) nsp += c;
    return std::to_string(no3) + "+" + std::to_string(nsp) + " distinct dual words";
}

std::string check_weights_crosscheck(int r, const VerifyOptions&) {
    FieldCtx F(r);
    for (GroupCode which : {GroupCode::O3, GroupCode::Sp2}) {
        WeightDistribution dp = weight_distribution_dp(F, which, kFullDistribution);
        auto spectrum = dual_weight_spectrum(F, which);
        WeightDistribution mw = macwilliams(spectrum, dp.n, r);
        for (std::int64_t j = 0; j <= dp.n; ++j)
            if (dp.counts[j] != mw.counts[j])
                fail("DP count vs MacWilliams transform (" +
                         std::string(group_code_name(which)) + ", j=" + std::to_string(j) + ")",
                     dp.counts[j].get_str(), mw.counts[j].get_str());
    }
    return "all coefficients, both codes";
}

std::string check_weight_symmetry(int r, const VerifyOptions&) {
    FieldCtx F(r);
    for (GroupCode which : {GroupCode::O3, GroupCode::Sp2}) {
        WeightDistribution dp = weight_distribution_dp(F, which, kFullDistribution);
        mpz_class total = 0;
        for (std::int64_t j = 0; j <= dp.n; ++j) {
            total += dp.counts[j];
            if (dp.counts[j] != dp.counts[dp.n - j])
                fail("C_j = C_(N-j) (" + std::string(group_code_name(which)) +
                         ", j=" + std::to_string(j) + ")",
                     dp.counts[j].get_str(), dp.counts[dp.n - j].get_str());
        }
        mpz_class want;
        mpz_ui_pow_ui(want.get_mpz_t(), 2, static_cast<unsigned long>(dp.n - r));
        if (total != want)
            fail("total codeword count 2^(N-r) (" + std::string(group_code_name(which)) + ")",
                 total.get_str(), want.get_str());
    }
    return "symmetry and totals, both codes";
}

std::string check_pless(int r, const VerifyOptions& opt) {
    FieldCtx F(r);
    const std::int64_t q = F.q();
    const std::int64_t n = q * (q * q - 1);
    const int h_max = std::min(opt.h_max, kMaxRecursionExponent);
    for (GroupCode which : {GroupCode::O3, GroupCode::Sp2}) {
        auto spectrum = dual_weight_spectrum(F, which);
        WeightDistribution wd = weight_distribution_dp(
            F, which, static_cast<int>(std::min<std::int64_t>(n, h_max)));
        for (int h = 0; h <= h_max; ++h) pless_power_moment(spectrum, wd, r, h);
    }
    return "h <= " + std::to_string(h_max) + ", both codes";
}

std::string check_moment_recursion(int r, const VerifyOptions& opt) {
    FieldCtx F(r);
    const int h_max = std::min(opt.h_max, kMaxRecursionExponent);
    std::vector<mpz_class> rec = mk_recursion(F, h_max);
    MomentTable brute = moments(F, h_max);
    for (int h = 0; h <= h_max; ++h)
        if (rec[h] != brute.mk[h])
            fail("MK^h recursion vs brute force (q=" + std::to_string(F.q()) +
                     ", h=" + std::to_string(h) + ")",
                 rec[h].get_str(), brute.mk[h].get_str());
    return "h <= " + std::to_string(h_max);
}

std::string check_trace_one_recursion(int r, const VerifyOptions& opt) {
    FieldCtx F(r);
    int h_odd = std::min(opt.h_max, kMaxRecursionExponent);
    if (h_odd % 2 == 0) --h_odd;
    if (h_odd < 1) h_odd = 1;
    const std::int64_t q = F.q();
    const std::int64_t n = q * (q * q - 1);
    std::vector<mpz_class> d =
        d_sequence(F, static_cast<int>(std::min<std::int64_t>(n, h_odd)));
    if (opt.inject_fault == "trace-one-recursion" && d.size() > 1)
        d[1] += 2;  // parity-safe corruption: the recursion stays integral but wrong
    std::map<int, mpz_class> rec = t1k_recursion(F, h_odd, d);
    MomentTable brute = moments(F, h_odd);
    for (const auto& [h, value] : rec)
        if (value != brute.t1k[h])
            fail("T1K^h recursion vs brute force (q=" + std::to_string(F.q()) +
                     ", h=" + std::to_string(h) + ")",
                 value.get_str(), brute.t1k[h].get_str());
    return "odd h <= " + std::to_string(h_odd);
}

std::string check_modulus_independence(int r, const VerifyOptions& opt) {
    std::vector<Fe> moduli;
    for (std::uint32_t p = 1u << r; p < (2u << r) && moduli.size() < 2; ++p)
        if (find_poly_factor(p) == 0) moduli.push_back(static_cast<Fe>(p));
    if (moduli.size() < 2) return "single irreducible modulus; nothing to compare";

    FieldCtx F1(r, moduli[0]), F2(r, moduli[1]);
    const int h_max = std::min(opt.h_max, kMaxRecursionExponent);
    MomentTable m1 = moments(F1, h_max), m2 = moments(F2, h_max);
    for (int h = 0; h <= h_max; ++h) {
        if (m1.mk[h] != m2.mk[h] || m1.t0k[h] != m2.t0k[h] || m1.t1k[h] != m2.t1k[h])
            fail("moment tables across moduli (h=" + std::to_string(h) + ")",
                 m1.mk[h].get_str() + "/" + m1.t0k[h].get_str() + "/" + m1.t1k[h].get_str(),
                 m2.mk[h].get_str() + "/" + m2.t0k[h].get_str() + "/" + m2.t1k[h].get_str());
    }
    for (GroupCode which : {GroupCode::O3, GroupCode::Sp2}) {
        auto s1 = dual_weight_spectrum(F1, which);
        auto s2 = dual_weight_spectrum(F2, which);
        if (s1 != s2) {
            std::ostringstream l, rr;
            for (const auto& [w, c] : s1) l << w << ":" << c << " ";
            for (const auto& [w, c] : s2) rr << w << ":" << c << " ";
            fail("dual spectra across moduli (" + std::string(group_code_name(which)) + ")",
                 l.str(), rr.str());
        }
    }
    const int j_max = 9;
    std::vector<mpz_class> d1 = d_sequence(F1, j_max), d2 = d_sequence(F2, j_max);
    for (int j = 0; j <= j_max; ++j)
        if (d1[j] != d2[j])
            fail("D_j across moduli (j=" + std::to_string(j) + ")", d1[j].get_str(),
                 d2[j].get_str());
    return "moduli " + poly_to_string(moduli[0]) + " vs " + poly_to_string(moduli[1]);
}

struct CheckSpec {
    const char* name;
    int lo, hi;                  // supported degree range
    int def_lo, def_hi;          // default sweep when none is given
    std::string (*fn)(int, const VerifyOptions&);
};

const CheckSpec kRegistry[] = {
    {"first-moments", 1, 12, 2, 12, check_first_moments},
    {"frobenius", 1, 8, 1, 8, check_frobenius},
    {"fourier", 1, 8, 1, 8, check_fourier},
    {"trace-counts", 1, 7, 2, 6, check_trace_counts},
    {"gauss-o3", 1, 6, 2, 6, check_gauss_o3},
    {"gauss-formula", 1, 6, 1, 6, check_gauss_formula},
    {"gl-recursion", 1, 3, 1, 3, check_gl_recursion},
    {"dual-injectivity", 1, 6, 1, 6, check_dual_injectivity},
    {"weights-crosscheck", 1, 3, 1, 3, check_weights_crosscheck},
    {"weight-symmetry", 1, 3, 1, 3, check_weight_symmetry},
    {"pless", 1, 3, 1, 3, check_pless},
    {"moment-recursion", 2, 5, 2, 4, check_moment_recursion},
    {"trace-one-recursion", 2, 5, 2, 5, check_trace_one_recursion},
    {"modulus-independence", 2, 6, 4, 4, check_modulus_independence},
};

}  // namespace

bool VerificationReport::all_pass() const {
    for (const CheckResult& row : rows)
        if (!row.pass) return false;
    return !rows.empty();
}

const std::vector<std::string>& all_check_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const CheckSpec& c : kRegistry) v.emplace_back(c.name);
        return v;
    }();
    return names;
}

VerificationReport run_checks(const VerifyOptions& opt) {
    std::vector<const CheckSpec*> selected;
    if (opt.only.empty()) {
        for (const CheckSpec& c : kRegistry) selected.push_back(&c);
    } else {
        for (const std::string& name : opt.only) {
            const CheckSpec* found = nullptr;
            for (const CheckSpec& c : kRegistry)
                if (name == c.name) found = &c;
            if (!found) throw ConfigError("unknown check name: " + name);
            selected.push_back(found);
        }
    }
    if (!opt.inject_fault.empty() && opt.inject_fault != "trace-one-recursion")
        throw ConfigError("fault injection supports only trace-one-recursion, got " +
                          opt.inject_fault);
    if (opt.h_max < 0 || opt.h_max > kMaxRecursionExponent)
        throw ConfigError("h_max must be in [0, " + std::to_string(kMaxRecursionExponent) + "]");
    for (int r : opt.sweep)
        if (r < 1 || r > 16) throw ConfigError("sweep degree out of range [1, 16]");

    std::vector<std::pair<int, const CheckSpec*>> jobs;
    for (const CheckSpec* c : selected) {
        if (opt.sweep.empty()) {
            for (int r = c->def_lo; r <= c->def_hi; ++r) jobs.emplace_back(r, c);
        } else {
            for (int r : opt.sweep)
                if (r >= c->lo && r <= c->hi) jobs.emplace_back(r, c);
        }
    }
    if (jobs.empty()) throw ConfigError("sweep selects no runnable checks");

    std::sort(jobs.begin(), jobs.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first < b.first;
        return std::string_view(a.second->name) < std::string_view(b.second->name);
    });

    VerificationReport report;
    for (const auto& [r, c] : jobs) {
        CheckResult row;
        row.r = r;
        row.check = c->name;
        try {
            row.detail = c->fn(r, opt);
            row.pass = true;
        } catch (const IdentityViolation& e) {
            row.pass = false;
            row.detail = e.what();
        }
        report.rows.push_back(std::move(row));
    }
    return report;
}

}  // namespace kloo
