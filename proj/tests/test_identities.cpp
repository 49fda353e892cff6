#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kloo/char_sums.hpp"
#include "kloo/codes.hpp"
#include "kloo/errors.hpp"
#include "kloo/field.hpp"
#include "kloo/identities.hpp"

using namespace kloo;

TEST_CASE("Stirling numbers of the second kind") {
    CHECK(stirling2(0, 0) == 1);
    CHECK(stirling2(1, 0) == 0);
    CHECK(stirling2(4, 2) == 7);
    CHECK(stirling2(5, 3) == 25);
    CHECK(stirling2(6, 3) == 90);
    CHECK(stirling2(10, 5) == 42525);
    CHECK(stirling2(3, 5) == 0);
    for (int h = 1; h <= 12; ++h) {
        CHECK(stirling2(h, 1) == 1);
        CHECK(stirling2(h, h) == 1);
    }
    CHECK_THROWS_AS(stirling2(-1, 0), ConfigError);
}

TEST_CASE("Stirling table cross-checks the recurrence against the sum form") {
    StirlingTable S(12);
    CHECK(S.h_max() == 12);
    CHECK(S.at(10, 5) == 42525);
    CHECK(S.at(12, 12) == 1);
    CHECK(S.at(5, 7) == 0);  // t > h
    CHECK_THROWS_AS(S.at(13, 1), ConfigError);
}

TEST_CASE("dual power moments: the hand value at q=4, h=1") {
    PowerMomentCheck row = pless_power_moment(FieldCtx(2), GroupCode::O3, 1);
    CHECK(row.lhs == 80);
    CHECK(row.rhs == 80);
}

TEST_CASE("dual power moments hold for q in {2,4,8}, h <= 10") {
    for (int r = 1; r <= 3; ++r) {
        FieldCtx F(r);
        const std::int64_t q = F.q();
        const std::int64_t n = q * (q * q - 1);
        for (GroupCode which : {GroupCode::O3, GroupCode::Sp2}) {
            auto spectrum = dual_weight_spectrum(F, which);
            WeightDistribution wd = weight_distribution_dp(
                F, which, static_cast<int>(std::min<std::int64_t>(n, 10)));
            for (int h = 0; h <= 10; ++h) {
                PowerMomentCheck row = pless_power_moment(spectrum, wd, r, h);
                CHECK(row.lhs == row.rhs);
            }
        }
    }
}

TEST_CASE("power moment input validation") {
    FieldCtx F(2);
    auto spectrum = dual_weight_spectrum(F, GroupCode::O3);
    WeightDistribution wd = weight_distribution_dp(F, GroupCode::O3, 3);
    CHECK_THROWS_AS(pless_power_moment(spectrum, wd, 2, 8), ConfigError);  // truncated too low
    CHECK_THROWS_AS(pless_power_moment(FieldCtx(2), GroupCode::O3, kMaxRecursionExponent + 1),
                    ConfigError);
}

TEST_CASE("moment recursion reproduces brute-force MK^h") {
    const long mk4[] = {3, 1, 11, 25, 83, 241, 731, 2185, 6563, 19681, 59051};
    std::vector<mpz_class> rec = mk_recursion(FieldCtx(2), 10);
    REQUIRE(rec.size() == 11);
    for (int h = 0; h <= 10; ++h) CHECK(rec[h] == mk4[h]);

    for (int r = 2; r <= 4; ++r) {
        FieldCtx F(r);
        std::vector<mpz_class> mk = mk_recursion(F, 10);
        MomentTable brute = moments(F, 10);
        for (int h = 0; h <= 10; ++h) CHECK(mk[h] == brute.mk[h]);
    }
    CHECK_THROWS_AS(mk_recursion(FieldCtx(2), kMaxRecursionExponent + 1), ConfigError);
}

TEST_CASE("trace-one recursion reproduces brute-force odd T1K^h") {
    std::map<int, mpz_class> t4 = t1k_recursion(FieldCtx(2), 9);
    for (int h = 1; h <= 9; h += 2) CHECK(t4.at(h) == -2);

    const long t8w[] = {0, 4, 0, -44, 0, -2396, 0, -71564, 0, -1894076};
    std::map<int, mpz_class> t8 = t1k_recursion(FieldCtx(3), 9);
    for (int h = 1; h <= 9; h += 2) CHECK(t8.at(h) == t8w[h]);

    const long t16w[] = {0, -8, 0, -392, 0, -11528, 0, -303752, 0, -7733768};
    std::map<int, mpz_class> t16 = t1k_recursion(FieldCtx(4), 9);
    for (int h = 1; h <= 9; h += 2) CHECK(t16.at(h) == t16w[h]);

    const long long t32w[] = {0, 16, 0, 976, 0, 147856, 0, 19118416, 0, 2348378896LL};
    std::map<int, mpz_class> t32 = t1k_recursion(FieldCtx(5), 9);
    for (int h = 1; h <= 9; h += 2) CHECK(t32.at(h) == mpz_class(std::to_string(t32w[h])));

    for (int r = 2; r <= 5; ++r) {
        FieldCtx F(r);
        MomentTable brute = moments(F, 9);
        std::map<int, mpz_class> rec = t1k_recursion(F, 9);
        for (const auto& [h, v] : rec) CHECK(v == brute.t1k[h]);
    }
}

TEST_CASE("trace-one recursion input validation and fault sensitivity") {
    FieldCtx F(2);
    CHECK_THROWS_AS(t1k_recursion(F, 8), ConfigError);   // even bound
    CHECK_THROWS_AS(t1k_recursion(F, -1), ConfigError);
    CHECK_THROWS_AS(t1k_recursion(F, 17), ConfigError);
    std::vector<mpz_class> d = d_sequence(F, 1);
    CHECK_THROWS_AS(t1k_recursion(F, 9, d), ConfigError);  // too short

    // a corrupted difference sequence must change the h=1 output
    std::vector<mpz_class> d9 = d_sequence(F, 9);
    std::map<int, mpz_class> good = t1k_recursion(F, 1, d9);
    d9[1] += 2;
    std::map<int, mpz_class> bad = t1k_recursion(F, 1, d9);
    CHECK(good.at(1) == -2);
    CHECK(bad.at(1) == -3);
}

TEST_CASE("first-moment closed forms across r") {
    for (int r = 2; r <= 12; ++r) {
        FieldCtx F(r);
        auto [t0, t1] = first_moment_closed_forms(F);
        const std::int64_t half = F.q() / 2;
        CHECK(t0 == 1 + (r % 2 == 0 ? half : -half));
        CHECK(t1 == (r % 2 == 0 ? -half : half));
    }
}

TEST_CASE("recursions and power moments at q=2 handle t > N binomials") {
    // N = 6 < h exercises the zero-binomial convention C(N-j, N-t) = 0 for t > N
    FieldCtx F(1);
    const std::int64_t n = 6;
    for (GroupCode which : {GroupCode::O3, GroupCode::Sp2}) {
        auto spectrum = dual_weight_spectrum(F, which);
        WeightDistribution wd = weight_distribution_dp(F, which, static_cast<int>(n));
        for (int h = 0; h <= 10; ++h) {
            PowerMomentCheck row = pless_power_moment(spectrum, wd, 1, h);
            CHECK(row.lhs == row.rhs);
        }
    }
    // over GF(2) every K(lambda;a) is 1, so all moments collapse to 1
    std::vector<mpz_class> mk = mk_recursion(F, 10);
    MomentTable brute = moments(F, 10);
    for (int h = 0; h <= 10; ++h) {
        CHECK(mk[h] == 1);
        CHECK(mk[h] == brute.mk[h]);
    }
}
