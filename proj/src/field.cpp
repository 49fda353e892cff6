#include "kloo/field.hpp"

#include <bit>

namespace kloo {

int poly_degree(std::uint64_t p) {
    return p == 0 ? -1 : 63 - std::countl_zero(p);
}

std::uint64_t poly_mod(std::uint64_t a, std::uint64_t m) {
    const int dm = poly_degree(m);
    int da = poly_degree(a);
    while (a != 0 && da >= dm) {
        a ^= m << (da - dm);
        da = poly_degree(a);
    }
    return a;
}

std::string poly_to_string(std::uint64_t p) {
    if (p == 0) return "0";
    std::string s;
    for (int d = poly_degree(p); d >= 0; --d) {
        if (!((p >> d) & 1)) continue;
        if (!s.empty()) s += "+";
        if (d == 0)
            s += "1";
        else if (d == 1)
            s += "x";
        else
            s += "x^" + std::to_string(d);
    }
    return s;
}

std::uint64_t find_poly_factor(std::uint64_t p) {
    const int d = poly_degree(p);
    if (d < 1) return 0;
    // a reducible p has a factor of degree in [1, d/2]
    for (std::uint64_t f = 2; poly_degree(f) <= d / 2; ++f) {
        if (poly_mod(p, f) == 0) return f;
    }
    return 0;
}

Fe smallest_irreducible(int r) {
    for (std::uint64_t p = std::uint64_t{1} << r; p < std::uint64_t{2} << r; ++p) {
        if (find_poly_factor(p) == 0) return static_cast<Fe>(p);
    }
    throw ConfigError("no irreducible polynomial of degree " + std::to_string(r));
}

FieldCtx::FieldCtx(int r) {
    if (r < 1 || r > kMaxR)
        throw ConfigError("field degree r=" + std::to_string(r) + " out of range [1, " +
                          std::to_string(kMaxR) + "]");
    spec_ = FieldSpec{r, smallest_irreducible(r)};
    init();
}

FieldCtx::FieldCtx(int r, Fe modulus) {
    if (r < 1 || r > kMaxR)
        throw ConfigError("field degree r=" + std::to_string(r) + " out of range [1, " +
                          std::to_string(kMaxR) + "]");
    if (poly_degree(modulus) != r)
        throw ConfigError("modulus " + poly_to_string(modulus) + " does not have degree " +
                          std::to_string(r));
    if (std::uint64_t f = find_poly_factor(modulus))
        throw ConfigError("modulus " + poly_to_string(modulus) + " is reducible: divisible by " +
                          poly_to_string(f));
    spec_ = FieldSpec{r, modulus};
    init();
}

Fe FieldCtx::mul_long(Fe a, Fe b) const {
    std::uint64_t acc = 0;
    std::uint64_t aa = a;
    while (b != 0) {
        if (b & 1) acc ^= aa;
        aa <<= 1;
        b >>= 1;
    }
    for (int d = 2 * spec_.r - 2; d >= spec_.r; --d) {
        if ((acc >> d) & 1) acc ^= static_cast<std::uint64_t>(spec_.modulus) << (d - spec_.r);
    }
    return static_cast<Fe>(acc);
}

void FieldCtx::init() {
    const int r = spec_.r;
    q_ = std::uint32_t{1} << r;

    // trace of the basis monomials; tr is GF(2)-linear so tr(x) is the
    // parity of x masked by them
    Fe mask = 0;
    for (int i = 0; i < r; ++i) {
        Fe t = 0;
        Fe y = static_cast<Fe>(poly_mod(std::uint64_t{1} << i, spec_.modulus));
        for (int k = 0; k < r; ++k) {
            t ^= y;
            y = mul_long(y, y);
        }
        if (t & ~Fe{1})
            throw IdentityViolation("trace of basis monomial is not in GF(2)",
                                    poly_to_string(std::uint64_t{1} << i), std::to_string(t));
        if (t) mask |= Fe{1} << i;
    }
    trace_bits_.assign((q_ + 63) / 64, 0);
    for (std::uint32_t x = 0; x < q_; ++x) {
        if (std::popcount(x & mask) & 1) trace_bits_[x >> 6] |= std::uint64_t{1} << (x & 63);
    }

    if (r > kMaxTableR) return;

    // find a generator of the multiplicative group: order q-1 exactly,
    // tested against the prime factors of q-1 (x itself need not be
    // primitive for an arbitrary irreducible modulus)
    const std::uint32_t m = q_ - 1;
    std::vector<std::uint32_t> primes;
    std::uint32_t n = m;
    for (std::uint32_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            primes.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) primes.push_back(n);

    auto pow_long = [this](Fe a, std::uint32_t e) {
        Fe res = 1;
        while (e != 0) {
            if (e & 1) res = mul_long(res, a);
            a = mul_long(a, a);
            e >>= 1;
        }
        return res;
    };
    generator_ = 1;
    for (Fe g = 2; g < q_; ++g) {
        bool ok = true;
        for (std::uint32_t p : primes) {
            if (pow_long(g, m / p) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) {
            generator_ = g;
            break;
        }
    }

    exp_.assign(2 * static_cast<std::size_t>(m), 0);
    log_.assign(q_, 0);
    Fe cur = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        exp_[i] = cur;
        exp_[i + m] = cur;
        log_[cur] = i;
        cur = mul_long(cur, generator_);
    }
    if (cur != 1) throw IdentityViolation("generator order is not q-1", std::to_string(cur), "1");
}

Fe FieldCtx::inv(Fe a) const {
    if (a == 0) throw DomainError("division by zero in GF(2^" + std::to_string(spec_.r) + ")");
    if (!exp_.empty()) {
        const std::uint32_t m = q_ - 1;
        return exp_[(m - log_[a]) % m];
    }
    return pow(a, q_ - 2);
}

Fe FieldCtx::pow(Fe a, std::uint64_t e) const {
    Fe res = 1;
    while (e != 0) {
        if (e & 1) res = mul(res, a);
        a = mul(a, a);
        e >>= 1;
    }
    return res;
}

Fe FieldCtx::sqrt(Fe a) const {
    Fe res = a;
    for (int i = 0; i < spec_.r - 1; ++i) res = mul(res, res);
    return res;
}

}  // namespace kloo
