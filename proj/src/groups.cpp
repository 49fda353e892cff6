#include "kloo/groups.hpp"

#include <string>
#include <unordered_set>

namespace kloo {

const char* group_code_name(GroupCode which) {
    return which == GroupCode::O3 ? "o3" : "sp2";
}

O3Element lift_to_o3(const FieldCtx& F, const Mat2& w) {
    O3Element e;
    e.a = w.a;
    e.b = w.b;
    e.c = w.c;
    e.d = w.d;
    e.g = F.sqrt(F.mul(w.a, w.c));
    e.h = F.sqrt(F.mul(w.b, w.d));
    e.trace = w.a ^ w.d ^ 1;
    return e;
}

bool o3_relations_hold(const FieldCtx& F, const O3Element& e) {
    if (F.mul(e.a, e.c) != F.sq(e.g)) return false;
    if (F.mul(e.b, e.d) != F.sq(e.h)) return false;
    return (F.mul(e.a, e.d) ^ F.mul(e.c, e.b)) == 1;
}

std::int64_t TraceDistribution::total() const {
    std::int64_t t = 0;
    for (std::int64_t c : count) t += c;
    return t;
}

std::int64_t o3_trace_count_formula(const FieldCtx& F, Fe beta) {
    const std::int64_t q = F.q();
    if (beta == 1) return q * q;
    return F.trace(F.inv(beta ^ 1)) == 0 ? q * q + q : q * q - q;
}

TraceDistribution trace_distribution(const FieldCtx& F, GroupCode which) {
    TraceDistribution dist;
    dist.q = F.q();
    dist.which = which;
    dist.count.assign(F.q(), 0);
    const Fe shift = which == GroupCode::O3 ? 1 : 0;
    for_each_sl2(F, [&](const Mat2& w) { ++dist.count[w.trace() ^ shift]; });
    if (which == GroupCode::O3) {
        for (Fe beta = 0; beta < F.q(); ++beta) {
            const std::int64_t expect = o3_trace_count_formula(F, beta);
            if (dist.count[beta] != expect)
                throw IdentityViolation("O(3,q) trace count mismatch at beta=" +
                                            std::to_string(beta),
                                        std::to_string(dist.count[beta]), std::to_string(expect));
            if (dist.count[beta] <= 0)
                throw IdentityViolation("trace not surjective at beta=" + std::to_string(beta),
                                        std::to_string(dist.count[beta]), "> 0");
        }
    }
    return dist;
}

std::int64_t gauss_sum_bruteforce(const FieldCtx& F, GroupCode which, Fe a) {
    return gauss_sum_bruteforce(F, trace_distribution(F, which), a);
}

std::int64_t gauss_sum_bruteforce(const FieldCtx& F, const TraceDistribution& dist, Fe a) {
    if (a == 0) throw DomainError("Gauss sum needs a nonzero character, a != 0");
    std::int64_t sum = 0;
    for (Fe beta = 0; beta < F.q(); ++beta)
        sum += dist.count[beta] * F.lambda(F.mul(a, beta));
    const std::int64_t k = kloosterman(F, 1, a);
    const std::int64_t expect = dist.which == GroupCode::O3
                                    ? F.lambda(a) * static_cast<std::int64_t>(F.q()) * k
                                    : static_cast<std::int64_t>(F.q()) * k;
    if (sum != expect)
        throw IdentityViolation(std::string("Gauss sum mismatch for ") +
                                    group_code_name(dist.which) + " at a=" + std::to_string(a),
                                std::to_string(sum), std::to_string(expect));
    return sum;
}

mpz_class qbinom(int n, int r, std::uint64_t q) {
    if (r < 0 || r > n) return 0;
    mpz_class num = 1, den = 1;
    const mpz_class qz(static_cast<unsigned long>(q));
    for (int j = 0; j < r; ++j) {
        mpz_class t;
        mpz_pow_ui(t.get_mpz_t(), qz.get_mpz_t(), n - j);
        num *= t - 1;
        mpz_pow_ui(t.get_mpz_t(), qz.get_mpz_t(), r - j);
        den *= t - 1;
    }
    mpz_class out;
    mpz_class rem;
    mpz_tdiv_qr(out.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (rem != 0)
        throw IdentityViolation("q-binomial division not exact", num.get_str(), den.get_str());
    return out;
}

mpz_class group_order(int n, std::uint64_t q) {
    const mpz_class qz(static_cast<unsigned long>(q));
    mpz_class order;
    mpz_pow_ui(order.get_mpz_t(), qz.get_mpz_t(), static_cast<unsigned long>(n) * n);
    for (int j = 1; j <= n; ++j) {
        mpz_class t;
        mpz_pow_ui(t.get_mpz_t(), qz.get_mpz_t(), 2 * j);
        order *= t - 1;
    }
    return order;
}

mpz_class gauss_sum_formula(const FieldCtx& F, int n) {
    if (n < 1 || n > 3) throw ConfigError("Gauss sum closed form supported for 1 <= n <= 3");
    const std::uint64_t q = F.q();
    const mpz_class qz(static_cast<unsigned long>(q));
    mpz_class total = 0;
    for (int r = 0; r <= n; r += 2) {
        mpz_class term;
        mpz_pow_ui(term.get_mpz_t(), qz.get_mpz_t(), r * n - r * r / 4);
        term *= qbinom(n, r, q);
        for (int j = 1; j <= r / 2; ++j) {
            mpz_class t;
            mpz_pow_ui(t.get_mpz_t(), qz.get_mpz_t(), 2 * j - 1);
            term *= t - 1;
        }
        term *= gl_kloosterman(F, n - r, 1);
        total += term;
    }
    mpz_class front;
    mpz_pow_ui(front.get_mpz_t(), qz.get_mpz_t(), n * (n + 1) / 2);
    return F.lambda(1) * front * total;
}

namespace {

Mat4 mat4_mul(const FieldCtx& F, const Mat4& x, const Mat4& y) {
    Mat4 out{};
    for (int i = 0; i < 4; ++i) {
        for (int k = 0; k < 4; ++k) {
            const Fe v = x[i * 4 + k];
            if (v == 0) continue;
            for (int j = 0; j < 4; ++j) out[i * 4 + j] ^= F.mul(v, y[k * 4 + j]);
        }
    }
    return out;
}

constexpr Mat4 kJ4 = {0, 0, 1, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 1, 0, 0};

bool is_symplectic4(const FieldCtx& F, const Mat4& w) {
    Mat4 wt{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) wt[i * 4 + j] = w[j * 4 + i];
    return mat4_mul(F, mat4_mul(F, wt, kJ4), w) == kJ4;
}

std::uint64_t mat4_encode(const Mat4& w, int r) {
    std::uint64_t enc = 0;
    for (int i = 15; i >= 0; --i) enc = (enc << r) | w[i];
    return enc;
}

// Symplectic transvection x -> x + c <x,v> v, as the matrix I + c v (v^T J).
Mat4 transvection(const FieldCtx& F, const std::array<Fe, 4>& v, Fe c) {
    std::array<Fe, 4> jv{};
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k) jv[i] ^= F.mul(kJ4[i * 4 + k], v[k]);
    Mat4 t{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) t[i * 4 + j] = (i == j ? 1 : 0) ^ F.mul(c, F.mul(v[i], jv[j]));
    return t;
}

}  // namespace

std::vector<Mat4> enumerate_sp4_filter(const FieldCtx& F) {
    const std::uint64_t q = F.q();
    std::uint64_t total = 1;
    for (int i = 0; i < 16; ++i) {
        if (total > (std::uint64_t{1} << 24) / q)
            throw SizeError("Sp(4," + std::to_string(q) + ") filter exceeds q^16 <= 2^24");
        total *= q;
    }
    std::vector<Mat4> elems;
    Mat4 w{};
    for (std::uint64_t enc = 0; enc < total; ++enc) {
        std::uint64_t x = enc;
        for (int i = 0; i < 16; ++i) {
            w[i] = static_cast<Fe>(x % q);
            x /= q;
        }
        if (is_symplectic4(F, w)) elems.push_back(w);
    }
    return elems;
}

std::vector<Mat4> enumerate_sp4_closure(const FieldCtx& F) {
    if (F.r() > 2) throw SizeError("Sp(4,q) closure limited to q <= 4");
    // every nonzero v would do; this spanning set plus its pairwise and
    // full sums already generates, which the order check certifies
    static constexpr std::array<std::array<Fe, 4>, 11> kDirections = {{{1, 0, 0, 0},
                                                                       {0, 1, 0, 0},
                                                                       {0, 0, 1, 0},
                                                                       {0, 0, 0, 1},
                                                                       {1, 1, 0, 0},
                                                                       {1, 0, 1, 0},
                                                                       {1, 0, 0, 1},
                                                                       {0, 1, 1, 0},
                                                                       {0, 1, 0, 1},
                                                                       {0, 0, 1, 1},
                                                                       {1, 1, 1, 1}}};
    std::vector<Mat4> gens;
    for (const auto& v : kDirections) {
        for (Fe c = 1; c < F.q(); ++c) {
            Mat4 t = transvection(F, v, c);
            if (!is_symplectic4(F, t))
                throw IdentityViolation("transvection is not symplectic", "w^T J w", "J");
            gens.push_back(t);
        }
    }

    const int r = F.r();
    Mat4 identity{};
    for (int i = 0; i < 4; ++i) identity[i * 4 + i] = 1;
    std::unordered_set<std::uint64_t> seen;
    std::vector<Mat4> elems;
    std::vector<Mat4> frontier{identity};
    seen.insert(mat4_encode(identity, r));
    elems.push_back(identity);
    while (!frontier.empty()) {
        std::vector<Mat4> next;
        for (const Mat4& w : frontier) {
            for (const Mat4& g : gens) {
                Mat4 x = mat4_mul(F, w, g);
                if (seen.insert(mat4_encode(x, r)).second) {
                    elems.push_back(x);
                    next.push_back(x);
                }
            }
        }
        frontier.swap(next);
    }

    const mpz_class expect = group_order(2, F.q());
    if (mpz_class(static_cast<unsigned long>(elems.size())) != expect)
        throw IdentityViolation("Sp(4,q) closure has wrong order", std::to_string(elems.size()),
                                expect.get_str());
    return elems;
}

std::int64_t sp4_gauss_sum(const FieldCtx& F, const std::vector<Mat4>& elems, Fe a) {
    std::int64_t sum = 0;
    for (const Mat4& w : elems) {
        const Fe tr = w[0] ^ w[5] ^ w[10] ^ w[15];
        sum += F.lambda(F.mul(a, tr));
    }
    return sum;
}

}  // namespace kloo
