#pragma once

// Exact arithmetic in GF(2^r): polynomial-basis elements, trace, the
// canonical additive character lambda(x) = (-1)^tr(x), inversion and the
// (unique) square root.  Everything else in this library runs on top of a
// FieldCtx built here.

#include <cstdint>
#include <string>
#include <vector>

#include "kloo/errors.hpp"

namespace kloo {

// A field element is its coordinate vector over GF(2): bit i = coefficient
// of x^i.  Addition is XOR.
using Fe = std::uint32_t;

struct FieldSpec {
    int r = 0;       // extension degree, q = 2^r
    Fe modulus = 0;  // irreducible polynomial of degree r, (r+1) bits
};

// --- GF(2)[x] helpers (bit-encoded polynomials) ---
int poly_degree(std::uint64_t p);  // -1 for the zero polynomial
std::uint64_t poly_mod(std::uint64_t a, std::uint64_t m);
std::string poly_to_string(std::uint64_t p);
// Smallest nontrivial factor found by trial division against every
// polynomial of degree <= deg(p)/2, or 0 if p is irreducible.
std::uint64_t find_poly_factor(std::uint64_t p);
Fe smallest_irreducible(int r);

class FieldCtx {
  public:
    static constexpr int kMaxR = 20;
    // exp/log tables are built up to this degree; beyond it multiplication
    // falls back to shift-and-xor with modular reduction.
    static constexpr int kMaxTableR = 16;

    // Deterministic default: the lexicographically smallest irreducible
    // polynomial of degree r.
    explicit FieldCtx(int r);
    FieldCtx(int r, Fe modulus);

    int r() const { return spec_.r; }
    std::uint32_t q() const { return q_; }
    const FieldSpec& spec() const { return spec_; }
    bool has_tables() const { return !exp_.empty(); }
    Fe generator() const { return generator_; }

    Fe add(Fe a, Fe b) const { return a ^ b; }
    Fe mul(Fe a, Fe b) const {
        if (!exp_.empty()) {
            if (a == 0 || b == 0) return 0;
            return exp_[log_[a] + log_[b]];
        }
        return mul_long(a, b);
    }
    Fe sq(Fe a) const { return mul(a, a); }
    Fe inv(Fe a) const;
    Fe pow(Fe a, std::uint64_t e) const;
    // x^(2^(r-1)), the inverse of the Frobenius square.
    Fe sqrt(Fe a) const;

    int trace(Fe a) const { return (trace_bits_[a >> 6] >> (a & 63)) & 1; }
    int lambda(Fe a) const { return trace(a) ? -1 : +1; }

    // table accessors, exposed for the invariant tests
    Fe exp_at(std::uint32_t i) const { return exp_[i]; }
    std::uint32_t log_at(Fe a) const { return log_[a]; }

  private:
    void init();
    Fe mul_long(Fe a, Fe b) const;

    FieldSpec spec_;
    std::uint32_t q_ = 0;
    Fe generator_ = 0;
    std::vector<Fe> exp_;                    // size 2(q-1); empty for r > kMaxTableR
    std::vector<std::uint32_t> log_;         // size q, log_[0] unused
    std::vector<std::uint64_t> trace_bits_;  // one bit per element
};

}  // namespace kloo
