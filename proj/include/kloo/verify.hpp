#pragma once

// Named end-to-end consistency checks over a sweep of field degrees.  Each
// check recomputes one identity two independent ways and fails (never
// asserts) on mismatch, so a report can carry per-row pass/fail.

#include <string>
#include <vector>

namespace kloo {

struct CheckResult {
    int r = 0;
    std::string check;
    bool pass = false;
    std::string detail;
};

struct VerificationReport {
    std::vector<CheckResult> rows;  // sorted by (r, check)
    bool all_pass() const;
};

struct VerifyOptions {
    std::vector<int> sweep;         // field degrees; empty = per-check defaults
    int h_max = 9;                  // moment exponent bound where relevant
    std::vector<std::string> only;  // check names; empty = all
    std::string inject_fault;       // test hook: name of a check to corrupt
};

// Registry order (stable, documented):
//   first-moments        T0K/T1K closed forms vs direct summation
//   frobenius            K(a^(2^s)) = K(a), plus the Weil bound
//   fourier              sum_a lambda(a beta) K(a) closed form
//   trace-counts         SL(2,q) trace multiplicities vs three-case formula
//   gauss-o3             group character sums vs lambda(a) q K / q K
//   gauss-formula        odd-orthogonal Gauss sum closed formula vs enumeration
//   gl-recursion         GL(t,q) Kloosterman recursion vs brute force
//   dual-injectivity     the q dual codewords are pairwise distinct
//   weights-crosscheck   full DP distribution == MacWilliams transform
//   weight-symmetry      C_j = C_{N-j} and total 2^(N-r)
//   pless                dual power moments vs the C_j expression
//   moment-recursion     MK^h recursion vs brute-force moments
//   trace-one-recursion  odd T1K^h recursion vs brute-force moments
//   modulus-independence all statistics agree across two irreducible moduli
const std::vector<std::string>& all_check_names();

VerificationReport run_checks(const VerifyOptions& opt);

}  // namespace kloo
