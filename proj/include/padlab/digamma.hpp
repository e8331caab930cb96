#pragma once

// Morita gamma, Diamond digamma psi_p, the Euler constants gamma_p and
// gamma_p(r,q), the truncated-log derivative H'_mu, and the identity
// verifiers for the Gauss analogue and Diamond's theorem.
//
// Every limit is a Volkenborn-style average (1/p^k) sum log_p(...).  The sums
// are evaluated as the log of one exact modular product (log_p is a
// homomorphism on all of C_p^x under the Iwasawa branch), which keeps each
// level to O(p^k) modular multiplications and makes chunked evaluation
// bit-exact in any order.

#include <vector>

#include "padlab/iwasawa.hpp"
#include "padlab/padic.hpp"
#include "padlab/report.hpp"

namespace padlab {

struct LimitSnapshot {
    long k;
    PadicApprox value;
};

struct LimitResult {
    PadicApprox value;
    long k_used = 0;
    std::vector<LimitSnapshot> snapshots;  // last two agree to valuation >= N
};

enum class GammaConvention { Paper, Classical };

// Gamma_p(n) = (-1)^n prod_{1 <= t <= n, p !| t} t   (Paper range includes t = n;
// Classical runs t < n)
PadicApprox morita_gamma_nat(long p, long n, long N,
                             GammaConvention conv = GammaConvention::Paper);

// continuous extension to Z_p via representatives n_j = x mod p^j
LimitResult morita_gamma_zp(long p, const PadicApprox& x, long N,
                            GammaConvention conv = GammaConvention::Paper);

// N(r,q) = {n : 0 <= n < p^{phi(q1)}, nq + r != 0 mod p^{phi(q1)+k}}, q = p^k q1
std::vector<long> nrq_set(long p, long r, long q);

// psi_p(r/f) for nu_p(r/f) < 0 (p | f, p !| r), Diamond's averaged limit
LimitResult psi_p(long p, long r, long f, long N);

LimitResult euler_gamma_p_limit(long p, long N);
PadicApprox euler_gamma_p(long p, long N);  // memoized per (p, N)

// Euler-Briggs-Lehmer analogue; limit branch for nu_p(r/q) < 0, otherwise the
// N(r,q) recursion (whose recursive calls all land in the limit branch and are
// evaluated as one batched product)
LimitResult gamma_p_rq(long p, long r, long q, long N);

// H'_mu(r/f) for nu_p(r/f) >= 0 and p^mu = 1 mod f*
LimitResult h_prime_mu(long p, long r, long f, long mu, long N);

// -log_p f - gamma_p + sum_{a=1}^{f-1} zeta^{-ar} log_p(1 - zeta^a), computed in
// the tower and projected to Q_p (throws if the non-rational residue survives)
PadicApprox gauss_rhs(long p, long r, long f, long N);

VerificationReport verify_gauss(long p, long r, long f, long N);
VerificationReport verify_diamond(long p, long r, long q, long N);
// pairing symmetry: min over t of v(log(1-zeta^-t) - log(1-zeta^t)) >= N
VerificationReport verify_logsym(long p, long f, long N);

// route dispatcher: psi_p when nu_p(r/f) < 0, else the scaled H'_mu with the
// smallest valid mu (the unramified degree).  Routes are named after the two
// displayed forms of the Gauss formula as reported by the CLI: "Eq1" is the
// averaged-limit form, "Eq2 mu=<m>" the p^mu/(p^mu-1)-scaled truncated-log
// form.
struct DigammaValue {
    PadicApprox value;
    std::string route;  // "Eq1" or "Eq2 mu=<mu>"
    long mu = 0;
    long k_used = 0;
};
DigammaValue digamma_value(long p, long r, long f, long N);

// log_p of the prime-to-p part of n (Iwasawa: the p-part contributes zero)
PadicApprox log_integer_unit_part(long n, long p, long N);

}  // namespace padlab
