#pragma once

// The Iwasawa branch of log_p (log_p(p) = 0, zero on all roots of unity) on
// Q_p^x and on the cyclotomic towers, plus the decomposition beta = p^r w x.

#include "padlab/local_field.hpp"
#include "padlab/padic.hpp"

namespace padlab {

struct LogDecomposition {
    Valuation r;             // value-group exponent, den | e
    LocalElement omega;      // root of unity of order prime to p (omega^{p^d-1} = 1)
    LocalElement principal;  // in U_1: v(principal - 1) > 0
    // the uniformizer power pi^{r*e} that carries the valuation; for
    // unramified towers this is p^r itself, so p^r * omega * principal
    // reassembles the input exactly
    LocalElement uniformizer_power;
};

struct ScalarDecomposition {
    long r;
    PadicApprox omega;
    PadicApprox principal;
};

LogDecomposition decompose(const LocalElement& beta);
ScalarDecomposition decompose(const PadicApprox& beta);

// Teichmuller representative of a Q_p unit
PadicApprox teichmuller(const PadicApprox& u);

// log_p with the Iwasawa branch; zero input (or indistinguishable) throws
PadicApprox iwasawa_log(const PadicApprox& x);
LocalElement iwasawa_log(const LocalElement& beta);

// log_p(1 - zeta_f^a), 1 <= a <= f-1 (mod f), memoized on the field
const LocalElement& log_one_minus_zeta(const FieldPtr& F, long a);

// series length for relative target `digits` when v(x-1) = t = tnum/tden:
// smallest M with n*t - floor(log_p n) >= digits for all n > M
long log_series_terms(long p, long tnum, long tden, long digits);

}  // namespace padlab
