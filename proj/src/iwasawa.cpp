#include "padlab/iwasawa.hpp"

#include <stdexcept>

namespace padlab {

static constexpr long kSeriesCap = 200000;

long log_series_terms(long p, long tnum, long tden, long digits) {
    // n*t - floor(log_p n) >= digits for all n > M; t = tnum/tden >= 1/tden
    if (tnum <= 0) throw std::domain_error("log_series_terms: nonpositive t");
    long M = 1;
    long n = 1;
    long logp = 0, nextpow = p;
    while (true) {
        ++n;
        if (n >= nextpow) {
            ++logp;
            if (nextpow > kSeriesCap) throw std::runtime_error("log_series_terms: series cap exceeded");
            nextpow *= p;
        }
        // condition fails at n  =>  M must be at least n
        if (n * tnum < (digits + logp) * tden) M = n;
        // once n*t - log_p n >= digits and the margin grows, stop scanning
        if (n * tnum >= (digits + logp + 2) * tden && n > 4 * tden) break;
        if (n > kSeriesCap) throw std::runtime_error("log_series_terms: series cap exceeded");
    }
    return M;
}

// ---------------------------------------------------------------------------
// scalar (Q_p) log
// ---------------------------------------------------------------------------

PadicApprox teichmuller(const PadicApprox& u) {
    if (!u.distinguishable_from_zero() || u.val() != 0)
        throw std::domain_error("teichmuller: nonunit input");
    long p = u.prime();
    long rel = u.rel_precision();
    mpz_class pm = ppow(p, rel);
    mpz_class t = u.unit();
    for (long i = 0; i < rel + 4; ++i) {
        mpz_class t2 = powmod(t, mpz_class(p), pm);
        if (t2 == t) return PadicApprox::from_unit(p, 0, t, rel);
        t = t2;
    }
    throw std::runtime_error("teichmuller: stabilization cap exceeded");
}

ScalarDecomposition decompose(const PadicApprox& beta) {
    if (!beta.distinguishable_from_zero()) throw std::domain_error("decompose: zero input");
    long v = beta.val();
    PadicApprox u = beta.shift(-v);
    PadicApprox w = teichmuller(u);
    return ScalarDecomposition{v, w, u / w};
}

PadicApprox iwasawa_log(const PadicApprox& x) {
    if (!x.distinguishable_from_zero()) throw std::domain_error("iwasawa_log: zero input");
    long p = x.prime();
    PadicApprox u = x.shift(-x.val());
    // kill the Teichmuller part: u^{p-1} is in U_1
    PadicApprox w = u.pow(p - 1);
    PadicApprox wm1 = w - PadicApprox::from_unit(p, 0, 1, u.rel_precision());
    if (!wm1.distinguishable_from_zero()) return PadicApprox::zero_at_precision(p, wm1.abs_precision());
    long t = wm1.val();
    long target = wm1.abs_precision();
    long M = log_series_terms(p, t, 1, target);
    PadicApprox sum = PadicApprox::exact_zero(p);
    PadicApprox pw = PadicApprox::from_unit(p, 0, 1, wm1.rel_precision() + t);
    for (long n = 1; n <= M; ++n) {
        pw = pw * wm1;
        PadicApprox term = pw / PadicApprox::from_integer(n, p, target + 4);
        sum = (n % 2 == 1) ? sum + term : sum - term;
    }
    return sum / PadicApprox::from_integer(p - 1, p, target + 4);
}

// ---------------------------------------------------------------------------
// tower log
// ---------------------------------------------------------------------------

static LocalElement log_series_u1(const LocalElement& g) {
    // g in U_1 with v(g-1) >= 1; plain alternating series
    const FieldPtr& F = g.field();
    long p = F->p();
    LocalElement x = g - F->one();
    Valuation t = x.local_valuation();
    if (!t.is_finite()) return F->zero().truncate_abs(g.abs_precision());
    long target = g.abs_precision();
    long M = log_series_terms(p, t.num, t.den, target + 2);
    LocalElement sum = F->zero().truncate_abs(target);
    LocalElement pw = F->one().truncate_abs(target + 2);
    for (long n = 1; n <= M; ++n) {
        pw = pw * x;
        long vn = n == 1 ? 0 : vp_of_mpz(mpz_class(n), p);
        LocalElement term = pw.div_exact_p(vn);
        mpz_class rest = mpz_class(n) / ppow(p, vn);
        if (rest != 1) term = term * PadicApprox::from_unit(p, 0, inv_mod(rest, F->working_modulus()), F->working_digits());
        sum = (n % 2 == 1) ? sum + term : sum - term;
    }
    return sum;
}

// log of a unit: u^{e(p^d-1)} lands in U_1 (torsion killed, no p-power left),
// then the series after p-power acceleration; divide the exponent back out.
static LocalElement log_unit(const LocalElement& u) {
    const FieldPtr& F = u.field();
    long p = F->p(), d = F->d(), e = F->e();
    mpz_class c = (ppow(p, d) - 1) * e;
    LocalElement gam = u.pow(c);
    long sacc = 0;
    const long cap = 4 * e + 20;
    while (true) {
        Valuation tv = (gam - F->one()).local_valuation();
        if (!tv.is_finite() || tv >= Valuation::of(1)) break;
        gam = gam.pow(p);
        if (++sacc > cap) throw std::runtime_error("iwasawa_log: acceleration cap exceeded");
    }
    LocalElement L = log_series_u1(gam);
    mpz_class den = c * ppow(p, sacc);
    long vden = vp_of_mpz(den, p);
    // the log of a unit can carry negative valuation in ramified towers, so
    // the p-part of the divisor goes through the shift, not exact division
    L = L.mul_p_power(-vden);
    mpz_class rest = den / ppow(p, vden);
    if (rest != 1)
        L = L * PadicApprox::from_unit(p, 0, inv_mod(rest, F->working_modulus()), F->working_digits());
    return L;
}

LocalElement iwasawa_log(const LocalElement& beta) {
    const FieldPtr& F = beta.field();
    long e = F->e();
    Valuation nu = beta.local_valuation();
    if (!nu.is_finite()) throw std::domain_error("iwasawa_log: zero input (at working precision)");
    long m = nu.num * (e / nu.den);
    long a = m >= 0 ? m / e : -((-m + e - 1) / e);  // floor division
    long b = m - a * e;                             // 0 <= b < e
    LocalElement u = beta.mul_p_power(-a);
    if (b > 0) u = u * F->pi_pow(-b);
    LocalElement L = log_unit(u);
    if (b == 0) return L;
    // log(pi) = log(u_pi)/e from pi^e = p u_pi and log(p) = 0
    LocalElement Lpi = F->log_pi_cached();
    return L + Lpi * mpz_class(b);
}

LogDecomposition decompose(const LocalElement& beta) {
    const FieldPtr& F = beta.field();
    long e = F->e();
    Valuation nu = beta.local_valuation();
    if (!nu.is_finite()) throw std::domain_error("decompose: zero input (at working precision)");
    long m = nu.num * (e / nu.den);
    LocalElement upow = F->pi_pow(m);
    LocalElement u = beta * F->pi_pow(-m);
    LocalElement w = u.teichmuller();
    LocalElement x = u * w.inv_unit();
    return LogDecomposition{nu, w, x, upow};
}

const LocalElement& log_one_minus_zeta(const FieldPtr& F, long a) {
    long f = F->f();
    a %= f;
    if (a < 0) a += f;
    if (a == 0) throw std::domain_error("log_one_minus_zeta: a = 0 mod f (log of 0)");
    return F->log_one_minus_zeta_cached(a);
}

}  // namespace padlab

namespace padlab {

// members live here to keep the field header free of the log machinery;
// values are computed outside the lock (they are deterministic, so a rare
// duplicated computation is harmless and the first insert wins)
const LocalElement& CyclotomicLocalField::log_one_minus_zeta_cached(long a) const {
    {
        std::lock_guard<std::mutex> lk(log_mu_);
        auto it = log_cache_.find(a);
        if (it != log_cache_.end()) return it->second;
    }
    LocalElement v = iwasawa_log(one_minus_zeta(a));
    std::lock_guard<std::mutex> lk(log_mu_);
    return log_cache_.emplace(a, std::move(v)).first->second;
}

LocalElement CyclotomicLocalField::log_pi_cached() const {
    if (e_ == 1) return zero();  // pi = p, log_p(p) = 0
    {
        std::lock_guard<std::mutex> lk(log_mu_);
        auto it = log_cache_.find(-1);  // sentinel slot for log(pi)
        if (it != log_cache_.end()) return it->second;
    }
    LocalElement lu = log_unit(u_pi());
    long ve = vp_of_mpz(mpz_class(e_), p_);
    LocalElement lpi = lu.mul_p_power(-ve);
    mpz_class rest = mpz_class(e_) / ppow(p_, ve);
    if (rest != 1) lpi = lpi * PadicApprox::from_unit(p_, 0, inv_mod(rest, pW_), W_);
    std::lock_guard<std::mutex> lk(log_mu_);
    return log_cache_.emplace(-1, std::move(lpi)).first->second;
}

}  // namespace padlab
