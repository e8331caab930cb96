#include "padlab/zpoly.hpp"

#include <stdexcept>

namespace padlab {

void zp_trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

long zp_deg(const Poly& a) { return static_cast<long>(a.size()) - 1; }

Poly zp_reduce(Poly a, const mpz_class& mod) {
    for (auto& c : a) c = mod_reduce(c, mod);
    zp_trim(a);
    return a;
}

Poly zp_add(const Poly& a, const Poly& b, const mpz_class& mod) {
    Poly c(std::max(a.size(), b.size()), mpz_class(0));
    for (size_t i = 0; i < a.size(); ++i) c[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) c[i] = mod_reduce(c[i] + b[i], mod);
    zp_trim(c);
    return c;
}

Poly zp_sub(const Poly& a, const Poly& b, const mpz_class& mod) {
    Poly c(std::max(a.size(), b.size()), mpz_class(0));
    for (size_t i = 0; i < a.size(); ++i) c[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) c[i] = mod_reduce(c[i] - b[i], mod);
    zp_trim(c);
    return c;
}

Poly zp_mul(const Poly& a, const Poly& b, const mpz_class& mod) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, mpz_class(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    }
    return zp_reduce(std::move(c), mod);
}

Poly zp_scalar(const Poly& a, const mpz_class& c, const mpz_class& mod) {
    Poly r = a;
    for (auto& x : r) x = mod_reduce(x * c, mod);
    zp_trim(r);
    return r;
}

void zp_divmod_monic(const Poly& a, const Poly& g, const mpz_class& mod, Poly& quo, Poly& rem) {
    if (g.empty() || mod_reduce(g.back(), mod) != 1)
        throw std::domain_error("zp_divmod_monic: divisor not monic");
    rem = zp_reduce(a, mod);
    long dg = zp_deg(g);
    long dq = zp_deg(rem) - dg;
    quo.assign(dq >= 0 ? dq + 1 : 0, mpz_class(0));
    while (zp_deg(rem) >= dg) {
        long sh = zp_deg(rem) - dg;
        mpz_class c = rem.back();
        quo[sh] = c;
        for (long i = 0; i <= dg; ++i) rem[sh + i] = mod_reduce(rem[sh + i] - c * g[i], mod);
        zp_trim(rem);
    }
}

Poly zp_rem_monic(const Poly& a, const Poly& g, const mpz_class& mod) {
    Poly q, r;
    zp_divmod_monic(a, g, mod, q, r);
    return r;
}

Poly fp_make_monic(Poly a, const mpz_class& p) {
    a = zp_reduce(std::move(a), p);
    if (a.empty()) return a;
    mpz_class iv = inv_mod(a.back(), p);
    return zp_scalar(a, iv, p);
}

Poly fp_gcd(Poly a, Poly b, const mpz_class& p) {
    a = zp_reduce(std::move(a), p);
    b = zp_reduce(std::move(b), p);
    while (!b.empty()) {
        Poly bm = fp_make_monic(b, p);
        Poly r = zp_rem_monic(a, bm, p);
        a = std::move(bm);
        b = std::move(r);
    }
    return fp_make_monic(a, p);
}

void fp_extgcd(const Poly& a, const Poly& b, const mpz_class& p, Poly& g, Poly& s, Poly& t) {
    // classic extended Euclid over F_p[x]
    Poly r0 = zp_reduce(a, p), r1 = zp_reduce(b, p);
    Poly s0 = {mpz_class(1)}, s1 = {};
    Poly t0 = {}, t1 = {mpz_class(1)};
    while (!r1.empty()) {
        mpz_class lead_inv = inv_mod(r1.back(), p);
        Poly r1m = zp_scalar(r1, lead_inv, p);
        Poly q, rem;
        zp_divmod_monic(r0, r1m, p, q, rem);
        q = zp_scalar(q, lead_inv, p);  // quotient of r0 by r1 itself
        Poly s2 = zp_sub(s0, zp_mul(q, s1, p), p);
        Poly t2 = zp_sub(t0, zp_mul(q, t1, p), p);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1); s1 = std::move(s2);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    mpz_class lc = r0.empty() ? mpz_class(1) : inv_mod(r0.back(), p);
    g = zp_scalar(r0, lc, p);
    s = zp_scalar(s0, lc, p);
    t = zp_scalar(t0, lc, p);
}

Poly fp_powmod(Poly base, mpz_class e, const Poly& modpoly, const mpz_class& p) {
    Poly mm = fp_make_monic(modpoly, p);
    Poly r = {mpz_class(1)};
    base = zp_rem_monic(base, mm, p);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = zp_rem_monic(zp_mul(r, base, p), mm, p);
        base = zp_rem_monic(zp_mul(base, base, p), mm, p);
        e >>= 1;
    }
    return r;
}

bool fp_is_irreducible(const Poly& f_in, const mpz_class& p) {
    Poly f = fp_make_monic(f_in, p);
    long d = zp_deg(f);
    if (d <= 0) return false;
    if (d == 1) return true;
    Poly x = {mpz_class(0), mpz_class(1)};
    // x^{p^d} == x mod f
    mpz_class pd;
    mpz_pow_ui(pd.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(d));
    if (zp_sub(fp_powmod(x, pd, f, p), x, p) != Poly{}) return false;
    for (auto [r, e] : factorize_mpz(mpz_class(d))) {
        long dr = d / mpz_get_si(r.get_mpz_t());
        mpz_class pdr;
        mpz_pow_ui(pdr.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(dr));
        Poly diff = zp_sub(fp_powmod(x, pdr, f, p), x, p);
        if (fp_gcd(f, diff, p) != Poly{mpz_class(1)}) return false;
    }
    return true;
}

Poly hensel_lift_factor(const Poly& f, Poly gbar, const mpz_class& p, long W) {
    // von zur Gathen & Gerhard, Alg. 15.10, iterated until modulus >= p^W
    gbar = fp_make_monic(std::move(gbar), p);
    Poly h = zp_reduce(f, p);
    {
        Poly q, r;
        zp_divmod_monic(h, gbar, p, q, r);
        if (!r.empty()) throw std::domain_error("hensel_lift_factor: gbar does not divide f mod p");
        h = std::move(q);
    }
    Poly g1, s, t;
    fp_extgcd(gbar, h, p, g1, s, t);
    if (g1 != Poly{mpz_class(1)})
        throw std::domain_error("hensel_lift_factor: factor pair not coprime mod p");

    Poly g = gbar, a = s, b = t;
    mpz_class m = p;
    long digits = 1;
    while (digits < W) {
        mpz_class m2 = m * m;
        // e = f - g*h  (mod m^2)
        Poly e = zp_sub(zp_reduce(f, m2), zp_mul(g, h, m2), m2);
        Poly q, r;
        zp_divmod_monic(zp_mul(b, e, m2), g, m2, q, r);
        Poly g2 = zp_add(g, r, m2);
        Poly h2 = zp_add(h, zp_add(zp_mul(a, e, m2), zp_mul(q, h, m2), m2), m2);
        // lift Bezout pair
        Poly d = zp_sub(zp_add(zp_mul(a, g2, m2), zp_mul(b, h2, m2), m2), Poly{mpz_class(1)}, m2);
        Poly q2, r2;
        zp_divmod_monic(zp_mul(a, d, m2), h2, m2, q2, r2);
        Poly a2 = zp_sub(a, r2, m2);
        Poly b2 = zp_sub(b, zp_add(zp_mul(b, d, m2), zp_mul(q2, g2, m2), m2), m2);
        g = std::move(g2); h = std::move(h2); a = std::move(a2); b = std::move(b2);
        m = m2;
        digits *= 2;
    }
    mpz_class pw;
    mpz_pow_ui(pw.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(W));
    g = zp_reduce(std::move(g), pw);
    // final sanity: g monic, divides f mod p^W
    if (g.empty() || g.back() != 1) throw std::logic_error("hensel_lift_factor: lift lost monicity");
    Poly qq, rr;
    zp_divmod_monic(zp_reduce(f, pw), g, pw, qq, rr);
    if (!rr.empty()) throw std::logic_error("hensel_lift_factor: lifted factor fails to divide");
    return g;
}

}  // namespace padlab
