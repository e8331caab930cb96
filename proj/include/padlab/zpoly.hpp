#pragma once

// Dense polynomial arithmetic with mpz coefficients modulo p^W (and over F_p),
// plus the Hensel machinery used to lift unramified defining polynomials.
// Coefficient vectors are ascending-degree; trailing zeros trimmed.

#include <gmpxx.h>

#include <vector>

#include "padlab/nt.hpp"

namespace padlab {

using Poly = std::vector<mpz_class>;

void zp_trim(Poly& a);
long zp_deg(const Poly& a);  // -1 for zero
Poly zp_add(const Poly& a, const Poly& b, const mpz_class& mod);
Poly zp_sub(const Poly& a, const Poly& b, const mpz_class& mod);
Poly zp_mul(const Poly& a, const Poly& b, const mpz_class& mod);
Poly zp_scalar(const Poly& a, const mpz_class& c, const mpz_class& mod);
// divisor must be monic
void zp_divmod_monic(const Poly& a, const Poly& g, const mpz_class& mod, Poly& quo, Poly& rem);
Poly zp_rem_monic(const Poly& a, const Poly& g, const mpz_class& mod);
Poly zp_reduce(Poly a, const mpz_class& mod);

// F_p specific (mod = p prime): make monic, gcd, extended gcd.
Poly fp_make_monic(Poly a, const mpz_class& p);
Poly fp_gcd(Poly a, Poly b, const mpz_class& p);
// s*a + t*b = g (monic gcd); only s is produced (enough for inverses)
void fp_extgcd(const Poly& a, const Poly& b, const mpz_class& p, Poly& g, Poly& s, Poly& t);
Poly fp_powmod(Poly base, mpz_class e, const Poly& modpoly, const mpz_class& p);
bool fp_is_irreducible(const Poly& f, const mpz_class& p);

// Quadratic Hensel lift: f (exact integer poly, monic) = gbar * hbar (mod p),
// gcd(gbar, hbar) = 1 in F_p[x], gbar monic.  Returns the lift of gbar mod p^W.
Poly hensel_lift_factor(const Poly& f, Poly gbar, const mpz_class& p, long W);

}  // namespace padlab
