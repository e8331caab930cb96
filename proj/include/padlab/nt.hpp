#pragma once

// Elementary number theory over machine integers and GMP integers:
// the substrate shared by every module (valuations, totients, orders,
// cyclotomic polynomials over Z).

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace padlab {

inline long gcd_long(long a, long b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) { long t = a % b; a = b; b = t; }
    return a;
}

inline long lcm_long(long a, long b) {
    if (a == 0 || b == 0) return 0;
    return a / gcd_long(a, b) * b;
}

// p^e as an mpz, e >= 0.
inline mpz_class ppow(long p, long e) {
    if (e < 0) throw std::domain_error("ppow: negative exponent");
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(e));
    return r;
}

inline long ipow_long(long b, long e) {
    long r = 1;
    while (e-- > 0) {
        if (b != 0 && r > (1L << 62) / b)
            throw std::overflow_error("ipow_long: result exceeds the long range");
        r *= b;
    }
    return r;
}

// Reduce into [0, mod).
inline mpz_class mod_reduce(const mpz_class& x, const mpz_class& mod) {
    mpz_class r = x % mod;
    if (r < 0) r += mod;
    return r;
}

inline mpz_class inv_mod(const mpz_class& a, const mpz_class& mod) {
    mpz_class r;
    if (!mpz_invert(r.get_mpz_t(), a.get_mpz_t(), mod.get_mpz_t()))
        throw std::domain_error("inv_mod: not invertible");
    return r;
}

inline mpz_class powmod(const mpz_class& b, const mpz_class& e, const mpz_class& mod) {
    mpz_class r;
    mpz_powm(r.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), mod.get_mpz_t());
    return r;
}

// p-adic valuation of a nonzero integer.
inline long vp_of_mpz(const mpz_class& x, long p) {
    if (x == 0) throw std::domain_error("vp_of_mpz: zero");
    mpz_class t = x < 0 ? mpz_class(-x) : x;
    long v = 0;
    while (mpz_divisible_ui_p(t.get_mpz_t(), static_cast<unsigned long>(p))) {
        mpz_divexact_ui(t.get_mpz_t(), t.get_mpz_t(), static_cast<unsigned long>(p));
        ++v;
    }
    return v;
}

inline bool is_prime_long(long n) {
    if (n < 2) return false;
    mpz_class z = n;
    return mpz_probab_prime_p(z.get_mpz_t(), 30) != 0;
}

// Trial-division factorization; fine for the conductor-sized inputs here.
std::vector<std::pair<long, long>> factorize(long n);
std::vector<std::pair<mpz_class, long>> factorize_mpz(const mpz_class& n);

long euler_phi(long n);
int mobius(long n);

// Least t >= 1 with g^t = 1 mod m, via divisor descent on phi(m). gcd(g,m)=1.
long mult_order_mod(long g, long m);

// m-th cyclotomic polynomial, exact integer coefficients, ascending degree.
// Computed as (x^m - 1) / prod_{d|m, d<m} Phi_d   (no factorization oracle).
const std::vector<mpz_class>& cyclotomic_poly(long m);

// Exact polynomial helpers over Z (ascending coefficient order).
std::vector<mpz_class> poly_mul_z(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b);
// Exact division, throws if not exact. den must be monic or have unit lead +-1.
std::vector<mpz_class> poly_divexact_z(std::vector<mpz_class> num, const std::vector<mpz_class>& den);

}  // namespace padlab
