#pragma once

// The local cyclotomic field K = Q_p(zeta_f) as a two-step tower:
// an unramified part Q_p(zeta_{f*}) = Q_p[x]/(g(x)) with g a canonical
// Hensel-lifted factor of Phi_{f*}, and a totally ramified part generated by
// y = zeta_{p^k} with defining polynomial Phi_{p^k}(y), where f = p^k f*.
//
// Elements are polynomials in (x, y) of degree < d, < e with a global p-shift:
//   value = p^{-shift} * sum c_{ij} x^i y^j,  coords exact modulo p^{A+shift}.
// All coordinate arithmetic is exact residue arithmetic, so results are
// bit-identical regardless of operand or chunk order.

#include <gmpxx.h>

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "padlab/padic.hpp"
#include "padlab/valuation.hpp"
#include "padlab/zpoly.hpp"

namespace padlab {

class LocalElement;
class CyclotomicLocalField;
using FieldPtr = std::shared_ptr<const CyclotomicLocalField>;

// Builds (or fetches from the registry) the tower for Q_p(zeta_f) carrying
// `working_digits` exact digits.  Descriptors are immutable once built.
FieldPtr build_field(long p, long f, long working_digits);

class CyclotomicLocalField : public std::enable_shared_from_this<CyclotomicLocalField> {
public:
    long p() const { return p_; }
    long f() const { return f_; }
    long fstar() const { return fstar_; }
    long k() const { return k_; }
    long d() const { return d_; }
    long e() const { return e_; }
    long dim() const { return d_ * e_; }
    long working_digits() const { return W_; }
    const mpz_class& working_modulus() const { return pW_; }
    const Poly& defining_g() const { return g_; }
    const Poly& phi_pk() const { return phi_pk_; }

    LocalElement zero() const;
    LocalElement one() const;
    LocalElement from_padic(const PadicApprox& x) const;
    LocalElement from_mpz(const mpz_class& c) const;  // exact integer at full precision
    // zeta_f^j via the CRT split j -> (j mod f*, j mod p^k); 0 <= j < f (reduced mod f)
    LocalElement zeta_power(long j) const;
    LocalElement one_minus_zeta(long a) const;  // 1 - zeta_f^a, a != 0 mod f

    // uniformizer pi = 1 - zeta_{p^k} (= p when e = 1); pi^e = p * u_pi
    LocalElement pi() const;
    LocalElement pi_pow(long m) const;  // pi^m for any integer m
    const LocalElement& u_pi() const;
    const LocalElement& inv_pi() const;

    // log_p(1 - zeta_f^a), memoized at full working precision
    const LocalElement& log_one_minus_zeta_cached(long a) const;
    // log_p(pi) = log_p(u_pi)/e (zero when unramified)
    LocalElement log_pi_cached() const;

    // JSON descriptor: {p, f, d, e, g: [base-10 coefficients]}
    std::string descriptor_json() const;

private:
    friend FieldPtr build_field(long, long, long);
    friend class LocalElement;
    CyclotomicLocalField() = default;
    void construct(long p, long f, long W);

    long p_ = 0, f_ = 0, fstar_ = 0, k_ = 0, d_ = 0, e_ = 0, W_ = 0;
    mpz_class pW_;
    Poly g_;       // monic, degree d, mod p^W
    Poly phi_pk_;  // exact integer coefficients, degree e
    std::vector<Poly> xpow_;  // zeta_{f*}^i reduced mod g, i < f*
    std::vector<Poly> ypow_;  // zeta_{p^k}^j reduced mod Phi_{p^k}, j < p^k
    std::vector<std::vector<mpz_class>> pibinom_;  // y^j = sum_l pibinom_[j][l] pi^l (signed binomials)
    std::unique_ptr<LocalElement> u_pi_, inv_pi_;
    mutable std::mutex log_mu_;
    mutable std::map<long, LocalElement> log_cache_;
};

class LocalElement {
public:
    LocalElement() = default;

    const FieldPtr& field() const { return F_; }
    long shift() const { return shift_; }
    long abs_precision() const { return A_; }  // coordinates known modulo p^A at element scale

    // nu_p extended to K; +inf means indistinguishable from zero at abs_precision()
    Valuation local_valuation() const;
    bool is_zero_at_precision() const { return !local_valuation().is_finite(); }

    LocalElement operator-() const;
    LocalElement operator+(const LocalElement& o) const;
    LocalElement operator-(const LocalElement& o) const;
    LocalElement operator*(const LocalElement& o) const;
    LocalElement operator*(const PadicApprox& s) const;
    LocalElement operator*(const mpz_class& c) const;
    LocalElement pow(const mpz_class& e) const;
    LocalElement pow(long e) const { return pow(mpz_class(e)); }

    // exact division of the value by p^t (coordinates must be divisible)
    LocalElement div_exact_p(long t) const;
    LocalElement mul_p_power(long t) const;  // value * p^t
    LocalElement truncate_abs(long A) const;

    // inverse of a unit (valuation 0); Newton from the residue-field inverse
    LocalElement inv_unit() const;
    LocalElement operator/(const LocalElement& o) const;

    // unique root of unity of order dividing p^d - 1 congruent to *this mod m
    LocalElement teichmuller() const;

    // Galois action zeta_f -> zeta_f^c, (c, f) = 1; frobenius() is c = p action
    // on the unramified part (fixes zeta_{p^k})
    LocalElement galois(long c) const;
    LocalElement frobenius() const;

    // Q_p projection: every non-constant coordinate must have valuation
    // >= min_residual_val, else throws (embedding/precision bug trap).
    PadicApprox project_to_qp(const Valuation& min_residual_val) const;
    // worst non-constant coordinate valuation (inf when all vanish)
    Valuation residual_valuation() const;

    const mpz_class& coord(long i, long j) const { return c_[static_cast<size_t>(i + j * F_->d())]; }
    bool same_bits(const LocalElement& o) const;
    std::string str() const;

private:
    friend class CyclotomicLocalField;
    friend LocalElement make_element(FieldPtr, std::vector<mpz_class>, long, long);

    LocalElement(FieldPtr F, std::vector<mpz_class> coords, long shift, long A);
    void canonicalize();  // strip common p factors into the shift, reduce coords
    long min_coord_val() const;  // integer lower bound of valuation (coords scale), capped at A_

    FieldPtr F_;
    std::vector<mpz_class> c_;  // size dim, c[i + d*j] ~ x^i y^j, in [0, p^{A+shift})
    long shift_ = 0;
    long A_ = 0;
};

LocalElement make_element(FieldPtr F, std::vector<mpz_class> coords, long shift, long A);

}  // namespace padlab
