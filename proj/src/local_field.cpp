#include "padlab/local_field.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <tuple>

namespace padlab {

// ---------------------------------------------------------------------------
// field construction
// ---------------------------------------------------------------------------

namespace {

// first irreducible monic degree-d polynomial over F_p in constant-first
// lexicographic order of the coefficient vector
Poly first_irreducible(long p, long d) {
    mpz_class pz = p;
    mpz_class total = ppow(p, d);
    for (mpz_class code = 0; code < total; ++code) {
        Poly m(d + 1, mpz_class(0));
        mpz_class t = code;
        for (long i = 0; i < d; ++i) {
            m[i] = t % p;
            t /= p;
        }
        m[d] = 1;
        if (fp_is_irreducible(m, pz)) return m;
    }
    throw std::logic_error("first_irreducible: none found");
}

// least multiplicative generator of F_{p^d} = F_p[z]/(m), elements enumerated
// by their base-p digit code
Poly least_generator(long p, long d, const Poly& m) {
    mpz_class pz = p;
    mpz_class order = ppow(p, d) - 1;
    auto fac = factorize_mpz(order);
    mpz_class total = ppow(p, d);
    for (mpz_class code = 2; code < total; ++code) {
        Poly g;
        mpz_class t = code;
        for (long i = 0; i < d; ++i) {
            g.push_back(t % p);
            t /= p;
        }
        zp_trim(g);
        bool ok = true;
        for (auto& [r, e] : fac) {
            mpz_class q = order / r;
            if (fp_powmod(g, q, m, pz) == Poly{mpz_class(1)}) { ok = false; break; }
        }
        if (ok) return g;
    }
    throw std::logic_error("least_generator: none found");
}

// minimal polynomial over F_p of elt in F_{p^d} = F_p[z]/(m):
// prod_{i<d'} (X - elt^{p^i}) where d' is the degree of elt's orbit
Poly fq_min_poly(const Poly& elt, long p, const Poly& m) {
    mpz_class pz = p;
    long d = zp_deg(m);
    std::vector<Poly> conj;
    Poly cur = elt;
    for (long i = 0; i < d; ++i) {
        conj.push_back(cur);
        cur = fp_powmod(cur, pz, m, pz);
        if (cur == elt) break;
    }
    // product of (X - c) with coefficients in F_q
    std::vector<Poly> coeffs = {Poly{mpz_class(1)}};  // ascending in X
    for (const Poly& c : conj) {
        std::vector<Poly> next(coeffs.size() + 1);
        for (size_t i = 0; i < coeffs.size(); ++i) {
            next[i + 1] = zp_add(next[i + 1], coeffs[i], pz);
            Poly t = zp_rem_monic(zp_mul(coeffs[i], c, pz), m, pz);
            next[i] = zp_sub(next[i], t, pz);
        }
        coeffs = std::move(next);
    }
    Poly out(coeffs.size(), mpz_class(0));
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (zp_deg(coeffs[i]) > 0)
            throw std::logic_error("fq_min_poly: coefficient not rational");
        out[i] = coeffs[i].empty() ? mpz_class(0) : coeffs[i][0];
    }
    zp_trim(out);
    return out;
}

}  // namespace

void CyclotomicLocalField::construct(long p, long f, long W) {
    if (!is_prime_long(p)) throw std::domain_error("build_field: p must be prime");
    if (f < 1) throw std::domain_error("build_field: f must be >= 1");
    if (W < 2) W = 2;
    p_ = p;
    f_ = f;
    W_ = W;
    pW_ = ppow(p, W);
    k_ = 0;
    fstar_ = f;
    while (fstar_ % p == 0) { fstar_ /= p; ++k_; }
    e_ = k_ == 0 ? 1 : ipow_long(p, k_ - 1) * (p - 1);
    d_ = fstar_ == 1 ? 1 : mult_order_mod(p, fstar_);

    // ramified defining polynomial Phi_{p^k}(y), exact integer coefficients
    phi_pk_ = cyclotomic_poly(k_ == 0 ? 1 : ipow_long(p, k_));
    if (zp_deg(phi_pk_) != e_) throw std::logic_error("build_field: phi_pk degree mismatch");

    // unramified defining polynomial g
    const auto& phi_fstar = cyclotomic_poly(fstar_);
    if (fstar_ == 1) {
        g_ = {mod_reduce(mpz_class(-1), pW_), mpz_class(1)};
    } else if (d_ == euler_phi(fstar_)) {
        g_ = zp_reduce(phi_fstar, pW_);
    } else {
        // canonical factor: the one whose mod-p root is t^{(p^d-1)/f*} for the
        // least generator t of F_{p^d} under the deterministic enumeration
        Poly m = first_irreducible(p, d_);
        Poly gen = least_generator(p, d_, m);
        mpz_class expo = (ppow(p, d_) - 1) / fstar_;
        Poly zbar = fp_powmod(gen, expo, m, mpz_class(p));
        Poly gbar = fq_min_poly(zbar, p, m);
        if (zp_deg(gbar) != d_) throw std::logic_error("build_field: canonical factor degree mismatch");
        g_ = hensel_lift_factor(phi_fstar, gbar, mpz_class(p), W_);
    }

    // power tables
    long pk = k_ == 0 ? 1 : ipow_long(p, k_);
    xpow_.assign(fstar_, Poly{});
    xpow_[0] = {mpz_class(1)};
    const Poly xvar = {mpz_class(0), mpz_class(1)};
    for (long i = 1; i < fstar_; ++i) xpow_[i] = zp_rem_monic(zp_mul(xpow_[i - 1], xvar, pW_), g_, pW_);
    ypow_.assign(pk, Poly{});
    ypow_[0] = {mpz_class(1)};
    Poly phired = zp_reduce(phi_pk_, pW_);
    for (long j = 1; j < pk; ++j) ypow_[j] = zp_rem_monic(zp_mul(ypow_[j - 1], xvar, pW_), phired, pW_);

    // y^j = sum_l (-1)^l C(j,l) pi^l
    pibinom_.assign(e_, {});
    for (long j = 0; j < e_; ++j) {
        pibinom_[j].assign(j + 1, mpz_class(0));
        mpz_class c = 1;
        for (long l = 0; l <= j; ++l) {
            pibinom_[j][l] = (l % 2 == 0) ? c : -c;
            c = c * (j - l) / (l + 1);
        }
    }

    if (e_ > 1) {
        LocalElement piel = pi();
        LocalElement pie = piel.pow(e_);
        LocalElement u = pie.div_exact_p(1);  // pi^e = p * u_pi
        if (u.local_valuation() != Valuation::of(0))
            throw std::logic_error("build_field: pi^e / p is not a unit");
        u_pi_ = std::make_unique<LocalElement>(u);
        LocalElement ip = (piel.pow(e_ - 1) * u.inv_unit()).mul_p_power(-1);
        inv_pi_ = std::make_unique<LocalElement>(ip);
    }
}

FieldPtr build_field(long p, long f, long working_digits) {
    static std::map<std::tuple<long, long, long>, FieldPtr> registry;
    static std::mutex mu;
    std::lock_guard<std::mutex> lk(mu);
    auto key = std::make_tuple(p, f, working_digits);
    auto it = registry.find(key);
    if (it != registry.end()) return it->second;
    std::shared_ptr<CyclotomicLocalField> F(new CyclotomicLocalField());
    F->construct(p, f, working_digits);
    FieldPtr cp = F;
    registry.emplace(key, cp);
    return cp;
}

// ---------------------------------------------------------------------------
// elements
// ---------------------------------------------------------------------------

LocalElement make_element(FieldPtr F, std::vector<mpz_class> coords, long shift, long A) {
    return LocalElement(std::move(F), std::move(coords), shift, A);
}

LocalElement::LocalElement(FieldPtr F, std::vector<mpz_class> coords, long shift, long A)
    : F_(std::move(F)), c_(std::move(coords)), shift_(shift), A_(A) {
    if (static_cast<long>(c_.size()) != F_->dim()) throw std::logic_error("LocalElement: bad coord size");
    if (shift_ < 0) throw std::logic_error("LocalElement: negative shift");
    A_ = std::min(A_, F_->W_ - shift_);
    if (A_ + shift_ <= 0) throw std::domain_error("LocalElement: precision exhausted (shift too deep)");
    mpz_class m = ppow(F_->p_, A_ + shift_);
    for (auto& c : c_) c = mod_reduce(c, m);
    canonicalize();
}

void LocalElement::canonicalize() {
    while (shift_ > 0) {
        bool all = true;
        for (const auto& c : c_)
            if (c % F_->p_ != 0) { all = false; break; }
        if (!all) break;
        for (auto& c : c_) mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(F_->p_));
        --shift_;
    }
}

long LocalElement::min_coord_val() const {
    long best = A_ + shift_;
    for (const auto& c : c_)
        if (c != 0) best = std::min(best, vp_of_mpz(c, F_->p_));
    return std::min(best - shift_, A_);
}

LocalElement CyclotomicLocalField::zero() const {
    return LocalElement(shared_from_this(), std::vector<mpz_class>(dim(), mpz_class(0)), 0, W_);
}

LocalElement CyclotomicLocalField::one() const {
    std::vector<mpz_class> c(dim(), mpz_class(0));
    c[0] = 1;
    return LocalElement(shared_from_this(), std::move(c), 0, W_);
}

LocalElement CyclotomicLocalField::from_mpz(const mpz_class& v) const {
    std::vector<mpz_class> c(dim(), mpz_class(0));
    c[0] = v;
    return LocalElement(shared_from_this(), std::move(c), 0, W_);
}

LocalElement CyclotomicLocalField::from_padic(const PadicApprox& x) const {
    if (x.prime() != p_) throw std::domain_error("from_padic: prime mismatch");
    if (x.is_exact_zero()) return zero();
    std::vector<mpz_class> c(dim(), mpz_class(0));
    if (x.is_zero_at_precision())
        return LocalElement(shared_from_this(), std::move(c), 0, std::min(x.abs_precision(), W_));
    long v = x.val();
    if (v >= 0) {
        c[0] = ppow(p_, v) * x.unit();
        return LocalElement(shared_from_this(), std::move(c), 0, std::min(x.abs_precision(), W_));
    }
    c[0] = x.unit();
    return LocalElement(shared_from_this(), std::move(c), -v, std::min(x.abs_precision(), W_ + v));
}

LocalElement CyclotomicLocalField::zeta_power(long j) const {
    long pk = k_ == 0 ? 1 : ipow_long(p_, k_);
    j %= f_;
    if (j < 0) j += f_;
    const Poly& xp = xpow_[fstar_ == 1 ? 0 : j % fstar_];
    const Poly& yp = ypow_[j % pk];
    std::vector<mpz_class> c(dim(), mpz_class(0));
    for (size_t i = 0; i < xp.size(); ++i) {
        if (xp[i] == 0) continue;
        for (size_t jj = 0; jj < yp.size(); ++jj)
            c[i + static_cast<size_t>(d_) * jj] = mod_reduce(xp[i] * yp[jj], pW_);
    }
    return LocalElement(shared_from_this(), std::move(c), 0, W_);
}

LocalElement CyclotomicLocalField::one_minus_zeta(long a) const {
    if (a % f_ == 0) throw std::domain_error("one_minus_zeta: exponent divisible by conductor (log of 0)");
    return one() - zeta_power(a);
}

LocalElement CyclotomicLocalField::pi() const {
    if (e_ == 1) return from_mpz(p_);
    // pi = 1 - y where y is the ramified generator zeta_{p^k}
    std::vector<mpz_class> c(dim(), mpz_class(0));
    c[0] = 1;
    const Poly& y1 = ypow_[1];
    for (size_t j = 0; j < y1.size(); ++j)
        c[static_cast<size_t>(d_) * j] = mod_reduce(c[static_cast<size_t>(d_) * j] - y1[j], pW_);
    return LocalElement(shared_from_this(), std::move(c), 0, W_);
}

const LocalElement& CyclotomicLocalField::u_pi() const {
    if (!u_pi_) throw std::logic_error("u_pi: unramified field");
    return *u_pi_;
}

const LocalElement& CyclotomicLocalField::inv_pi() const {
    if (!inv_pi_) throw std::logic_error("inv_pi: unramified field");
    return *inv_pi_;
}

LocalElement CyclotomicLocalField::pi_pow(long m) const {
    if (e_ == 1) return m >= 0 ? from_mpz(ppow(p_, m)) : one().mul_p_power(m);
    if (m >= 0) return pi().pow(m);
    return inv_pi().pow(-m);
}

LocalElement LocalElement::operator-() const {
    std::vector<mpz_class> c = c_;
    mpz_class m = ppow(F_->p_, A_ + shift_);
    for (auto& x : c) x = mod_reduce(-x, m);
    return LocalElement(F_, std::move(c), shift_, A_);
}

static void check_field(const LocalElement& a, const LocalElement& b) {
    if (a.field().get() != b.field().get())
        throw std::domain_error("LocalElement: field mismatch");
}

LocalElement LocalElement::operator+(const LocalElement& o) const {
    check_field(*this, o);
    long s = std::max(shift_, o.shift_);
    long A = std::min(A_, o.A_);
    mpz_class m = ppow(F_->p_, A + s);
    mpz_class f1 = ppow(F_->p_, s - shift_), f2 = ppow(F_->p_, s - o.shift_);
    std::vector<mpz_class> c(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) c[i] = mod_reduce(c_[i] * f1 + o.c_[i] * f2, m);
    return LocalElement(F_, std::move(c), s, A);
}

LocalElement LocalElement::operator-(const LocalElement& o) const { return *this + (-o); }

LocalElement LocalElement::operator*(const LocalElement& o) const {
    check_field(*this, o);
    long d = F_->d_, e = F_->e_;
    long nu1 = min_coord_val(), nu2 = o.min_coord_val();
    long A = std::min(A_ + nu2, o.A_ + nu1);
    long s = shift_ + o.shift_;
    A = std::min(A, F_->W_ - s);
    if (A + s <= 0) throw std::domain_error("LocalElement::mul: precision exhausted");
    mpz_class m = ppow(F_->p_, A + s);

    // schoolbook product into y-rows of x-polys
    std::vector<Poly> rows(2 * e - 1, Poly(2 * d - 1, mpz_class(0)));
    for (long j1 = 0; j1 < e; ++j1)
        for (long i1 = 0; i1 < d; ++i1) {
            const mpz_class& a = c_[i1 + d * j1];
            if (a == 0) continue;
            for (long j2 = 0; j2 < e; ++j2)
                for (long i2 = 0; i2 < d; ++i2) {
                    const mpz_class& b = o.c_[i2 + d * j2];
                    if (b == 0) continue;
                    rows[j1 + j2][i1 + i2] += a * b;
                }
        }
    // reduce y-degrees >= e via monic Phi_{p^k}
    for (long j = 2 * e - 2; j >= e; --j) {
        for (auto& x : rows[j]) x = mod_reduce(x, m);
        for (long l = 0; l < e; ++l) {
            if (F_->phi_pk_[l] == 0) continue;
            for (long i = 0; i < 2 * d - 1; ++i)
                rows[j - e + l][i] -= F_->phi_pk_[l] * rows[j][i];
        }
        rows[j].clear();
    }
    // reduce x-degrees via monic g
    std::vector<mpz_class> c(static_cast<size_t>(d) * e, mpz_class(0));
    for (long j = 0; j < e; ++j) {
        Poly row = zp_reduce(std::move(rows[j]), m);
        row = zp_rem_monic(row, F_->g_, m);
        for (long i = 0; i <= zp_deg(row); ++i) c[i + d * j] = row[i];
    }
    return LocalElement(F_, std::move(c), s, A);
}

LocalElement LocalElement::operator*(const mpz_class& x) const {
    if (x == 0) return F_->zero().truncate_abs(A_);
    long vx = vp_of_mpz(x, F_->p_);
    long A = std::min(A_ + vx, F_->W_ - shift_);
    mpz_class m = ppow(F_->p_, A + shift_);
    std::vector<mpz_class> c(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) c[i] = mod_reduce(c_[i] * x, m);
    return LocalElement(F_, std::move(c), shift_, A);
}

LocalElement LocalElement::operator*(const PadicApprox& sc) const {
    if (sc.prime() != F_->p_) throw std::domain_error("LocalElement: scalar prime mismatch");
    if (sc.is_exact_zero()) return F_->zero().truncate_abs(A_);
    long nu = min_coord_val();
    if (sc.is_zero_at_precision()) {
        LocalElement z = F_->zero();
        return z.truncate_abs(sc.abs_precision() + nu);
    }
    long v = sc.val();
    long A = std::min(A_ + v, sc.abs_precision() + nu);
    LocalElement r = (*this * sc.unit());
    r = r.mul_p_power(v);
    return r.truncate_abs(A);
}

LocalElement LocalElement::pow(const mpz_class& e) const {
    if (e < 0) return F_->one() / pow(mpz_class(-e));
    LocalElement r = F_->one();
    LocalElement b = *this;
    mpz_class n = e;
    while (n > 0) {
        if (mpz_odd_p(n.get_mpz_t())) r = r * b;
        n >>= 1;
        if (n > 0) b = b * b;
    }
    return r;
}

LocalElement LocalElement::mul_p_power(long t) const {
    if (t == 0) return *this;
    LocalElement r = *this;
    if (t < 0) {
        r.shift_ += -t;
        r.A_ += t;
        if (r.A_ + r.shift_ <= 0) throw std::domain_error("mul_p_power: precision exhausted");
        r.canonicalize();
        return r;
    }
    long use = std::min(r.shift_, t);
    r.shift_ -= use;
    t -= use;
    r.A_ += use;
    if (t > 0) {
        mpz_class pt = ppow(F_->p_, t);
        long A = std::min(r.A_ + t, F_->W_);
        mpz_class m = ppow(F_->p_, A);
        for (auto& c : r.c_) c = mod_reduce(c * pt, m);
        r.A_ = A;
    } else {
        r.A_ = std::min(r.A_, F_->W_ - r.shift_);
    }
    return LocalElement(F_, std::move(r.c_), r.shift_, r.A_);
}

LocalElement LocalElement::div_exact_p(long t) const {
    if (t < 0) return mul_p_power(-t);
    if (t == 0) return *this;
    LocalElement r = mul_p_power(-t);
    if (r.shift_ > shift_)
        throw std::domain_error("div_exact_p: coordinates not divisible by p^" + std::to_string(t));
    return r;
}

LocalElement LocalElement::truncate_abs(long A) const {
    if (A >= A_) return *this;
    return LocalElement(F_, c_, shift_, A);
}

Valuation LocalElement::local_valuation() const {
    long d = F_->d_, e = F_->e_;
    Valuation best = Valuation::infinite();
    if (e == 1) {
        long v = min_coord_val();
        if (v < A_) best = Valuation::of(v);
        return best;
    }
    mpz_class m = ppow(F_->p_, A_ + shift_);
    for (long l = 0; l < e; ++l) {
        // D_l = sum_{j >= l} (+-C(j,l)) B_j
        std::vector<mpz_class> D(d, mpz_class(0));
        for (long j = l; j < e; ++j) {
            const mpz_class& b = F_->pibinom_[j][l];
            for (long i = 0; i < d; ++i) D[i] += b * c_[i + d * j];
        }
        long vmin = A_ + shift_;
        for (auto& x : D) {
            x = mod_reduce(x, m);
            if (x != 0) vmin = std::min(vmin, vp_of_mpz(x, F_->p_));
        }
        if (vmin < A_ + shift_) {
            Valuation cand = Valuation::of((vmin - shift_) * e + l, e);
            if (cand < best) best = cand;
        }
    }
    if (best.is_finite() && best < Valuation::of(A_)) return best;
    return Valuation::infinite();
}

Valuation LocalElement::residual_valuation() const {
    Valuation best = Valuation::infinite();
    for (size_t idx = 1; idx < c_.size(); ++idx) {
        if (c_[idx] == 0) continue;
        long v = vp_of_mpz(c_[idx], F_->p_) - shift_;
        if (v < A_) best = min(best, Valuation::of(v));
    }
    return best;
}

PadicApprox LocalElement::project_to_qp(const Valuation& min_residual_val) const {
    Valuation rv = residual_valuation();
    if (rv < min_residual_val)
        throw std::runtime_error("project_to_qp: non-rational residue exceeds tolerance (val " + rv.str() +
                                 " < " + min_residual_val.str() + "); embedding or precision bug");
    return PadicApprox::from_integer(c_[0], F_->p_, A_ + shift_).shift(-shift_);
}

LocalElement LocalElement::inv_unit() const {
    if (local_valuation() != Valuation::of(0))
        throw std::domain_error("inv_unit: not a unit at working precision");
    LocalElement u = *this;
    u.canonicalize();
    if (u.shift_ != 0) throw std::logic_error("inv_unit: unexpected residual shift");
    long d = F_->d_, e = F_->e_;
    mpz_class p = F_->p_;
    // residue in F_{p^d}: y -> 1, reduce mod p
    Poly r(d, mpz_class(0));
    for (long j = 0; j < e; ++j)
        for (long i = 0; i < d; ++i) r[i] += u.c_[i + d * j];
    r = zp_reduce(std::move(r), p);
    Poly gbar = zp_reduce(F_->g_, p);
    Poly g1, s, t;
    fp_extgcd(r, gbar, p, g1, s, t);
    if (g1 != Poly{mpz_class(1)}) throw std::domain_error("inv_unit: residue not invertible");
    std::vector<mpz_class> zc(static_cast<size_t>(d) * e, mpz_class(0));
    for (long i = 0; i <= zp_deg(s); ++i) zc[i] = s[i];
    LocalElement z(F_, std::move(zc), 0, u.A_);
    LocalElement two = F_->from_mpz(2).truncate_abs(u.A_);
    long iters = 3;
    {
        long target = (u.A_ + 1) * e;
        while ((1L << iters) < target) ++iters;
        iters += 2;
    }
    for (long i = 0; i < iters; ++i) z = z * (two - u * z);
    LocalElement check = u * z - F_->one().truncate_abs(u.A_);
    Valuation cv = check.local_valuation();
    if (cv.is_finite() && cv < Valuation::of(u.A_ - 1))
        throw std::logic_error("inv_unit: Newton failed to converge (val " + cv.str() + ")");
    return z;
}

LocalElement LocalElement::operator/(const LocalElement& o) const {
    check_field(*this, o);
    Valuation nu = o.local_valuation();
    if (!nu.is_finite()) throw std::domain_error("LocalElement: division by (indistinguishable-from-)zero");
    long e = F_->e_;
    long m = nu.num * (e / nu.den);
    if (e == 1) {
        LocalElement gam = o.mul_p_power(-m);
        return (*this * gam.inv_unit()).mul_p_power(-m);
    }
    LocalElement gam = o * F_->pi_pow(-m);
    return *this * gam.inv_unit() * F_->pi_pow(-m);
}

LocalElement LocalElement::teichmuller() const {
    if (local_valuation() != Valuation::of(0))
        throw std::domain_error("teichmuller: nonunit input");
    mpz_class pd = ppow(F_->p_, F_->d_);
    LocalElement t = *this;
    long cap = (F_->W_ + 2) * F_->e_ + 16;
    for (long i = 0; i < cap; ++i) {
        LocalElement t2 = t.pow(pd);
        if (t2.same_bits(t)) return t;
        t = std::move(t2);
    }
    throw std::runtime_error("teichmuller: stabilization cap exceeded");
}

LocalElement LocalElement::galois(long cexp) const {
    long f = F_->f_;
    cexp %= f;
    if (cexp < 0) cexp += f;
    if (gcd_long(cexp, f) != 1) throw std::domain_error("galois: exponent not coprime to conductor");
    long d = F_->d_, e = F_->e_;
    long pk = F_->k_ == 0 ? 1 : ipow_long(F_->p_, F_->k_);
    mpz_class m = ppow(F_->p_, A_ + shift_);
    std::vector<mpz_class> out(c_.size(), mpz_class(0));
    for (long j = 0; j < e; ++j)
        for (long i = 0; i < d; ++i) {
            const mpz_class& a = c_[i + d * j];
            if (a == 0) continue;
            const Poly& xp = F_->xpow_[F_->fstar_ == 1 ? 0 : (cexp * i) % F_->fstar_];
            const Poly& yp = F_->ypow_[(cexp * j) % pk];
            for (size_t ii = 0; ii < xp.size(); ++ii) {
                if (xp[ii] == 0) continue;
                for (size_t jj = 0; jj < yp.size(); ++jj)
                    out[ii + d * jj] += a * xp[ii] * yp[jj];
            }
        }
    for (auto& x : out) x = mod_reduce(x, m);
    return LocalElement(F_, std::move(out), shift_, A_);
}

LocalElement LocalElement::frobenius() const {
    long d = F_->d_, e = F_->e_;
    mpz_class m = ppow(F_->p_, A_ + shift_);
    std::vector<mpz_class> out(c_.size(), mpz_class(0));
    for (long j = 0; j < e; ++j)
        for (long i = 0; i < d; ++i) {
            const mpz_class& a = c_[i + d * j];
            if (a == 0) continue;
            const Poly& xp = F_->xpow_[F_->fstar_ == 1 ? 0 : (F_->p_ * i) % F_->fstar_];
            for (size_t ii = 0; ii < xp.size(); ++ii) out[ii + d * j] += a * xp[ii];
        }
    for (auto& x : out) x = mod_reduce(x, m);
    return LocalElement(F_, std::move(out), shift_, A_);
}

bool LocalElement::same_bits(const LocalElement& o) const {
    return F_.get() == o.F_.get() && shift_ == o.shift_ && A_ == o.A_ && c_ == o.c_;
}

std::string LocalElement::str() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i) os << ", ";
        os << c_[i].get_str();
    }
    os << "] / " << F_->p_ << "^" << shift_ << " + O(" << F_->p_ << "^" << A_ << ")";
    return os.str();
}

std::string CyclotomicLocalField::descriptor_json() const {
    std::ostringstream os;
    os << "{\"p\":" << p_ << ",\"f\":" << f_ << ",\"d\":" << d_ << ",\"e\":" << e_ << ",\"g\":[";
    for (size_t i = 0; i < g_.size(); ++i) {
        if (i) os << ",";
        os << "\"" << g_[i].get_str() << "\"";
    }
    os << "]}";
    return os.str();
}

}  // namespace padlab
