#include "padlab/padic.hpp"

#include <algorithm>
#include <sstream>

namespace padlab {

static void require_prime(long p) {
    if (!is_prime_long(p)) throw std::domain_error("PadicApprox: prime required, got " + std::to_string(p));
}

PadicApprox PadicApprox::exact_zero(long p) {
    require_prime(p);
    PadicApprox x;
    x.p_ = p;
    x.state_ = State::ExactZero;
    return x;
}

PadicApprox PadicApprox::zero_at_precision(long p, long abs_prec) {
    require_prime(p);
    PadicApprox x;
    x.p_ = p;
    x.state_ = State::ZeroAtPrec;
    x.v_ = abs_prec;
    return x;
}

PadicApprox PadicApprox::from_unit(long p, long v, mpz_class unit, long rel) {
    require_prime(p);
    if (rel <= 0) return zero_at_precision(p, v);
    PadicApprox x;
    x.p_ = p;
    x.state_ = State::Nonzero;
    x.v_ = v;
    x.rel_ = rel;
    x.u_ = mod_reduce(unit, ppow(p, rel));
    if (x.u_ % p == 0) throw std::domain_error("PadicApprox::from_unit: unit divisible by p");
    return x;
}

PadicApprox PadicApprox::from_integer(const mpz_class& value, long p, long abs_prec) {
    require_prime(p);
    if (abs_prec < 1) throw std::domain_error("PadicApprox: abs_prec must be >= 1");
    mpz_class r = mod_reduce(value, ppow(p, abs_prec));
    if (r == 0) {
        return value == 0 ? exact_zero(p) : zero_at_precision(p, abs_prec);
    }
    long v = vp_of_mpz(r, p);
    mpz_class u = r / ppow(p, v);
    return from_unit(p, v, u, abs_prec - v);
}

PadicApprox PadicApprox::from_rational(const mpq_class& q, long p, long rel_prec) {
    require_prime(p);
    if (rel_prec < 1) throw std::domain_error("PadicApprox: rel_prec must be >= 1");
    if (q == 0) return exact_zero(p);
    mpz_class num = q.get_num(), den = q.get_den();
    if (den == 0) throw std::domain_error("PadicApprox::from_rational: zero denominator");
    long vn = vp_of_mpz(num, p), vd = vp_of_mpz(den, p);
    mpz_class pm = ppow(p, rel_prec);
    mpz_class nu = mod_reduce(num / ppow(p, vn), pm);
    mpz_class du = mod_reduce(den / ppow(p, vd), pm);
    return from_unit(p, vn - vd, nu * inv_mod(du, pm), rel_prec);
}

PadicApprox PadicApprox::from_rational(long num, long den, long p, long rel_prec) {
    if (den == 0) throw std::domain_error("PadicApprox::from_rational: zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return from_rational(q, p, rel_prec);
}

Valuation PadicApprox::valuation() const {
    if (state_ == State::Nonzero) return Valuation::of(v_);
    return Valuation::infinite();
}

long PadicApprox::val() const {
    if (state_ != State::Nonzero) throw std::domain_error("PadicApprox::val: not distinguishable from zero");
    return v_;
}

long PadicApprox::abs_precision() const {
    switch (state_) {
        case State::Nonzero: return v_ + rel_;
        case State::ZeroAtPrec: return v_;
        default: throw std::domain_error("PadicApprox::abs_precision: exact zero has infinite precision");
    }
}

const mpz_class& PadicApprox::unit() const {
    if (state_ != State::Nonzero) throw std::domain_error("PadicApprox::unit: zero");
    return u_;
}

mpz_class PadicApprox::unit_residue(long digits) const {
    if (digits > rel_precision()) throw std::domain_error("PadicApprox::unit_residue: beyond precision");
    return mod_reduce(u_, ppow(p_, digits));
}

void PadicApprox::check_same_prime(const PadicApprox& a, const PadicApprox& b) {
    if (a.p_ != b.p_)
        throw std::domain_error("PadicApprox: prime mismatch (" + std::to_string(a.p_) + " vs " +
                                std::to_string(b.p_) + ")");
}

PadicApprox PadicApprox::operator-() const {
    if (state_ != State::Nonzero) return *this;
    return from_unit(p_, v_, ppow(p_, rel_) - u_, rel_);
}

PadicApprox PadicApprox::operator+(const PadicApprox& o) const {
    check_same_prime(*this, o);
    if (state_ == State::ExactZero) return o;
    if (o.state_ == State::ExactZero) return *this;
    long N = std::min(abs_precision(), o.abs_precision());
    // effective valuations capped at N
    long va = state_ == State::Nonzero ? std::min(v_, N) : N;
    long vb = o.state_ == State::Nonzero ? std::min(o.v_, N) : N;
    long m = std::min(va, vb);
    long digits = N - m;
    if (digits <= 0) return zero_at_precision(p_, N);
    mpz_class pm = ppow(p_, digits);
    mpz_class t = 0;
    if (state_ == State::Nonzero && v_ < N) t += ppow(p_, v_ - m) * u_;
    if (o.state_ == State::Nonzero && o.v_ < N) t += ppow(p_, o.v_ - m) * o.u_;
    t = mod_reduce(t, pm);
    if (t == 0) return zero_at_precision(p_, N);
    long w = vp_of_mpz(t, p_);
    return from_unit(p_, m + w, t / ppow(p_, w), N - (m + w));
}

PadicApprox PadicApprox::operator-(const PadicApprox& o) const { return *this + (-o); }

PadicApprox PadicApprox::operator*(const PadicApprox& o) const {
    check_same_prime(*this, o);
    if (state_ == State::ExactZero || o.state_ == State::ExactZero) return exact_zero(p_);
    long Na = abs_precision(), Nb = o.abs_precision();
    long va = state_ == State::Nonzero ? v_ : Na;
    long vb = o.state_ == State::Nonzero ? o.v_ : Nb;
    long N = std::min(Na + vb, Nb + va);
    if (state_ != State::Nonzero || o.state_ != State::Nonzero) return zero_at_precision(p_, N);
    long rel = std::min(rel_, o.rel_);
    return from_unit(p_, v_ + o.v_, u_ * o.u_, rel);
}

PadicApprox PadicApprox::inverse() const {
    if (state_ != State::Nonzero)
        throw std::domain_error("PadicApprox::inverse: division by (indistinguishable-from-)zero");
    mpz_class pm = ppow(p_, rel_);
    return from_unit(p_, -v_, inv_mod(u_, pm), rel_);
}

PadicApprox PadicApprox::operator/(const PadicApprox& o) const { return *this * o.inverse(); }

PadicApprox PadicApprox::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    if (state_ == State::ExactZero) {
        if (e == 0) throw std::domain_error("PadicApprox::pow: 0^0");
        return *this;
    }
    if (state_ == State::ZeroAtPrec) {
        if (e == 0) return from_unit(p_, 0, 1, v_);
        // (O(p^N))^e known mod p^{eN}; conservative: report p^N bound
        return zero_at_precision(p_, v_);
    }
    mpz_class pm = ppow(p_, rel_);
    mpz_class r = powmod(u_, mpz_class(e), pm);
    return from_unit(p_, v_ * e, r, rel_);
}

PadicApprox PadicApprox::shift(long k) const {
    PadicApprox x = *this;
    if (x.state_ == State::Nonzero)
        x.v_ += k;
    else if (x.state_ == State::ZeroAtPrec)
        x.v_ += k;
    return x;
}

PadicApprox PadicApprox::truncate_abs(long abs_prec) const {
    if (state_ == State::ExactZero) return *this;
    if (abs_precision() <= abs_prec) return *this;
    if (state_ == State::ZeroAtPrec) return zero_at_precision(p_, abs_prec);
    if (v_ >= abs_prec) return zero_at_precision(p_, abs_prec);
    return from_unit(p_, v_, mod_reduce(u_, ppow(p_, abs_prec - v_)), abs_prec - v_);
}

std::string PadicApprox::str() const {
    std::ostringstream os;
    if (state_ == State::ExactZero) {
        os << "0 (exact)";
        return os.str();
    }
    if (state_ == State::ZeroAtPrec) {
        os << "O(" << p_ << "^" << v_ << ")";
        return os.str();
    }
    os << p_ << "^" << v_ << " * (";
    mpz_class t = u_;
    for (long i = 0; i < rel_; ++i) {
        if (i) os << " ";
        os << (t % p_);
        t /= p_;
    }
    os << ")";
    return os.str();
}

}  // namespace padlab
