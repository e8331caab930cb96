#pragma once

// Exact arithmetic in Q_p at capped absolute precision.
//
// A nonzero element is p^v * u with u a unit known modulo p^rel; the value is
// known modulo p^{v+rel} (absolute precision N = v + rel).  Exact zero is a
// distinguished state; "zero at precision N" (all digits vanish, N finite)
// is a separate state that callers must treat as unknown-zero.
//
// All operations are exact on the stored residues, so addition and
// multiplication are associative and commutative bit-for-bit; results carry
// the minimum justified precision.

#include <gmpxx.h>

#include <string>

#include "padlab/nt.hpp"
#include "padlab/valuation.hpp"

namespace padlab {

class PadicApprox {
public:
    PadicApprox() = default;

    static PadicApprox exact_zero(long p);
    static PadicApprox zero_at_precision(long p, long abs_prec);
    // value known modulo p^{abs_prec}
    static PadicApprox from_integer(const mpz_class& value, long p, long abs_prec);
    // image of a/b correct modulo p^{v + rel_prec}, v = nu_p(a/b)  (exact zero for a = 0)
    static PadicApprox from_rational(const mpq_class& q, long p, long rel_prec);
    static PadicApprox from_rational(long num, long den, long p, long rel_prec);
    // internal: p^v * unit with unit known mod p^rel
    static PadicApprox from_unit(long p, long v, mpz_class unit, long rel);

    long prime() const { return p_; }
    bool is_exact_zero() const { return state_ == State::ExactZero; }
    bool is_zero_at_precision() const { return state_ == State::ZeroAtPrec; }
    bool distinguishable_from_zero() const { return state_ == State::Nonzero; }

    // +inf for exact zero and for zero-at-precision (callers check which).
    Valuation valuation() const;
    long val() const;            // integer valuation; requires distinguishable_from_zero
    long abs_precision() const;  // N; throws for exact zero (infinite)
    long rel_precision() const { return state_ == State::Nonzero ? rel_ : 0; }
    const mpz_class& unit() const;

    // residue of value * p^{-val} modulo p^digits (digits <= rel)
    mpz_class unit_residue(long digits) const;

    PadicApprox operator-() const;
    PadicApprox operator+(const PadicApprox& o) const;
    PadicApprox operator-(const PadicApprox& o) const;
    PadicApprox operator*(const PadicApprox& o) const;
    PadicApprox operator/(const PadicApprox& o) const;

    PadicApprox inverse() const;
    PadicApprox pow(long e) const;
    // multiply by p^k (exact; shifts valuation and absolute precision)
    PadicApprox shift(long k) const;
    // forget digits beyond absolute precision N
    PadicApprox truncate_abs(long abs_prec) const;

    // valuation of (*this - o); +inf means indistinguishable at shared precision
    Valuation diff_valuation(const PadicApprox& o) const { return (*this - o).valuation(); }

    // the certified lower bound: exact valuation when distinguishable, the
    // absolute precision when all digits vanish, +inf only for exact zero
    Valuation certified_valuation() const {
        if (distinguishable_from_zero()) return valuation();
        if (is_zero_at_precision()) return Valuation::of(abs_precision());
        return Valuation::infinite();
    }

    // "p^v * (d0 d1 d2 ...)" least-significant digit first
    std::string str() const;

private:
    enum class State { ExactZero, ZeroAtPrec, Nonzero };

    static void check_same_prime(const PadicApprox& a, const PadicApprox& b);

    long p_ = 0;
    State state_ = State::ExactZero;
    long v_ = 0;    // Nonzero: valuation; ZeroAtPrec: absolute precision bound
    long rel_ = 0;  // Nonzero: unit digits known
    mpz_class u_;   // Nonzero: unit in [1, p^rel), coprime to p
};

}  // namespace padlab
