#pragma once

// Exact arithmetic in Q(zeta_m): integer numerator polynomial of degree
// < phi(m) on the power basis, one shared positive denominator, always
// content-reduced and reduced modulo the m-th cyclotomic polynomial.

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "padlab/mpfr_real.hpp"
#include "padlab/nt.hpp"

namespace padlab {

struct EmbeddingValue {
    long conjugate;  // j with sigma_j: zeta -> zeta^j
    Complex value;
    Real abs_error;  // certified bound on |computed - true|
};

class CycloNum {
public:
    CycloNum() = default;

    static CycloNum zero(long m);
    static CycloNum one(long m);
    static CycloNum from_rational(const mpq_class& q, long m);
    static CycloNum from_long(long v, long m) { return from_rational(mpq_class(v), m); }
    static CycloNum zeta(long m, long j = 1);            // zeta_m^j
    static CycloNum one_minus_zeta_pow(long m, long a);  // 1 - zeta_m^a
    // (1 - zeta_m^a) / (1 - zeta_m), exact
    static CycloNum unit_ratio(long m, long a);

    long modulus() const { return m_; }
    long degree_bound() const { return static_cast<long>(num_.size()); }
    bool is_zero() const;
    // rational iff all non-constant coordinates vanish
    std::optional<mpq_class> as_rational() const;
    const std::vector<mpz_class>& numerator() const { return num_; }
    const mpz_class& denominator() const { return den_; }

    CycloNum coerce(long M) const;  // m | M required
    CycloNum operator-() const;
    CycloNum operator+(const CycloNum& o) const;
    CycloNum operator-(const CycloNum& o) const;
    CycloNum operator*(const CycloNum& o) const;
    CycloNum operator/(const CycloNum& o) const;
    CycloNum inverse() const;
    CycloNum pow(long e) const;
    CycloNum conjugate(long j) const;  // zeta -> zeta^j, (j, m) = 1
    bool operator==(const CycloNum& o) const;

    // product of all conjugates (det of the multiplication matrix), exact
    mpq_class norm_to_q() const;

    struct RootOfUnity {
        bool is_root = false;
        long order = 0;
    };
    RootOfUnity is_root_of_unity() const;  // exact: alpha^{lcm(2,m)} == 1

    // values at all primitive m-th roots of unity, with certified error bounds
    std::vector<EmbeddingValue> complex_embeddings(long digits) const;

    std::string str() const;

private:
    CycloNum(long m, std::vector<mpz_class> num, mpz_class den);
    void reduce_and_normalize(std::vector<mpz_class>&& raw);

    long m_ = 1;
    std::vector<mpz_class> num_;  // size phi(m)
    mpz_class den_ = 1;
};

}  // namespace padlab
