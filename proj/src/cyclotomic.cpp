#include "padlab/cyclotomic.hpp"

#include <algorithm>
#include <sstream>

#include "padlab/zpoly.hpp"

namespace padlab {

// ---------------------------------------------------------------------------
// construction / normalization
// ---------------------------------------------------------------------------

CycloNum::CycloNum(long m, std::vector<mpz_class> num, mpz_class den) : m_(m), num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) throw std::domain_error("CycloNum: zero denominator");
    if (den_ < 0) {
        den_ = -den_;
        for (auto& c : num_) c = -c;
    }
    // content reduction
    mpz_class g = den_;
    for (const auto& c : num_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    if (g > 1) {
        den_ /= g;
        for (auto& c : num_) c /= g;
    }
}

void CycloNum::reduce_and_normalize(std::vector<mpz_class>&& raw) {
    const auto& phi = cyclotomic_poly(m_);
    Poly r = std::move(raw);
    zp_trim(r);
    // exact division with remainder by the monic cyclotomic polynomial
    long dg = zp_deg(phi);
    while (zp_deg(r) >= dg) {
        long sh = zp_deg(r) - dg;
        mpz_class c = r.back();
        for (long i = 0; i <= dg; ++i) r[sh + i] -= c * phi[i];
        zp_trim(r);
    }
    num_.assign(static_cast<size_t>(euler_phi(m_)), mpz_class(0));
    for (long i = 0; i <= zp_deg(r); ++i) num_[static_cast<size_t>(i)] = r[i];
}

CycloNum CycloNum::zero(long m) {
    if (m < 1) throw std::domain_error("CycloNum: modulus must be >= 1");
    return CycloNum(m, std::vector<mpz_class>(static_cast<size_t>(euler_phi(m)), mpz_class(0)), 1);
}

CycloNum CycloNum::one(long m) {
    CycloNum z = zero(m);
    z.num_[0] = 1;
    return z;
}

CycloNum CycloNum::from_rational(const mpq_class& q, long m) {
    CycloNum z = zero(m);
    z.num_[0] = q.get_num();
    z.den_ = q.get_den();
    return CycloNum(m, std::move(z.num_), std::move(z.den_));
}

CycloNum CycloNum::zeta(long m, long j) {
    j %= m;
    if (j < 0) j += m;
    CycloNum z = zero(m);
    std::vector<mpz_class> raw(static_cast<size_t>(j) + 1, mpz_class(0));
    raw[static_cast<size_t>(j)] = 1;
    z.reduce_and_normalize(std::move(raw));
    return CycloNum(m, std::move(z.num_), mpz_class(1));
}

CycloNum CycloNum::one_minus_zeta_pow(long m, long a) {
    return one(m) - zeta(m, a);
}

CycloNum CycloNum::unit_ratio(long m, long a) {
    return one_minus_zeta_pow(m, a) / one_minus_zeta_pow(m, 1);
}

bool CycloNum::is_zero() const {
    for (const auto& c : num_)
        if (c != 0) return false;
    return true;
}

std::optional<mpq_class> CycloNum::as_rational() const {
    for (size_t i = 1; i < num_.size(); ++i)
        if (num_[i] != 0) return std::nullopt;
    mpq_class q(num_[0], den_);
    q.canonicalize();
    return q;
}

// ---------------------------------------------------------------------------
// arithmetic
// ---------------------------------------------------------------------------

CycloNum CycloNum::coerce(long M) const {
    if (M == m_) return *this;
    if (M % m_ != 0) throw std::domain_error("CycloNum::coerce: target modulus not a multiple");
    long step = M / m_;
    std::vector<mpz_class> raw(static_cast<size_t>((num_.size() - 1) * step + 1), mpz_class(0));
    for (size_t i = 0; i < num_.size(); ++i) raw[i * step] = num_[i];
    CycloNum out = zero(M);
    out.reduce_and_normalize(std::move(raw));
    return CycloNum(M, std::move(out.num_), den_);
}

CycloNum CycloNum::operator-() const {
    std::vector<mpz_class> n = num_;
    for (auto& c : n) c = -c;
    return CycloNum(m_, std::move(n), den_);
}

static void match_moduli(const CycloNum& a, const CycloNum& b, CycloNum& ca, CycloNum& cb) {
    long M = lcm_long(a.modulus(), b.modulus());
    ca = a.coerce(M);
    cb = b.coerce(M);
}

CycloNum CycloNum::operator+(const CycloNum& o) const {
    if (o.m_ != m_) {
        CycloNum a = zero(1), b = zero(1);
        match_moduli(*this, o, a, b);
        return a + b;
    }
    std::vector<mpz_class> n(num_.size());
    for (size_t i = 0; i < n.size(); ++i) n[i] = num_[i] * o.den_ + o.num_[i] * den_;
    return CycloNum(m_, std::move(n), den_ * o.den_);
}

CycloNum CycloNum::operator-(const CycloNum& o) const { return *this + (-o); }

CycloNum CycloNum::operator*(const CycloNum& o) const {
    if (o.m_ != m_) {
        CycloNum a = zero(1), b = zero(1);
        match_moduli(*this, o, a, b);
        return a * b;
    }
    std::vector<mpz_class> raw = poly_mul_z(num_, o.num_);
    CycloNum out = zero(m_);
    out.reduce_and_normalize(std::move(raw));
    return CycloNum(m_, std::move(out.num_), den_ * o.den_);
}

CycloNum CycloNum::inverse() const {
    if (is_zero()) throw std::domain_error("CycloNum: division by zero");
    // extended Euclid over Q[x] against the cyclotomic polynomial
    const auto& phiz = cyclotomic_poly(m_);
    std::vector<mpq_class> r0(phiz.size()), r1(num_.size());
    for (size_t i = 0; i < phiz.size(); ++i) r0[i] = mpq_class(phiz[i]);
    for (size_t i = 0; i < num_.size(); ++i) r1[i] = mpq_class(num_[i], den_);
    auto trim = [](std::vector<mpq_class>& v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
    };
    trim(r0);
    trim(r1);
    std::vector<mpq_class> t0, t1 = {mpq_class(1)};
    while (!r1.empty()) {
        // divmod r0 by r1
        std::vector<mpq_class> q, rem = r0;
        long dr1 = static_cast<long>(r1.size()) - 1;
        if (static_cast<long>(rem.size()) - 1 >= dr1) q.assign(rem.size() - r1.size() + 1, mpq_class(0));
        while (static_cast<long>(rem.size()) - 1 >= dr1 && !rem.empty()) {
            mpq_class c = rem.back() / r1.back();
            long sh = static_cast<long>(rem.size()) - 1 - dr1;
            q[static_cast<size_t>(sh)] = c;
            for (long i = 0; i <= dr1; ++i) rem[static_cast<size_t>(sh + i)] -= c * r1[static_cast<size_t>(i)];
            trim(rem);
        }
        // t2 = t0 - q*t1
        std::vector<mpq_class> t2 = t0;
        if (!q.empty() && !t1.empty()) {
            t2.resize(std::max(t2.size(), q.size() + t1.size() - 1), mpq_class(0));
            for (size_t i = 0; i < q.size(); ++i) {
                if (q[i] == 0) continue;
                for (size_t j = 0; j < t1.size(); ++j) t2[i + j] -= q[i] * t1[j];
            }
        }
        trim(t2);
        r0 = std::move(r1);
        r1 = std::move(rem);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.size() != 1) throw std::logic_error("CycloNum::inverse: gcd with Phi_m not constant");
    // alpha * t0 = r0 (constant)  =>  alpha^{-1} = t0 / r0
    mpq_class lead = r0[0];
    mpz_class common_den = 1;
    for (auto& c : t0) {
        c /= lead;
        c.canonicalize();
        common_den = common_den / mpz_class(gcd(common_den, c.get_den())) * c.get_den();
    }
    std::vector<mpz_class> n(static_cast<size_t>(euler_phi(m_)), mpz_class(0));
    for (size_t i = 0; i < t0.size(); ++i) n[i] = t0[i].get_num() * (common_den / t0[i].get_den());
    return CycloNum(m_, std::move(n), common_den);
}

CycloNum CycloNum::operator/(const CycloNum& o) const {
    if (o.m_ != m_) {
        CycloNum a = zero(1), b = zero(1);
        match_moduli(*this, o, a, b);
        return a / b;
    }
    return *this * o.inverse();
}

CycloNum CycloNum::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    CycloNum r = one(m_), b = *this;
    while (e > 0) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

CycloNum CycloNum::conjugate(long j) const {
    j %= m_;
    if (j < 0) j += m_;
    if (gcd_long(j, m_) != 1) throw std::domain_error("CycloNum::conjugate: index not coprime to modulus");
    // zeta^i -> zeta^{ij mod m}
    std::vector<mpz_class> raw(static_cast<size_t>(m_), mpz_class(0));
    for (size_t i = 0; i < num_.size(); ++i)
        raw[(i * static_cast<size_t>(j)) % static_cast<size_t>(m_)] += num_[i];
    CycloNum out = zero(m_);
    out.reduce_and_normalize(std::move(raw));
    return CycloNum(m_, std::move(out.num_), den_);
}

bool CycloNum::operator==(const CycloNum& o) const {
    if (m_ != o.m_) {
        CycloNum a = zero(1), b = zero(1);
        match_moduli(*this, o, a, b);
        return a == b;
    }
    return den_ == o.den_ && num_ == o.num_;
}

// ---------------------------------------------------------------------------
// norm, torsion, embeddings
// ---------------------------------------------------------------------------

mpq_class CycloNum::norm_to_q() const {
    long n = static_cast<long>(num_.size());
    // multiplication matrix of the numerator on the power basis
    std::vector<std::vector<mpz_class>> M(static_cast<size_t>(n), std::vector<mpz_class>(static_cast<size_t>(n)));
    for (long col = 0; col < n; ++col) {
        // column = numerator * zeta^col reduced
        std::vector<mpz_class> raw(num_.size() + static_cast<size_t>(col), mpz_class(0));
        for (size_t i = 0; i < num_.size(); ++i) raw[i + static_cast<size_t>(col)] = num_[i];
        CycloNum red = zero(m_);
        red.reduce_and_normalize(std::move(raw));
        for (long row = 0; row < n; ++row) M[static_cast<size_t>(row)][static_cast<size_t>(col)] = red.num_[static_cast<size_t>(row)];
    }
    // Bareiss fraction-free elimination
    mpz_class denom = 1;
    int sign = 1;
    for (long k = 0; k < n - 1; ++k) {
        if (M[static_cast<size_t>(k)][static_cast<size_t>(k)] == 0) {
            long swap = -1;
            for (long i = k + 1; i < n; ++i)
                if (M[static_cast<size_t>(i)][static_cast<size_t>(k)] != 0) { swap = i; break; }
            if (swap < 0) return mpq_class(0);
            std::swap(M[static_cast<size_t>(k)], M[static_cast<size_t>(swap)]);
            sign = -sign;
        }
        for (long i = k + 1; i < n; ++i) {
            for (long j = k + 1; j < n; ++j) {
                mpz_class t = M[static_cast<size_t>(i)][static_cast<size_t>(j)] * M[static_cast<size_t>(k)][static_cast<size_t>(k)] -
                              M[static_cast<size_t>(i)][static_cast<size_t>(k)] * M[static_cast<size_t>(k)][static_cast<size_t>(j)];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), denom.get_mpz_t());
                M[static_cast<size_t>(i)][static_cast<size_t>(j)] = t;
            }
            M[static_cast<size_t>(i)][static_cast<size_t>(k)] = 0;
        }
        denom = M[static_cast<size_t>(k)][static_cast<size_t>(k)];
    }
    mpz_class det = M[static_cast<size_t>(n - 1)][static_cast<size_t>(n - 1)];
    if (sign < 0) det = -det;
    mpq_class nm(det);
    mpq_class dd;
    mpz_pow_ui(dd.get_num_mpz_t(), den_.get_mpz_t(), static_cast<unsigned long>(n));
    nm /= dd;
    nm.canonicalize();
    return nm;
}

CycloNum::RootOfUnity CycloNum::is_root_of_unity() const {
    RootOfUnity out;
    if (is_zero()) return out;
    long L = lcm_long(2, m_);
    if (!(pow(L) == one(m_))) return out;
    out.is_root = true;
    long ord = L;
    for (auto [pr, e] : factorize(L)) {
        for (long i = 0; i < e; ++i) {
            long cand = ord / pr;
            if (pow(cand) == one(m_))
                ord = cand;
            else
                break;
        }
    }
    out.order = ord;
    return out;
}

std::vector<EmbeddingValue> CycloNum::complex_embeddings(long digits) const {
    if (digits < 15) throw std::domain_error("complex_embeddings: digits must be >= 15");
    mpfr_prec_t prec = static_cast<mpfr_prec_t>(digits * 3.4) + 96;
    Real twopi = Real::pi(prec) + Real::pi(prec);
    Real denr = Real::from_mpz(den_, prec);
    // certified error: each of ~(deg+2) fused ops at precision prec on values
    // bounded by H = sum |num_i|/den + 1 contributes at most H * 2^{1-prec}
    mpz_class habs = 0;
    for (const auto& c : num_) habs += abs(c);
    Real H = Real::from_mpz(habs, prec) / denr + Real::from_long(1, prec);
    Real err = H.mul_long(4 * (static_cast<long>(num_.size()) + 2)) * Real::pow2(2 - static_cast<long>(prec), prec);

    std::vector<EmbeddingValue> out;
    for (long j = 0; j < m_ || (m_ == 1 && j == 0); ++j) {
        if (m_ > 1 && (j == 0 || gcd_long(j, m_) != 1)) continue;
        Complex z(prec), acc(prec);
        {
            Real ang = twopi.mul_long(j) / Real::from_long(m_, prec);
            Real s(prec), c(prec);
            Real::sin_cos(ang, s, c);
            z = Complex(c, s);
        }
        // Horner
        acc = Complex(Real::from_long(0, prec), Real::from_long(0, prec));
        for (long i = static_cast<long>(num_.size()) - 1; i >= 0; --i) {
            acc = acc * z;
            acc.re = acc.re + Real::from_mpz(num_[static_cast<size_t>(i)], prec) / denr;
        }
        EmbeddingValue ev{j == 0 ? 1 : j, acc, err};
        out.push_back(std::move(ev));
        if (m_ == 1) break;
    }
    return out;
}

std::string CycloNum::str() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < num_.size(); ++i) {
        if (i) os << " ";
        os << num_[i].get_str();
    }
    os << ")/" << den_.get_str() << " in Q(zeta_" << m_ << ")";
    return os.str();
}

}  // namespace padlab
