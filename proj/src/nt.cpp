#include "padlab/nt.hpp"

#include <map>
#include <mutex>

namespace padlab {

std::vector<std::pair<long, long>> factorize(long n) {
    if (n < 1) throw std::domain_error("factorize: n must be positive");
    std::vector<std::pair<long, long>> out;
    for (long p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p == 0) {
            long e = 0;
            while (n % p == 0) { n /= p; ++e; }
            out.emplace_back(p, e);
        }
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

std::vector<std::pair<mpz_class, long>> factorize_mpz(const mpz_class& n_in) {
    mpz_class n = n_in;
    if (n < 1) throw std::domain_error("factorize_mpz: n must be positive");
    std::vector<std::pair<mpz_class, long>> out;
    for (mpz_class p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
            long e = 0;
            while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
                mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
                ++e;
            }
            out.emplace_back(p, e);
        }
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

long euler_phi(long n) {
    long r = 1;
    for (auto [p, e] : factorize(n)) r *= ipow_long(p, e - 1) * (p - 1);
    return n == 1 ? 1 : r;
}

int mobius(long n) {
    if (n == 1) return 1;
    int sign = 1;
    for (auto [p, e] : factorize(n)) {
        if (e > 1) return 0;
        sign = -sign;
    }
    return sign;
}

long mult_order_mod(long g, long m) {
    if (m < 1) throw std::domain_error("mult_order_mod: modulus must be positive");
    g %= m;
    if (g < 0) g += m;
    if (gcd_long(g, m) != 1) throw std::domain_error("mult_order_mod: gcd(g,m) != 1");
    if (m == 1) return 1;
    long t = euler_phi(m);
    mpz_class mm = m, gg = g;
    for (auto [p, e] : factorize(t)) {
        for (long i = 0; i < e; ++i) {
            long cand = t / p;
            if (powmod(gg, mpz_class(cand), mm) == 1)
                t = cand;
            else
                break;
        }
    }
    return t;
}

std::vector<mpz_class> poly_mul_z(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<mpz_class> c(a.size() + b.size() - 1, mpz_class(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    }
    return c;
}

std::vector<mpz_class> poly_divexact_z(std::vector<mpz_class> num, const std::vector<mpz_class>& den) {
    if (den.empty() || den.back() == 0) throw std::domain_error("poly_divexact_z: bad divisor");
    const mpz_class& lead = den.back();
    if (lead != 1 && lead != -1) throw std::domain_error("poly_divexact_z: non-unit lead");
    if (num.size() < den.size()) {
        for (auto& c : num)
            if (c != 0) throw std::domain_error("poly_divexact_z: not divisible");
        return {};
    }
    std::vector<mpz_class> q(num.size() - den.size() + 1, mpz_class(0));
    for (long i = static_cast<long>(q.size()) - 1; i >= 0; --i) {
        mpz_class c = num[i + den.size() - 1] * lead;  // lead is +-1
        q[i] = c;
        if (c == 0) continue;
        for (size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
    }
    for (auto& c : num)
        if (c != 0) throw std::domain_error("poly_divexact_z: remainder nonzero");
    return q;
}

const std::vector<mpz_class>& cyclotomic_poly(long m) {
    static std::map<long, std::vector<mpz_class>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lk(mu);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;

    std::vector<mpz_class> phi;
    if (m == 1) {
        phi = {mpz_class(-1), mpz_class(1)};  // x - 1
    } else {
        // (x^m - 1) / prod_{d | m, d < m} Phi_d, computed without recursion locks
        std::vector<mpz_class> num(m + 1, mpz_class(0));
        num[0] = -1;
        num[m] = 1;
        // collect proper divisors in increasing order; all Phi_d already cached or computed here
        std::vector<long> divs;
        for (long d = 1; d < m; ++d)
            if (m % d == 0) divs.push_back(d);
        for (long d : divs) {
            auto jt = cache.find(d);
            if (jt == cache.end()) {
                // compute Phi_d inline with the same method (divisors of d < m already handled)
                std::vector<mpz_class> nm(d + 1, mpz_class(0));
                nm[0] = -1;
                nm[d] = 1;
                if (d == 1) {
                    nm = {mpz_class(-1), mpz_class(1)};
                } else {
                    for (long dd = 1; dd < d; ++dd)
                        if (d % dd == 0) nm = poly_divexact_z(std::move(nm), cache.at(dd));
                }
                jt = cache.emplace(d, std::move(nm)).first;
            }
            num = poly_divexact_z(std::move(num), jt->second);
        }
        phi = std::move(num);
    }
    return cache.emplace(m, std::move(phi)).first->second;
}

}  // namespace padlab
