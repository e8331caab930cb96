#pragma once

// Rational-or-infinite valuation value. Integer-valued on Q_p, (1/e)Z-valued
// on ramified towers, +inf for anything indistinguishable from zero.

#include <stdexcept>
#include <string>

namespace padlab {

struct Valuation {
    bool inf = false;
    long num = 0;
    long den = 1;  // > 0, gcd(num, den) = 1

    static Valuation infinite() { return Valuation{true, 0, 1}; }
    static Valuation of(long n, long d = 1) {
        if (d == 0) throw std::domain_error("Valuation: zero denominator");
        if (d < 0) { n = -n; d = -d; }
        long g = 1;
        {
            long a = n < 0 ? -n : n, b = d;
            while (b) { long t = a % b; a = b; b = t; }
            g = a == 0 ? 1 : a;
        }
        return Valuation{false, n / g, d / g};
    }

    bool is_finite() const { return !inf; }

    friend bool operator==(const Valuation& a, const Valuation& b) {
        if (a.inf || b.inf) return a.inf == b.inf;
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator<(const Valuation& a, const Valuation& b) {
        if (a.inf) return false;
        if (b.inf) return true;
        return a.num * b.den < b.num * a.den;
    }
    friend bool operator<=(const Valuation& a, const Valuation& b) { return a == b || a < b; }
    friend bool operator>(const Valuation& a, const Valuation& b) { return b < a; }
    friend bool operator>=(const Valuation& a, const Valuation& b) { return b <= a; }

    Valuation operator+(const Valuation& o) const {
        if (inf || o.inf) return infinite();
        return of(num * o.den + o.num * den, den * o.den);
    }

    std::string str() const {
        if (inf) return "inf";
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }
};

inline Valuation min(const Valuation& a, const Valuation& b) { return a < b ? a : b; }

}  // namespace padlab
