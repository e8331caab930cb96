#pragma once

// Mechanized proof reductions: differences of digamma-type values rewritten
// as linear forms in log_p of the fixed basis atoms (1 - zeta_c and the unit
// ratios (1-zeta_c^b)/(1-zeta_c)), with exact cyclotomic coefficients.
//
// The rewrite uses the standard moves: the a <-> f-a pairing
// (log is even on 1-zeta^a), the gcd-class split of the summation index, the
// norm identity prod_{b primitive mod s^j} (1-zeta^b) = s, and log_p(p) = 0.

#include <utility>
#include <vector>

#include "padlab/cyclotomic.hpp"
#include "padlab/padic.hpp"
#include "padlab/report.hpp"

namespace padlab {

struct BasisAtom {
    enum class Kind { OneMinusZeta, UnitRatio };
    Kind kind = Kind::OneMinusZeta;
    long conductor = 0;
    long exponent = 1;  // UnitRatio: 1 < exponent < conductor/2; OneMinusZeta: 1

    friend bool operator==(const BasisAtom& a, const BasisAtom& b) {
        return a.kind == b.kind && a.conductor == b.conductor && a.exponent == b.exponent;
    }
    friend bool operator<(const BasisAtom& a, const BasisAtom& b) {
        if (a.conductor != b.conductor) return a.conductor < b.conductor;
        if (a.kind != b.kind) return a.kind < b.kind;
        return a.exponent < b.exponent;
    }
    std::string str() const;
    json to_json() const;
};

struct LinearFormTerm {
    CycloNum coeff;
    BasisAtom atom;
};

struct LinearForm {
    long coeff_modulus = 1;              // all coefficients live in Q(zeta_M)
    std::vector<LinearFormTerm> terms;   // nonzero coefficients, sorted by atom
    std::vector<BasisAtom> vanished;     // atoms whose coefficient canceled exactly
    json to_json() const;
};

// (value(r1/f1) + gamma_p) - (value(r2/f2) + gamma_p) = sum coeff * log_p(atom)
LinearForm reduce_difference(long p, std::pair<long, long> rf1, std::pair<long, long> rf2);

// evaluates the form in the lcm-conductor tower and projects to Q_p
PadicApprox evaluate_form(const LinearForm& form, long p, long N);

VerificationReport verify_reduction(long p, std::pair<long, long> rf1, std::pair<long, long> rf2,
                                    long N);

struct NonvanishingReport {
    bool all_zero = false;
    bool unit_ratio_not_all_zero = false;
    std::vector<std::pair<BasisAtom, bool>> atoms;  // (atom, coefficient_is_zero)
    json to_json() const;
};
NonvanishingReport nonvanishing_check(const LinearForm& form);

}  // namespace padlab
