#include "padlab/linear_form.hpp"

#include <map>
#include <sstream>

#include "padlab/digamma.hpp"
#include "padlab/iwasawa.hpp"
#include "padlab/local_field.hpp"

namespace padlab {

std::string BasisAtom::str() const {
    std::ostringstream os;
    if (kind == Kind::OneMinusZeta)
        os << "1-z" << conductor;
    else
        os << "(1-z" << conductor << "^" << exponent << ")/(1-z" << conductor << ")";
    return os.str();
}

json BasisAtom::to_json() const {
    json j;
    j["kind"] = kind == Kind::OneMinusZeta ? "one_minus_zeta" : "unit_ratio";
    j["conductor"] = conductor;
    j["exponent"] = exponent;
    return j;
}

json LinearForm::to_json() const {
    json j;
    j["coeff_modulus"] = coeff_modulus;
    json ts = json::array();
    for (const auto& t : terms) {
        json e;
        json poly = json::array();
        for (const auto& c : t.coeff.numerator()) poly.push_back(c.get_str());
        e["coefficient"] = poly;
        e["coefficient_denominator"] = t.coeff.denominator().get_str();
        e["atom"] = t.atom.to_json();
        ts.push_back(e);
    }
    j["terms"] = ts;
    json vs = json::array();
    for (const auto& a : vanished) vs.push_back(a.to_json());
    j["vanished_atoms"] = vs;
    return j;
}

namespace {

long vp_long(long n, long p) {
    long v = 0;
    while (n % p == 0 && n != 0) { n /= p; ++v; }
    return v;
}

// number of distinct primes other than p dividing f must be <= 2 (the
// theorem shapes); anything else is rejected, not improvised
void check_shape(long p, long f) {
    if (f < 2) throw std::domain_error("reduce_difference: conductor must be >= 2");
    long others = 0;
    for (auto [s, e] : factorize(f))
        if (s != p) ++others;
    if (others > 2)
        throw std::domain_error("reduce_difference: unsupported conductor shape (" +
                                std::to_string(f) + " has too many primes besides p)");
}

using AtomMap = std::map<BasisAtom, CycloNum>;

void accumulate(AtomMap& acc, long M, const BasisAtom& atom, const CycloNum& coeff) {
    auto it = acc.find(atom);
    if (it == acc.end())
        acc.emplace(atom, coeff);
    else
        it->second = it->second + coeff;
    (void)M;
}

// L(c, b) = log(1 - zeta_c^b) as atom contributions: A1(c) [+ A2(c, b')]
// after the parity fold b -> min(b, c-b)
void add_log_term(AtomMap& acc, long M, long c, long b, const CycloNum& coeff) {
    b %= c;
    if (b < 0) b += c;
    if (b == 0) throw std::logic_error("add_log_term: zero argument");
    if (2 * b > c) b = c - b;
    accumulate(acc, M, BasisAtom{BasisAtom::Kind::OneMinusZeta, c, 1}, coeff);
    if (b > 1)
        accumulate(acc, M, BasisAtom{BasisAtom::Kind::UnitRatio, c, b}, coeff);
}

// one Gauss-formula side: -log f + sum_{a=1}^{f-1} zeta_f^{-ar} L(f, a),
// written on the atoms (sign applied by the caller through `coeff_sign`)
void gauss_side(AtomMap& acc, long M, long p, long r, long f, const CycloNum& sign) {
    // main sum, split by gcd class and folded
    for (long a = 1; a < f; ++a) {
        long g = gcd_long(a, f);
        long c = f / g, b = a / g;
        // zeta_f^{-ar} = zeta_M^{(M/f)(-ar mod f)}
        CycloNum coeff = sign * CycloNum::zeta(M, ((((-a * r) % f) + f) % f) * (M / f));
        add_log_term(acc, M, c, b, coeff);
    }
    // -log f = -sum_{s | f, s != p} v_s(f) log s, with log s expanded at the
    // conductor s^{v_s(f)} via prod_{b primitive} (1 - zeta^b) = s
    for (auto [s, v] : factorize(f)) {
        if (s == p) continue;
        long cc = ipow_long(s, v);
        CycloNum w = sign * CycloNum::from_rational(mpq_class(-v), M);
        if (cc == 2) {
            add_log_term(acc, M, 2, 1, w);
            continue;
        }
        for (long t = 1; 2 * t < cc; ++t) {
            if (t % s == 0) continue;
            add_log_term(acc, M, cc, t, w * CycloNum::from_rational(mpq_class(2), M));
        }
    }
}

}  // namespace

LinearForm reduce_difference(long p, std::pair<long, long> rf1, std::pair<long, long> rf2) {
    auto [r1, f1] = rf1;
    auto [r2, f2] = rf2;
    check_shape(p, f1);
    check_shape(p, f2);
    if (r1 < 1 || r1 >= f1 || r2 < 1 || r2 >= f2)
        throw std::domain_error("reduce_difference: need 1 <= r_i < f_i");
    long M = lcm_long(f1, f2);
    AtomMap acc;
    gauss_side(acc, M, p, r1, f1, CycloNum::one(M));
    gauss_side(acc, M, p, r2, f2, -CycloNum::one(M));
    LinearForm form;
    form.coeff_modulus = M;
    for (auto& [atom, coeff] : acc) {
        if (coeff.is_zero())
            form.vanished.push_back(atom);
        else
            form.terms.push_back(LinearFormTerm{coeff, atom});
    }
    return form;
}

PadicApprox evaluate_form(const LinearForm& form, long p, long N) {
    long M = form.coeff_modulus;
    for (const auto& t : form.terms)
        if (M % t.atom.conductor != 0)
            throw std::domain_error("evaluate_form: atom conductor outside the coefficient modulus");
    if (form.terms.empty()) return PadicApprox::exact_zero(p);
    long kM = vp_long(M, p);
    long Wf = N + (kM > 0 ? kM - 1 : 0) + 14;
    FieldPtr F = build_field(p, M, Wf);
    // zeta_M^i table for coefficient embedding
    long phiM = euler_phi(M);
    std::vector<LocalElement> ztab;
    ztab.reserve(static_cast<size_t>(phiM));
    for (long i = 0; i < phiM; ++i) ztab.push_back(F->zeta_power(i));

    LocalElement total = F->zero();
    for (const auto& t : form.terms) {
        // atom value: log(1-zeta_M^{b M/c}) [- log(1-zeta_M^{M/c})]
        long c = t.atom.conductor;
        LocalElement val = log_one_minus_zeta(F, t.atom.exponent * (M / c));
        if (t.atom.kind == BasisAtom::Kind::UnitRatio)
            val = val - log_one_minus_zeta(F, M / c);
        // embed the coefficient
        LocalElement emb = F->zero();
        const auto& num = t.coeff.numerator();
        for (size_t i = 0; i < num.size(); ++i) {
            if (num[i] == 0) continue;
            emb = emb + ztab[i] * num[i];
        }
        const mpz_class& den = t.coeff.denominator();
        if (den != 1) {
            if (mpz_divisible_ui_p(den.get_mpz_t(), static_cast<unsigned long>(p)))
                throw std::domain_error("evaluate_form: coefficient denominator divisible by p");
            emb = emb * inv_mod(den, F->working_modulus());
        }
        total = total + emb * val;
    }
    return total.project_to_qp(Valuation::of(N - 2));
}

VerificationReport verify_reduction(long p, std::pair<long, long> rf1, std::pair<long, long> rf2,
                                    long N) {
    VerificationReport rep;
    rep.check = "reduction";
    rep.p = p;
    rep.N = N;
    rep.r = rf1.first;
    rep.f = rf1.second;
    DigammaValue v1 = digamma_value(p, rf1.first, rf1.second, N);
    DigammaValue v2 = digamma_value(p, rf2.first, rf2.second, N);
    PadicApprox gamma = euler_gamma_p(p, N + 2);
    PadicApprox lhs = (v1.value + gamma) - (v2.value + gamma);
    LinearForm form = reduce_difference(p, rf1, rf2);
    PadicApprox rhs = evaluate_form(form, p, N);
    rep.k_used = std::max(v1.k_used, v2.k_used);
    rep.achieved = (lhs - rhs).certified_valuation();
    rep.pass = rep.achieved >= Valuation::of(N - 2);
    rep.route = v1.route + " vs " + v2.route + " (" + std::to_string(rf1.first) + "/" +
                std::to_string(rf1.second) + " - " + std::to_string(rf2.first) + "/" +
                std::to_string(rf2.second) + ")";
    return rep;
}

json NonvanishingReport::to_json() const {
    json j;
    j["all_zero"] = all_zero;
    j["unit_ratio_not_all_zero"] = unit_ratio_not_all_zero;
    json list = json::array();
    for (const auto& [atom, iszero] : atoms) {
        json e;
        e["atom"] = atom.to_json();
        e["coefficient_is_zero"] = iszero;
        list.push_back(e);
    }
    j["atoms"] = list;
    return j;
}

NonvanishingReport nonvanishing_check(const LinearForm& form) {
    NonvanishingReport rep;
    rep.all_zero = form.terms.empty();
    for (const auto& t : form.terms) {
        rep.atoms.emplace_back(t.atom, false);
        if (t.atom.kind == BasisAtom::Kind::UnitRatio) rep.unit_ratio_not_all_zero = true;
    }
    for (const auto& a : form.vanished) rep.atoms.emplace_back(a, true);
    return rep;
}

}  // namespace padlab
