#include "padlab/independence.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace padlab {

long mult_order(long g, long m) { return mult_order_mod(g, m); }

RootClass classify_root(long g, long m) {
    long t = mult_order_mod(g, m);
    long phi = euler_phi(m);
    if (t == phi) return RootClass::Primitive;
    if (2 * t == phi) return RootClass::SemiPrimitive;
    return RootClass::Neither;
}

std::string root_class_name(RootClass c) {
    switch (c) {
        case RootClass::Primitive: return "primitive";
        case RootClass::SemiPrimitive: return "semi-primitive";
        default: return "neither";
    }
}

json EvidenceRecord::to_json() const {
    json j;
    j["base"] = base;
    j["modulus"] = modulus;
    j["order"] = order;
    j["phi"] = phi;
    j["classification"] = classification;
    return j;
}

json PropertyReport::to_json() const {
    json j;
    j["subject"] = subject;
    j["verdict"] = verdict;
    j["case_tag"] = case_tag;
    if (!reason.empty()) j["reason"] = reason;
    json ev = json::array();
    for (const auto& e : evidence) ev.push_back(e.to_json());
    j["evidence"] = ev;
    if (!j_set.empty()) j["J"] = j_set;
    return j;
}

static EvidenceRecord evidence_for(long g, long m) {
    EvidenceRecord e;
    e.base = g;
    e.modulus = m;
    e.order = mult_order_mod(g, m);
    e.phi = euler_phi(m);
    e.classification = root_class_name(classify_root(g, m));
    return e;
}

// ---------------------------------------------------------------------------
// Property I / II
// ---------------------------------------------------------------------------

PropertyReport check_property_i(long m) {
    PropertyReport rep;
    rep.subject = std::to_string(m);
    if (m < 2) {
        rep.reason = "m must be >= 2";
        return rep;
    }
    auto fac = factorize(m);
    if (fac.size() != 2 || fac[0].first == 2 || fac[1].first == 2) {
        rep.reason = "not of the form p1^a1 p2^a2 with odd primes";
        return rep;
    }
    long p1 = fac[0].first, a1 = fac[0].second;
    long p2 = fac[1].first, a2 = fac[1].second;
    long q1 = ipow_long(p1, a1), q2 = ipow_long(p2, a2);
    if (gcd_long(a1, euler_phi(q2)) != 1 || gcd_long(a2, euler_phi(q1)) != 1) {
        rep.reason = "(a1, phi(p2^a2)) = 1 = (a2, phi(p1^a1)) fails";
        return rep;
    }
    rep.evidence.push_back(evidence_for(p1, q2));
    rep.evidence.push_back(evidence_for(p2, q1));
    RootClass c12 = classify_root(p1, q2), c21 = classify_root(p2, q1);
    if (p1 % 4 == 3 && p2 % 4 == 3 && c12 == RootClass::SemiPrimitive &&
        c21 == RootClass::SemiPrimitive) {
        rep.verdict = true;
        rep.case_tag = "PropI-case1";
        return rep;
    }
    if (c12 == RootClass::Primitive && c21 == RootClass::Primitive) {
        rep.verdict = true;
        rep.case_tag = "PropI-case2";
        return rep;
    }
    rep.reason = "neither mutual semi-primitivity (both = 3 mod 4) nor mutual primitivity holds";
    return rep;
}

PropertyReport check_property_ii(const std::vector<long>& M) {
    PropertyReport rep;
    {
        std::ostringstream os;
        os << "{";
        for (size_t i = 0; i < M.size(); ++i) os << (i ? "," : "") << M[i];
        os << "}";
        rep.subject = os.str();
    }
    if (M.empty()) {
        rep.reason = "empty set";
        return rep;
    }
    for (size_t i = 0; i < M.size(); ++i)
        for (size_t j = i + 1; j < M.size(); ++j)
            if (gcd_long(M[i], M[j]) != 1) {
                rep.reason = "members " + std::to_string(M[i]) + ", " + std::to_string(M[j]) +
                             " are not coprime";
                return rep;
            }
    for (long m : M) {
        PropertyReport sub = check_property_i(m);
        for (auto& e : sub.evidence) rep.evidence.push_back(e);
        if (!sub.verdict) {
            rep.reason = "member " + std::to_string(m) + " fails Property I: " + sub.reason;
            return rep;
        }
    }
    rep.verdict = true;
    rep.case_tag = "PropII";
    for (long m : M)
        for (auto [pp, ee] : factorize(m)) rep.j_set.push_back(pp);
    std::sort(rep.j_set.begin(), rep.j_set.end());
    return rep;
}

// ---------------------------------------------------------------------------
// Pei-Feng criteria
// ---------------------------------------------------------------------------

static bool is_primitive(long g, long m) { return classify_root(g, m) == RootClass::Primitive; }
static bool is_semi(long g, long m) { return classify_root(g, m) == RootClass::SemiPrimitive; }

PropertyReport pei_feng_composite(long q) {
    PropertyReport rep;
    rep.subject = std::to_string(q);
    if (q % 4 == 2)
        throw std::domain_error("pei_feng_composite: q = 2 mod 4; use pei_feng_two_mod_four");
    auto fac = factorize(q);
    if (fac.size() < 2)
        throw std::domain_error(
            "pei_feng_composite: q is a prime power; the prime-power system is independent "
            "classically and the composite criterion does not apply");
    long a0 = 0;
    std::vector<std::pair<long, long>> odd;
    for (auto [pp, ee] : fac) {
        if (pp == 2)
            a0 = ee;
        else
            odd.emplace_back(pp, ee);
    }

    auto push_ev = [&](long g, long m) { rep.evidence.push_back(evidence_for(g, m)); };

    // clause 1: q = 4 p1^a1
    if (a0 == 2 && odd.size() == 1) {
        long p1 = odd[0].first, pw = ipow_long(p1, odd[0].second);
        push_ev(2, pw);
        if (is_primitive(2, pw)) {
            rep.verdict = true;
            rep.case_tag = "P3-1a";
        } else if (is_semi(2, pw) && p1 % 4 == 3) {
            rep.verdict = true;
            rep.case_tag = "P3-1b";
        } else {
            rep.reason = "2 is neither primitive nor (semi-primitive with p1 = 3 mod 4) mod p1^a1";
        }
        return rep;
    }
    // clause 2: q = 2^a0 p1^a1, a0 >= 3
    if (a0 >= 3 && odd.size() == 1) {
        long p1 = odd[0].first, pw = ipow_long(p1, odd[0].second);
        long twoa = ipow_long(2, a0);
        push_ev(p1, twoa);
        push_ev(2, pw);
        if (mult_order_mod(p1, twoa) != ipow_long(2, a0 - 2)) {
            rep.reason = "order of p1 mod 2^a0 is not 2^{a0-2}";
            return rep;
        }
        if ((ipow_long(2, a0 - 3) * p1 + 1) % twoa == 0) {
            rep.reason = "2^{a0-3} p1 = -1 mod 2^a0";
            return rep;
        }
        if (is_primitive(2, pw)) {
            rep.verdict = true;
            rep.case_tag = "P3-2a";
        } else if (is_semi(2, pw) && p1 % 4 == 3) {
            rep.verdict = true;
            rep.case_tag = "P3-2b";
        } else {
            rep.reason = "2 is neither primitive nor (semi-primitive with p1 = 3 mod 4) mod p1^a1";
        }
        return rep;
    }
    // clause 3: q = p1^a1 p2^a2
    if (a0 == 0 && odd.size() == 2) {
        long p1 = odd[0].first, w1 = ipow_long(p1, odd[0].second);
        long p2 = odd[1].first, w2 = ipow_long(p2, odd[1].second);
        push_ev(p1, w2);
        push_ev(p2, w1);
        if (p1 % 4 == 3 && p2 % 4 == 3) {
            // one primitive, the other semi-primitive (either orientation); the
            // printed "semi and semi" clause is vacuous by quadratic reciprocity
            bool ok = (is_primitive(p1, w2) && is_semi(p2, w1)) ||
                      (is_semi(p1, w2) && is_primitive(p2, w1));
            if (ok) {
                rep.verdict = true;
                rep.case_tag = "P3-3a";
            } else {
                rep.reason = "no orientation with one prime primitive and the other semi-primitive";
            }
        } else {
            if (is_primitive(p1, w2) && is_primitive(p2, w1)) {
                rep.verdict = true;
                rep.case_tag = "P3-3b";
            } else {
                rep.reason = "p1, p2 are not mutually primitive";
            }
        }
        return rep;
    }
    // clause 4: q = 4 p1^a1 p2^a2, (p1-1, p2-1) = 2
    if (a0 == 2 && odd.size() == 2) {
        long p1 = odd[0].first, w1 = ipow_long(p1, odd[0].second);
        long p2 = odd[1].first, w2 = ipow_long(p2, odd[1].second);
        if (gcd_long(p1 - 1, p2 - 1) != 2) {
            rep.reason = "(p1-1, p2-1) != 2";
            return rep;
        }
        push_ev(2, w1);
        push_ev(2, w2);
        if (p1 % 4 == 3 && p2 % 4 == 3) {
            bool ok = false;
            for (auto [x, wx, y, wy] : {std::tuple<long, long, long, long>{p1, w1, p2, w2},
                                        std::tuple<long, long, long, long>{p2, w2, p1, w1}}) {
                if (is_primitive(2, wx) && is_semi(2, wy) && is_primitive(x, 2 * wy) &&
                    is_semi(y, 2 * wx)) {
                    ok = true;
                    break;
                }
            }
            if (ok) {
                rep.verdict = true;
                rep.case_tag = "P3-4a";
            } else {
                rep.reason = "clause 4(a) pattern fails in both orientations";
            }
        } else {
            bool ok = false;
            for (auto [x, wx, y, wy] : {std::tuple<long, long, long, long>{p1, w1, p2, w2},
                                        std::tuple<long, long, long, long>{p2, w2, p1, w1}}) {
                if (x % 4 == 1 && y % 4 == 3 && is_primitive(2, wy) && is_primitive(x, wy) &&
                    is_primitive(y, wx)) {
                    ok = true;
                    break;
                }
            }
            if (ok) {
                rep.verdict = true;
                rep.case_tag = "P3-4b";
            } else {
                rep.reason = "clause 4(b) pattern fails";
            }
        }
        return rep;
    }
    // clause 5: q = p1^a1 p2^a2 p3^a3, all = 3 mod 4
    if (a0 == 0 && odd.size() == 3) {
        bool all3 = true;
        for (auto [pp, ee] : odd) all3 = all3 && pp % 4 == 3;
        if (!all3) {
            rep.reason = "not all primes are 3 mod 4";
            return rep;
        }
        long h[3];
        for (int i = 0; i < 3; ++i) h[i] = (odd[static_cast<size_t>(i)].first - 1) / 2;
        if (gcd_long(h[0], h[1]) != 1 || gcd_long(h[0], h[2]) != 1 || gcd_long(h[1], h[2]) != 1) {
            rep.reason = "(p_i - 1)/2 are not pairwise coprime";
            return rep;
        }
        int idx[3] = {0, 1, 2};
        std::sort(idx, idx + 3);
        bool ok = false;
        do {
            long x = odd[static_cast<size_t>(idx[0])].first, wx = ipow_long(x, odd[static_cast<size_t>(idx[0])].second);
            long y = odd[static_cast<size_t>(idx[1])].first, wy = ipow_long(y, odd[static_cast<size_t>(idx[1])].second);
            long z = odd[static_cast<size_t>(idx[2])].first, wz = ipow_long(z, odd[static_cast<size_t>(idx[2])].second);
            if (is_primitive(x, wy) && is_primitive(y, wz) && is_primitive(z, wx) &&
                is_semi(x, wz) && is_semi(y, wx) && is_semi(z, wy)) {
                ok = true;
                for (auto [g, m] : {std::pair<long, long>{x, wy}, {y, wz}, {z, wx}, {x, wz}, {y, wx}, {z, wy}})
                    push_ev(g, m);
                break;
            }
        } while (std::next_permutation(idx, idx + 3));
        if (ok) {
            rep.verdict = true;
            rep.case_tag = "P3-5";
        } else {
            rep.reason = "no labeling satisfies the primitive/semi-primitive cyclic pattern";
        }
        return rep;
    }
    rep.reason = "q matches none of the five clause families";
    return rep;
}

PropertyReport pei_feng_two_mod_four(long q) {
    if (q % 4 != 2) throw std::domain_error("pei_feng_two_mod_four: q != 2 mod 4");
    PropertyReport rep;
    rep.subject = std::to_string(q);
    long m = q / 2;
    auto fac = factorize(m);
    if (m == 1 || (fac.size() == 1 && fac[0].first == 2)) {
        rep.reason = "q/2 has no odd structure";
        return rep;
    }
    if (fac.size() == 1) {
        rep.verdict = true;
        rep.case_tag = "P5-1";  // q = 2 p^n
        rep.evidence.push_back(evidence_for(2, ipow_long(fac[0].first, fac[0].second)));
        return rep;
    }
    // q = 2m with m passing clause 3 or clause 5 of the composite criterion
    if ((fac.size() == 2 || fac.size() == 3) && m % 2 == 1) {
        PropertyReport sub = pei_feng_composite(m);
        rep.evidence = sub.evidence;
        if (sub.verdict && (sub.case_tag == "P3-3a" || sub.case_tag == "P3-3b" || sub.case_tag == "P3-5")) {
            rep.verdict = true;
            rep.case_tag = "P5-2";
            return rep;
        }
        rep.reason = "q/2 fails clauses III/V of the composite criterion: " + sub.reason;
        return rep;
    }
    rep.reason = "q/2 is neither p^n nor a clause-III/V composite";
    return rep;
}

// ---------------------------------------------------------------------------
// oracles
// ---------------------------------------------------------------------------

json IndependenceReport::to_json() const {
    json j;
    j["numbers"] = numbers;
    j["method"] = method;
    j["verdict"] = verdict;
    if (witness) {
        json w;
        w["exponents"] = witness->exponents;
        w["root_of_unity_order"] = witness->root_of_unity_order;
        j["witness"] = w;
    }
    if (bound > 0) j["bound"] = bound;
    if (digits > 0) j["digits"] = digits;
    if (!tolerance_note.empty()) j["tolerance"] = tolerance_note;
    return j;
}

static std::vector<std::string> default_labels(const std::vector<CycloNum>& nums,
                                               std::vector<std::string> labels) {
    if (labels.size() == nums.size()) return labels;
    labels.clear();
    for (const auto& x : nums) labels.push_back(x.str());
    return labels;
}

// exact check that prod nums[i]^{e_i} is a root of unity
static std::optional<long> exact_torsion_check(const std::vector<CycloNum>& nums,
                                               const std::vector<long>& e) {
    long M = 1;
    for (const auto& x : nums) M = lcm_long(M, x.modulus());
    CycloNum num = CycloNum::one(M), den = CycloNum::one(M);
    for (size_t i = 0; i < nums.size(); ++i) {
        if (e[i] > 0)
            num = num * nums[i].coerce(M).pow(e[i]);
        else if (e[i] < 0)
            den = den * nums[i].coerce(M).pow(-e[i]);
    }
    CycloNum prod = num / den;
    auto ru = prod.is_root_of_unity();
    if (ru.is_root) return ru.order;
    return std::nullopt;
}

static std::vector<CycloNum> coerce_to_common(const std::vector<CycloNum>& nums) {
    long L = 1;
    for (const auto& x : nums) L = lcm_long(L, x.modulus());
    std::vector<CycloNum> out;
    out.reserve(nums.size());
    for (const auto& x : nums) out.push_back(x.coerce(L));
    return out;
}

IndependenceReport oracle_bounded(const std::vector<CycloNum>& nums_in, long B,
                                  std::vector<std::string> labels) {
    if (B < 1) throw std::domain_error("oracle_bounded: B must be >= 1");
    if (nums_in.empty()) throw std::domain_error("oracle_bounded: empty list");
    std::vector<CycloNum> nums = coerce_to_common(nums_in);
    IndependenceReport rep;
    rep.method = "bounded-search";
    rep.bound = B;
    rep.numbers = default_labels(nums_in, std::move(labels));
    double combos = std::pow(2.0 * B + 1, static_cast<double>(nums.size()));
    if (combos > 1e6)
        throw std::domain_error("oracle_bounded: (2B+1)^n exceeds the 10^6 combinatorial cap");

    // float prefilter rows: log|sigma_j| for each embedding of the common field
    long n = static_cast<long>(nums.size());
    std::vector<std::vector<double>> logs(static_cast<size_t>(n));
    size_t rows = 0;
    for (long i = 0; i < n; ++i) {
        auto em = nums[static_cast<size_t>(i)].complex_embeddings(20);
        for (const auto& ev : em) logs[static_cast<size_t>(i)].push_back(std::log(ev.value.abs().to_double()));
        if (i == 0) rows = em.size();
    }

    std::vector<long> e(static_cast<size_t>(n), -B);
    auto advance = [&]() -> bool {
        for (long i = n - 1; i >= 0; --i) {
            if (e[static_cast<size_t>(i)] < B) {
                ++e[static_cast<size_t>(i)];
                for (long j = i + 1; j < n; ++j) e[static_cast<size_t>(j)] = -B;
                return true;
            }
        }
        return false;
    };
    // lexicographic order starting at (-B, ..., -B)
    bool more = true;
    while (more) {
        bool zero = std::all_of(e.begin(), e.end(), [](long x) { return x == 0; });
        if (!zero) {
            double worst = 0;
            for (size_t j = 0; j < rows; ++j) {
                double s = 0;
                for (long i = 0; i < n; ++i) s += static_cast<double>(e[static_cast<size_t>(i)]) * logs[static_cast<size_t>(i)][j];
                worst = std::max(worst, std::fabs(s));
            }
            if (worst < 1e-6) {
                auto ord = exact_torsion_check(nums, e);
                if (ord) {
                    rep.verdict = "dependent-with-witness";
                    rep.witness = IndependenceWitness{e, *ord};
                    return rep;
                }
            }
        }
        more = advance();
    }
    rep.verdict = "independent-up-to-bound";
    return rep;
}

// one-sided Jacobi SVD on an mpfr matrix (rows >= cols after augmentation)
static void jacobi_svd(std::vector<std::vector<Real>>& A, std::vector<Real>& sv,
                       std::vector<std::vector<Real>>& V, mpfr_prec_t prec) {
    size_t rows = A.size(), cols = A[0].size();
    V.assign(cols, std::vector<Real>(cols, Real(prec)));
    for (size_t i = 0; i < cols; ++i) V[i][i] = Real::from_long(1, prec);
    Real eps = Real::pow2(-static_cast<long>(prec) + 24, prec);
    for (int sweep = 0; sweep < 60; ++sweep) {
        bool changed = false;
        for (size_t pcol = 0; pcol + 1 < cols; ++pcol)
            for (size_t qcol = pcol + 1; qcol < cols; ++qcol) {
                Real app(prec), aqq(prec), apq(prec);
                for (size_t r = 0; r < rows; ++r) {
                    app = app + A[r][pcol] * A[r][pcol];
                    aqq = aqq + A[r][qcol] * A[r][qcol];
                    apq = apq + A[r][pcol] * A[r][qcol];
                }
                if (apq.abs() <= eps * (app * aqq).sqrt() || apq.is_zero()) continue;
                changed = true;
                // rotation zeroing the off-diagonal of the 2x2 Gram block
                Real tau = (aqq - app) / (apq + apq);
                Real t(prec);
                {
                    Real att = tau.abs() + (Real::from_long(1, prec) + tau * tau).sqrt();
                    t = Real::from_long(1, prec) / att;
                    if (tau.sign() < 0) t = -t;
                }
                Real c = Real::from_long(1, prec) / (Real::from_long(1, prec) + t * t).sqrt();
                Real s = c * t;
                for (size_t r = 0; r < rows; ++r) {
                    Real x = A[r][pcol], y = A[r][qcol];
                    A[r][pcol] = c * x - s * y;
                    A[r][qcol] = s * x + c * y;
                }
                for (size_t r = 0; r < cols; ++r) {
                    Real x = V[r][pcol], y = V[r][qcol];
                    V[r][pcol] = c * x - s * y;
                    V[r][qcol] = s * x + c * y;
                }
            }
        if (!changed) break;
    }
    sv.assign(cols, Real(prec));
    for (size_t ccol = 0; ccol < cols; ++ccol) {
        Real nrm(prec);
        for (size_t r = 0; r < rows; ++r) nrm = nrm + A[r][ccol] * A[r][ccol];
        sv[ccol] = nrm.sqrt();
    }
}

IndependenceReport oracle_rank(const std::vector<CycloNum>& nums_in, long digits,
                               std::vector<std::string> labels) {
    IndependenceReport rep;
    rep.method = "rank";
    rep.digits = digits;
    rep.numbers = default_labels(nums_in, std::move(labels));
    for (const auto& x : nums_in)
        if (x.is_zero()) throw std::domain_error("oracle_rank: zero input");
    long n = static_cast<long>(nums_in.size());
    if (n == 0) {
        rep.verdict = "independent";
        rep.tolerance_note = "empty system (vacuous)";
        return rep;
    }
    std::vector<CycloNum> nums = coerce_to_common(nums_in);
    mpfr_prec_t prec = static_cast<mpfr_prec_t>(digits * 3.4) + 128;

    // archimedean rows
    std::vector<std::vector<Real>> A;
    Real entry_err = Real::pow2(-1000, prec);
    size_t rows = 0;
    std::vector<std::vector<Real>> cols(static_cast<size_t>(n));
    for (long i = 0; i < n; ++i) {
        auto em = nums[static_cast<size_t>(i)].complex_embeddings(digits);
        if (i == 0) rows = em.size();
        for (const auto& ev : em) {
            Real mag = ev.value.abs();
            cols[static_cast<size_t>(i)].push_back(mag.log());
            // |d log| <= err / (|x| - err)
            Real den = mag - ev.abs_error;
            if (!(den.sign() > 0)) throw std::runtime_error("oracle_rank: embedding too close to zero");
            Real e = ev.abs_error / den;
            if (entry_err < e) entry_err = e;
        }
    }
    A.assign(rows, std::vector<Real>(static_cast<size_t>(n), Real(prec)));
    for (long i = 0; i < n; ++i)
        for (size_t r = 0; r < rows; ++r) A[r][static_cast<size_t>(i)] = cols[static_cast<size_t>(i)][r];
    // finite rows: v_s(Norm(alpha_i)) * log(s) / phi for each prime s dividing a norm
    std::vector<mpq_class> norms;
    norms.reserve(static_cast<size_t>(n));
    for (const auto& x : nums) norms.push_back(x.norm_to_q());
    std::vector<long> primes;
    for (const auto& q : norms) {
        mpz_class t = q.get_num() * q.get_den();
        if (t < 0) t = -t;
        for (auto& [pr, ee] : factorize_mpz(t))
            if (std::find(primes.begin(), primes.end(), mpz_get_si(pr.get_mpz_t())) == primes.end())
                primes.push_back(mpz_get_si(pr.get_mpz_t()));
    }
    std::sort(primes.begin(), primes.end());
    for (long s : primes) {
        std::vector<Real> row;
        Real logs = Real::from_long(s, prec).log() / Real::from_long(static_cast<long>(rows), prec);
        for (long i = 0; i < n; ++i) {
            mpz_class num = norms[static_cast<size_t>(i)].get_num();
            mpz_class den = norms[static_cast<size_t>(i)].get_den();
            long v = (num == 0 ? 0 : vp_of_mpz(num, s)) - (den == 1 ? 0 : vp_of_mpz(den, s));
            row.push_back(logs.mul_long(v));
        }
        A.push_back(std::move(row));
    }

    size_t dim = A.size();
    std::vector<Real> sv;
    std::vector<std::vector<Real>> V;
    jacobi_svd(A, sv, V, prec);

    Real zero_tol = entry_err.mul_long(static_cast<long>(dim) * 8);
    Real gray = zero_tol * Real::pow2(24, prec);
    rep.tolerance_note = "zero<" + zero_tol.str(3) + " gray<" + gray.str(3);

    long weak = -1;
    Real weakest(prec);
    bool first = true;
    for (long i = 0; i < n; ++i) {
        if (first || sv[static_cast<size_t>(i)] < weakest) {
            weakest = sv[static_cast<size_t>(i)];
            weak = i;
            first = false;
        }
    }
    if (weakest >= gray) {
        rep.verdict = "independent";
        return rep;
    }
    if (!(weakest < zero_tol)) {
        rep.verdict = "undecided";
        return rep;
    }
    // numerically null direction: rationalize and confirm exactly
    std::vector<double> v(static_cast<size_t>(n));
    double vmax = 0;
    for (long i = 0; i < n; ++i) {
        v[static_cast<size_t>(i)] = V[static_cast<size_t>(i)][static_cast<size_t>(weak)].to_double();
        vmax = std::max(vmax, std::fabs(v[static_cast<size_t>(i)]));
    }
    if (vmax == 0) {
        rep.verdict = "undecided";
        return rep;
    }
    for (auto& x : v) x /= vmax;
    for (long den = 1; den <= 1024; ++den) {
        std::vector<long> e(static_cast<size_t>(n));
        bool ok = true;
        for (long i = 0; i < n; ++i) {
            double w = v[static_cast<size_t>(i)] * static_cast<double>(den);
            double r = std::round(w);
            if (std::fabs(w - r) > 1e-6 * den) { ok = false; break; }
            e[static_cast<size_t>(i)] = static_cast<long>(r);
        }
        if (!ok) continue;
        long g = 0;
        for (long x : e) g = gcd_long(g, x);
        if (g == 0) continue;
        for (auto& x : e) x /= g;
        auto ord = exact_torsion_check(nums, e);
        if (ord) {
            rep.verdict = "dependent-with-witness";
            rep.witness = IndependenceWitness{e, *ord};
            return rep;
        }
    }
    rep.verdict = "undecided";
    rep.tolerance_note += "; kernel direction did not rationalize/confirm";
    return rep;
}

// ---------------------------------------------------------------------------
// the two-prime unit-list instance
// ---------------------------------------------------------------------------

std::vector<CycloNum> cyclotomic_unit_system(long q, std::vector<std::string>* labels) {
    std::vector<CycloNum> out;
    for (long h = 2; 2 * h < q; ++h) {
        if (gcd_long(h, q) != 1) continue;
        out.push_back(CycloNum::unit_ratio(q, h));
        if (labels) labels->push_back("(1-z" + std::to_string(q) + "^" + std::to_string(h) + ")/(1-z" + std::to_string(q) + ")");
    }
    return out;
}

IndependenceReport verify_p4_instance(const std::vector<long>& M, long B, long digits,
                                      bool adversarial_duplicate) {
    PropertyReport pii = check_property_ii(M);
    if (!pii.verdict)
        throw std::domain_error("verify_p4_instance: Property II fails for the given set: " + pii.reason);
    long L = 1;
    for (long m : M) L = lcm_long(L, m);
    std::vector<CycloNum> nums;
    std::vector<std::string> labels;
    auto add = [&](const CycloNum& x, std::string lab) {
        nums.push_back(x.coerce(L));
        labels.push_back(std::move(lab));
    };
    for (long m : M) {
        auto fac = factorize(m);
        if (fac.size() != 2 || fac[0].second != 1 || fac[1].second != 1)
            throw std::domain_error("verify_p4_instance: each m_i must be a product of two distinct primes");
        long p = fac[0].first, q = fac[1].first;
        add(CycloNum::one_minus_zeta_pow(p, 1), "1-z" + std::to_string(p));
        add(CycloNum::one_minus_zeta_pow(q, 1), "1-z" + std::to_string(q));
        for (long a = 2; 2 * a < m; ++a)
            if (gcd_long(a, m) == 1)
                add(CycloNum::unit_ratio(m, a),
                    "(1-z" + std::to_string(m) + "^" + std::to_string(a) + ")/(1-z" + std::to_string(m) + ")");
        for (long b = 2; 2 * b < p; ++b)
            add(CycloNum::unit_ratio(p, b),
                "(1-z" + std::to_string(p) + "^" + std::to_string(b) + ")/(1-z" + std::to_string(p) + ")");
        for (long c = 2; 2 * c < q; ++c)
            add(CycloNum::unit_ratio(q, c),
                "(1-z" + std::to_string(q) + "^" + std::to_string(c) + ")/(1-z" + std::to_string(q) + ")");
    }
    if (adversarial_duplicate) {
        // duplicate the first unit-ratio entry (index 2 when present, else 0)
        size_t idx = nums.size() > 2 ? 2 : 0;
        nums.push_back(nums[idx]);
        labels.push_back(labels[idx] + " (dup)");
    }
    IndependenceReport rank = oracle_rank(nums, digits, labels);
    if (rank.dependent()) return rank;
    IndependenceReport bounded = oracle_bounded(nums, B, labels);
    if (bounded.dependent()) return bounded;
    if (rank.verdict == "independent") return rank;
    return bounded;
}

}  // namespace padlab
