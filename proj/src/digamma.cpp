#include "padlab/digamma.hpp"

#include <cmath>
#include <cstdlib>
#include <functional>
#include <map>
#include <mutex>
#include <tuple>

#include "padlab/parallel.hpp"

namespace padlab {

namespace {

constexpr long kGuard = 8;
constexpr long kCapInc = 8;  // stabilization cap: k <= k0 + kCapInc

long vp_long(long n, long p) {
    long v = 0;
    while (n % p == 0 && n != 0) { n /= p; ++v; }
    return v;
}

LimitResult stabilize(long p, long N, const char* what,
                      const std::function<PadicApprox(long)>& value_at) {
    (void)p;
    long k0 = std::max<long>(N, 1);
    LimitResult R;
    PadicApprox prev = value_at(k0);
    R.snapshots.push_back({k0, prev});
    for (long k = k0 + 1; k <= k0 + kCapInc; ++k) {
        PadicApprox cur = value_at(k);
        R.snapshots.push_back({k, cur});
        if ((cur - prev).certified_valuation() >= Valuation::of(N)) {
            R.value = cur;
            R.k_used = k;
            return R;
        }
        prev = cur;
    }
    throw std::runtime_error(std::string(what) + ": stabilization cap exceeded (k0+" +
                             std::to_string(kCapInc) + ")");
}

}  // namespace

PadicApprox log_integer_unit_part(long n, long p, long N) {
    if (n == 0) throw std::domain_error("log_integer_unit_part: zero");
    long u = n < 0 ? -n : n;
    while (u % p == 0) u /= p;
    if (u == 1) return PadicApprox::exact_zero(p);
    return iwasawa_log(PadicApprox::from_integer(u, p, N));
}

// ---------------------------------------------------------------------------
// Morita gamma
// ---------------------------------------------------------------------------

PadicApprox morita_gamma_nat(long p, long n, long N, GammaConvention conv) {
    if (n < 1) throw std::domain_error("morita_gamma_nat: n must be >= 1");
    mpz_class pN = ppow(p, N);
    long hi = conv == GammaConvention::Paper ? n : n - 1;
    mpz_class prod = par::chunked_product_mod(
        1, hi + 1, [p](long t) { return t % p ? mpz_class(t) : mpz_class(1); }, pN);
    if (n % 2 == 1) prod = mod_reduce(-prod, pN);
    return PadicApprox::from_integer(prod, p, N);
}

LimitResult morita_gamma_zp(long p, const PadicApprox& x, long N, GammaConvention conv) {
    if (x.prime() != p) throw std::domain_error("morita_gamma_zp: prime mismatch");
    if (x.distinguishable_from_zero() && x.val() < 0)
        throw std::domain_error("morita_gamma_zp: x must lie in Z_p");
    auto rep = [&](long j) -> long {
        // representative of x mod p^j in [1, p^j]
        mpz_class pj = ppow(p, j);
        mpz_class res = 0;
        if (x.distinguishable_from_zero() && x.val() < j) {
            long digits = std::min<long>(x.rel_precision(), j - x.val());
            res = mod_reduce(ppow(p, x.val()) * x.unit_residue(digits), pj);
        }
        if (res == 0) res = pj;
        return mpz_get_si(res.get_mpz_t());
    };
    return stabilize(p, N, "morita_gamma_zp", [&](long j) {
        if (x.distinguishable_from_zero() || x.is_zero_at_precision()) {
            long avail = x.is_exact_zero() ? j : x.abs_precision();
            if (j > avail)
                throw std::runtime_error("morita_gamma_zp: input precision exhausted before stabilization");
        }
        return morita_gamma_nat(p, rep(j), N, conv);
    });
}

// ---------------------------------------------------------------------------
// Diamond limits
// ---------------------------------------------------------------------------

LimitResult psi_p(long p, long r, long f, long N) {
    if (f < 2 || r < 1 || r >= f) throw std::domain_error("psi_p: need 1 <= r < f");
    if (f % p != 0 || r % p == 0)
        throw std::domain_error(
            "psi_p: nu_p(r/f) >= 0; use h_prime_mu with the Eq2 scaling for this argument");
    return stabilize(p, N, "psi_p", [&](long k) {
        long W = N + k + kGuard;
        mpz_class pW = ppow(p, W);
        long pk = ipow_long(p, k);
        if (pk > (1L << 62) / f) throw std::runtime_error("psi_p: range overflow");
        mpz_class prod = par::chunked_product_mod(
            0, pk, [&](long n) { return mpz_class(r + n * f); }, pW);
        PadicApprox L = iwasawa_log(PadicApprox::from_integer(prod, p, W));
        return L.shift(-k) - log_integer_unit_part(f, p, W);
    });
}

LimitResult euler_gamma_p_limit(long p, long N) {
    return stabilize(p, N, "euler_gamma_p", [&](long k) {
        long W = N + k + kGuard;
        mpz_class pW = ppow(p, W);
        long pk = ipow_long(p, k);
        mpz_class prod = par::chunked_product_mod(
            1, pk, [p](long m) { return m % p ? mpz_class(m) : mpz_class(1); }, pW);
        PadicApprox L = iwasawa_log(PadicApprox::from_integer(prod, p, W));
        return L.shift(-k) * PadicApprox::from_rational(-p, p - 1, p, W);
    });
}

PadicApprox euler_gamma_p(long p, long N) {
    static std::map<std::pair<long, long>, PadicApprox> memo;
    static std::mutex mu;
    {
        std::lock_guard<std::mutex> lk(mu);
        auto it = memo.find({p, N});
        if (it != memo.end()) return it->second;
    }
    PadicApprox v = euler_gamma_p_limit(p, N).value;
    std::lock_guard<std::mutex> lk(mu);
    return memo.emplace(std::make_pair(p, N), std::move(v)).first->second;
}

std::vector<long> nrq_set(long p, long r, long q) {
    if (q < 1 || r < 0 || r >= q) throw std::domain_error("nrq_set: need 0 <= r < q >= 1");
    long kq = vp_long(q, p);
    long q1 = q / ipow_long(p, kq);
    long phi = euler_phi(q1);
    if (phi * std::log2(static_cast<double>(p)) > 26)
        throw std::runtime_error("nrq_set: p^phi(q1) out of desk range");
    long pphi = ipow_long(p, phi);
    long mod = pphi * ipow_long(p, kq);
    std::vector<long> out;
    for (long n = 0; n < pphi; ++n)
        if (((n % mod) * (q % mod) + r) % mod != 0) out.push_back(n);
    return out;
}

LimitResult gamma_p_rq(long p, long r, long q, long N) {
    if (q < 1 || r < 0 || r >= q) throw std::domain_error("gamma_p_rq: need 0 <= r < q >= 1");
    long vq = vp_long(q, p);
    bool limit_branch = r != 0 && vp_long(r, p) < vq;
    if (limit_branch) {
        long q1 = q / ipow_long(p, vq);
        long vr = vp_long(r, p);
        return stabilize(p, N, "gamma_p_rq(limit)", [&](long k) {
            long W = N + k + vq + kGuard;
            mpz_class pW = ppow(p, W);
            long pk = ipow_long(p, k);
            if (pk > (1L << 62) / q) throw std::runtime_error("gamma_p_rq: range overflow");
            long strip = ipow_long(p, vr);
            mpz_class prod = par::chunked_product_mod(
                0, pk, [&](long j) { return mpz_class((r + j * q) / strip); }, pW);
            PadicApprox L = iwasawa_log(PadicApprox::from_integer(prod, p, W));
            return L.shift(-(k + vq)) * PadicApprox::from_rational(-1, q1, p, W);
        });
    }
    // recursion branch: gamma_p(r,q) = (p^phi/(p^phi-1)) sum_{n in N(r,q)} gamma_p(r+nq, p^phi q);
    // every recursive call is a limit, so the sum collapses to one batched product over
    // m = r mod q, m < Q p^k, with the classes p^{phi+kq} | m excluded.
    long q1 = q / ipow_long(p, vq);
    long phi = euler_phi(q1);
    if (phi * std::log2(static_cast<double>(p)) > 26)
        throw std::runtime_error("gamma_p_rq: recursion branch needs p^phi(q1) summation, out of desk range");
    long pphi = ipow_long(p, phi);
    long excl = pphi * ipow_long(p, vq);  // p^{phi + k}
    long Q = pphi * q;
    return stabilize(p, N, "gamma_p_rq(recursion)", [&](long k) {
        long W = N + k + phi + vq + kGuard;
        mpz_class pW = ppow(p, W);
        long pk = ipow_long(p, k);
        if (pk > (1L << 58) / Q) throw std::runtime_error("gamma_p_rq: range overflow");
        long terms = pphi * pk;  // m = r + j q, j < p^phi p^k
        mpz_class prod = par::chunked_block_product_mod(
            0, terms,
            [&](long lo, long hi, const mpz_class& m) {
                mpz_class acc = 1;
                for (long j = lo; j < hi; ++j) {
                    long mm = r + j * q;
                    if (mm == 0 || mm % excl == 0) continue;
                    long v = vp_long(mm, p);
                    acc = mod_reduce(acc * (mm / ipow_long(p, v)), m);
                }
                return acc;
            },
            pW);
        PadicApprox L = iwasawa_log(PadicApprox::from_integer(prod, p, W));
        PadicApprox A = L.shift(-(k + phi + vq)) * PadicApprox::from_rational(-1, q1, p, W);
        return A * PadicApprox::from_rational(mpq_class(ppow(p, phi), ppow(p, phi) - 1), p, W);
    });
}

// unit-restricted Volkenborn average at z = a/b in Z_p (p !| b):
// lim_k (1/p^k) sum_{m < p^k, p !| (z+m)} log_p(z + m), stabilized to absolute
// precision >= target.  The restricted product of the z+m over a full period
// is = -1 mod p^k (the shifted residues sweep the units), so the value lies
// in Z_p and the averages gain about one digit per level.
static LimitResult phi_unit_avg(long p, const mpq_class& z, long target) {
    static std::map<std::tuple<long, std::string, long>, LimitResult> memo;
    static std::mutex mu;
    std::string zkey = z.get_str();
    {
        std::lock_guard<std::mutex> lk(mu);
        auto it = memo.find({p, zkey, target});
        if (it != memo.end()) return it->second;
    }
    mpz_class az = z.get_num(), bz = z.get_den();
    if (bz % p == 0) throw std::domain_error("phi_unit_avg: z not in Z_p");
    long a = mpz_get_si(az.get_mpz_t()), b = mpz_get_si(bz.get_mpz_t());
    LimitResult R = stabilize(p, target, "phi_unit_avg", [&](long k) {
        long W = target + k + kGuard;
        mpz_class pW = ppow(p, W);
        long pk = ipow_long(p, k);
        if (pk > (1L << 60) / (b + std::labs(a))) throw std::runtime_error("phi_unit_avg: range overflow");
        mpz_class prod = par::chunked_block_product_mod(
            0, pk,
            [&](long lo, long hi, const mpz_class& m) {
                mpz_class acc = 1;
                for (long n = lo; n < hi; ++n) {
                    long num = a + n * b;  // z + n = num / b
                    if (num % p == 0) continue;
                    acc = mod_reduce(acc * num, m);
                }
                return acc;
            },
            pW);
        PadicApprox L = iwasawa_log(PadicApprox::from_integer(prod, p, W));
        long cnt = pk - pk / p;  // units among the shifted residues
        return (L - PadicApprox::from_integer(cnt, p, W) * log_integer_unit_part(b, p, W)).shift(-k);
    });
    std::lock_guard<std::mutex> lk(mu);
    return memo.emplace(std::make_tuple(p, zkey, target), std::move(R)).first->second;
}

LimitResult h_prime_mu(long p, long r, long f, long mu, long N) {
    if (f < 1 || r < 0) throw std::domain_error("h_prime_mu: bad (r, f)");
    long kf = vp_long(f, p);
    long fstar = f / ipow_long(p, kf);
    if (r != 0 && vp_long(r, p) < kf)
        throw std::domain_error("h_prime_mu: nu_p(r/f) < 0; use psi_p (route Eq1) for this argument");
    if (mu < 1) throw std::domain_error("h_prime_mu: mu must be >= 1");
    if (fstar > 1 && powmod(mpz_class(p), mpz_class(mu), mpz_class(fstar)) != 1)
        throw std::domain_error("h_prime_mu: mu violates p^mu = 1 mod f*");
    // The indicator [v_p(x+n) < mu] slices the average by the valuation shell:
    // the shell v = j is p^{-j} times the unit-restricted average at the orbit
    // point z_j, where z_0 = r/f and z_{j+1} = (z_j + n0)/p with z_j + n0 = 0
    // mod p.  Since the Eq2 consumer multiplies by p^mu/(p^mu - 1), shell j
    // only needs absolute precision (N - mu) + j; shells below the window are
    // 0 mod p^{N-mu} outright (the averages are p-integral).
    long window = N - mu;
    PadicApprox acc = PadicApprox::exact_zero(p);
    mpq_class z(r, f);
    z.canonicalize();
    LimitResult deepest;
    deepest.k_used = 0;
    for (long j = 0; j < mu; ++j) {
        long target = window + j + 2;
        if (target >= 1) {
            LimitResult phi = phi_unit_avg(p, z, target);
            acc = acc + phi.value.shift(-j);
            if (phi.k_used >= deepest.k_used) {
                deepest.k_used = phi.k_used;
                deepest.snapshots = phi.snapshots;
            }
        } else {
            acc = acc + PadicApprox::zero_at_precision(p, -j);
        }
        // advance the orbit: n0 in [0, p) with z + n0 = 0 mod p
        mpz_class num = z.get_num(), den = z.get_den();
        mpz_class pz = p;
        mpz_class n0 = mod_reduce(-num * inv_mod(mod_reduce(den, pz), pz), pz);
        z = mpq_class(num + n0 * den, den * p);
        z.canonicalize();
    }
    deepest.value = acc;
    return deepest;
}

// ---------------------------------------------------------------------------
// Gauss analogue and Diamond's theorem
// ---------------------------------------------------------------------------

static long field_digits_for(long p, long f, long N) {
    long k = vp_long(f, p);
    return N + (k > 0 ? k - 1 : 0) + 14;
}

PadicApprox gauss_rhs(long p, long r, long f, long N) {
    if (f < 2 || r < 1 || r >= f) throw std::domain_error("gauss_rhs: need 1 <= r < f");
    long Wf = field_digits_for(p, f, N);
    FieldPtr F = build_field(p, f, Wf);
    LocalElement S = F->zero();
    for (long a = 1; a < f; ++a) {
        long ex = ((-a * r) % f + f) % f;
        S = S + F->zeta_power(ex) * log_one_minus_zeta(F, a);
    }
    PadicApprox Sq = S.project_to_qp(Valuation::of(N - 2));
    PadicApprox gamma = euler_gamma_p(p, N + 2);
    PadicApprox logf = log_integer_unit_part(f, p, Wf);
    return Sq - gamma - logf;
}

DigammaValue digamma_value(long p, long r, long f, long N) {
    long kf = vp_long(f, p);
    bool nu_negative = kf > 0 && (r != 0 && vp_long(r, p) < kf);
    DigammaValue out;
    if (nu_negative) {
        if (r % p != 0) {
            LimitResult R = psi_p(p, r, f, N);
            out.value = R.value;
            out.k_used = R.k_used;
            out.route = "Eq1";
            return out;
        }
        throw std::domain_error("digamma_value: nu_p(r/f) < 0 with p | r is outside the theorem sets");
    }
    long fstar = f / ipow_long(p, kf);
    long mu = fstar == 1 ? 1 : mult_order_mod(p, fstar);
    LimitResult R = h_prime_mu(p, r, f, mu, N);
    mpz_class pmu = ppow(p, mu);
    out.value = R.value * PadicApprox::from_rational(mpq_class(pmu, pmu - 1), p, N + R.k_used + kGuard);
    out.k_used = R.k_used;
    out.mu = mu;
    out.route = "Eq2 mu=" + std::to_string(mu);
    return out;
}

VerificationReport verify_gauss(long p, long r, long f, long N) {
    VerificationReport rep;
    rep.check = "gauss";
    rep.p = p;
    rep.r = r;
    rep.f = f;
    rep.N = N;
    DigammaValue lhs = digamma_value(p, r, f, N);
    rep.route = lhs.route;
    rep.k_used = lhs.k_used;
    PadicApprox rhs = gauss_rhs(p, r, f, N);
    rep.achieved = (lhs.value - rhs).certified_valuation();
    rep.pass = rep.achieved >= Valuation::of(N - 2);
    return rep;
}

VerificationReport verify_diamond(long p, long r, long q, long N) {
    if (q <= 1 || r < 0 || r >= q) throw std::domain_error("verify_diamond: need q > 1, 0 <= r < q");
    VerificationReport rep;
    rep.check = "diamond";
    rep.p = p;
    rep.r = r;
    rep.f = q;
    rep.N = N;
    LimitResult G = gamma_p_rq(p, r, q, N);
    long vq = vp_long(q, p);
    bool limit_branch = r != 0 && vp_long(r, p) < vq;
    rep.route = limit_branch ? "limit" : "recursion";
    rep.k_used = G.k_used;
    PadicApprox lhs = G.value * PadicApprox::from_integer(q, p, N + G.k_used + kGuard);
    long Wf = field_digits_for(p, q, N);
    FieldPtr F = build_field(p, q, Wf);
    LocalElement S = F->zero();
    for (long a = 1; a < q; ++a) {
        long ex = ((-a * r) % q + q) % q;
        S = S + F->zeta_power(ex) * log_one_minus_zeta(F, a);
    }
    PadicApprox rhs = euler_gamma_p(p, N + 2) - S.project_to_qp(Valuation::of(N - 2));
    rep.achieved = (lhs - rhs).certified_valuation();
    rep.pass = rep.achieved >= Valuation::of(N - 2);
    return rep;
}

VerificationReport verify_logsym(long p, long f, long N) {
    VerificationReport rep;
    rep.check = "logsym";
    rep.p = p;
    rep.f = f;
    rep.N = N;
    long Wf = field_digits_for(p, f, N);
    FieldPtr F = build_field(p, f, Wf);
    Valuation worst = Valuation::infinite();
    for (long t = 1; t < f; ++t) {
        LocalElement diff = log_one_minus_zeta(F, f - t) - log_one_minus_zeta(F, t);
        Valuation v = diff.local_valuation();
        if (!v.is_finite()) v = Valuation::of(diff.abs_precision());
        worst = min(worst, v);
    }
    rep.achieved = worst;
    rep.pass = worst >= Valuation::of(N);
    rep.route = "pairing";
    return rep;
}

}  // namespace padlab
