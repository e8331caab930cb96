#include <doctest.h>

#include <random>

#include "padlab/iwasawa.hpp"
#include "padlab/local_field.hpp"

using namespace padlab;

namespace {

// test-only norm oracle: determinant of the multiplication matrix over Q_p,
// eliminated with full p-adic pivoting; nu(alpha) should be v_p(det)/dim
Valuation norm_valuation_oracle(const LocalElement& alpha) {
    const FieldPtr& F = alpha.field();
    long n = F->dim();
    std::vector<std::vector<PadicApprox>> A(static_cast<size_t>(n));
    for (long j = 0; j < F->e(); ++j)
        for (long i = 0; i < F->d(); ++i) {
            std::vector<mpz_class> c(static_cast<size_t>(n), mpz_class(0));
            c[static_cast<size_t>(i + F->d() * j)] = 1;
            LocalElement col = alpha * make_element(F, std::move(c), 0, F->working_digits());
            std::vector<PadicApprox> colv;
            for (long jj = 0; jj < F->e(); ++jj)
                for (long ii = 0; ii < F->d(); ++ii)
                    colv.push_back(PadicApprox::from_integer(col.coord(ii, jj), F->p(),
                                                             col.abs_precision() + col.shift())
                                       .shift(-col.shift()));
            A[static_cast<size_t>(i + F->d() * j)] = std::move(colv);  // A[col][row]
        }
    Valuation det = Valuation::of(0);
    std::vector<bool> used_col(static_cast<size_t>(n), false), used_row(static_cast<size_t>(n), false);
    for (long step = 0; step < n; ++step) {
        long pc = -1, pr = -1;
        Valuation best = Valuation::infinite();
        for (long cix = 0; cix < n; ++cix) {
            if (used_col[static_cast<size_t>(cix)]) continue;
            for (long rix = 0; rix < n; ++rix) {
                if (used_row[static_cast<size_t>(rix)]) continue;
                Valuation v = A[static_cast<size_t>(cix)][static_cast<size_t>(rix)].valuation();
                if (v < best) { best = v; pc = cix; pr = rix; }
            }
        }
        if (pc < 0) return Valuation::infinite();
        used_col[static_cast<size_t>(pc)] = true;
        used_row[static_cast<size_t>(pr)] = true;
        det = det + best;
        const PadicApprox piv = A[static_cast<size_t>(pc)][static_cast<size_t>(pr)];
        for (long cix = 0; cix < n; ++cix) {
            if (used_col[static_cast<size_t>(cix)] || cix == pc) continue;
            PadicApprox ratio = A[static_cast<size_t>(cix)][static_cast<size_t>(pr)] / piv;
            for (long rix = 0; rix < n; ++rix) {
                if (used_row[static_cast<size_t>(rix)]) continue;
                A[static_cast<size_t>(cix)][static_cast<size_t>(rix)] =
                    A[static_cast<size_t>(cix)][static_cast<size_t>(rix)] -
                    ratio * A[static_cast<size_t>(pc)][static_cast<size_t>(rix)];
            }
        }
    }
    return Valuation::of(det.num, det.den * n);
}

}  // namespace

TEST_CASE("build_field splits and degrees") {
    auto F1 = build_field(7, 5, 20);
    CHECK(F1->d() == 4);
    CHECK(F1->e() == 1);
    CHECK(mult_order_mod(7, 5) == 4);

    auto F2 = build_field(3, 9, 20);
    CHECK(F2->d() == 1);
    CHECK(F2->e() == 6);

    auto F3 = build_field(3, 15, 20);
    CHECK(F3->d() == 4);
    CHECK(F3->e() == 2);

    auto F4 = build_field(7, 6, 20);  // d < phi(f*): canonical factor path
    CHECK(F4->d() == 1);
    CHECK(F4->e() == 1);
    // zeta_6 in Q_7: the canonical root lifts 3^{(7-1)/6} = 3 mod 7
    CHECK(mod_reduce(-F4->defining_g()[0], mpz_class(7)) == 3);

    auto F5 = build_field(7, 12, 20);  // d = 2 < phi(12) = 4
    CHECK(F5->d() == 2);
    CHECK(F5->e() == 1);
}

TEST_CASE("embed_zeta and defining relations") {
    auto F = build_field(3, 5, 24);
    auto one = F->zeta_power(0);
    CHECK(one.same_bits(F->one()));
    // g(x-image) = 0
    auto x = F->zeta_power(1);
    LocalElement acc = F->zero();
    const auto& g = F->defining_g();
    for (long i = static_cast<long>(g.size()) - 1; i >= 0; --i) {
        acc = acc * x;
        acc = acc + F->from_mpz(g[static_cast<size_t>(i)]);
    }
    CHECK(acc.is_zero_at_precision());
    // zeta_f^f = 1 and zeta^j != 1 for 0 < j < f
    CHECK((x.pow(5L) - F->one()).is_zero_at_precision());
    for (long j = 1; j < 5; ++j) CHECK(!(F->zeta_power(j) - F->one()).is_zero_at_precision());

    auto F9 = build_field(3, 9, 24);
    auto y = F9->zeta_power(1);
    CHECK((y.pow(9L) - F9->one()).is_zero_at_precision());
    // zeta_9^3 = zeta_3; v(1 - zeta_3) = 1/2
    auto z3 = F9->zeta_power(3);
    CHECK((F9->one() - z3).local_valuation() == Valuation::of(1, 2));
    // Phi_{p^k}(y-image) = 0
    LocalElement acc2 = F9->zero();
    for (long i = static_cast<long>(F9->phi_pk().size()) - 1; i >= 0; --i) {
        acc2 = acc2 * y;
        acc2 = acc2 + F9->from_mpz(F9->phi_pk()[static_cast<size_t>(i)]);
    }
    CHECK(acc2.is_zero_at_precision());
}

TEST_CASE("local valuation examples") {
    auto F = build_field(7, 5, 20);
    CHECK(F->from_mpz(7).local_valuation() == Valuation::of(1));
    CHECK((F->one() - F->zeta_power(1)).local_valuation() == Valuation::of(0));

    auto F9 = build_field(3, 9, 20);
    CHECK((F9->one() - F9->zeta_power(1)).local_valuation() == Valuation::of(1, 6));
}

TEST_CASE("valuation matches the norm route and is multiplicative") {
    auto F = build_field(3, 15, 18);
    std::mt19937_64 rng(0x10ca1ULL);
    std::uniform_int_distribution<long> coef(-40, 40);
    auto rand_elt = [&]() {
        std::vector<mpz_class> c(static_cast<size_t>(F->dim()));
        for (auto& x : c) x = coef(rng);
        return make_element(F, std::move(c), 0, F->working_digits());
    };
    long checked = 0;
    for (int i = 0; i < 500; ++i) {
        LocalElement a = rand_elt(), b = rand_elt();
        Valuation va = a.local_valuation(), vb = b.local_valuation();
        if (!va.is_finite() || !vb.is_finite()) continue;
        CHECK((a * b).local_valuation() == va + vb);
        ++checked;
    }
    CHECK(checked > 450);
    // dual route on a handful of samples
    for (int i = 0; i < 8; ++i) {
        LocalElement a = rand_elt();
        Valuation v = a.local_valuation();
        if (!v.is_finite()) continue;
        CHECK(norm_valuation_oracle(a) == v);
    }
    CHECK(norm_valuation_oracle(F->one() - F->zeta_power(5)) ==
          (F->one() - F->zeta_power(5)).local_valuation());
}

TEST_CASE("teichmuller") {
    // scalar: p=5, u=2, N=2 -> 7 mod 25
    auto t = teichmuller(PadicApprox::from_integer(2, 5, 2));
    CHECK(t.unit() == 7);
    // and 7^4 = 1 mod 25 (independent powering)
    CHECK(powmod(mpz_class(7), mpz_class(4), ppow(5, 2)) == 1);

    auto F = build_field(5, 3, 14);
    auto u = F->from_mpz(1) + (F->zeta_power(1) - F->one()) * mpz_class(5);  // = 1 mod m
    auto w = u.teichmuller();
    CHECK((w - F->one()).is_zero_at_precision());
    // idempotence on a nontrivial unit
    auto v = (F->zeta_power(1) + F->from_mpz(5)).teichmuller();
    CHECK(v.teichmuller().same_bits(v));
    // order divides p^d - 1
    mpz_class pd1 = ppow(5, F->d()) - 1;
    CHECK((v.pow(pd1) - F->one()).is_zero_at_precision());
    CHECK_THROWS_AS((void)F->from_mpz(5).teichmuller(), std::domain_error);
}

TEST_CASE("galois consistency") {
    auto F = build_field(3, 15, 18);
    // frobenius fixes Q_p-rationals
    auto c = F->from_padic(PadicApprox::from_rational(7, 4, 3, 12));
    CHECK(c.frobenius().same_bits(c));
    // frobenius maps zeta_f^j to the CRT partner (pj mod f*, j mod p^k)
    for (long j : {1L, 2L, 4L, 7L, 11L}) {
        long pk = 3;
        long fstar = 5;
        long target = -1;
        for (long t = 0; t < 15; ++t)
            if (t % fstar == (3 * j) % fstar && t % pk == j % pk) { target = t; break; }
        REQUIRE(target >= 0);
        CHECK(F->zeta_power(j).frobenius().same_bits(F->zeta_power(target)));
    }
    // full Galois action permutes the roots of unity
    auto z = F->zeta_power(1);
    CHECK(z.galois(2).same_bits(F->zeta_power(2)));
    CHECK(z.galois(11).same_bits(F->zeta_power(11)));
}

TEST_CASE("division and inversion") {
    auto F = build_field(3, 9, 20);
    auto pi = F->pi();
    CHECK(pi.local_valuation() == Valuation::of(1, 6));
    auto upi = F->u_pi();
    CHECK(upi.local_valuation() == Valuation::of(0));
    // pi * inv_pi = 1
    CHECK(((F->pi() * F->inv_pi()) - F->one()).is_zero_at_precision());
    auto a = F->one() - F->zeta_power(2);
    auto b = F->one() - F->zeta_power(1);
    auto q = a / b;
    CHECK((q * b - a).is_zero_at_precision());
    CHECK(q.local_valuation() == Valuation::of(0));
}

TEST_CASE("field descriptor dump") {
    auto F = build_field(3, 9, 12);
    auto s = F->descriptor_json();
    CHECK(s.find("\"p\":3") != std::string::npos);
    CHECK(s.find("\"f\":9") != std::string::npos);
    CHECK(s.find("\"d\":1") != std::string::npos);
    CHECK(s.find("\"e\":6") != std::string::npos);
}
