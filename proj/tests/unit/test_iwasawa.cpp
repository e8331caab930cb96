#include <doctest.h>

#include <random>

#include "padlab/iwasawa.hpp"

using namespace padlab;

TEST_CASE("scalar log basics") {
    CHECK(iwasawa_log(PadicApprox::from_integer(1, 5, 10)).certified_valuation() >= Valuation::of(9));
    // log(-1) = 0 (root of unity)
    CHECK(iwasawa_log(PadicApprox::from_integer(-1, 5, 10)).certified_valuation() >= Valuation::of(8));
    CHECK_THROWS_AS((void)iwasawa_log(PadicApprox::exact_zero(5)), std::domain_error);
}

TEST_CASE("log_5(6) against the direct partial-sum oracle") {
    const long p = 5, W = 16;
    auto lhs = iwasawa_log(PadicApprox::from_integer(6, p, W));
    // sum_{n=1}^{M} (-1)^{n+1} 5^n / n as an exact rational, with extra guard
    mpq_class acc = 0;
    mpz_class pw = 1;
    for (long n = 1; n <= W + 10; ++n) {
        pw *= 5;
        mpq_class term(pw, n);
        term.canonicalize();
        acc += (n % 2 == 1) ? term : -term;
    }
    auto rhs = PadicApprox::from_rational(acc, p, W);
    CHECK((lhs - rhs).certified_valuation() >= Valuation::of(13));
}

TEST_CASE("branch: log(p^r b) = log(b)") {
    auto b = PadicApprox::from_integer(7, 3, 14);
    auto lb = iwasawa_log(b);
    auto shifted = iwasawa_log(b.shift(4));
    CHECK((lb - shifted).certified_valuation() >= Valuation::of(12));
}

TEST_CASE("tower log: torsion, pairing, homomorphism") {
    auto F = build_field(3, 15, 20);
    // torsion: log(zeta^j) = 0 for all j (ramified and unramified parts mix)
    for (long j = 1; j < 15; ++j) {
        auto l = iwasawa_log(F->zeta_power(j));
        Valuation v = l.local_valuation();
        CHECK(!v.is_finite());
        CHECK(l.abs_precision() >= 12);
    }
    // pairing: log(1 - zeta^-t) = log(1 - zeta^t)
    for (long t = 1; t < 15; ++t) {
        auto d = log_one_minus_zeta(F, 15 - t) - log_one_minus_zeta(F, t);
        CHECK(!d.local_valuation().is_finite());
    }
    // homomorphism on random unit pairs
    std::mt19937_64 rng(0x1009ULL);
    std::uniform_int_distribution<long> coef(-50, 50);
    long done = 0;
    for (int i = 0; i < 300 && done < 300; ++i) {
        std::vector<mpz_class> c1(static_cast<size_t>(F->dim())), c2(c1.size());
        for (auto& x : c1) x = coef(rng);
        for (auto& x : c2) x = coef(rng);
        auto a = make_element(F, std::move(c1), 0, F->working_digits());
        auto b = make_element(F, std::move(c2), 0, F->working_digits());
        if (a.local_valuation() != Valuation::of(0) || b.local_valuation() != Valuation::of(0)) continue;
        auto d = iwasawa_log(a * b) - iwasawa_log(a) - iwasawa_log(b);
        Valuation v = d.local_valuation();
        if (v.is_finite()) CHECK(v >= Valuation::of(14));
        ++done;
    }
    CHECK(done >= 200);
}

TEST_CASE("norm identity: sum of log(1 - zeta_5^a) over the orbit is log 5 in Q_7") {
    auto F = build_field(7, 5, 18);
    LocalElement S = F->zero();
    for (long a = 1; a <= 4; ++a) S = S + log_one_minus_zeta(F, a);
    PadicApprox proj = S.project_to_qp(Valuation::of(14));
    auto log5 = iwasawa_log(PadicApprox::from_integer(5, 7, 18));
    CHECK((proj - log5).certified_valuation() >= Valuation::of(14));
    // and this is NOT zero: log_7(5) != 0
    CHECK(log5.val() < 6);
}

TEST_CASE("series truncation soundness: recomputing deeper never changes settled digits") {
    auto F = build_field(3, 9, 16);
    auto Fdeep = build_field(3, 9, 26);
    for (long a : {1L, 2L, 4L, 3L}) {
        auto l1 = iwasawa_log(F->one_minus_zeta(a));
        auto l2 = iwasawa_log(Fdeep->one_minus_zeta(a));
        // compare coordinatewise through the common precision
        long A = std::min(l1.abs_precision(), l2.abs_precision());
        for (long j = 0; j < F->e(); ++j)
            for (long i = 0; i < F->d(); ++i) {
                auto c1 = PadicApprox::from_integer(l1.coord(i, j), 3, A + l1.shift()).shift(-l1.shift());
                auto c2 = PadicApprox::from_integer(l2.coord(i, j), 3, A + l2.shift()).shift(-l2.shift());
                CHECK((c1 - c2).certified_valuation() >= Valuation::of(A - 2));
            }
    }
}

TEST_CASE("decompose examples") {
    // beta = 50 in Q_5: r = 2, omega = teichmuller(2), principal = 2/omega
    auto beta = PadicApprox::from_integer(50, 5, 10);
    auto dec = decompose(beta);
    CHECK(dec.r == 2);
    auto t2 = teichmuller(PadicApprox::from_integer(2, 5, 8));
    CHECK((dec.omega - t2).certified_valuation() >= Valuation::of(7));
    auto reassembled = dec.omega * dec.principal;
    CHECK((reassembled.shift(2) - beta).certified_valuation() >= Valuation::of(8));

    auto one = decompose(PadicApprox::from_integer(1, 5, 10));
    CHECK(one.r == 0);
    CHECK(one.omega.unit() == 1);
    CHECK(one.principal.unit() == 1);

    // beta = 1 - zeta_9 over p = 3: r = 1/6, reassembly through pi^{re}
    auto F = build_field(3, 9, 18);
    auto b = F->one_minus_zeta(1);
    auto d = decompose(b);
    CHECK(d.r == Valuation::of(1, 6));
    CHECK((d.omega.pow(ppow(3, F->d()) - 1) - F->one()).is_zero_at_precision());
    CHECK((d.principal - F->one()).local_valuation() > Valuation::of(0));
    auto re = d.uniformizer_power * d.omega * d.principal;
    CHECK((re - b).is_zero_at_precision());
}
