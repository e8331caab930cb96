#include <doctest.h>

#include <random>

#include "padlab/cyclotomic.hpp"

using namespace padlab;

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_poly(1) == std::vector<mpz_class>{-1, 1});
    CHECK(cyclotomic_poly(2) == std::vector<mpz_class>{1, 1});
    CHECK(cyclotomic_poly(6) == std::vector<mpz_class>{1, -1, 1});
    CHECK(cyclotomic_poly(9) == std::vector<mpz_class>{1, 0, 0, 1, 0, 0, 1});
    // Phi_105 is the first with a coefficient of magnitude 2
    const auto& c105 = cyclotomic_poly(105);
    bool has2 = false;
    for (const auto& c : c105) has2 = has2 || c == -2 || c == 2;
    CHECK(has2);
}

TEST_CASE("basic arithmetic and geometric-sum identity") {
    // (1 - z^a)/(1 - z) = 1 + z + ... + z^{a-1} for (a, m) = 1
    for (long m : {7L, 12L, 15L}) {
        for (long a = 2; 2 * a < m; ++a) {
            if (gcd_long(a, m) != 1) continue;
            CycloNum lhs = CycloNum::unit_ratio(m, a);
            CycloNum rhs = CycloNum::zero(m);
            for (long i = 0; i < a; ++i) rhs = rhs + CycloNum::zeta(m, i);
            CHECK(lhs == rhs);
        }
    }
    // conjugation fixes rationals
    CycloNum c = CycloNum::from_rational(mpq_class(22, 7), 15);
    CHECK(c.conjugate(2) == c);
    // zeta^m = 1
    CHECK(CycloNum::zeta(15, 1).pow(15) == CycloNum::one(15));
}

TEST_CASE("norms") {
    CHECK(CycloNum::one_minus_zeta_pow(5, 1).norm_to_q() == 5);
    CHECK(CycloNum::one_minus_zeta_pow(15, 1).norm_to_q() == 1);
    CHECK(CycloNum::one_minus_zeta_pow(9, 1).norm_to_q() == 3);
    // norm(c) = c^phi(m)
    mpq_class c(3, 2);
    mpq_class expect;
    mpz_pow_ui(expect.get_num_mpz_t(), mpz_class(3).get_mpz_t(), 4);
    mpz_pow_ui(expect.get_den_mpz_t(), mpz_class(2).get_mpz_t(), 4);
    CHECK(CycloNum::from_rational(c, 5).norm_to_q() == expect);
}

TEST_CASE("norm multiplicativity on random pairs") {
    std::mt19937_64 rng(0x202020ULL);
    std::uniform_int_distribution<long> coef(-6, 6);
    const long m = 12;
    for (int i = 0; i < 200; ++i) {
        CycloNum a = CycloNum::zero(m), b = CycloNum::zero(m);
        for (long j = 0; j < euler_phi(m); ++j) {
            a = a + CycloNum::from_rational(mpq_class(coef(rng)), m) * CycloNum::zeta(m, j);
            b = b + CycloNum::from_rational(mpq_class(coef(rng)), m) * CycloNum::zeta(m, j);
        }
        CHECK((a * b).norm_to_q() == a.norm_to_q() * b.norm_to_q());
    }
}

TEST_CASE("division exactness") {
    std::mt19937_64 rng(0xd1d1ULL);
    std::uniform_int_distribution<long> coef(-9, 9);
    const long m = 15;
    for (int i = 0; i < 50; ++i) {
        CycloNum a = CycloNum::zero(m), b = CycloNum::zero(m);
        for (long j = 0; j < euler_phi(m); ++j) {
            a = a + CycloNum::from_rational(mpq_class(coef(rng)), m) * CycloNum::zeta(m, j);
            b = b + CycloNum::from_rational(mpq_class(coef(rng)), m) * CycloNum::zeta(m, j);
        }
        if (b.is_zero()) continue;
        CHECK((a * b) / b == a);
    }
    CHECK_THROWS_AS((void)(CycloNum::one(5) / CycloNum::zero(5)), std::domain_error);
}

TEST_CASE("roots of unity") {
    auto r1 = (-CycloNum::zeta(12, 5)).is_root_of_unity();
    CHECK(r1.is_root);
    CHECK(r1.order == 12);  // (-z12^5)^12 = 1, and no smaller order
    auto r2 = (CycloNum::one(5) + CycloNum::zeta(5, 1)).is_root_of_unity();
    CHECK(!r2.is_root);
    auto r3 = CycloNum::one(7).is_root_of_unity();
    CHECK(r3.is_root);
    CHECK(r3.order == 1);
    // 1 + zeta_5 has |embedding| != 1 somewhere (the magnitude oracle)
    auto em = (CycloNum::one(5) + CycloNum::zeta(5, 1)).complex_embeddings(20);
    bool off_circle = false;
    for (const auto& ev : em) {
        Real d = (ev.value.abs() - Real::from_long(1, 128)).abs();
        off_circle = off_circle || d.to_double() > 0.1;
    }
    CHECK(off_circle);
}

TEST_CASE("complex embeddings with certified bounds") {
    // rational c: all embeddings equal c
    auto em = CycloNum::from_rational(mpq_class(22, 7), 5).complex_embeddings(30);
    CHECK(em.size() == 4);
    for (const auto& ev : em) {
        CHECK(std::abs(ev.value.re.to_double() - 22.0 / 7.0) < 1e-25);
        CHECK(std::abs(ev.value.im.to_double()) < 1e-25);
        CHECK(ev.abs_error.to_double() < 1e-25);
    }
    // |zeta| = 1 within the bound
    for (const auto& ev : CycloNum::zeta(12, 1).complex_embeddings(25))
        CHECK(std::abs(ev.value.abs().to_double() - 1.0) < 1e-20);
    // product of embeddings of 1-zeta_5 is the norm 5
    double prod = 1;
    for (const auto& ev : CycloNum::one_minus_zeta_pow(5, 1).complex_embeddings(30))
        prod *= ev.value.abs().to_double();
    CHECK(std::abs(prod - 5.0) < 1e-12);
    CHECK_THROWS_AS((void)CycloNum::one(5).complex_embeddings(10), std::domain_error);
}

TEST_CASE("conjugation permutes embeddings") {
    const long m = 15;
    CycloNum a = CycloNum::one_minus_zeta_pow(m, 2) + CycloNum::zeta(m, 4);
    auto base = a.complex_embeddings(25);
    auto conj = a.conjugate(2).complex_embeddings(25);
    // compare as multisets of |values| (matching within tolerance)
    std::vector<double> x, y;
    for (const auto& e : base) x.push_back(e.value.abs().to_double());
    for (const auto& e : conj) y.push_back(e.value.abs().to_double());
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    for (size_t i = 0; i < x.size(); ++i) CHECK(std::abs(x[i] - y[i]) < 1e-18);
}

TEST_CASE("coercion to a larger modulus") {
    CycloNum z3 = CycloNum::zeta(3, 1);
    CHECK(z3.coerce(15) == CycloNum::zeta(15, 5));
    CHECK(z3.coerce(15).norm_to_q() == mpq_class(1));
    // mixed-modulus arithmetic coerces transparently
    CycloNum s = CycloNum::zeta(3, 1) + CycloNum::zeta(5, 1);
    CHECK(s.modulus() == 15);
}
