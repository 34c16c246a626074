#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"
#include "wenum/error.hpp"
#include "wenum/quadrat.hpp"

#include <random>

using namespace wenum;

TEST_CASE("field arithmetic basics") {
    QuadRat one_plus(1);
    one_plus += QuadRat::sqrt2();
    QuadRat one_minus = QuadRat(1) - QuadRat::sqrt2();
    CHECK(one_plus * one_minus == QuadRat(-1)); // norm of 1 + sqrt2

    CHECK(QuadRat::rho() * QuadRat::mu() == QuadRat(-1));
    CHECK(QuadRat::rho() + QuadRat(1) == QuadRat::sqrt2());
}

TEST_CASE("division is exact and rejects zero") {
    QuadRat rho = QuadRat::rho();
    // rho / (1 + rho^2) = (1 + rho)/4 = sqrt2/4
    QuadRat lhs = rho / (QuadRat(1) + rho * rho);
    QuadRat rhs = (QuadRat(1) + rho) / QuadRat(4);
    CHECK(lhs == rhs);
    CHECK(lhs == QuadRat(Rational(0), Rational(1, 4)));

    CHECK_THROWS_AS(QuadRat(1) / QuadRat(0), Error);

    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        QuadRat x = testutil::random_quadrat(rng);
        QuadRat y = testutil::random_quadrat(rng);
        if (y.is_zero()) continue;
        CHECK(x / y * y == x);
    }
}

TEST_CASE("conjugation is the order-two automorphism") {
    CHECK(QuadRat::rho().conj() == QuadRat::mu());
    CHECK(QuadRat(5).conj() == QuadRat(5));

    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        QuadRat x = testutil::random_quadrat(rng);
        QuadRat y = testutil::random_quadrat(rng);
        CHECK(x.conj().conj() == x);
        CHECK((x * y).conj() == x.conj() * y.conj());
        CHECK((x + y).conj() == x.conj() + y.conj());
    }
}

TEST_CASE("rho powers") {
    CHECK(rho_pow(0) == QuadRat(1));
    CHECK(rho_pow(1) == QuadRat::rho());
    CHECK(rho_pow(-1) == QuadRat(1, 1));       // -mu = 1 + sqrt2
    CHECK(rho_pow(2) == QuadRat(3, -2));       // (sqrt2 - 1)^2

    for (long j = -20; j <= 20; j += 3)
        for (long k = -20; k <= 20; k += 2)
            CHECK(rho_pow(j) * rho_pow(k) == rho_pow(j + k));
}

TEST_CASE("exact sign") {
    CHECK(QuadRat(0).sign() == 0);
    CHECK(QuadRat::rho().sign() == 1);                    // rho > 0
    CHECK((QuadRat::rho() - QuadRat(1)).sign() == -1);    // rho < 1
    CHECK(QuadRat(3, -2).sign() == 1);                    // 3 - 2 sqrt2 = rho^2 > 0
    CHECK(QuadRat(2, -2).sign() == -1);                   // 2 - 2 sqrt2 < 0
    CHECK(QuadRat(-3, 2).sign() == -1);
    CHECK(QuadRat(Rational(3, 2), Rational(-1)).sign() == 1); // 3/2 > sqrt2
    CHECK(QuadRat::mu().sign() == -1);

    std::mt19937_64 rng(13);
    for (int i = 0; i < 300; ++i) {
        QuadRat x = testutil::random_quadrat(rng);
        double approx = x.approx();
        if (approx > 1e-9) CHECK(x.sign() == 1);
        if (approx < -1e-9) CHECK(x.sign() == -1);
    }
}

TEST_CASE("rho-basis coordinates and text form") {
    QuadRat big(1651712, -1167936);
    auto [c, d] = big.to_rho_basis();
    CHECK(c == Rational(483776));
    CHECK(d == Rational(-1167936));
    CHECK(to_rho_string(big) == "-1167936*p + 483776");

    CHECK(QuadRat(1).to_rho_basis() == std::pair<Rational, Rational>(1, 0));
    CHECK(QuadRat::rho().to_rho_basis() == std::pair<Rational, Rational>(0, 1));

    CHECK(to_rho_string(QuadRat(-10014080, 7081024)) == "7081024*p - 2933056");
    CHECK(to_rho_string(QuadRat(0)) == "0*p + 0");

    std::mt19937_64 rng(17);
    for (int i = 0; i < 200; ++i) {
        QuadRat x = testutil::random_quadrat(rng);
        auto [rc, rd] = x.to_rho_basis();
        CHECK(QuadRat::from_rho_basis(rc, rd) == x);
        CHECK(parse_rho_string(to_rho_string(x)) == x);
    }
}

TEST_CASE("rho-basis parsing accepts rationals and rejects junk") {
    CHECK(parse_rho_string("3/4*p - 1/2") == QuadRat::from_rho_basis(Rational(-1, 2), Rational(3, 4)));
    CHECK(parse_rho_string(" 0*p + 1 ") == QuadRat(1));
    CHECK_THROWS_AS(parse_rho_string("12 + 3"), Error);
    CHECK_THROWS_AS(parse_rho_string("x*p + 1"), Error);
    CHECK_THROWS_AS(parse_rho_string("1*p 1"), Error);
}
