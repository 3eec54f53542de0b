#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "cohalab/qlaurent.hpp"

using namespace cohalab;

static QLaurent t_pow(int k, Rational c = 1) { return QLaurent::monomial(k, c); }

TEST_CASE("exponent cancellation", "[qlaurent]") {
    CHECK(t_pow(2) * t_pow(-2) == QLaurent::one());
}

TEST_CASE("difference of squares", "[qlaurent]") {
    QLaurent a = QLaurent::one() + t_pow(1);
    QLaurent b = QLaurent::one() - t_pow(1);
    QLaurent expect = QLaurent::one() - t_pow(2);
    CHECK(a * b == expect);
}

TEST_CASE("additive identity", "[qlaurent]") {
    QLaurent x = t_pow(-3, Rational(5, 2)) + t_pow(7);
    CHECK(QLaurent::zero() + x == x);
    CHECK(x - x == QLaurent::zero());
}

TEST_CASE("q inversion negates exponents", "[qlaurent]") {
    QLaurent a = t_pow(2) + t_pow(0, 3);
    QLaurent expect = t_pow(-2) + t_pow(0, 3);
    CHECK(a.invert_q() == expect);
    CHECK(QLaurent::zero().invert_q() == QLaurent::zero());
}

TEST_CASE("q inversion is an involution and ring map", "[qlaurent]") {
    std::mt19937 rng(20240811);
    auto random_poly = [&]() {
        QLaurent p;
        for (int i = 0; i < 5; ++i)
            p.add_term(static_cast<int>(rng() % 9) - 4,
                       Rational(static_cast<int>(rng() % 7) - 3, 1 + static_cast<int>(rng() % 3)));
        return p;
    };
    for (int rep = 0; rep < 50; ++rep) {
        QLaurent a = random_poly(), b = random_poly();
        CHECK(a.invert_q().invert_q() == a);
        CHECK((a * b).invert_q() == a.invert_q() * b.invert_q());
        CHECK((a + b).invert_q() == a.invert_q() + b.invert_q());
    }
}

TEST_CASE("canonical rendering", "[qlaurent]") {
    QLaurent p = t_pow(-1, -2) + t_pow(0, 3) + t_pow(2);
    CHECK(p.render() == "-2*t^-1 + 3 + t^2");
    CHECK(p.render(true) == "-2*q^(-1/2) + 3 + q");
    CHECK(QLaurent::zero().render() == "0");
    CHECK((t_pow(1) - t_pow(4, Rational(1, 2))).render() == "t - 1/2*t^4");
}

TEST_CASE("no zero coefficients survive arithmetic", "[qlaurent]") {
    QLaurent a = t_pow(1) + t_pow(2);
    QLaurent b = t_pow(1) - t_pow(2);
    QLaurent s = a + b; // 2t
    CHECK(s.coeffs().size() == 1);
    CHECK(s.coeff(1) == 2);
}

TEST_CASE("pochhammer helpers", "[qlaurent]") {
    CHECK(q_pochhammer(0) == QLaurent::one());
    // (q)_2 = (1-q)(1-q^2) = 1 - t^2 - t^4 + t^6
    QLaurent p2 = q_pochhammer(2);
    CHECK(p2.coeff(0) == 1);
    CHECK(p2.coeff(2) == -1);
    CHECK(p2.coeff(4) == -1);
    CHECK(p2.coeff(6) == 1);
    // 1/(q^{-1})_1 = sum t^{-2m}
    QLaurent inv = q_pochhammer_inv_qinv(1, -8);
    for (int m = 0; m <= 4; ++m) CHECK(inv.coeff(-2 * m) == 1);
    CHECK(inv.coeff(-1) == 0);
    // product against the exact pochhammer telescopes to 1 inside the window
    QLaurent check = (inv * q_pochhammer(1).invert_q()).clipped(-6, 0);
    CHECK(check == QLaurent::one());
}
