#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dqs/ball.hpp"
#include "dqs/coeffw.hpp"
#include "dqs/rational.hpp"
#include "test_util.hpp"

using namespace dqs;

TEST_CASE("rational canonical form") {
    CHECK(Rational(6, 4) == Rational(3, 2));
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK(Rational(1, -2).denominator() == Int(2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK_THROWS_AS(Rational(1, 0), PoleError);
    CHECK_THROWS_AS(Rational(1) / Rational(0), PoleError);
    CHECK(Rational(-3, 7).abs() == Rational(3, 7));
    CHECK(Rational(2, 3).inverse() == Rational(3, 2));
    CHECK(Rational(-2, 3).pow(3) == Rational(-8, 27));
    CHECK(Rational(5, 3).str() == "5/3");
    CHECK(Rational(-4).str() == "-4");
}

TEST_CASE("rational and coeffw ring axioms on random triples") {
    std::mt19937 rng(1234);
    for (int i = 0; i < 200; ++i) {
        Rational a = dqs_test::random_rational(rng), b = dqs_test::random_rational(rng),
                 c = dqs_test::random_rational(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + Rational(0) == a);
        CHECK(a * Rational(1) == a);
        CHECK(a + (-a) == Rational(0));
    }
    for (int i = 0; i < 100; ++i) {
        CoeffW a = dqs_test::random_coeffw(rng), b = dqs_test::random_coeffw(rng),
               c = dqs_test::random_coeffw(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + CoeffW() == a);
        CHECK(a * CoeffW(1) == a);
        CHECK(a - a == CoeffW());
    }
}

TEST_CASE("binomial values and out-of-range convention") {
    CHECK(binomial(4, 2) == Int(6));
    CHECK(binomial(7, 0) == Int(1));
    CHECK(binomial(3, 5) == Int(0));
    CHECK(binomial(3, -1) == Int(0));
    CHECK(binomial(0, 0) == Int(1));
}

TEST_CASE("binomial satisfies Pascal's rule up to n = 60") {
    for (unsigned long n = 1; n <= 60; ++n)
        for (long k = 0; k <= static_cast<long>(n); ++k)
            CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
}

TEST_CASE("binomial across the memoized-row cap") {
    // rows above 256 switch to the direct multiplicative path
    CHECK(binomial(257, 100) == binomial(256, 99) + binomial(256, 100));
    CHECK(binomial(300, 1) == Int(300));
}

TEST_CASE("power_sum examples and poles") {
    CHECK(power_sum(2, 1, 3) == Rational(49, 36));
    CHECK(power_sum(1, 5, 4) == Rational(0));
    CHECK(power_sum(1, -3, -1) == Rational(-11, 6));
    CHECK_THROWS_AS(power_sum(1, -2, 3), PoleError);
    CHECK_THROWS_AS(power_sum(2, 0, 0), PoleError);
}

TEST_CASE("power_sum range additivity") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<long> start(1, 30), len(0, 10);
    std::uniform_int_distribution<unsigned> pd(1, 3);
    for (int i = 0; i < 50; ++i) {
        long a = start(rng), b = a + len(rng), c = b + 1 + len(rng);
        unsigned p = pd(rng);
        CHECK(power_sum(p, a, b) + power_sum(p, b + 1, c) == power_sum(p, a, c));
        CHECK(power_sum(p, -c, -b - 1) + power_sum(p, -b, -a) == power_sum(p, -c, -a));
    }
}

TEST_CASE("coeffw canonical degree") {
    CoeffW c = CoeffW::monomial(Rational(1), 2);
    c += CoeffW::monomial(Rational(-1), 2);
    CHECK(c.is_zero());
    CHECK(c.degree() == -1);
    CHECK(CoeffW::w().degree() == 1);
    CHECK((CoeffW::w() * CoeffW::w()).coeff(2) == Rational(1));
}

TEST_CASE("coeffw_eval: w evaluates to i*pi") {
    Precision prec(128);
    CBall v = coeffw_eval(-CoeffW::w(), prec);  // -w -> -i pi
    CBall ref = neg(CBall::i_pi(Precision(256)));
    CHECK(dqs_test::mid_distance(v, ref) <= v.radius() + ref.radius());
    CHECK(v.re_double() == 0.0);
    CHECK(v.im_double() == doctest::Approx(-3.14159265358979).epsilon(1e-12));
}

TEST_CASE("coeffw_eval: -(2/3) w^2 evaluates to 2 pi^2 / 3") {
    Precision prec(128);
    CBall v = coeffw_eval(CoeffW::monomial(Rational(-2, 3), 2), prec);
    // independent high-precision reference
    CBall pi = CBall::pi(Precision(320));
    CBall ref = mul_rational(mul(pi, pi), Rational(2, 3));
    CHECK(dqs_test::mid_distance(v, ref) <= v.radius() + ref.radius());
    CHECK(v.re_double() == doctest::Approx(6.57973626739).epsilon(1e-10));
    CHECK(v.im_double() == 0.0);
}

TEST_CASE("coeffw_eval: exactly representable constant has radius 0") {
    CBall v = coeffw_eval(CoeffW(Rational(5, 2)), Precision(64));
    CHECK(v.re_double() == 2.5);
    CHECK(v.radius() == 0.0);
}

TEST_CASE("coeffw_eval radius shrinks monotonically with precision") {
    CoeffW c;
    c += CoeffW(Rational(1, 3));
    c += CoeffW::monomial(Rational(2, 7), 1);
    c += CoeffW::monomial(Rational(-5, 3), 2);
    double last = coeffw_eval(c, Precision(64)).radius();
    CHECK(last > 0.0);
    for (unsigned bits : {96u, 128u, 192u, 256u}) {
        double r = coeffw_eval(c, Precision(bits)).radius();
        CHECK(r <= last);
        last = r;
    }
}

TEST_CASE("precision floor") {
    CHECK_THROWS_AS(Precision(32), std::invalid_argument);
    CHECK(Precision(64).bits == 64);
}

TEST_CASE("rational literals") {
    CHECK(parse_rational("3/2") == Rational(3, 2));
    CHECK(parse_rational("-7") == Rational(-7));
    CHECK(parse_rational("+1/2") == Rational(1, 2));
    CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
    auto [re1, im1] = parse_complex("-3");
    CHECK(re1 == Rational(-3));
    CHECK(im1 == Rational(0));
    auto [re2, im2] = parse_complex("3/2+1/2i");
    CHECK(re2 == Rational(3, 2));
    CHECK(im2 == Rational(1, 2));
    auto [re3, im3] = parse_complex("2-i");
    CHECK(re3 == Rational(2));
    CHECK(im3 == Rational(-1));
    auto [re4, im4] = parse_complex("-5/3i");
    CHECK(re4 == Rational(0));
    CHECK(im4 == Rational(-5, 3));
}
