#include <cmath>
#include <random>

#include "doctest.h"
#include "qc/exact_real.hpp"

using namespace qc;

namespace {

ExactReal rat(const BasisPtr& b, long num, long den = 1) {
    return ExactReal(b, make_rational(num, den));
}

ExactReal random_exact(const BasisPtr& b, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-50, 50);
    std::uniform_int_distribution<long> den(1, 12);
    std::vector<Rational> coeffs;
    for (int i = 0; i < b->size(); ++i) coeffs.push_back(make_rational(num(rng), den(rng)));
    return ExactReal(b, std::move(coeffs));
}

}  // namespace

TEST_CASE("addition and scaling with coefficient cancellation") {
    auto b2 = RealBasis::preset("sqrt2");
    const ExactReal s2 = ExactReal::generator(b2, 1);

    ExactReal x = rat(b2, 1) + s2;          // 1 + sqrt2
    ExactReal y = rat(b2, 2) - s2;          // 2 - sqrt2
    CHECK((x + y) == rat(b2, 3));
    CHECK((x + y).is_integer());

    ExactReal z = (rat(b2, 2) + s2.scaled(Rational(4))).scaled(make_rational(1, 2));
    CHECK(z == rat(b2, 1) + s2.scaled(Rational(2)));  // 1 + 2*sqrt2

    auto gb = RealBasis::preset("golden");
    const ExactReal tau = ExactReal::generator(gb, 1);
    CHECK((tau + (rat(gb, 1) - tau)) == rat(gb, 1));
}

TEST_CASE("basis mismatch is rejected") {
    auto b2 = RealBasis::preset("sqrt2");
    auto b3 = RealBasis::preset("sqrt3");
    CHECK_THROWS_AS(rat(b2, 1) + rat(b3, 1), std::invalid_argument);
}

TEST_CASE("products through the multiplication table") {
    auto b2 = RealBasis::preset("sqrt2");
    const ExactReal s2 = ExactReal::generator(b2, 1);
    CHECK(s2 * s2 == rat(b2, 2));

    auto gb = RealBasis::preset("golden");
    const ExactReal tau = ExactReal::generator(gb, 1);
    CHECK(tau * tau == rat(gb, 1) + tau);

    // (1+sqrt2)(1-sqrt2) = -1, with a numeric cross-check
    ExactReal p = (rat(b2, 1) + s2) * (rat(b2, 1) - s2);
    CHECK(p == rat(b2, -1));
    CHECK(p.to_double() == doctest::Approx(-1.0).epsilon(1e-14));

    auto nb = RealBasis::preset("sqrt23");
    const ExactReal u = ExactReal::generator(nb, 1);
    const ExactReal v = ExactReal::generator(nb, 2);
    CHECK_THROWS_AS(u * v, std::logic_error);
    CHECK(u * rat(nb, 3) == u.scaled(Rational(3)));  // rational factors never need a table
}

TEST_CASE("inner_is_integer on the spec families") {
    auto b2 = RealBasis::preset("sqrt2");
    ExactVector theta({ExactReal::generator(b2, 1), rat(b2, 1, 2)});  // (sqrt2, 1/2)

    auto r = inner_is_integer(theta, {0, 2});
    CHECK(r.is_integer);
    CHECK(r.value == rat(b2, 1));

    r = inner_is_integer(theta, {1, 0});
    CHECK_FALSE(r.is_integer);
    CHECK(r.value == ExactReal::generator(b2, 1));

    auto nb = RealBasis::preset("sqrt23");
    ExactVector t2({ExactReal::generator(nb, 1), ExactReal::generator(nb, 2)});
    auto r2 = inner_is_integer(t2, {1, 1});
    CHECK_FALSE(r2.is_integer);
    CHECK(r2.value.to_double() ==
          doctest::Approx(std::sqrt(2.0) + std::sqrt(3.0)).epsilon(1e-14));
    // integrality implies the numeric value is within 1e-12 of an integer
    auto r3 = inner_is_integer(t2, {0, 0});
    CHECK(r3.is_integer);
    CHECK(std::abs(r3.value.to_double() - std::round(r3.value.to_double())) < 1e-12);
}

TEST_CASE("numeric evaluation is consistent with exact arithmetic") {
    auto b = RealBasis::preset("sqrt236");
    std::mt19937_64 rng(20240811);
    for (int iter = 0; iter < 10000; ++iter) {
        ExactReal x = random_exact(b, rng);
        ExactReal y = random_exact(b, rng);
        const double fx = x.to_double(), fy = y.to_double();

        const double sum_exact = (x + y).to_double();
        CHECK(std::abs(sum_exact - (fx + fy)) <= 1e-12 * (1.0 + std::abs(sum_exact)));

        const double prod_exact = (x * y).to_double();
        CHECK(std::abs(prod_exact - fx * fy) <= 1e-12 * (1.0 + std::abs(prod_exact)));
    }
}

TEST_CASE("ring axioms hold exactly on table-equipped bases") {
    for (const char* name : {"sqrt2", "golden", "sqrt236"}) {
        auto b = RealBasis::preset(name);
        std::mt19937_64 rng(7 + b->size());
        for (int iter = 0; iter < 200; ++iter) {
            ExactReal x = random_exact(b, rng);
            ExactReal y = random_exact(b, rng);
            ExactReal z = random_exact(b, rng);
            CHECK((x * y) * z == x * (y * z));
            CHECK(x * (y + z) == x * y + x * z);
            CHECK(x * y == y * x);
        }
    }
}

TEST_CASE("exact inverses in quadratic and biquadratic fields") {
    auto b = RealBasis::preset("sqrt236");
    std::mt19937_64 rng(99);
    for (int iter = 0; iter < 100; ++iter) {
        ExactReal x = random_exact(b, rng);
        if (x.is_zero()) continue;
        ExactReal inv = x.inverse();
        CHECK(x * inv == ExactReal(b, Rational(1)));
    }
    CHECK_THROWS_AS(ExactReal(b).inverse(), std::domain_error);
}

TEST_CASE("sign, order and fractional parts") {
    auto gb = RealBasis::preset("golden");
    const ExactReal tau = ExactReal::generator(gb, 1);
    CHECK(tau.sign() == 1);
    CHECK((rat(gb, 2) - tau).sign() == 1);    // 2 - 1.618...
    CHECK((rat(gb, 1) - tau).sign() == -1);   // 1 - 1.618...
    CHECK(ExactReal(gb).sign() == 0);
    CHECK(rat(gb, 1) < tau);

    // frac(5/2) = 1/2 exactly; frac(tau) = tau - 1 numerically
    CHECK(rat(gb, 5, 2).fractional_part_double() == 0.5);
    CHECK(tau.fractional_part_double() ==
          doctest::Approx((1 + std::sqrt(5.0)) / 2 - 1).epsilon(1e-15));
    Rational f;
    CHECK(rat(gb, -7, 4).rational_fraction(f));
    CHECK(f == make_rational(1, 4));
    CHECK_FALSE(tau.rational_fraction(f));
}
