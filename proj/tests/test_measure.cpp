#include <cmath>
#include <complex>
#include <random>

#include "doctest.h"
#include "qc/lattice.hpp"
#include "qc/measure.hpp"

using namespace qc;

namespace {

AtomicMeasure comb_z(long half_range, const BasisPtr& b) {
    std::vector<AtomicMeasure::Atom> atoms;
    for (long k = -half_range; k <= half_range; ++k)
        atoms.push_back({ExactVector({ExactReal(b, Rational(k))}), {1.0, 0.0}});
    return AtomicMeasure(std::move(atoms), half_range + 0.5, "comb");
}

}  // namespace

TEST_CASE("shift and modulation transforms") {
    auto b = RealBasis::preset("rational");
    AtomicMeasure comb = comb_z(10, b);

    AtomicMeasure shifted = comb.shifted(ExactVector({ExactReal(b, make_rational(1, 2))}));
    CHECK(shifted.weight_at(ExactVector({ExactReal(b, make_rational(1, 2))})) ==
          std::complex<double>(1.0));
    CHECK(shifted.weight_at(ExactVector({ExactReal(b, Rational(0))})) ==
          std::complex<double>(0.0));

    // modulation by 1/2 gives (-1)^n exactly
    AtomicMeasure alt = comb.modulated(ExactVector({ExactReal(b, make_rational(1, 2))}));
    CHECK(alt.weight_at(ExactVector({ExactReal(b, Rational(2))})) ==
          std::complex<double>(1.0));
    CHECK(alt.weight_at(ExactVector({ExactReal(b, Rational(3))})) ==
          std::complex<double>(-1.0));

    // comb + (-1) * alt cancels exactly at even integers, weight 2 at odd
    AtomicMeasure diff = comb.plus(alt.scaled({-1.0, 0.0}));
    CHECK(diff.weight_at(ExactVector({ExactReal(b, Rational(4))})) ==
          std::complex<double>(0.0));
    CHECK(diff.weight_at(ExactVector({ExactReal(b, Rational(5))})) ==
          std::complex<double>(2.0));
    CHECK(diff.size() == 10);
}

TEST_CASE("transform round-trips") {
    auto b = RealBasis::preset("sqrt2");
    AtomicMeasure comb = comb_z(8, b);
    ExactVector t({ExactReal::generator(b, 1)});

    AtomicMeasure back = comb.shifted(t).shifted(-t);
    REQUIRE(back.size() == comb.size());
    for (int i = 0; i < comb.size(); ++i) {
        CHECK(back.atoms()[i].point == comb.atoms()[i].point);
        CHECK(back.atoms()[i].weight == comb.atoms()[i].weight);  // exact
    }

    // modulation round-trip: quarter-turn phases are exact, generic phases
    // recover within 2 ulp of the sincos pipeline
    ExactVector w({ExactReal(b, make_rational(1, 4))});
    AtomicMeasure exact_rt = comb.modulated(w).modulated(-w);
    for (int i = 0; i < comb.size(); ++i)
        CHECK(exact_rt.atoms()[i].weight == comb.atoms()[i].weight);

    ExactVector wg({ExactReal(b, make_rational(2, 7))});
    AtomicMeasure generic = comb.modulated(wg).modulated(-wg);
    for (int i = 0; i < comb.size(); ++i)
        CHECK(std::abs(generic.atoms()[i].weight - comb.atoms()[i].weight) < 4e-15);
}

TEST_CASE("autocorrelation measures") {
    auto b = RealBasis::preset("rational");
    AtomicMeasure comb = comb_z(10, b);
    ExactVector one({ExactReal(b, Rational(1))});

    AtomicMeasure m1 = autocorrelation_measure(comb, one);
    CHECK(m1.size() == 19);
    for (const auto& a : m1.atoms()) CHECK(a.weight == std::complex<double>(1.0));

    AtomicMeasure alt = comb.modulated(ExactVector({ExactReal(b, make_rational(1, 2))}));
    AtomicMeasure alt1 = autocorrelation_measure(alt, one);
    for (const auto& a : alt1.atoms()) CHECK(a.weight == std::complex<double>(-1.0));

    // positivity is preserved
    auto v = validate(autocorrelation_measure(comb, one));
    CHECK(v.is_positive);

    ExactVector huge({ExactReal(b, Rational(30))});
    CHECK_THROWS(autocorrelation_measure(comb, huge));
}

TEST_CASE("support of mu_h equals lambda_h of the support") {
    auto b = RealBasis::preset("rational");
    AtomicMeasure comb = comb_z(12, b);
    ExactVector h({ExactReal(b, Rational(3))});
    AtomicMeasure mh = autocorrelation_measure(comb, h);
    PointSet lh = lambda_h(comb.support(), h);
    REQUIRE(mh.size() == lh.size());
    for (int i = 0; i < mh.size(); ++i) CHECK(lh.contains(mh.atoms()[i].point));
}

TEST_CASE("validate: positivity, boundedness, growth fit") {
    auto b = RealBasis::preset("rational");
    auto v0 = validate(comb_z(40, b));
    CHECK(v0.is_positive);
    CHECK(v0.sup_weight == 1.0);
    CHECK(std::abs(v0.growth_exponent) < 0.05);
    CHECK(v0.bounded);

    // weights n^2: growth exponent ~ 2 on a truncation to R = 1000
    std::vector<AtomicMeasure::Atom> atoms;
    for (long k = -1000; k <= 1000; ++k) {
        if (k == 0) continue;
        atoms.push_back({ExactVector({ExactReal(b, Rational(k))}),
                         {static_cast<double>(k) * k, 0.0}});
    }
    auto v2 = validate(AtomicMeasure(std::move(atoms), 1000.5, "n^2"));
    CHECK_FALSE(v2.bounded);
    CHECK(v2.growth_exponent == doctest::Approx(2.0).epsilon(0.05));

    auto alt = comb_z(20, b).modulated(ExactVector({ExactReal(b, make_rational(1, 2))}));
    auto va = validate(alt);
    CHECK_FALSE(va.is_positive);
    CHECK(va.sup_weight == 1.0);
}
