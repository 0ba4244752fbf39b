#include <cmath>
#include <complex>

#include "doctest.h"
#include "qc/fourier.hpp"

using namespace qc;

namespace {

AtomicMeasure comb_z(long half_range, double weight_sign_period = 0) {
    auto b = RealBasis::preset("rational");
    std::vector<AtomicMeasure::Atom> atoms;
    for (long k = -half_range; k <= half_range; ++k) {
        double w = 1.0;
        if (weight_sign_period > 0 && (k % 2 != 0)) w = -1.0;
        atoms.push_back({ExactVector({ExactReal(b, Rational(k))}), {w, 0.0}});
    }
    return AtomicMeasure(std::move(atoms), half_range + 0.5, "comb");
}

// independent oracle: direct high-precision summation of sum exp(-pi a n^2)
long double theta_sum(long double a) {
    long double s = 1.0L;
    for (long n = 1; n < 400; ++n) {
        const long double term = expl(-M_PIl * a * n * n);
        s += 2.0L * term;
        if (term < 1e-30L) break;
    }
    return s;
}

}  // namespace

TEST_CASE("pairing a comb with the self-dual Gaussian") {
    AtomicMeasure comb = comb_z(40);
    GaussianTF g;
    g.dim = 1;
    auto r = pair_spectrum(comb, TestFunction::gaussian(g));
    const double oracle = static_cast<double>(theta_sum(1.0L));
    CHECK(std::abs(r.value.real() - oracle) < 1e-12);
    CHECK(std::abs(r.value.imag()) < 1e-14);
    CHECK(r.tail_bound < 1e-12);
}

TEST_CASE("pairing delta_0 gives the transform at the atom") {
    auto b = RealBasis::preset("rational");
    AtomicMeasure delta({{ExactVector({ExactReal(b, Rational(0))}), {1.0, 0.0}}}, 1.0);
    GaussianTF g;
    g.dim = 1;
    g.width = 0.7;
    g.center = {0.3};
    // a lone atom in a unit ball cannot justify a small tail estimate; the
    // point here is only the value
    auto r = pair_spectrum(delta, TestFunction::gaussian(g), 1.0);
    const double zero = 0.0;
    CHECK(std::abs(r.value - g.transform(std::span<const double>(&zero, 1))) == 0.0);
}

TEST_CASE("alternating comb pairs to zero against a bump inside the gap") {
    AtomicMeasure alt = comb_z(200, 1);
    auto probe = TestFunction::bump_probe({{-0.4, 0.4}});
    auto r = pair_spectrum(alt, probe, 1.0);
    CHECK(std::abs(r.value) < 1e-10);

    // the unit comb has an atom at 0: same probe sees it
    AtomicMeasure comb = comb_z(200);
    auto r2 = pair_spectrum(comb, probe, 1.0);
    CHECK(std::abs(r2.value) > 1.0);
}

TEST_CASE("pairing is linear") {
    AtomicMeasure comb = comb_z(30);
    AtomicMeasure alt = comb_z(30, 1);
    GaussianTF g;
    g.dim = 1;
    g.width = 1.3;
    auto f = TestFunction::gaussian(g);
    const std::complex<double> c1(0.7, -0.2), c2(-1.1, 0.4);
    AtomicMeasure combo = comb.scaled(c1).plus(alt.scaled(c2));
    auto lhs = pair_spectrum(combo, f).value;
    auto rhs = c1 * pair_spectrum(comb, f).value + c2 * pair_spectrum(alt, f).value;
    CHECK(std::abs(lhs - rhs) <= 1e-12 * (1.0 + std::abs(rhs)));
}

TEST_CASE("shift covariance of the pairing") {
    AtomicMeasure comb = comb_z(30);
    auto b = RealBasis::preset("rational");
    ExactVector t({ExactReal(b, make_rational(2, 3))});
    GaussianTF g;
    g.dim = 1;
    g.width = 1.1;
    auto lhs = pair_spectrum(comb.shifted(t), TestFunction::gaussian(g), 1e-3).value;
    std::vector<double> mt{-2.0 / 3.0};
    auto rhs = pair_spectrum(comb, TestFunction::gaussian(g.modulated(mt)), 1e-3).value;
    CHECK(std::abs(lhs - rhs) < 1e-10);
}

TEST_CASE("poisson identity on Z with the self-dual Gaussian") {
    auto rb = RealBasis::preset("rational");
    GaussianTF g;
    g.dim = 1;
    auto rep = poisson_verify(Lattice::integers(rb, 1), g, {}, {}, 30.0);
    CHECK(rep.abs_error < 1e-12);
}

TEST_CASE("poisson identity on 2Z against the direct oracle") {
    auto rb = RealBasis::preset("rational");
    GaussianTF g;
    g.dim = 1;
    auto rep = poisson_verify(Lattice::diagonal(rb, {Rational(2)}), g, {}, {}, 30.0);
    // lhs = sum exp(-4 pi n^2), rhs = (1/2) sum exp(-pi n^2 / 4)
    CHECK(std::abs(rep.lhs.real() - static_cast<double>(theta_sum(4.0L))) < 1e-13);
    CHECK(std::abs(rep.rhs.real() - 0.5 * static_cast<double>(theta_sum(0.25L))) < 1e-13);
    CHECK(rep.abs_error < 1e-12);
}

TEST_CASE("poisson identity on the golden-ratio projection lattice") {
    GaussianTF g;
    g.dim = 2;
    g.width = 1.2;
    auto rep = poisson_verify(Lattice::fibonacci(), g, {0.2, -0.4}, {0.3, 0.1}, 30.0);
    CHECK(rep.abs_error < 1e-10);
}

TEST_CASE("poisson rejects truncations too small for the tolerance") {
    auto rb = RealBasis::preset("rational");
    GaussianTF g;
    g.dim = 1;
    g.width = 4.0;  // slow decay
    CHECK_THROWS_AS(poisson_verify(Lattice::integers(rb, 1), g, {}, {}, 3.0, 1e-12),
                    std::runtime_error);
}

TEST_CASE("diffraction of the unit comb: integer peaks of unit height") {
    AtomicMeasure comb = comb_z(200);
    ScanGrid grid{{-3.2}, {3.2}, {1281}};  // pitch 0.005
    SpectrumScan scan = diffraction_scan(comb, grid);
    CHECK_FALSE(scan.nyquist_warning);

    int integer_peaks = 0;
    for (const auto& p : scan.peaks) {
        const double nearest = std::round(p.location[0]);
        CHECK(std::abs(p.location[0] - nearest) < 0.01);
        if (std::abs(nearest) <= 3.0) {
            ++integer_peaks;
            CHECK(p.amplitude == doctest::Approx(1.0).epsilon(0.01));
        }
    }
    CHECK(integer_peaks == 7);

    // off-peak floor: everything at distance > 0.1 from integers
    double floor_max = 0;
    for (long k = 0; k < grid.total(); ++k) {
        const double f = scan.grid.frequency(k)[0];
        if (std::abs(f - std::round(f)) > 0.1)
            floor_max = std::max(floor_max, std::abs(scan.values[k]));
    }
    CHECK(floor_max < 1e-3);
}

TEST_CASE("diffraction of the alternating comb: gap at the origin") {
    AtomicMeasure alt = comb_z(200, 1);
    ScanGrid grid{{-1.6}, {1.6}, {641}};
    SpectrumScan scan = diffraction_scan(alt, grid);
    REQUIRE(!scan.peaks.empty());
    for (const auto& p : scan.peaks) {
        const double frac = p.location[0] - std::floor(p.location[0]);
        CHECK(std::abs(frac - 0.5) < 0.01);          // peaks exactly on Z + 1/2
        CHECK(std::abs(p.location[0]) > 0.4);        // none inside (-0.4, 0.4)
    }
}

TEST_CASE("gap_test: alternating comb has the gap, the unit comb does not") {
    AtomicMeasure alt = comb_z(200, 1);
    auto rep = gap_test(alt, {0.0}, 0.4, 20);
    CHECK(rep.gap);
    for (const auto& p : rep.probes) CHECK(p.magnitude < rep.threshold);

    AtomicMeasure comb = comb_z(200);
    auto rep2 = gap_test(comb, {0.0}, 0.4, 20);
    CHECK_FALSE(rep2.gap);
}

TEST_CASE("smoothed transform sees the comb peaks") {
    AtomicMeasure comb = comb_z(60);
    const double w = 0.05;
    auto at0 = smoothed_transform(comb, {0.0}, w);
    auto at_half = smoothed_transform(comb, {0.5}, w);
    CHECK(std::abs(at0) > 100.0 * std::abs(at_half));
}
