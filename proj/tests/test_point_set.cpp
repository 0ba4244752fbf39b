#include <cmath>
#include <random>

#include "doctest.h"
#include "qc/lattice.hpp"
#include "qc/point_set.hpp"

using namespace qc;

namespace {

PointSet integer_segment(long lo, long hi) {
    auto b = RealBasis::preset("rational");
    std::vector<ExactVector> pts;
    for (long k = lo; k <= hi; ++k) pts.push_back(ExactVector({ExactReal(b, Rational(k))}));
    return PointSet(std::move(pts), std::max(std::abs(lo), std::abs(hi)) + 0.5, "Z segment");
}

}  // namespace

TEST_CASE("min_gap basics") {
    CHECK(min_gap(integer_segment(-10, 10)) == doctest::Approx(1.0));

    auto b = RealBasis::preset("rational");
    std::vector<ExactVector> pts{ExactVector({ExactReal(b, Rational(0))}),
                                 ExactVector({ExactReal(b, make_rational(1, 9))}),
                                 ExactVector({ExactReal(b, Rational(5))})};
    CHECK(min_gap(PointSet(std::move(pts), 6.0, "091/9")) ==
          doctest::Approx(1.0 / 9.0).epsilon(1e-12));

    CHECK_THROWS(min_gap(PointSet({ExactVector({ExactReal(b, Rational(0))})}, 1.0, "single")));
}

TEST_CASE("difference set and lambda_h on integer truncations") {
    auto b = RealBasis::preset("rational");
    std::vector<ExactVector> pts{ExactVector({ExactReal(b, Rational(0))}),
                                 ExactVector({ExactReal(b, Rational(1))}),
                                 ExactVector({ExactReal(b, Rational(3))})};
    PointSet a(std::move(pts), 3.5, "013");
    PointSet d = difference_set(a, 10.0);
    CHECK(d.size() == 7);  // {0, +-1, +-2, +-3}
    for (long v : {0L, 1L, -1L, 2L, -2L, 3L, -3L})
        CHECK(d.contains(ExactVector({ExactReal(b, Rational(v))})));

    PointSet z = integer_segment(-10, 10);
    ExactVector one({ExactReal(b, Rational(1))});
    PointSet lh = lambda_h(z, one);
    CHECK(lh.size() == 19);  // |x| <= 9.5 and x+1 present
    CHECK(lh.contains(ExactVector({ExactReal(b, Rational(-9))})));
    CHECK(lh.contains(ExactVector({ExactReal(b, Rational(8))})));
}

TEST_CASE("covering radius flags non-relatively-dense sets") {
    auto z = integer_segment(-10, 10);
    auto rep = covering_radius(z);
    CHECK(rep.radius == doctest::Approx(0.5).epsilon(0.3));
    CHECK(rep.relatively_dense);

    // Z x {0} seen inside a 2-D ball: distances grow with the probe region
    auto b = RealBasis::preset("rational");
    std::vector<ExactVector> line;
    for (long k = -10; k <= 10; ++k)
        line.push_back(ExactVector({ExactReal(b, Rational(k)), ExactReal(b, Rational(0))}));
    auto rep2 = covering_radius(PointSet(std::move(line), 10.5, "Zx{0}"));
    CHECK_FALSE(rep2.relatively_dense);
    CHECK(rep2.radius > 0.4 * rep2.probe_region);
}

TEST_CASE("density estimators on Z and ordering invariant") {
    PointSet z = integer_segment(-80, 80);
    auto rep = densities(z, {20.0, 40.0, 60.0});
    for (size_t i = 0; i < rep.radii.size(); ++i) {
        CHECK(rep.d_minus[i] <= rep.d_sharp[i] + 1e-12);
        CHECK(rep.d_sharp[i] <= rep.d_plus[i] + 1e-12);
        CHECK(rep.d_sharp[i] == doctest::Approx(1.0).epsilon(0.02));
    }
    CHECK(rep.extrapolated_sharp == doctest::Approx(1.0).epsilon(0.02));
    CHECK_THROWS(densities(z, {100.0}));  // beyond the 0.8 R_trunc guard
}

TEST_CASE("density gap between d- and d+ for a thinned integer set") {
    // Z with [2^k, 2^k + 2^{k-1}] removed has persistent low- and high-density
    // windows at every scale.
    auto b = RealBasis::preset("rational");
    std::vector<ExactVector> pts;
    auto removed = [](long k) {
        for (long p = 2; p <= 512; p *= 2)
            if (k >= p && k <= p + p / 2) return true;
        return false;
    };
    for (long k = -700; k <= 700; ++k)
        if (!removed(std::abs(k)) || k < 0)
            pts.push_back(ExactVector({ExactReal(b, Rational(k))}));
    PointSet thinned(std::move(pts), 701.0, "thinned Z");
    auto rep = densities(thinned, {80.0});
    CHECK(rep.d_plus[0] - rep.d_minus[0] >= 0.2);
}

TEST_CASE("density translation stability within the declared pitch bound") {
    PointSet z = integer_segment(-80, 80);
    auto before = densities(z, {30.0});
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-0.1, 0.1);
    auto b = RealBasis::preset("rational");
    ExactVector t({ExactReal(b, make_rational(static_cast<long>(u(rng) * 1000), 10000))});
    auto after = densities(z.translated(t), {30.0});
    CHECK(std::abs(after.d_minus[0] - before.d_minus[0]) < before.pitch_bound[0]);
    CHECK(std::abs(after.d_sharp[0] - before.d_sharp[0]) < before.pitch_bound[0]);
    CHECK(std::abs(after.d_plus[0] - before.d_plus[0]) < before.pitch_bound[0]);
}

TEST_CASE("meyer witness: Z gives F = {0}") {
    PointSet z = integer_segment(-60, 60);
    auto w = meyer_witness(z, 8);
    REQUIRE(w.success);
    REQUIRE(w.residues.size() == 1);
    CHECK(w.residues[0].is_zero());
}

TEST_CASE("meyer witness: two incommensurate cosets have a small residue set") {
    auto b2 = RealBasis::preset("sqrt2");
    Lattice z = Lattice::integers(b2, 1);
    ExactVector zero(b2, 1);
    ExactVector s2({ExactReal::generator(b2, 1)});
    auto pts = enumerate_in_ball(CosetSystem(z, {zero, s2}), 60.0);
    std::vector<ExactVector> v;
    for (auto& p : pts) v.push_back(p.point);
    PointSet a(std::move(v), 60.0, "Z u Z+sqrt2");
    auto w = meyer_witness(a, 3);
    REQUIRE(w.success);
    CHECK(w.residues.size() <= 3);
    // every residue covers: h = a + r with a in the set
    for (const auto& r : w.residues) {
        bool zero_or_small = r.norm() < 3.0;
        CHECK(zero_or_small);
    }
}
