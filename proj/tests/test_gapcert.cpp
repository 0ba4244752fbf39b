#include <cmath>
#include <random>

#include "doctest.h"
#include "qc/fourier.hpp"

using namespace qc;

TEST_CASE("certificate zeros and normalization for a two-point set") {
    // a is chosen large enough for the smallness estimate to admit the set
    GapCertificateParams p{{-1.0, 1.0}, 4.0, 1.0, 8.0};
    GapCertificate cert(p);
    CHECK(cert.phi(0.0) == std::complex<double>(1.0, 0.0));
    CHECK(std::abs(cert.phi(1.0)) == 0.0);
    CHECK(std::abs(cert.phi(-1.0)) == 0.0);
    CHECK(cert.gamma() < 1.0);
}

TEST_CASE("empty point set degenerates to the bump power") {
    GapCertificateParams p{{}, 4.0, 1.0, 2.0};
    GapCertificate cert(p);
    CHECK(cert.phi(0.0) == std::complex<double>(1.0, 0.0));
    auto v = cert.verify();
    CHECK(v.passed);
    CHECK(v.circle_max == doctest::Approx(1.0));
}

TEST_CASE("inadmissible density is rejected with the smallness condition") {
    // 14 points at unit spacing in (-8, 8): eps = 7/8, far beyond a/2 for a = 1
    std::vector<double> pts;
    for (int j = 1; j <= 7; ++j) {
        pts.push_back(j);
        pts.push_back(-j);
    }
    GapCertificateParams p{pts, 8.0, 1.0, 1.0};
    CHECK_THROWS_AS(GapCertificate{p}, std::domain_error);
}

TEST_CASE("worst-case points meet the circle bound") {
    // Lambda = {j delta : 1 <= |j| <= n} maximizes the product estimate
    const double delta = 1.0, R = 12.0;
    const int n = 2;
    std::vector<double> pts;
    for (int j = 1; j <= n; ++j) {
        pts.push_back(j * delta);
        pts.push_back(-j * delta);
    }
    GapCertificateParams p{pts, R, delta, 10.0};
    GapCertificate cert(p);
    auto v = cert.verify();
    CHECK(v.circle_max <= v.circle_bound * (1.0 + 1e-9));
    CHECK(v.passed);
}

TEST_CASE("random admissible instances satisfy all certificate properties") {
    std::mt19937_64 rng(20250810);
    std::uniform_real_distribution<double> ur(5.0, 9.0);
    std::uniform_real_distribution<double> ua(6.0, 14.0);
    std::uniform_real_distribution<double> ud(0.6, 1.0);
    int done = 0, attempts = 0;
    while (done < 5 && attempts < 200) {
        ++attempts;
        const double R = ur(rng), a = ua(rng), delta = ud(rng);
        std::uniform_int_distribution<int> upts(1, 2);
        const int per_side = upts(rng);
        std::vector<double> pts;
        double t = delta + 0.1;
        for (int j = 0; j < per_side && t < R - 0.5; ++j) {
            pts.push_back(t);
            pts.push_back(-t - 0.05);
            t += delta + 0.35;
        }
        try {
            GapCertificate cert({pts, R, delta, a});
            auto v = cert.verify();
            INFO("R=", R, " a=", a, " delta=", delta, " pts=", pts.size());
            CHECK(v.phi_at_zero == std::complex<double>(1.0, 0.0));
            CHECK(v.max_on_points < 1e-12);
            CHECK(v.spectral_mass_outside < 1e-8);
            CHECK(v.sup_beyond_R <= 1.0);
            CHECK(v.circle_max <= v.circle_bound * (1.0 + 1e-9));
            CHECK(v.passed);
            ++done;
        } catch (const std::domain_error&) {
            continue;  // instance not admissible; draw another
        }
    }
    CHECK(done == 5);
}
