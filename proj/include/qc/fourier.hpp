#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "qc/lattice.hpp"
#include "qc/measure.hpp"
#include "qc/test_function.hpp"

namespace qc {

// --- distributional pairing ----------------------------------------------------

struct PairingResult {
    std::complex<double> value;  // sum mu(x) f^(x) over the truncation
    double tail_bound = 0;       // estimated mass of the missing tail
};
// <mu^, f> = <mu, f^>. Throws when the tail estimate exceeds `tail_tolerance`.
PairingResult pair_spectrum(const AtomicMeasure& mu, const TestFunction& f,
                            double tail_tolerance = 1e-6);

// --- Poisson summation ----------------------------------------------------------

struct PoissonReport {
    std::complex<double> lhs;  // sum over L of g
    std::complex<double> rhs;  // (1/det L) sum over L* of g^
    double abs_error = 0;
    double tail_bound = 0;
};
// Verifies sum_{x in L} g(x) = (1/det L) sum_{s in L*} g^(s) on truncations to
// B_R, where g is the Gaussian f shifted by t0 and modulated by w0 (either may
// be empty). Throws if the truncation cannot meet `tolerance`.
PoissonReport poisson_verify(const Lattice& lattice, const GaussianTF& f,
                             const std::vector<double>& shift,
                             const std::vector<double>& modulation, double radius,
                             double tolerance = 1e-10);

// --- diffraction scans -----------------------------------------------------------

struct ScanGrid {
    std::vector<double> lo;
    std::vector<double> hi;
    std::vector<long> count;  // grid points per axis, >= 2
    int dim() const { return static_cast<int>(lo.size()); }
    double pitch(int axis) const { return (hi[axis] - lo[axis]) / (count[axis] - 1); }
    long total() const;
    std::vector<double> frequency(long flat_index) const;
};

struct Peak {
    std::vector<double> location;  // parabolic refinement per axis
    double amplitude = 0;          // taper-normalized
    double width = 0;              // FWHM estimate from the log-parabola
};

struct SpectrumScan {
    ScanGrid grid;
    std::vector<std::complex<double>> values;  // taper-normalized
    double taper_width = 0;
    double noise_floor = 0;
    std::vector<Peak> peaks;
    bool nyquist_warning = false;
};

// values(t) = sum mu(x) w(x) e^{-2 pi i <t,x>} / Int w, Gaussian taper w of the
// given width (default R_trunc / 6). Peaks are strict local maxima above
// threshold_mult * median |values|.
SpectrumScan diffraction_scan(const AtomicMeasure& mu, const ScanGrid& grid,
                              double taper_width = 0, double threshold_mult = 5.0);

// Smoothed transform at scattered frequencies: Gaussian probe of spectral
// width `probe_width` centered at t. Shared by the scan and the Vandermonde
// consistency check.
std::complex<double> smoothed_transform(const AtomicMeasure& mu,
                                        const std::vector<double>& t, double probe_width);

// --- spectral gap tests -----------------------------------------------------------

struct GapProbe {
    std::vector<double> center;
    double radius = 0;
    double magnitude = 0;  // |<mu^, probe>| with a unit-mass probe
};
struct GapTestReport {
    bool gap = true;
    double threshold = 0;  // relative threshold * measure mass
    std::vector<GapProbe> probes;
};
// Pairs mu^ against `count` bump probes packed inside B_radius(center)
// (supports excluded from a neighborhood of the origin when exclude_origin).
// Declares a gap iff every pairing stays below rel_threshold * mass(mu).
GapTestReport gap_test(const AtomicMeasure& mu, const std::vector<double>& center,
                       double radius, int count, bool exclude_origin = false,
                       double rel_threshold = 1e-9);

// --- gap certificate (explicit Schwartz function) ----------------------------------

struct GapCertificateParams {
    std::vector<double> points;  // finite u.d. set in (-R,R) \ (-delta,delta)
    double R = 1;
    double delta = 1;
    double a = 1;
};

class GapCertificate {
public:
    // Constructs phi(x) = P(e^{i pi x / R}) * psi(x/R)^{floor(R)+1} with
    // psi a band-limited bump with spectrum in (0, a/4), psi(0) = 1.
    // Throws std::domain_error when the density condition fails
    // (#points too large for the admissibility estimate).
    explicit GapCertificate(GapCertificateParams params);

    const GapCertificateParams& params() const { return params_; }
    double gamma() const { return gamma_; }   // sup_{|x|>=1} |psi|
    double epsilon() const { return eps_; }   // n / R
    int power() const { return power_; }

    std::complex<double> phi(double x) const;
    std::complex<double> p_on_circle(std::complex<double> z) const;
    void phi_grid(double x0, double dx, std::span<std::complex<double>> out) const;

    struct Verification {
        std::complex<double> phi_at_zero;    // exactly 1+0i by construction
        double max_on_points = 0;            // max |phi(lambda)|
        double spectral_mass_outside = 0;    // fraction of |FFT| mass outside (0,a)
        double sup_beyond_R = 0;             // grid sup of |phi| on |x| >= R
        double circle_max = 0;               // max |P| on |z|=1 (dense sampling)
        double circle_bound = 0;             // (eR/(delta n))^{2n}
        bool passed = false;
    };
    Verification verify() const;

private:
    GapCertificateParams params_;
    std::vector<double> padded_points_;
    int n_ = 0;  // half the padded point count
    double eps_ = 0;
    int power_ = 1;
    double gamma_ = 0;
    std::optional<BandlimitedBump> psi_;
    std::vector<std::complex<double>> roots_;       // e^{i pi lambda / R}
    std::vector<std::complex<double>> root_denoms_;  // 1 - root
};

}  // namespace qc
