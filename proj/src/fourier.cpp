#include "qc/fourier.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qc/kernels.hpp"
#include "qc/point_set.hpp"

namespace qc {

namespace {

constexpr double kPi = std::numbers::pi;

double norm_of(const std::vector<double>& v) {
    double s = 0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

// identical expression everywhere, so z - root cancels exactly at the points
std::complex<double> unit_phase(double x, double R) {
    const double ang = kPi * (x / R);
    return {std::cos(ang), std::sin(ang)};
}

}  // namespace

// --- pairing ---------------------------------------------------------------------

PairingResult pair_spectrum(const AtomicMeasure& mu, const TestFunction& f,
                            double tail_tolerance) {
    if (mu.size() == 0) throw std::invalid_argument("empty measure");
    if (f.dimension() != mu.dimension())
        throw std::invalid_argument("dimension mismatch between measure and test function");
    PairingResult out;
    std::complex<double> acc = 0.0;
    for (int i = 0; i < mu.size(); ++i)
        acc += mu.weights()[i] * f.transform(mu.numeric_points()[i]);
    out.value = acc;

    const double density =
        mu.size() / ball_volume(mu.dimension(), mu.r_trunc());
    out.tail_bound = mu.sup_weight() * density * f.transform_tail(mu.r_trunc());
    if (out.tail_bound > tail_tolerance)
        throw std::runtime_error(
            "pairing tail bound " + std::to_string(out.tail_bound) +
            " exceeds tolerance; increase the truncation radius R_trunc");
    return out;
}

// --- Poisson ---------------------------------------------------------------------

PoissonReport poisson_verify(const Lattice& lattice, const GaussianTF& f,
                             const std::vector<double>& shift,
                             const std::vector<double>& modulation, double radius,
                             double tolerance) {
    const int n = lattice.dimension();
    if (f.dim != n) throw std::invalid_argument("test function dimension mismatch");
    GaussianTF g = f;
    if (!shift.empty()) g = g.shifted(shift);
    if (!modulation.empty()) g = g.modulated(modulation);

    // cell diameter slack for the Riemann-style tail estimates
    double cell = 0;
    for (int c = 0; c < n; ++c) {
        double s = 0;
        auto col = lattice.basis_matrix().column(c).to_doubles();
        for (double v : col) s += v * v;
        cell += std::sqrt(s);
    }
    const double det = lattice.det_numeric();
    Lattice dual = lattice.dual();
    const double dual_det = dual.det_numeric();

    // function-side decay mirrors the transform formulas with width 1/w
    GaussianTF mirror;
    mirror.dim = n;
    mirror.width = 1.0 / g.width;
    mirror.amplitude = std::abs(g.amplitude) * std::pow(g.width, -n);
    mirror.modulation = g.center;
    const double lhs_tail = (1.0 / det) * mirror.transform_tail(std::max(1.0, radius - cell));
    const double rhs_tail =
        (1.0 / det) * (1.0 / dual_det) * g.transform_tail(std::max(1.0, radius - cell));
    PoissonReport rep;
    rep.tail_bound = lhs_tail + rhs_tail;
    if (rep.tail_bound > tolerance)
        throw std::runtime_error("truncation radius too small for the requested tolerance");

    std::complex<double> lhs = 0.0;
    for (const auto& p : enumerate_in_ball(lattice, radius)) {
        std::vector<double> x = p.point.to_doubles();
        lhs += g.value(x);
    }
    std::complex<double> rhs = 0.0;
    for (const auto& p : enumerate_in_ball(dual, radius)) {
        std::vector<double> t = p.point.to_doubles();
        rhs += g.transform(t);
    }
    rhs /= det;
    rep.lhs = lhs;
    rep.rhs = rhs;
    rep.abs_error = std::abs(lhs - rhs);
    return rep;
}

// --- scans -----------------------------------------------------------------------

long ScanGrid::total() const {
    long t = 1;
    for (long c : count) t *= c;
    return t;
}

std::vector<double> ScanGrid::frequency(long flat) const {
    std::vector<double> f(dim());
    for (int a = dim() - 1; a >= 0; --a) {
        const long i = flat % count[a];
        flat /= count[a];
        f[a] = lo[a] + pitch(a) * static_cast<double>(i);
    }
    return f;
}

std::complex<double> smoothed_transform(const AtomicMeasure& mu,
                                        const std::vector<double>& t, double probe_width) {
    std::complex<double> acc = 0.0;
    const double w2 = probe_width * probe_width;
    const double scale = std::pow(probe_width, mu.dimension());
    for (int i = 0; i < mu.size(); ++i) {
        const auto& x = mu.numeric_points()[i];
        double q = 0, phase = 0;
        for (size_t d = 0; d < x.size(); ++d) {
            q += x[d] * x[d];
            phase -= t[d] * x[d];
        }
        acc += mu.weights()[i] * scale * std::exp(-kPi * w2 * q) *
               std::complex<double>(std::cos(2 * kPi * phase), std::sin(2 * kPi * phase));
    }
    return acc;
}

SpectrumScan diffraction_scan(const AtomicMeasure& mu, const ScanGrid& grid,
                              double taper_width, double threshold_mult) {
    if (mu.size() == 0) throw std::invalid_argument("empty measure");
    const int dim = mu.dimension();
    if (grid.dim() != dim) throw std::invalid_argument("grid dimension mismatch");
    for (long c : grid.count)
        if (c < 2) throw std::invalid_argument("grid needs at least 2 points per axis");

    SpectrumScan scan;
    scan.grid = grid;
    scan.taper_width = taper_width > 0 ? taper_width : mu.r_trunc() / 6.0;
    for (int a = 0; a < dim; ++a)
        if (grid.pitch(a) < 1.0 / (2.0 * mu.r_trunc())) scan.nyquist_warning = true;

    const double sigma = scan.taper_width;
    const double norm = std::pow(sigma, dim);
    const long total = grid.total();
    scan.values.assign(total, 0.0);

    // tapered weights
    std::vector<std::complex<double>> tw(mu.size());
    std::vector<double> last_axis(mu.size());
    for (int i = 0; i < mu.size(); ++i) {
        const auto& x = mu.numeric_points()[i];
        double q = 0;
        for (double v : x) q += v * v;
        tw[i] = mu.weights()[i] * std::exp(-kPi * q / (sigma * sigma));
        last_axis[i] = x[dim - 1];
    }

    const long inner = grid.count[dim - 1];
    const long outer = total / inner;
    std::vector<std::complex<double>> line(inner);
    std::vector<std::complex<double>> rotated(mu.size());
    for (long o = 0; o < outer; ++o) {
        const std::vector<double> f0 = grid.frequency(o * inner);
        if (dim == 1) {
            kern::phase_sum_grid(last_axis, tw, grid.lo[0], grid.pitch(0), line);
        } else {
            for (int i = 0; i < mu.size(); ++i) {
                double phase = 0;
                const auto& x = mu.numeric_points()[i];
                for (int a = 0; a < dim - 1; ++a) phase -= f0[a] * x[a];
                rotated[i] = tw[i] * std::complex<double>(std::cos(2 * kPi * phase),
                                                          std::sin(2 * kPi * phase));
            }
            kern::phase_sum_grid(last_axis, rotated, grid.lo[dim - 1], grid.pitch(dim - 1),
                                 line);
        }
        for (long k = 0; k < inner; ++k) scan.values[o * inner + k] = line[k] / norm;
    }

    // noise floor: median magnitude scaled up, with a relative-to-max floor so
    // numerically silent regions of clean combs do not produce dust peaks
    std::vector<double> mags(total);
    double max_mag = 0;
    for (long k = 0; k < total; ++k) {
        mags[k] = std::abs(scan.values[k]);
        max_mag = std::max(max_mag, mags[k]);
    }
    std::vector<double> sorted = mags;
    std::nth_element(sorted.begin(), sorted.begin() + total / 2, sorted.end());
    scan.noise_floor = std::max(threshold_mult * sorted[total / 2], 1e-9 * max_mag);

    // strict local maxima above the floor, refined by a log-parabola per axis
    std::vector<long> strides(dim, 1);
    for (int a = dim - 2; a >= 0; --a) strides[a] = strides[a + 1] * grid.count[a + 1];
    for (long k = 0; k < total; ++k) {
        if (mags[k] <= scan.noise_floor) continue;
        bool interior = true, is_max = true;
        long rem = k;
        std::vector<long> idx(dim);
        for (int a = 0; a < dim; ++a) {
            idx[a] = rem / strides[a];
            rem %= strides[a];
            if (idx[a] == 0 || idx[a] == grid.count[a] - 1) interior = false;
        }
        if (!interior) continue;
        for (int a = 0; a < dim && is_max; ++a) {
            if (mags[k] <= mags[k - strides[a]] || mags[k] <= mags[k + strides[a]])
                is_max = false;
        }
        if (!is_max) continue;

        Peak peak;
        peak.location.resize(dim);
        double log_amp = std::log(mags[k]);
        double width_acc = 0;
        for (int a = 0; a < dim; ++a) {
            const double L = std::log(std::max(mags[k - strides[a]], 1e-300));
            const double C = std::log(mags[k]);
            const double Rv = std::log(std::max(mags[k + strides[a]], 1e-300));
            const double curve = L - 2 * C + Rv;
            double off = 0;
            if (curve < -1e-12) off = 0.5 * (L - Rv) / curve;
            off = std::clamp(off, -0.5, 0.5);
            peak.location[a] = grid.lo[a] + grid.pitch(a) * (idx[a] + off);
            log_amp += -0.25 * (L - Rv) * off;
            if (curve < -1e-12)
                width_acc += grid.pitch(a) * 2.0 * std::sqrt(2.0 * std::log(2.0) / -curve);
        }
        peak.amplitude = std::exp(log_amp);
        peak.width = width_acc / dim;
        scan.peaks.push_back(std::move(peak));
    }
    std::sort(scan.peaks.begin(), scan.peaks.end(),
              [](const Peak& a, const Peak& b) { return a.amplitude > b.amplitude; });
    return scan;
}

// --- gap tests --------------------------------------------------------------------

GapTestReport gap_test(const AtomicMeasure& mu, const std::vector<double>& center,
                       double radius, int count, bool exclude_origin,
                       double rel_threshold) {
    if (radius <= 0) throw std::invalid_argument("radius must be positive");
    const int dim = mu.dimension();
    if (static_cast<int>(center.size()) != dim)
        throw std::invalid_argument("center dimension mismatch");

    // Gaussian taper suppresses the truncation boundary; pairings read the
    // smoothed transform, which spreads each spectral atom by ~1/sigma.
    const double sigma = mu.r_trunc() / 6.0;
    std::vector<double> taper(mu.size());
    double tapered_mass = 0;
    for (int i = 0; i < mu.size(); ++i) {
        double q = 0;
        for (double v : mu.numeric_points()[i]) q += v * v;
        taper[i] = std::exp(-kPi * q / (sigma * sigma));
        tapered_mass += std::abs(mu.weights()[i]) * taper[i];
    }

    GapTestReport rep;
    rep.threshold = rel_threshold * tapered_mass;

    std::vector<std::vector<std::pair<double, double>>> boxes;
    if (dim == 1) {
        const double lo = center[0] - radius, hi = center[0] + radius;
        std::vector<std::pair<double, double>> segments;
        if (exclude_origin && lo < 0.0 && hi > 0.0) {
            segments.push_back({lo, 0.0});
            segments.push_back({0.0, hi});
        } else {
            // one probe straddles the center, so an atom of mu^ exactly there
            // cannot slip between probe supports
            boxes.push_back({{center[0] - radius / 4, center[0] + radius / 4}});
            segments.push_back({lo, hi});
        }
        double total_len = 0;
        for (auto& s : segments) total_len += s.second - s.first;
        for (auto& s : segments) {
            const double len = s.second - s.first;
            int k = std::max(1, static_cast<int>(std::lround(count * len / total_len)));
            for (int j = 0; j < k && static_cast<int>(boxes.size()) < count; ++j) {
                const double a = s.first + len * j / k;
                const double b = s.first + len * (j + 1) / k;
                const double margin = 0.08 * (b - a);
                boxes.push_back({{a + margin, b - margin}});
            }
        }
    } else {
        const int g = std::max(2, static_cast<int>(std::ceil(std::sqrt((double)count))));
        const double step = 2.0 * radius / (g + 1);
        const double rho = 0.4 * step;
        for (int i = 1; i <= g && static_cast<int>(boxes.size()) < count; ++i)
            for (int j = 1; j <= g && static_cast<int>(boxes.size()) < count; ++j) {
                std::vector<double> c = {center[0] - radius + step * i,
                                         center[1] - radius + step * j};
                double dc = 0;
                for (int a = 0; a < dim; ++a) dc += (c[a] - center[a]) * (c[a] - center[a]);
                if (std::sqrt(dc) + rho * std::sqrt(2.0) > radius) continue;
                if (exclude_origin &&
                    std::max(std::abs(c[0]), std::abs(c[1])) <= rho)
                    continue;
                boxes.push_back({{c[0] - rho, c[0] + rho}, {c[1] - rho, c[1] + rho}});
            }
    }

    for (const auto& box : boxes) {
        TestFunction probe = TestFunction::bump_probe(box);
        std::complex<double> acc = 0.0;
        for (int i = 0; i < mu.size(); ++i)
            acc += mu.weights()[i] * taper[i] * probe.transform(mu.numeric_points()[i]);
        GapProbe gp;
        gp.radius = 0.5 * (box[0].second - box[0].first);
        for (const auto& [lo, hi] : box) gp.center.push_back(0.5 * (lo + hi));
        gp.magnitude = std::abs(acc);
        if (gp.magnitude >= rep.threshold) rep.gap = false;
        rep.probes.push_back(std::move(gp));
    }
    return rep;
}

// --- gap certificate ----------------------------------------------------------------

GapCertificate::GapCertificate(GapCertificateParams params) : params_(std::move(params)) {
    const double R = params_.R, delta = params_.delta, a = params_.a;
    if (R < 1) throw std::invalid_argument("R must be >= 1");
    if (delta <= 0 || a <= 0) throw std::invalid_argument("delta and a must be positive");
    padded_points_ = params_.points;
    std::sort(padded_points_.begin(), padded_points_.end());
    for (double p : padded_points_)
        if (std::abs(p) >= R || std::abs(p) < delta)
            throw std::invalid_argument("points must lie in (-R,R) minus (-delta,delta)");
    for (size_t i = 1; i < padded_points_.size(); ++i)
        if (padded_points_[i] - padded_points_[i - 1] < delta - 1e-12)
            throw std::invalid_argument("points violate the declared separation delta");

    if (padded_points_.size() % 2 == 1) {
        // even count is assumed by the estimate; add one admissible point
        bool placed = false;
        for (double t = delta; t < R - 1e-9 && !placed; t += delta / 2) {
            for (double cand : {t, -t}) {
                bool ok = std::abs(cand) >= delta && std::abs(cand) < R;
                for (double p : padded_points_)
                    if (std::abs(p - cand) < delta) { ok = false; break; }
                if (ok) {
                    padded_points_.push_back(cand);
                    placed = true;
                    break;
                }
            }
        }
        if (!placed)
            throw std::domain_error("cannot pad the point set to even size; set too dense");
        std::sort(padded_points_.begin(), padded_points_.end());
    }

    n_ = static_cast<int>(padded_points_.size()) / 2;
    eps_ = static_cast<double>(n_) / R;
    power_ = static_cast<int>(std::floor(R)) + 1;

    psi_.emplace(std::vector<std::pair<double, double>>{{0.0, a / 4.0}});

    // gamma = sup_{|x|>=1} |psi|: grid [1,50] at pitch 0.01, then the
    // integration-by-parts envelope beyond
    const double pitch = 0.01;
    const int count = static_cast<int>((50.0 - 1.0) / pitch) + 1;
    std::vector<std::complex<double>> vals(count);
    psi_->kernel.fourier_grid_1d(1.0, pitch, +1, vals);
    double g = 0;
    for (const auto& v : vals) g = std::max(g, std::abs(v));
    gamma_ = std::max(g, psi_->kernel.tail_bound(50.0));

    const double smallness =
        eps_ > 0 ? gamma_ * std::pow(std::numbers::e / (delta * eps_), 2.0 * eps_) : gamma_;
    if (!(eps_ < a / 2.0) || !(smallness < 1.0))
        throw std::domain_error(
            "density condition fails: #points/(2R) = " + std::to_string(eps_) +
            " is too large for a spectral gap of size " + std::to_string(a) +
            " (need eps < a/2 and gamma*(e/(delta*eps))^{2 eps} < 1)");

    roots_.reserve(padded_points_.size());
    root_denoms_.reserve(padded_points_.size());
    for (double p : padded_points_) {
        roots_.push_back(unit_phase(p, R));
        root_denoms_.push_back(std::complex<double>(1.0, 0.0) - roots_.back());
    }
}

std::complex<double> GapCertificate::p_on_circle(std::complex<double> z) const {
    // P(1) = 1 is an identity of the construction; complex division would
    // leave ulp-level imaginary dust on it otherwise.
    if (z == std::complex<double>(1.0, 0.0)) return {1.0, 0.0};
    std::complex<double> acc = 1.0;
    for (size_t i = 0; i < roots_.size(); ++i) acc *= (z - roots_[i]) / root_denoms_[i];
    return acc;
}

std::complex<double> GapCertificate::phi(double x) const {
    std::complex<double> p = p_on_circle(unit_phase(x, params_.R));
    const double u = x / params_.R;
    std::complex<double> psi = psi_->value(std::span<const double>(&u, 1));
    std::complex<double> pw = 1.0;
    for (int k = 0; k < power_; ++k) pw *= psi;
    return p * pw;
}

void GapCertificate::phi_grid(double x0, double dx,
                              std::span<std::complex<double>> out) const {
    const double R = params_.R;
    std::vector<std::complex<double>> psi(out.size());
    psi_->kernel.fourier_grid_1d(x0 / R, dx / R, +1, psi);
    for (size_t j = 0; j < out.size(); ++j) {
        const double x = x0 + dx * static_cast<double>(j);
        std::complex<double> pw = 1.0;
        for (int k = 0; k < power_; ++k) pw *= psi[j];
        out[j] = p_on_circle(unit_phase(x, R)) * pw;
    }
}

GapCertificate::Verification GapCertificate::verify() const {
    Verification v;
    const double R = params_.R, a = params_.a;
    v.phi_at_zero = phi(0.0);
    for (double p : padded_points_) v.max_on_points = std::max(v.max_on_points, std::abs(phi(p)));

    // dense FFT of samples for the spectral mass outside (0, a)
    const double h = 1.0 / (8.0 * std::max(a, 1.0));
    double X = 8.0 * R;
    std::vector<std::complex<double>> samples;
    for (int attempt = 0; attempt < 8; ++attempt) {
        const long m = static_cast<long>(std::ceil(2.0 * X / h));
        long n = 1;
        while (n < m) n *= 2;
        samples.assign(n, 0.0);
        phi_grid(-X, 2.0 * X / static_cast<double>(n), samples);
        double peak = 0, edge = 0;
        for (long j = 0; j < n; ++j) {
            const double mag = std::abs(samples[j]);
            peak = std::max(peak, mag);
            if (j < n / 20 || j >= n - n / 20) edge = std::max(edge, mag);
        }
        if (edge < 1e-13 * peak || X > 2048.0 * R) break;
        if (attempt < 7) X *= 2.0;
    }
    const long n = static_cast<long>(samples.size());
    const double step = 2.0 * X / static_cast<double>(n);

    std::vector<std::complex<double>> spectrum(n);
    fftw_plan plan = fftw_plan_dft_1d(
        static_cast<int>(n), reinterpret_cast<fftw_complex*>(samples.data()),
        reinterpret_cast<fftw_complex*>(spectrum.data()), FFTW_FORWARD, FFTW_ESTIMATE);
    fftw_execute(plan);
    fftw_destroy_plan(plan);

    double inside = 0, total = 0;
    for (long k = 0; k < n; ++k) {
        const long signed_k = k <= n / 2 ? k : k - n;
        const double freq = static_cast<double>(signed_k) / (step * static_cast<double>(n));
        const double mag = std::abs(spectrum[k]);
        total += mag;
        if (freq > 0.0 && freq < a) inside += mag;
    }
    v.spectral_mass_outside = total > 0 ? (total - inside) / total : 0.0;

    // grid sup of |phi| beyond R, from the same sample grid
    for (long j = 0; j < n; ++j) {
        const double x = -X + step * static_cast<double>(j);
        if (std::abs(x) >= R) v.sup_beyond_R = std::max(v.sup_beyond_R, std::abs(samples[j]));
    }

    // max |P| on the unit circle vs the product estimate
    const int m_circle = 8192;
    for (int k = 0; k < m_circle; ++k) {
        const double ang = 2.0 * kPi * k / m_circle;
        v.circle_max =
            std::max(v.circle_max, std::abs(p_on_circle({std::cos(ang), std::sin(ang)})));
    }
    if (n_ == 0) {
        v.circle_bound = 1.0;
    } else {
        v.circle_bound =
            std::pow(std::numbers::e * R / (params_.delta * n_), 2.0 * n_);
    }

    v.passed = v.phi_at_zero == std::complex<double>(1.0, 0.0) &&
               v.max_on_points < 1e-12 && v.spectral_mass_outside < 1e-8 &&
               v.sup_beyond_R <= 1.0 && v.circle_max <= v.circle_bound * (1.0 + 1e-9);
    return v;
}

}  // namespace qc
