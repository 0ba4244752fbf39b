#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string>

namespace qc::kern {

// Phase-sum kernels behind diffraction scans, spectral pairings and
// band-limited-bump quadrature:
//
//     out[g] = sum_i w_i * exp(-2*pi*I * (t0 + g*dt) * x_i)
//
// The uniform grid lets the inner loop advance per-atom phasors by a fixed
// complex rotation instead of calling sincos. Work is tiled; every tile
// recomputes its starting phasors from libm sincos, which bounds rotation
// drift and makes the output independent of the thread count.
//
// Backends: "scalar" (reference) and "avx2" (runtime-detected). The active
// backend can be forced with set_backend() or the QC_KERNEL environment
// variable; both backends must agree within ~1e-12 relative (equivalence is
// part of the test suite).

const std::string& active_backend();
bool backend_available(const std::string& name);
void set_backend(const std::string& name);  // "auto", "scalar", "avx2"

int thread_count();
void set_thread_count(int n);  // n <= 0 restores the hardware default

void phase_sum_grid(std::span<const double> x, std::span<const std::complex<double>> w,
                    double t0, double dt, std::span<std::complex<double>> out);

// Single scattered frequency: sum_i w_i * exp(-2*pi*I * t * x_i).
std::complex<double> phase_sum_at(std::span<const double> x,
                                  std::span<const std::complex<double>> w, double t);

// Raw tile entry points (exposed for the equivalence tests).
using GridTileFn = void (*)(const double* x, const double* w_re, const double* w_im,
                            const double* rot_re, const double* rot_im, std::size_t n,
                            double t_start, std::size_t count, double* out_re,
                            double* out_im);
GridTileFn scalar_tile_fn();
GridTileFn avx2_tile_fn();  // nullptr when unavailable

}  // namespace qc::kern
