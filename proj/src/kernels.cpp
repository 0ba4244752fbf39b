#include "qc/kernels.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <thread>
#include <vector>

namespace qc::kern {

namespace {

constexpr std::size_t kTile = 512;
constexpr double kTwoPi = 6.283185307179586476925286766559;

void scalar_tile(const double* x, const double* w_re, const double* w_im,
                 const double* rot_re, const double* rot_im, std::size_t n, double t_start,
                 std::size_t count, double* out_re, double* out_im) {
    std::vector<double> p_re(n), p_im(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double ph = -kTwoPi * t_start * x[i];
        const double c = std::cos(ph), s = std::sin(ph);
        p_re[i] = w_re[i] * c - w_im[i] * s;
        p_im[i] = w_re[i] * s + w_im[i] * c;
    }
    for (std::size_t g = 0; g < count; ++g) {
        double acc_re = 0, acc_im = 0;
        for (std::size_t i = 0; i < n; ++i) {
            acc_re += p_re[i];
            acc_im += p_im[i];
            const double nr = p_re[i] * rot_re[i] - p_im[i] * rot_im[i];
            p_im[i] = p_re[i] * rot_im[i] + p_im[i] * rot_re[i];
            p_re[i] = nr;
        }
        out_re[g] = acc_re;
        out_im[g] = acc_im;
    }
}

struct State {
    GridTileFn fn = scalar_tile;
    std::string name = "scalar";
    int threads = 0;

    State() {
        threads = static_cast<int>(std::thread::hardware_concurrency());
        if (threads < 1) threads = 1;
        std::string want = "auto";
        if (const char* env = std::getenv("QC_KERNEL")) want = env;
        select(want);
    }

    void select(const std::string& want) {
        if (want == "scalar") {
            fn = scalar_tile;
            name = "scalar";
            return;
        }
        if (want == "avx2" || want == "auto") {
            if (GridTileFn f = avx2_tile_fn()) {
                fn = f;
                name = "avx2";
                return;
            }
            if (want == "avx2") throw std::runtime_error("avx2 backend unavailable");
            fn = scalar_tile;
            name = "scalar";
            return;
        }
        throw std::invalid_argument("unknown kernel backend: " + want);
    }
};

State& state() {
    static State s;
    return s;
}

}  // namespace

GridTileFn scalar_tile_fn() { return scalar_tile; }

#ifndef QC_HAVE_AVX2_TU
GridTileFn avx2_tile_fn() { return nullptr; }
#endif

const std::string& active_backend() { return state().name; }

bool backend_available(const std::string& name) {
    if (name == "scalar") return true;
    if (name == "avx2") return avx2_tile_fn() != nullptr;
    return false;
}

void set_backend(const std::string& name) { state().select(name); }

int thread_count() { return state().threads; }

void set_thread_count(int n) {
    if (n <= 0) {
        n = static_cast<int>(std::thread::hardware_concurrency());
        if (n < 1) n = 1;
    }
    state().threads = n;
}

void phase_sum_grid(std::span<const double> x, std::span<const std::complex<double>> w,
                    double t0, double dt, std::span<std::complex<double>> out) {
    const std::size_t n = x.size();
    if (w.size() != n) throw std::invalid_argument("phase_sum_grid: size mismatch");
    const std::size_t count = out.size();
    if (count == 0) return;
    if (n == 0) {
        for (auto& v : out) v = 0.0;
        return;
    }

    std::vector<double> w_re(n), w_im(n), rot_re(n), rot_im(n);
    for (std::size_t i = 0; i < n; ++i) {
        w_re[i] = w[i].real();
        w_im[i] = w[i].imag();
        const double ph = -kTwoPi * dt * x[i];
        rot_re[i] = std::cos(ph);
        rot_im[i] = std::sin(ph);
    }

    const std::size_t tiles = (count + kTile - 1) / kTile;
    std::vector<double> out_re(count), out_im(count);
    GridTileFn fn = state().fn;

    auto run_tiles = [&](std::size_t first, std::size_t stride) {
        for (std::size_t t = first; t < tiles; t += stride) {
            const std::size_t g0 = t * kTile;
            const std::size_t len = std::min(kTile, count - g0);
            fn(x.data(), w_re.data(), w_im.data(), rot_re.data(), rot_im.data(), n,
               t0 + dt * static_cast<double>(g0), len, out_re.data() + g0,
               out_im.data() + g0);
        }
    };

    const int nthreads = std::min<std::size_t>(state().threads, tiles);
    if (nthreads <= 1) {
        run_tiles(0, 1);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(nthreads);
        for (int k = 0; k < nthreads; ++k)
            pool.emplace_back(run_tiles, static_cast<std::size_t>(k),
                              static_cast<std::size_t>(nthreads));
        for (auto& th : pool) th.join();
    }
    for (std::size_t g = 0; g < count; ++g) out[g] = {out_re[g], out_im[g]};
}

std::complex<double> phase_sum_at(std::span<const double> x,
                                  std::span<const std::complex<double>> w, double t) {
    if (w.size() != x.size()) throw std::invalid_argument("phase_sum_at: size mismatch");
    double acc_re = 0, acc_im = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double ph = -kTwoPi * t * x[i];
        const double c = std::cos(ph), s = std::sin(ph);
        acc_re += w[i].real() * c - w[i].imag() * s;
        acc_im += w[i].real() * s + w[i].imag() * c;
    }
    return {acc_re, acc_im};
}

}  // namespace qc::kern
