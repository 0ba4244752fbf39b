// AVX2 variant of the grid phase-sum tile. Compiled with -mavx2 -mfma in its
// own translation unit; selected at runtime only when the CPU reports AVX2.

#include "qc/kernels.hpp"

#include <cmath>
#include <immintrin.h>
#include <vector>

namespace qc::kern {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

void avx2_tile(const double* x, const double* w_re, const double* w_im,
               const double* rot_re, const double* rot_im, std::size_t n, double t_start,
               std::size_t count, double* out_re, double* out_im) {
    std::vector<double> p_re(n), p_im(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double ph = -kTwoPi * t_start * x[i];
        const double c = std::cos(ph), s = std::sin(ph);
        p_re[i] = w_re[i] * c - w_im[i] * s;
        p_im[i] = w_re[i] * s + w_im[i] * c;
    }

    const std::size_t n4 = n & ~std::size_t(3);
    for (std::size_t g = 0; g < count; ++g) {
        __m256d acc_re = _mm256_setzero_pd();
        __m256d acc_im = _mm256_setzero_pd();
        for (std::size_t i = 0; i < n4; i += 4) {
            const __m256d pre = _mm256_loadu_pd(p_re.data() + i);
            const __m256d pim = _mm256_loadu_pd(p_im.data() + i);
            const __m256d rre = _mm256_loadu_pd(rot_re + i);
            const __m256d rim = _mm256_loadu_pd(rot_im + i);
            acc_re = _mm256_add_pd(acc_re, pre);
            acc_im = _mm256_add_pd(acc_im, pim);
            // p *= r
            const __m256d nre = _mm256_fmsub_pd(pre, rre, _mm256_mul_pd(pim, rim));
            const __m256d nim = _mm256_fmadd_pd(pre, rim, _mm256_mul_pd(pim, rre));
            _mm256_storeu_pd(p_re.data() + i, nre);
            _mm256_storeu_pd(p_im.data() + i, nim);
        }
        alignas(32) double lanes[4];
        _mm256_store_pd(lanes, acc_re);
        double sum_re = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
        _mm256_store_pd(lanes, acc_im);
        double sum_im = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
        for (std::size_t i = n4; i < n; ++i) {
            sum_re += p_re[i];
            sum_im += p_im[i];
            const double nr = p_re[i] * rot_re[i] - p_im[i] * rot_im[i];
            p_im[i] = p_re[i] * rot_im[i] + p_im[i] * rot_re[i];
            p_re[i] = nr;
        }
        out_re[g] = sum_re;
        out_im[g] = sum_im;
    }
}

}  // namespace

GridTileFn avx2_tile_fn() {
    if (!__builtin_cpu_supports("avx2") || !__builtin_cpu_supports("fma")) return nullptr;
    return avx2_tile;
}

}  // namespace qc::kern
