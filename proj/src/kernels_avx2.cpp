// AVX2+FMA kernels. Compiled with -mavx2 -mfma; callers must gate on
// runtime CPU support (see kernels_dispatch.cpp).

#include "qgame/kernels.hpp"

#include <immintrin.h>

namespace qgame::kernels {
namespace detail {

namespace {

inline const double* dptr(const cdouble* p) { return reinterpret_cast<const double*>(p); }
inline double* dptr(cdouble* p) { return reinterpret_cast<double*>(p); }

// Product of two complex pairs held as [re0, im0, re1, im1].
inline __m256d cmul2(__m256d a, __m256d b) {
    __m256d br = _mm256_movedup_pd(b);       // [b0.re, b0.re, b1.re, b1.re]
    __m256d bi = _mm256_permute_pd(b, 0xF);  // [b0.im, b0.im, b1.im, b1.im]
    __m256d as = _mm256_permute_pd(a, 0x5);  // [a0.im, a0.re, a1.im, a1.re]
    return _mm256_fmaddsub_pd(a, br, _mm256_mul_pd(as, bi));
}

void matvec8_avx2(const cdouble* m, const cdouble* x, cdouble* y) {
    __m256d x0 = _mm256_loadu_pd(dptr(x) + 0);
    __m256d x1 = _mm256_loadu_pd(dptr(x) + 4);
    __m256d x2 = _mm256_loadu_pd(dptr(x) + 8);
    __m256d x3 = _mm256_loadu_pd(dptr(x) + 12);
    for (int i = 0; i < 8; ++i) {
        const double* row = dptr(m) + i * 16;
        __m256d acc = cmul2(_mm256_loadu_pd(row + 0), x0);
        acc = _mm256_add_pd(acc, cmul2(_mm256_loadu_pd(row + 4), x1));
        acc = _mm256_add_pd(acc, cmul2(_mm256_loadu_pd(row + 8), x2));
        acc = _mm256_add_pd(acc, cmul2(_mm256_loadu_pd(row + 12), x3));
        __m128d lo = _mm256_castpd256_pd128(acc);
        __m128d hi = _mm256_extractf128_pd(acc, 1);
        _mm_storeu_pd(dptr(y) + i * 2, _mm_add_pd(lo, hi));
    }
}

void matmul8_avx2(const cdouble* a, const cdouble* b, cdouble* c) {
    for (int i = 0; i < 8; ++i) {
        __m256d acc0 = _mm256_setzero_pd();
        __m256d acc1 = _mm256_setzero_pd();
        __m256d acc2 = _mm256_setzero_pd();
        __m256d acc3 = _mm256_setzero_pd();
        for (int k = 0; k < 8; ++k) {
            __m256d s = _mm256_broadcast_pd(reinterpret_cast<const __m128d*>(dptr(a) + i * 16 + k * 2));
            const double* brow = dptr(b) + k * 16;
            acc0 = _mm256_add_pd(acc0, cmul2(_mm256_loadu_pd(brow + 0), s));
            acc1 = _mm256_add_pd(acc1, cmul2(_mm256_loadu_pd(brow + 4), s));
            acc2 = _mm256_add_pd(acc2, cmul2(_mm256_loadu_pd(brow + 8), s));
            acc3 = _mm256_add_pd(acc3, cmul2(_mm256_loadu_pd(brow + 12), s));
        }
        double* crow = dptr(c) + i * 16;
        _mm256_storeu_pd(crow + 0, acc0);
        _mm256_storeu_pd(crow + 4, acc1);
        _mm256_storeu_pd(crow + 8, acc2);
        _mm256_storeu_pd(crow + 12, acc3);
    }
}

void abs_sq8_avx2(const cdouble* v, double* out) {
    __m256d v0 = _mm256_loadu_pd(dptr(v) + 0);
    __m256d v1 = _mm256_loadu_pd(dptr(v) + 4);
    __m256d v2 = _mm256_loadu_pd(dptr(v) + 8);
    __m256d v3 = _mm256_loadu_pd(dptr(v) + 12);
    // hadd of squared lanes yields [p0, p2, p1, p3]; permute back to order.
    __m256d lo = _mm256_hadd_pd(_mm256_mul_pd(v0, v0), _mm256_mul_pd(v1, v1));
    __m256d hi = _mm256_hadd_pd(_mm256_mul_pd(v2, v2), _mm256_mul_pd(v3, v3));
    _mm256_storeu_pd(out + 0, _mm256_permute4x64_pd(lo, _MM_SHUFFLE(3, 1, 2, 0)));
    _mm256_storeu_pd(out + 4, _mm256_permute4x64_pd(hi, _MM_SHUFFLE(3, 1, 2, 0)));
}

void weighted_sum3_avx2(const double* w, const double* pay, double* out) {
    __m256d acc = _mm256_setzero_pd();
    for (int k = 0; k < 8; ++k)
        acc = _mm256_fmadd_pd(_mm256_broadcast_sd(w + k), _mm256_loadu_pd(pay + 4 * k), acc);
    alignas(32) double tmp[4];
    _mm256_store_pd(tmp, acc);
    out[0] = tmp[0];
    out[1] = tmp[1];
    out[2] = tmp[2];
}

} // namespace

const Backend& avx2_impl() {
    static const Backend backend{
        "avx2", matvec8_avx2, matmul8_avx2, abs_sq8_avx2, weighted_sum3_avx2};
    return backend;
}

} // namespace detail
}
