#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include "secrelay/kernels.hpp"

namespace secrelay::kernels::avx2 {

namespace {

inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

}  // namespace

// Interleaved complex layout: one 256-bit register holds two complex values
// as [re0 im0 re1 im1].

std::complex<double> dot_conj(const std::complex<double>* a, const std::complex<double>* b,
                              std::size_t n) {
    const double* pa = reinterpret_cast<const double*>(a);
    const double* pb = reinterpret_cast<const double*>(b);
    // conj(a)*b: re lanes come straight from a*b (ar*br and ai*bi both add);
    // im lanes use b with re/im swapped and the odd lanes negated, giving
    // ar*bi - ai*br.
    const __m256d odd_neg = _mm256_set_pd(-0.0, 0.0, -0.0, 0.0);
    __m256d re0 = _mm256_setzero_pd(), re1 = _mm256_setzero_pd();
    __m256d im0 = _mm256_setzero_pd(), im1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d va0 = _mm256_loadu_pd(pa + 2 * i);
        __m256d vb0 = _mm256_loadu_pd(pb + 2 * i);
        __m256d va1 = _mm256_loadu_pd(pa + 2 * i + 4);
        __m256d vb1 = _mm256_loadu_pd(pb + 2 * i + 4);
        re0 = _mm256_fmadd_pd(va0, vb0, re0);
        re1 = _mm256_fmadd_pd(va1, vb1, re1);
        im0 = _mm256_fmadd_pd(va0, _mm256_xor_pd(_mm256_permute_pd(vb0, 0x5), odd_neg), im0);
        im1 = _mm256_fmadd_pd(va1, _mm256_xor_pd(_mm256_permute_pd(vb1, 0x5), odd_neg), im1);
    }
    for (; i + 2 <= n; i += 2) {
        __m256d va = _mm256_loadu_pd(pa + 2 * i);
        __m256d vb = _mm256_loadu_pd(pb + 2 * i);
        re0 = _mm256_fmadd_pd(va, vb, re0);
        im0 = _mm256_fmadd_pd(va, _mm256_xor_pd(_mm256_permute_pd(vb, 0x5), odd_neg), im0);
    }
    double re = hsum(_mm256_add_pd(re0, re1));
    double im = hsum(_mm256_add_pd(im0, im1));
    for (; i < n; ++i) {
        re += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
        im += a[i].real() * b[i].imag() - a[i].imag() * b[i].real();
    }
    return {re, im};
}

double norm_sqr(const std::complex<double>* a, std::size_t n) {
    const double* pa = reinterpret_cast<const double*>(a);
    __m256d acc0 = _mm256_setzero_pd(), acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d v0 = _mm256_loadu_pd(pa + 2 * i);
        __m256d v1 = _mm256_loadu_pd(pa + 2 * i + 4);
        acc0 = _mm256_fmadd_pd(v0, v0, acc0);
        acc1 = _mm256_fmadd_pd(v1, v1, acc1);
    }
    for (; i + 2 <= n; i += 2) {
        __m256d v = _mm256_loadu_pd(pa + 2 * i);
        acc0 = _mm256_fmadd_pd(v, v, acc0);
    }
    double acc = hsum(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i) acc += a[i].real() * a[i].real() + a[i].imag() * a[i].imag();
    return acc;
}

void weighted_sum(std::complex<double>* dst, double wa, const std::complex<double>* a, double wb,
                  const std::complex<double>* b, std::size_t n) {
    double* pd = reinterpret_cast<double*>(dst);
    const double* pa = reinterpret_cast<const double*>(a);
    const double* pb = reinterpret_cast<const double*>(b);
    const __m256d va_w = _mm256_set1_pd(wa);
    const __m256d vb_w = _mm256_set1_pd(wb);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d va = _mm256_loadu_pd(pa + 2 * i);
        __m256d vb = _mm256_loadu_pd(pb + 2 * i);
        _mm256_storeu_pd(pd + 2 * i, _mm256_fmadd_pd(va, va_w, _mm256_mul_pd(vb, vb_w)));
    }
    for (; i < n; ++i)
        dst[i] = {wa * a[i].real() + wb * b[i].real(), wa * a[i].imag() + wb * b[i].imag()};
}

}  // namespace secrelay::kernels::avx2

#endif  // x86-64
