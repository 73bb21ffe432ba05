#if defined(__aarch64__)

#include <arm_neon.h>

#include "secrelay/kernels.hpp"

namespace secrelay::kernels::neon {

// One float64x2_t holds a single complex value as [re im].

std::complex<double> dot_conj(const std::complex<double>* a, const std::complex<double>* b,
                              std::size_t n) {
    const double* pa = reinterpret_cast<const double*>(a);
    const double* pb = reinterpret_cast<const double*>(b);
    // conj(a)*b: a*b accumulates [ar*br, ai*bi] (re = lane0+lane1);
    // a*swap(b) accumulates [ar*bi, ai*br] (im = lane0-lane1).
    float64x2_t rr0 = vdupq_n_f64(0.0), rr1 = vdupq_n_f64(0.0);
    float64x2_t xx0 = vdupq_n_f64(0.0), xx1 = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        float64x2_t va0 = vld1q_f64(pa + 2 * i);
        float64x2_t vb0 = vld1q_f64(pb + 2 * i);
        float64x2_t va1 = vld1q_f64(pa + 2 * i + 2);
        float64x2_t vb1 = vld1q_f64(pb + 2 * i + 2);
        rr0 = vfmaq_f64(rr0, va0, vb0);
        rr1 = vfmaq_f64(rr1, va1, vb1);
        xx0 = vfmaq_f64(xx0, va0, vextq_f64(vb0, vb0, 1));
        xx1 = vfmaq_f64(xx1, va1, vextq_f64(vb1, vb1, 1));
    }
    for (; i < n; ++i) {
        float64x2_t va = vld1q_f64(pa + 2 * i);
        float64x2_t vb = vld1q_f64(pb + 2 * i);
        rr0 = vfmaq_f64(rr0, va, vb);
        xx0 = vfmaq_f64(xx0, va, vextq_f64(vb, vb, 1));
    }
    float64x2_t rr = vaddq_f64(rr0, rr1);
    float64x2_t xx = vaddq_f64(xx0, xx1);
    double re = vgetq_lane_f64(rr, 0) + vgetq_lane_f64(rr, 1);
    double im = vgetq_lane_f64(xx, 0) - vgetq_lane_f64(xx, 1);
    return {re, im};
}

double norm_sqr(const std::complex<double>* a, std::size_t n) {
    const double* pa = reinterpret_cast<const double*>(a);
    float64x2_t acc0 = vdupq_n_f64(0.0), acc1 = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        float64x2_t v0 = vld1q_f64(pa + 2 * i);
        float64x2_t v1 = vld1q_f64(pa + 2 * i + 2);
        acc0 = vfmaq_f64(acc0, v0, v0);
        acc1 = vfmaq_f64(acc1, v1, v1);
    }
    for (; i < n; ++i) {
        float64x2_t v = vld1q_f64(pa + 2 * i);
        acc0 = vfmaq_f64(acc0, v, v);
    }
    float64x2_t acc = vaddq_f64(acc0, acc1);
    return vgetq_lane_f64(acc, 0) + vgetq_lane_f64(acc, 1);
}

void weighted_sum(std::complex<double>* dst, double wa, const std::complex<double>* a, double wb,
                  const std::complex<double>* b, std::size_t n) {
    double* pd = reinterpret_cast<double*>(dst);
    const double* pa = reinterpret_cast<const double*>(a);
    const double* pb = reinterpret_cast<const double*>(b);
    for (std::size_t i = 0; i < n; ++i) {
        float64x2_t va = vld1q_f64(pa + 2 * i);
        float64x2_t vb = vld1q_f64(pb + 2 * i);
        vst1q_f64(pd + 2 * i, vfmaq_n_f64(vmulq_n_f64(vb, wb), va, wa));
    }
}

}  // namespace secrelay::kernels::neon

#endif  // aarch64
