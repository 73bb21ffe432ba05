#pragma once

#include <complex>
#include <span>
#include <string>

namespace secrelay::kernels {

// Data-parallel reductions the channel sampler spends its time in. A scalar
// reference implementation always exists; AVX2 (x86-64) and NEON (aarch64)
// variants are selected at runtime from CPU features. The environment
// variable SECRELAY_KERNELS=scalar|avx2|neon|auto pins the choice before
// first use. Vector variants reassociate the accumulation, so results may
// differ from scalar by a few ulp; equivalence is tested to tight tolerance.

enum class Variant { scalar, avx2, neon };

/// The variant the dispatched entry points currently use.
Variant active();

/// True when the variant is compiled in and the CPU supports it.
bool available(Variant v);

/// Forces a specific variant (tests); throws InvalidParameter if unavailable.
void force(Variant v);

const char* name(Variant v);

/// sum over i of conj(a[i]) * b[i]
std::complex<double> dot_conj(std::span<const std::complex<double>> a,
                              std::span<const std::complex<double>> b);

/// sum over i of |a[i]|^2
double norm_sqr(std::span<const std::complex<double>> a);

/// dst[i] = wa * a[i] + wb * b[i], real weights
void weighted_sum(std::span<std::complex<double>> dst, double wa,
                  std::span<const std::complex<double>> a, double wb,
                  std::span<const std::complex<double>> b);

namespace scalar {
std::complex<double> dot_conj(const std::complex<double>* a, const std::complex<double>* b, std::size_t n);
double norm_sqr(const std::complex<double>* a, std::size_t n);
void weighted_sum(std::complex<double>* dst, double wa, const std::complex<double>* a, double wb,
                  const std::complex<double>* b, std::size_t n);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
namespace avx2 {
std::complex<double> dot_conj(const std::complex<double>* a, const std::complex<double>* b, std::size_t n);
double norm_sqr(const std::complex<double>* a, std::size_t n);
void weighted_sum(std::complex<double>* dst, double wa, const std::complex<double>* a, double wb,
                  const std::complex<double>* b, std::size_t n);
}  // namespace avx2
#endif

#if defined(__aarch64__)
namespace neon {
std::complex<double> dot_conj(const std::complex<double>* a, const std::complex<double>* b, std::size_t n);
double norm_sqr(const std::complex<double>* a, std::size_t n);
void weighted_sum(std::complex<double>* dst, double wa, const std::complex<double>* a, double wb,
                  const std::complex<double>* b, std::size_t n);
}  // namespace neon
#endif

}  // namespace secrelay::kernels
