#include "secrelay/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>

#include "secrelay/errors.hpp"

namespace secrelay::kernels {

namespace scalar {

std::complex<double> dot_conj(const std::complex<double>* a, const std::complex<double>* b,
                              std::size_t n) {
    double re = 0.0, im = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        re += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
        im += a[i].real() * b[i].imag() - a[i].imag() * b[i].real();
    }
    return {re, im};
}

double norm_sqr(const std::complex<double>* a, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        acc += a[i].real() * a[i].real() + a[i].imag() * a[i].imag();
    return acc;
}

void weighted_sum(std::complex<double>* dst, double wa, const std::complex<double>* a, double wb,
                  const std::complex<double>* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        dst[i] = {wa * a[i].real() + wb * b[i].real(), wa * a[i].imag() + wb * b[i].imag()};
}

}  // namespace scalar

namespace {

struct Table {
    std::complex<double> (*dot_conj)(const std::complex<double>*, const std::complex<double>*, std::size_t);
    double (*norm_sqr)(const std::complex<double>*, std::size_t);
    void (*weighted_sum)(std::complex<double>*, double, const std::complex<double>*, double,
                         const std::complex<double>*, std::size_t);
};

constexpr Table kScalar{scalar::dot_conj, scalar::norm_sqr, scalar::weighted_sum};
#if defined(SECRELAY_HAVE_AVX2)
constexpr Table kAvx2{avx2::dot_conj, avx2::norm_sqr, avx2::weighted_sum};
#endif
#if defined(SECRELAY_HAVE_NEON)
constexpr Table kNeon{neon::dot_conj, neon::norm_sqr, neon::weighted_sum};
#endif

bool cpu_supported(Variant v) {
    switch (v) {
        case Variant::scalar:
            return true;
        case Variant::avx2:
#if defined(SECRELAY_HAVE_AVX2)
            return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
            return false;
#endif
        case Variant::neon:
#if defined(SECRELAY_HAVE_NEON)
            return true;
#else
            return false;
#endif
    }
    return false;
}

const Table* table_for(Variant v) {
    switch (v) {
        case Variant::scalar:
            return &kScalar;
#if defined(SECRELAY_HAVE_AVX2)
        case Variant::avx2:
            return &kAvx2;
#endif
#if defined(SECRELAY_HAVE_NEON)
        case Variant::neon:
            return &kNeon;
#endif
        default:
            return nullptr;
    }
}

Variant pick_default() {
    if (const char* env = std::getenv("SECRELAY_KERNELS"); env && std::strcmp(env, "auto") != 0) {
        if (std::strcmp(env, "scalar") == 0 && cpu_supported(Variant::scalar)) return Variant::scalar;
        if (std::strcmp(env, "avx2") == 0 && cpu_supported(Variant::avx2)) return Variant::avx2;
        if (std::strcmp(env, "neon") == 0 && cpu_supported(Variant::neon)) return Variant::neon;
        // fall through to autodetection on unknown or unsupported values
    }
#if defined(SECRELAY_HAVE_AVX2)
    if (cpu_supported(Variant::avx2)) return Variant::avx2;
#endif
#if defined(SECRELAY_HAVE_NEON)
    if (cpu_supported(Variant::neon)) return Variant::neon;
#endif
    return Variant::scalar;
}

struct Dispatch {
    std::atomic<const Table*> table;
    std::atomic<Variant> variant;
    Dispatch() : variant(pick_default()) { table.store(table_for(variant.load())); }
};

Dispatch& dispatch() {
    static Dispatch d;
    return d;
}

}  // namespace

Variant active() { return dispatch().variant.load(); }

bool available(Variant v) { return cpu_supported(v); }

void force(Variant v) {
    if (!cpu_supported(v))
        throw InvalidParameter(std::string("kernel variant unavailable on this CPU/build: ") + name(v));
    dispatch().variant.store(v);
    dispatch().table.store(table_for(v));
}

const char* name(Variant v) {
    switch (v) {
        case Variant::scalar:
            return "scalar";
        case Variant::avx2:
            return "avx2";
        case Variant::neon:
            return "neon";
    }
    return "?";
}

std::complex<double> dot_conj(std::span<const std::complex<double>> a,
                              std::span<const std::complex<double>> b) {
    if (a.size() != b.size()) throw DimensionMismatch("dot_conj: length mismatch");
    return dispatch().table.load()->dot_conj(a.data(), b.data(), a.size());
}

double norm_sqr(std::span<const std::complex<double>> a) {
    return dispatch().table.load()->norm_sqr(a.data(), a.size());
}

void weighted_sum(std::span<std::complex<double>> dst, double wa,
                  std::span<const std::complex<double>> a, double wb,
                  std::span<const std::complex<double>> b) {
    if (dst.size() != a.size() || dst.size() != b.size())
        throw DimensionMismatch("weighted_sum: length mismatch");
    dispatch().table.load()->weighted_sum(dst.data(), wa, a.data(), wb, b.data(), dst.size());
}

}  // namespace secrelay::kernels
