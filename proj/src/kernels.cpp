#include "freelift/kernels.hpp"

#include <atomic>

namespace freelift::kernels {

namespace ref {

void axpy(double* y, const double* x, double a, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

double dot(const double* x, const double* y, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += x[i] * y[i];
    return s;
}

void scale(double* y, double a, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] *= a;
}

}  // namespace ref

#if defined(__x86_64__) || defined(_M_X64)
#define FREELIFT_HAVE_AVX2_TU 1
namespace avx2 {
void axpy(double* y, const double* x, double a, std::size_t n);
double dot(const double* x, const double* y, std::size_t n);
void scale(double* y, double a, std::size_t n);
}  // namespace avx2
#else
#define FREELIFT_HAVE_AVX2_TU 0
#endif

namespace {

std::atomic<bool> g_force_scalar{false};

bool cpu_has_avx2() {
#if FREELIFT_HAVE_AVX2_TU
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

bool use_avx2() { return cpu_has_avx2() && !g_force_scalar.load(std::memory_order_relaxed); }

}  // namespace

void axpy(double* y, const double* x, double a, std::size_t n) {
#if FREELIFT_HAVE_AVX2_TU
    if (use_avx2()) {
        avx2::axpy(y, x, a, n);
        return;
    }
#endif
    ref::axpy(y, x, a, n);
}

double dot(const double* x, const double* y, std::size_t n) {
#if FREELIFT_HAVE_AVX2_TU
    if (use_avx2()) return avx2::dot(x, y, n);
#endif
    return ref::dot(x, y, n);
}

void scale(double* y, double a, std::size_t n) {
#if FREELIFT_HAVE_AVX2_TU
    if (use_avx2()) {
        avx2::scale(y, a, n);
        return;
    }
#endif
    ref::scale(y, a, n);
}

const char* active_backend() { return use_avx2() ? "avx2" : "scalar"; }

void force_scalar_backend(bool force) { g_force_scalar.store(force, std::memory_order_relaxed); }

}  // namespace freelift::kernels
