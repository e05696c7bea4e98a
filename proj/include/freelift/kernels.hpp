#pragma once

#include <cstddef>

// Dense double-precision inner loops of the float-mode simplex and matrix
// products. Scalar reference kernels plus an AVX2 variant selected once at
// runtime; the exact-rational mode never touches these.

namespace freelift::kernels {

// y += a * x
void axpy(double* y, const double* x, double a, std::size_t n);
// sum_i x[i] * y[i]
double dot(const double* x, const double* y, std::size_t n);
// y *= a
void scale(double* y, double a, std::size_t n);

// Reference implementations, kept for equivalence tests.
namespace ref {
void axpy(double* y, const double* x, double a, std::size_t n);
double dot(const double* x, const double* y, std::size_t n);
void scale(double* y, double a, std::size_t n);
}  // namespace ref

// "avx2" or "scalar".
const char* active_backend();

// Test hook: true forces the scalar backend regardless of CPU support.
void force_scalar_backend(bool force);

}  // namespace freelift::kernels
