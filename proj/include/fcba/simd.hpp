#pragma once

#include <cstddef>

namespace fcba::simd {

// Data-parallel kernels behind the training and aggregation inner loops.
// Each has a scalar reference implementation and vector variants (AVX2+FMA on
// x86-64, NEON on aarch64) selected once at startup. Selection can be pinned
// to scalar with set_force_scalar() or FCBA_SIMD=scalar in the environment.

// sum_i a[i]*b[i], float accumulation in lanes
float dot(const float* a, const float* b, std::size_t n);

// y[i] += a * x[i]
void axpy(float* y, float a, const float* x, std::size_t n);

// y[i] *= a
void scale(float* y, float a, std::size_t n);

// y[i] += x[i]
void add(float* y, const float* x, std::size_t n);

// y[i] -= x[i]
void sub(float* y, const float* x, std::size_t n);

// sum_i x[i]^2 with a 64-bit accumulator
double sumsq(const float* x, std::size_t n);

// Forces the scalar reference kernels for the rest of the process.
void set_force_scalar(bool v);

// "avx2" | "neon" | "scalar" — the variant the dispatcher currently resolves to.
const char* backend_name();

namespace detail {
float dot_scalar(const float* a, const float* b, std::size_t n);
void axpy_scalar(float* y, float a, const float* x, std::size_t n);
void scale_scalar(float* y, float a, std::size_t n);
void add_scalar(float* y, const float* x, std::size_t n);
void sub_scalar(float* y, const float* x, std::size_t n);
double sumsq_scalar(const float* x, std::size_t n);
} // namespace detail

} // namespace fcba::simd
