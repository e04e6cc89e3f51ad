#include "fcba/simd.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>

#if defined(__x86_64__) || defined(_M_X64)
#define FCBA_X86 1
#include <immintrin.h>
#else
#define FCBA_X86 0
#endif

#if defined(__aarch64__) || defined(__ARM_NEON)
#define FCBA_NEON 1
#include <arm_neon.h>
#else
#define FCBA_NEON 0
#endif

namespace fcba::simd {

namespace detail {

float dot_scalar(const float* a, const float* b, std::size_t n) {
    float s = 0.0f;
    for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
    return s;
}

void axpy_scalar(float* y, float a, const float* x, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void scale_scalar(float* y, float a, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] *= a;
}

void add_scalar(float* y, const float* x, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += x[i];
}

void sub_scalar(float* y, const float* x, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] -= x[i];
}

double sumsq_scalar(const float* x, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += double(x[i]) * double(x[i]);
    return s;
}

} // namespace detail

#if FCBA_X86

__attribute__((target("avx2,fma")))
static inline float hsum256(__m256 v) {
    __m128 lo = _mm256_castps256_ps128(v);
    __m128 hi = _mm256_extractf128_ps(v, 1);
    __m128 s = _mm_add_ps(lo, hi);
    s = _mm_add_ps(s, _mm_movehl_ps(s, s));
    s = _mm_add_ss(s, _mm_movehdup_ps(s));
    return _mm_cvtss_f32(s);
}

__attribute__((target("avx2,fma")))
static float dot_avx2(const float* a, const float* b, std::size_t n) {
    __m256 acc0 = _mm256_setzero_ps();
    __m256 acc1 = _mm256_setzero_ps();
    std::size_t i = 0;
    for (; i + 16 <= n; i += 16) {
        acc0 = _mm256_fmadd_ps(_mm256_loadu_ps(a + i), _mm256_loadu_ps(b + i), acc0);
        acc1 = _mm256_fmadd_ps(_mm256_loadu_ps(a + i + 8), _mm256_loadu_ps(b + i + 8), acc1);
    }
    for (; i + 8 <= n; i += 8)
        acc0 = _mm256_fmadd_ps(_mm256_loadu_ps(a + i), _mm256_loadu_ps(b + i), acc0);
    float s = hsum256(_mm256_add_ps(acc0, acc1));
    for (; i < n; ++i) s += a[i] * b[i];
    return s;
}

__attribute__((target("avx2,fma")))
static void axpy_avx2(float* y, float a, const float* x, std::size_t n) {
    const __m256 va = _mm256_set1_ps(a);
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256 vy = _mm256_loadu_ps(y + i);
        vy = _mm256_fmadd_ps(va, _mm256_loadu_ps(x + i), vy);
        _mm256_storeu_ps(y + i, vy);
    }
    for (; i < n; ++i) y[i] += a * x[i];
}

__attribute__((target("avx2,fma")))
static void scale_avx2(float* y, float a, std::size_t n) {
    const __m256 va = _mm256_set1_ps(a);
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8)
        _mm256_storeu_ps(y + i, _mm256_mul_ps(_mm256_loadu_ps(y + i), va));
    for (; i < n; ++i) y[i] *= a;
}

__attribute__((target("avx2,fma")))
static void add_avx2(float* y, const float* x, std::size_t n) {
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8)
        _mm256_storeu_ps(y + i, _mm256_add_ps(_mm256_loadu_ps(y + i), _mm256_loadu_ps(x + i)));
    for (; i < n; ++i) y[i] += x[i];
}

__attribute__((target("avx2,fma")))
static void sub_avx2(float* y, const float* x, std::size_t n) {
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8)
        _mm256_storeu_ps(y + i, _mm256_sub_ps(_mm256_loadu_ps(y + i), _mm256_loadu_ps(x + i)));
    for (; i < n; ++i) y[i] -= x[i];
}

__attribute__((target("avx2,fma")))
static double sumsq_avx2(const float* x, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d v = _mm256_cvtps_pd(_mm_loadu_ps(x + i));
        acc = _mm256_fmadd_pd(v, v, acc);
    }
    __m128d lo = _mm256_castpd256_pd128(acc);
    __m128d hi = _mm256_extractf128_pd(acc, 1);
    __m128d s2 = _mm_add_pd(lo, hi);
    double s = _mm_cvtsd_f64(_mm_add_sd(s2, _mm_unpackhi_pd(s2, s2)));
    for (; i < n; ++i) s += double(x[i]) * double(x[i]);
    return s;
}

static bool cpu_has_avx2_fma() {
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}

#endif // FCBA_X86

#if FCBA_NEON

static inline float hsum_neon(float32x4_t v) {
    float32x2_t s = vadd_f32(vget_low_f32(v), vget_high_f32(v));
    return vget_lane_f32(vpadd_f32(s, s), 0);
}

static float dot_neon(const float* a, const float* b, std::size_t n) {
    float32x4_t acc = vdupq_n_f32(0.0f);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        acc = vmlaq_f32(acc, vld1q_f32(a + i), vld1q_f32(b + i));
    float s = hsum_neon(acc);
    for (; i < n; ++i) s += a[i] * b[i];
    return s;
}

static void axpy_neon(float* y, float a, const float* x, std::size_t n) {
    const float32x4_t va = vdupq_n_f32(a);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        vst1q_f32(y + i, vmlaq_f32(vld1q_f32(y + i), va, vld1q_f32(x + i)));
    for (; i < n; ++i) y[i] += a * x[i];
}

static void scale_neon(float* y, float a, std::size_t n) {
    const float32x4_t va = vdupq_n_f32(a);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        vst1q_f32(y + i, vmulq_f32(vld1q_f32(y + i), va));
    for (; i < n; ++i) y[i] *= a;
}

static void add_neon(float* y, const float* x, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        vst1q_f32(y + i, vaddq_f32(vld1q_f32(y + i), vld1q_f32(x + i)));
    for (; i < n; ++i) y[i] += x[i];
}

static void sub_neon(float* y, const float* x, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        vst1q_f32(y + i, vsubq_f32(vld1q_f32(y + i), vld1q_f32(x + i)));
    for (; i < n; ++i) y[i] -= x[i];
}

static double sumsq_neon(const float* x, std::size_t n) {
    // double accumulation: widen each lane pair
    double s = 0.0;
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        float32x4_t v = vld1q_f32(x + i);
        float64x2_t lo = vcvt_f64_f32(vget_low_f32(v));
        float64x2_t hi = vcvt_f64_f32(vget_high_f32(v));
        float64x2_t acc = vmlaq_f64(vmulq_f64(lo, lo), hi, hi);
        s += vgetq_lane_f64(acc, 0) + vgetq_lane_f64(acc, 1);
    }
    for (; i < n; ++i) s += double(x[i]) * double(x[i]);
    return s;
}

#endif // FCBA_NEON

namespace {

struct KernelTable {
    float (*dot)(const float*, const float*, std::size_t);
    void (*axpy)(float*, float, const float*, std::size_t);
    void (*scale)(float*, float, std::size_t);
    void (*add)(float*, const float*, std::size_t);
    void (*sub)(float*, const float*, std::size_t);
    double (*sumsq)(const float*, std::size_t);
    const char* name;
};

constexpr KernelTable kScalarTable = {
    detail::dot_scalar, detail::axpy_scalar, detail::scale_scalar,
    detail::add_scalar, detail::sub_scalar,  detail::sumsq_scalar,
    "scalar",
};

KernelTable detect_table() {
    const char* env = std::getenv("FCBA_SIMD");
    if (env && std::strcmp(env, "scalar") == 0) return kScalarTable;
#if FCBA_X86
    if (cpu_has_avx2_fma())
        return {dot_avx2, axpy_avx2, scale_avx2, add_avx2, sub_avx2, sumsq_avx2, "avx2"};
#endif
#if FCBA_NEON
    return {dot_neon, axpy_neon, scale_neon, add_neon, sub_neon, sumsq_neon, "neon"};
#endif
    return kScalarTable;
}

std::atomic<bool> g_force_scalar{false};

const KernelTable& active_table() {
    static const KernelTable table = detect_table();
    if (g_force_scalar.load(std::memory_order_relaxed)) return kScalarTable;
    return table;
}

} // namespace

float dot(const float* a, const float* b, std::size_t n) { return active_table().dot(a, b, n); }
void axpy(float* y, float a, const float* x, std::size_t n) { active_table().axpy(y, a, x, n); }
void scale(float* y, float a, std::size_t n) { active_table().scale(y, a, n); }
void add(float* y, const float* x, std::size_t n) { active_table().add(y, x, n); }
void sub(float* y, const float* x, std::size_t n) { active_table().sub(y, x, n); }
double sumsq(const float* x, std::size_t n) { return active_table().sumsq(x, n); }

void set_force_scalar(bool v) { g_force_scalar.store(v, std::memory_order_relaxed); }
const char* backend_name() { return active_table().name; }

} // namespace fcba::simd
