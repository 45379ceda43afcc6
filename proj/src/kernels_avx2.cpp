// AVX2 kernel variants. Compiled with -mavx2 (no FMA): elementwise kernels
// execute the same multiply/add sequence per element as the scalar
// reference and match it bit-for-bit. Reductions use 8 parallel lanes and
// agree with the reference to rounding.

#include "mvdet/kernels.hpp"

#if defined(__AVX2__)

#include <immintrin.h>

namespace mvdet::kernels {

namespace {

float hsum(__m256 v) {
    __m128 lo = _mm256_castps256_ps128(v);
    __m128 hi = _mm256_extractf128_ps(v, 1);
    lo = _mm_add_ps(lo, hi);
    __m128 shuf = _mm_movehdup_ps(lo);
    __m128 sums = _mm_add_ps(lo, shuf);
    shuf = _mm_movehl_ps(shuf, sums);
    sums = _mm_add_ss(sums, shuf);
    return _mm_cvtss_f32(sums);
}

void axpy_avx2(float* dst, const float* src, size_t n, float a) {
    const __m256 va = _mm256_set1_ps(a);
    size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        const __m256 s = _mm256_loadu_ps(src + i);
        const __m256 d = _mm256_loadu_ps(dst + i);
        _mm256_storeu_ps(dst + i, _mm256_add_ps(d, _mm256_mul_ps(va, s)));
    }
    for (; i < n; ++i) dst[i] = dst[i] + a * src[i];
}

float dot_avx2(const float* a, const float* b, size_t n) {
    __m256 acc = _mm256_setzero_ps();
    size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        acc = _mm256_add_ps(acc,
                            _mm256_mul_ps(_mm256_loadu_ps(a + i), _mm256_loadu_ps(b + i)));
    }
    float tail = 0.0f;
    for (; i < n; ++i) tail += a[i] * b[i];
    return hsum(acc) + tail;
}

void relu_avx2(float* dst, const float* src, size_t n) {
    const __m256 zero = _mm256_setzero_ps();
    size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        const __m256 s = _mm256_loadu_ps(src + i);
        // blend on s > 0 rather than max: keeps -0.0f handling identical
        // to the scalar reference.
        const __m256 mask = _mm256_cmp_ps(s, zero, _CMP_GT_OQ);
        _mm256_storeu_ps(dst + i, _mm256_and_ps(s, mask));
    }
    for (; i < n; ++i) dst[i] = src[i] > 0.0f ? src[i] : 0.0f;
}

void relu_grad_avx2(float* dst, const float* g, const float* x, size_t n) {
    const __m256 zero = _mm256_setzero_ps();
    size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        const __m256 mask = _mm256_cmp_ps(_mm256_loadu_ps(x + i), zero, _CMP_GT_OQ);
        _mm256_storeu_ps(dst + i, _mm256_and_ps(_mm256_loadu_ps(g + i), mask));
    }
    for (; i < n; ++i) dst[i] = x[i] > 0.0f ? g[i] : 0.0f;
}

float sum_sq_diff_avx2(const float* p, const float* t, size_t n) {
    __m256 acc = _mm256_setzero_ps();
    size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        const __m256 d = _mm256_sub_ps(_mm256_loadu_ps(p + i), _mm256_loadu_ps(t + i));
        acc = _mm256_add_ps(acc, _mm256_mul_ps(d, d));
    }
    float tail = 0.0f;
    for (; i < n; ++i) {
        const float d = p[i] - t[i];
        tail += d * d;
    }
    return hsum(acc) + tail;
}

void scaled_diff_avx2(float* dst, const float* p, const float* t, float s, size_t n) {
    const __m256 vs = _mm256_set1_ps(s);
    size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        const __m256 d = _mm256_sub_ps(_mm256_loadu_ps(p + i), _mm256_loadu_ps(t + i));
        _mm256_storeu_ps(dst + i, _mm256_mul_ps(vs, d));
    }
    for (; i < n; ++i) dst[i] = s * (p[i] - t[i]);
}

void sgd_update_avx2(float* p, const float* g, float* v, size_t n, float lr,
                     float momentum, float wd) {
    const __m256 vlr = _mm256_set1_ps(lr);
    const __m256 vmom = _mm256_set1_ps(momentum);
    const __m256 vwd = _mm256_set1_ps(wd);
    size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        const __m256 vp = _mm256_loadu_ps(p + i);
        const __m256 vg = _mm256_loadu_ps(g + i);
        const __m256 vv = _mm256_loadu_ps(v + i);
        const __m256 step = _mm256_add_ps(vg, _mm256_mul_ps(vwd, vp));
        const __m256 vel = _mm256_add_ps(_mm256_mul_ps(vmom, vv), step);
        _mm256_storeu_ps(v + i, vel);
        _mm256_storeu_ps(p + i, _mm256_sub_ps(vp, _mm256_mul_ps(vlr, vel)));
    }
    for (; i < n; ++i) {
        const float step = g[i] + wd * p[i];
        v[i] = momentum * v[i] + step;
        p[i] = p[i] - lr * v[i];
    }
}

void gather4_avx2(float* dst, const float* src, const int32_t* const idx[4],
                  const float* const w[4], size_t n) {
    size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        const __m256 v0 = _mm256_mul_ps(
            _mm256_loadu_ps(w[0] + i),
            _mm256_i32gather_ps(src, _mm256_loadu_si256((const __m256i*)(idx[0] + i)), 4));
        const __m256 v1 = _mm256_mul_ps(
            _mm256_loadu_ps(w[1] + i),
            _mm256_i32gather_ps(src, _mm256_loadu_si256((const __m256i*)(idx[1] + i)), 4));
        const __m256 v2 = _mm256_mul_ps(
            _mm256_loadu_ps(w[2] + i),
            _mm256_i32gather_ps(src, _mm256_loadu_si256((const __m256i*)(idx[2] + i)), 4));
        const __m256 v3 = _mm256_mul_ps(
            _mm256_loadu_ps(w[3] + i),
            _mm256_i32gather_ps(src, _mm256_loadu_si256((const __m256i*)(idx[3] + i)), 4));
        _mm256_storeu_ps(dst + i,
                         _mm256_add_ps(_mm256_add_ps(_mm256_add_ps(v0, v1), v2), v3));
    }
    for (; i < n; ++i) {
        dst[i] = ((w[0][i] * src[idx[0][i]] + w[1][i] * src[idx[1][i]]) +
                  w[2][i] * src[idx[2][i]]) +
                 w[3][i] * src[idx[3][i]];
    }
}

} // namespace

namespace detail {
const KernelTable& avx2_table() {
    static const KernelTable t = {axpy_avx2,       dot_avx2,         relu_avx2,
                                  relu_grad_avx2,  sum_sq_diff_avx2, scaled_diff_avx2,
                                  sgd_update_avx2, gather4_avx2};
    return t;
}
} // namespace detail

} // namespace mvdet::kernels

#endif // __AVX2__
