#pragma once

#include <cstddef>
#include <cstdint>

namespace mvdet::kernels {

enum class Backend { scalar, avx2 };

/// Backend in use. Resolved once per process from MVDET_SIMD
/// (scalar|avx2|auto) and CPU support, unless force() was called first.
Backend active();
const char* backend_name(Backend b);
bool avx2_available();

/// Test hook: pin the backend. Throws ValidationError if unavailable.
void force(Backend b);

// Elementwise kernels. Scalar and AVX2 variants perform the identical
// per-element operation sequence (no FMA), so their results agree
// bit-for-bit; reductions (dot, sum_sq_diff) differ only in accumulation
// order and agree to rounding.

/// dst[i] += a * src[i]
void axpy(float* dst, const float* src, size_t n, float a);

/// sum_i a[i] * b[i]
float dot(const float* a, const float* b, size_t n);

/// dst[i] = max(0, src[i])
void relu(float* dst, const float* src, size_t n);

/// dst[i] = x[i] > 0 ? g[i] : 0
void relu_grad(float* dst, const float* g, const float* x, size_t n);

/// sum_i (p[i] - t[i])^2
float sum_sq_diff(const float* p, const float* t, size_t n);

/// dst[i] = s * (p[i] - t[i])
void scaled_diff(float* dst, const float* p, const float* t, float s, size_t n);

/// v[i] = momentum * v[i] + (g[i] + wd * p[i]); p[i] -= lr * v[i]
void sgd_update(float* p, const float* g, float* v, size_t n, float lr, float momentum,
                float wd);

/// Four-tap weighted gather: dst[i] = sum_k w[k][i] * src[idx[k][i]].
/// Indices must be valid even where the weight is zero.
void gather4(float* dst, const float* src, const int32_t* const idx[4],
             const float* const w[4], size_t n);

namespace detail {
struct KernelTable {
    void (*axpy)(float*, const float*, size_t, float);
    float (*dot)(const float*, const float*, size_t);
    void (*relu)(float*, const float*, size_t);
    void (*relu_grad)(float*, const float*, const float*, size_t);
    float (*sum_sq_diff)(const float*, const float*, size_t);
    void (*scaled_diff)(float*, const float*, const float*, float, size_t);
    void (*sgd_update)(float*, const float*, float*, size_t, float, float, float);
    void (*gather4)(float*, const float*, const int32_t* const[4], const float* const[4],
                    size_t);
};
const KernelTable& scalar_table();
const KernelTable& avx2_table();
} // namespace detail

} // namespace mvdet::kernels
