// Reference kernels. These define the semantics; the SIMD variants are
// equivalence-tested against them.

#include "mvdet/kernels.hpp"

namespace mvdet::kernels {

namespace {

void axpy_scalar(float* dst, const float* src, size_t n, float a) {
    for (size_t i = 0; i < n; ++i) dst[i] = dst[i] + a * src[i];
}

float dot_scalar(const float* a, const float* b, size_t n) {
    float acc = 0.0f;
    for (size_t i = 0; i < n; ++i) acc += a[i] * b[i];
    return acc;
}

void relu_scalar(float* dst, const float* src, size_t n) {
    for (size_t i = 0; i < n; ++i) dst[i] = src[i] > 0.0f ? src[i] : 0.0f;
}

void relu_grad_scalar(float* dst, const float* g, const float* x, size_t n) {
    for (size_t i = 0; i < n; ++i) dst[i] = x[i] > 0.0f ? g[i] : 0.0f;
}

float sum_sq_diff_scalar(const float* p, const float* t, size_t n) {
    float acc = 0.0f;
    for (size_t i = 0; i < n; ++i) {
        const float d = p[i] - t[i];
        acc += d * d;
    }
    return acc;
}

void scaled_diff_scalar(float* dst, const float* p, const float* t, float s, size_t n) {
    for (size_t i = 0; i < n; ++i) dst[i] = s * (p[i] - t[i]);
}

void sgd_update_scalar(float* p, const float* g, float* v, size_t n, float lr,
                       float momentum, float wd) {
    for (size_t i = 0; i < n; ++i) {
        const float step = g[i] + wd * p[i];
        v[i] = momentum * v[i] + step;
        p[i] = p[i] - lr * v[i];
    }
}

void gather4_scalar(float* dst, const float* src, const int32_t* const idx[4],
                    const float* const w[4], size_t n) {
    const int32_t* i0 = idx[0];
    const int32_t* i1 = idx[1];
    const int32_t* i2 = idx[2];
    const int32_t* i3 = idx[3];
    const float* w0 = w[0];
    const float* w1 = w[1];
    const float* w2 = w[2];
    const float* w3 = w[3];
    for (size_t i = 0; i < n; ++i) {
        dst[i] = ((w0[i] * src[i0[i]] + w1[i] * src[i1[i]]) + w2[i] * src[i2[i]]) +
                 w3[i] * src[i3[i]];
    }
}

} // namespace

namespace detail {
const KernelTable& scalar_table() {
    static const KernelTable t = {axpy_scalar,       dot_scalar,         relu_scalar,
                                  relu_grad_scalar,  sum_sq_diff_scalar, scaled_diff_scalar,
                                  sgd_update_scalar, gather4_scalar};
    return t;
}
} // namespace detail

} // namespace mvdet::kernels
