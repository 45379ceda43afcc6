#include "mvdet/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>

#include "mvdet/errors.hpp"

namespace mvdet::kernels {

namespace {

#if defined(MVDET_HAVE_AVX2_TU)
bool cpu_has_avx2() {
#if defined(__GNUC__) || defined(__clang__)
    return __builtin_cpu_supports("avx2") != 0;
#else
    return false;
#endif
}
#else
bool cpu_has_avx2() { return false; }
#endif

std::atomic<int> g_forced{-1}; // -1 auto, else Backend value

Backend resolve() {
    const int forced = g_forced.load(std::memory_order_acquire);
    if (forced >= 0) return static_cast<Backend>(forced);
    if (const char* env = std::getenv("MVDET_SIMD")) {
        if (std::strcmp(env, "scalar") == 0) return Backend::scalar;
        if (std::strcmp(env, "avx2") == 0)
            return avx2_available() ? Backend::avx2 : Backend::scalar;
    }
    return avx2_available() ? Backend::avx2 : Backend::scalar;
}

const detail::KernelTable& table() {
    // Re-resolved per call so force() takes effect immediately; the lookup
    // is two loads and disappears next to the loop bodies.
    return resolve() == Backend::avx2 ? detail::avx2_table() : detail::scalar_table();
}

} // namespace

#if !defined(MVDET_HAVE_AVX2_TU)
namespace detail {
const KernelTable& avx2_table() { return scalar_table(); }
} // namespace detail
#endif

bool avx2_available() {
    static const bool ok = cpu_has_avx2();
    return ok;
}

Backend active() { return resolve(); }

const char* backend_name(Backend b) {
    return b == Backend::avx2 ? "avx2" : "scalar";
}

void force(Backend b) {
    if (b == Backend::avx2 && !avx2_available())
        throw ValidationError("avx2 backend not available on this host");
    g_forced.store(static_cast<int>(b), std::memory_order_release);
}

void axpy(float* dst, const float* src, size_t n, float a) {
    table().axpy(dst, src, n, a);
}
float dot(const float* a, const float* b, size_t n) { return table().dot(a, b, n); }
void relu(float* dst, const float* src, size_t n) { table().relu(dst, src, n); }
void relu_grad(float* dst, const float* g, const float* x, size_t n) {
    table().relu_grad(dst, g, x, n);
}
float sum_sq_diff(const float* p, const float* t, size_t n) {
    return table().sum_sq_diff(p, t, n);
}
void scaled_diff(float* dst, const float* p, const float* t, float s, size_t n) {
    table().scaled_diff(dst, p, t, s, n);
}
void sgd_update(float* p, const float* g, float* v, size_t n, float lr, float momentum,
                float wd) {
    table().sgd_update(p, g, v, n, lr, momentum, wd);
}
void gather4(float* dst, const float* src, const int32_t* const idx[4],
             const float* const w[4], size_t n) {
    table().gather4(dst, src, idx, w, n);
}

} // namespace mvdet::kernels
