#include "rateregion/kernels.hpp"

#include <atomic>
#include <cstdlib>

namespace rateregion::kernels {

namespace {

using Fn = double (*)(const double*, std::size_t);

Fn pick() {
#if defined(__x86_64__) || defined(_M_X64)
    if (std::getenv("RATEREGION_NO_AVX2") == nullptr &&
        __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma"))
        return &neg_entropy_sum_avx2;
#endif
    return &neg_entropy_sum_scalar;
}

std::atomic<bool> g_force_scalar{false};
const Fn g_dispatched = pick();

}  // namespace

double neg_entropy_sum(const double* p, std::size_t n) {
    if (g_force_scalar.load(std::memory_order_relaxed))
        return neg_entropy_sum_scalar(p, n);
    return g_dispatched(p, n);
}

const char* active_impl() {
    if (g_force_scalar.load(std::memory_order_relaxed)) return "scalar";
    return g_dispatched == &neg_entropy_sum_scalar ? "scalar" : "avx2";
}

void force_scalar(bool on) { g_force_scalar.store(on, std::memory_order_relaxed); }

}  // namespace rateregion::kernels
