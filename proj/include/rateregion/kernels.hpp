#pragma once
// Entropy accumulation kernels. neg_entropy_sum(p, n) = sum p[i]*log2(p[i])
// with 0*log2(0) = 0, so H = -neg_entropy_sum. Scalar reference plus an
// AVX2 variant picked at runtime; both bit-tested for equivalence.

#include <cstddef>

namespace rateregion::kernels {

double neg_entropy_sum_scalar(const double* p, std::size_t n);

#if defined(__x86_64__) || defined(_M_X64)
double neg_entropy_sum_avx2(const double* p, std::size_t n);
#endif

// Dispatched entry point. Honors RATEREGION_NO_AVX2 (checked once).
double neg_entropy_sum(const double* p, std::size_t n);

// Name of the active implementation ("scalar" or "avx2").
const char* active_impl();

// Test hook: force the scalar path (true) or restore dispatch (false).
void force_scalar(bool on);

}  // namespace rateregion::kernels
