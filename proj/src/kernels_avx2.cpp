#if defined(__x86_64__) || defined(_M_X64)

#include "rateregion/kernels.hpp"

#include <immintrin.h>
#include <cfloat>
#include <cmath>

namespace rateregion::kernels {

namespace {

// log2 via x = m * 2^e, m in [sqrt(1/2), sqrt(2)), then the atanh series
// log2(m) = 2/ln2 * (s + s^3/3 + ...) with s = (m-1)/(m+1), |s| <= 0.1716.
// Terms through s^21 keep the truncation error below 1e-18.
inline __m256d log2_pd(__m256d x) {
    const __m256d one = _mm256_set1_pd(1.0);
    const __m256i bits = _mm256_castpd_si256(x);

    // unbiased exponent as double, via the 2^52 magic-number trick
    __m256i expo = _mm256_srli_epi64(bits, 52);
    expo = _mm256_and_si256(expo, _mm256_set1_epi64x(0x7FF));
    const __m256i magic = _mm256_set1_epi64x(0x4330000000000000LL);  // 2^52
    __m256d e = _mm256_sub_pd(
        _mm256_castsi256_pd(_mm256_or_si256(expo, magic)),
        _mm256_set1_pd(4503599627370496.0 + 1023.0));

    // mantissa in [1,2)
    const __m256i mant_mask = _mm256_set1_epi64x(0x000FFFFFFFFFFFFFLL);
    __m256d m = _mm256_castsi256_pd(_mm256_or_si256(
        _mm256_and_si256(bits, mant_mask),
        _mm256_set1_epi64x(0x3FF0000000000000LL)));

    // fold [sqrt(2), 2) down to [sqrt(1/2), 1)
    const __m256d sqrt2 = _mm256_set1_pd(1.4142135623730951);
    const __m256d gt = _mm256_cmp_pd(m, sqrt2, _CMP_GE_OQ);
    m = _mm256_blendv_pd(m, _mm256_mul_pd(m, _mm256_set1_pd(0.5)), gt);
    e = _mm256_add_pd(e, _mm256_and_pd(gt, one));

    const __m256d s = _mm256_div_pd(_mm256_sub_pd(m, one), _mm256_add_pd(m, one));
    const __m256d z = _mm256_mul_pd(s, s);

    __m256d poly = _mm256_set1_pd(1.0 / 21.0);
    poly = _mm256_fmadd_pd(poly, z, _mm256_set1_pd(1.0 / 19.0));
    poly = _mm256_fmadd_pd(poly, z, _mm256_set1_pd(1.0 / 17.0));
    poly = _mm256_fmadd_pd(poly, z, _mm256_set1_pd(1.0 / 15.0));
    poly = _mm256_fmadd_pd(poly, z, _mm256_set1_pd(1.0 / 13.0));
    poly = _mm256_fmadd_pd(poly, z, _mm256_set1_pd(1.0 / 11.0));
    poly = _mm256_fmadd_pd(poly, z, _mm256_set1_pd(1.0 / 9.0));
    poly = _mm256_fmadd_pd(poly, z, _mm256_set1_pd(1.0 / 7.0));
    poly = _mm256_fmadd_pd(poly, z, _mm256_set1_pd(1.0 / 5.0));
    poly = _mm256_fmadd_pd(poly, z, _mm256_set1_pd(1.0 / 3.0));
    poly = _mm256_fmadd_pd(poly, z, one);

    const __m256d two_over_ln2 = _mm256_set1_pd(2.8853900817779268);
    return _mm256_fmadd_pd(_mm256_mul_pd(two_over_ln2, s), poly, e);
}

}  // namespace

double neg_entropy_sum_avx2(const double* p, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    const __m256d tiny = _mm256_set1_pd(DBL_MIN);  // skips zeros and subnormals
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d x = _mm256_loadu_pd(p + i);
        const __m256d mask = _mm256_cmp_pd(x, tiny, _CMP_GE_OQ);
        const __m256d term = _mm256_and_pd(mask, _mm256_mul_pd(x, log2_pd(x)));
        acc = _mm256_add_pd(acc, term);
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    double total = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
    for (; i < n; ++i)
        if (p[i] >= DBL_MIN) total += p[i] * std::log2(p[i]);
    return total;
}

}  // namespace rateregion::kernels

#endif
