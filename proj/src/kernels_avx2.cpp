// AVX2 lane of the estimator kernels. Mirrors kernels_scalar.cpp operation
// for operation: every add/sub/mul/div/sqrt happens in the same order on the
// same values, so results are bit-identical to the scalar backend. Compiled
// with -mavx2 (no FMA) on x86-64 only; selected at runtime via CPU detection.

#include "cofocus/kernels.hpp"

#include <immintrin.h>

#include <bit>
#include <cstdint>

namespace cofocus::kernels::avx2 {

namespace {

inline __m256d clamp_low0(__m256d x) {
    const __m256d zero = _mm256_setzero_pd();
    __m256d mask = _mm256_cmp_pd(x, zero, _CMP_LT_OQ);
    return _mm256_blendv_pd(x, zero, mask);
}

inline __m256d clamp_high1(__m256d x) {
    const __m256d one = _mm256_set1_pd(1.0);
    __m256d mask = _mm256_cmp_pd(x, one, _CMP_GT_OQ);
    return _mm256_blendv_pd(x, one, mask);
}

inline double reduce_in_lane_order(__m256d v) {
    alignas(32) double d[4];
    _mm256_store_pd(d, v);
    return (d[0] + d[1]) + (d[2] + d[3]);
}

} // namespace

void wald(const double* k, std::size_t len, double n, double z,
          double* phat, double* lo, double* hi) {
    const __m256d vn = _mm256_set1_pd(n);
    const __m256d vz = _mm256_set1_pd(z);
    const __m256d one = _mm256_set1_pd(1.0);
    const std::size_t len4 = len & ~static_cast<std::size_t>(3);

    for (std::size_t i = 0; i < len4; i += 4) {
        __m256d vk = _mm256_loadu_pd(k + i);
        __m256d ph = _mm256_div_pd(vk, vn);
        __m256d q = _mm256_div_pd(_mm256_mul_pd(ph, _mm256_sub_pd(one, ph)), vn);
        __m256d w = _mm256_mul_pd(vz, _mm256_sqrt_pd(q));
        _mm256_storeu_pd(phat + i, ph);
        _mm256_storeu_pd(lo + i, _mm256_sub_pd(ph, w));
        _mm256_storeu_pd(hi + i, _mm256_add_pd(ph, w));
    }
    if (len4 < len)
        scalar::wald(k + len4, len - len4, n, z, phat + len4, lo + len4, hi + len4);
}

void agresti_coull(const double* k, std::size_t len, double n, double z,
                   double* phat, double* lo, double* hi) {
    const double z2 = z * z;
    const __m256d vnz2 = _mm256_set1_pd(n + z2);
    const __m256d vhalf_z2 = _mm256_set1_pd(0.5 * z2);
    const __m256d vz = _mm256_set1_pd(z);
    const __m256d one = _mm256_set1_pd(1.0);
    const std::size_t len4 = len & ~static_cast<std::size_t>(3);

    for (std::size_t i = 0; i < len4; i += 4) {
        __m256d vk = _mm256_loadu_pd(k + i);
        __m256d ph = _mm256_div_pd(_mm256_add_pd(vk, vhalf_z2), vnz2);
        __m256d q = _mm256_div_pd(_mm256_mul_pd(ph, _mm256_sub_pd(one, ph)), vnz2);
        __m256d w = _mm256_mul_pd(vz, _mm256_sqrt_pd(q));
        _mm256_storeu_pd(phat + i, ph);
        _mm256_storeu_pd(lo + i, clamp_low0(_mm256_sub_pd(ph, w)));
        _mm256_storeu_pd(hi + i, clamp_high1(_mm256_add_pd(ph, w)));
    }
    if (len4 < len)
        scalar::agresti_coull(k + len4, len - len4, n, z, phat + len4, lo + len4, hi + len4);
}

std::size_t wilson_cc(const double* k, std::size_t len, double n, double z,
                      double* phat, double* lo, double* hi) {
    const double z2 = z * z;
    const double inv_n = 1.0 / n;
    const __m256d vn = _mm256_set1_pd(n);
    const __m256d vnz2 = _mm256_set1_pd(n + z2);
    const __m256d vz2 = _mm256_set1_pd(z2);
    const __m256d vhalf_z2 = _mm256_set1_pd(0.5 * z2);
    const __m256d vdenom2 = _mm256_set1_pd(2.0 * (n + z2));
    const __m256d vz = _mm256_set1_pd(z);
    const __m256d vinv_n = _mm256_set1_pd(inv_n);
    const __m256d vz2_minus_inv_n = _mm256_set1_pd(z2 - inv_n);
    const __m256d zero = _mm256_setzero_pd();
    const __m256d one = _mm256_set1_pd(1.0);
    const __m256d two = _mm256_set1_pd(2.0);
    const __m256d four = _mm256_set1_pd(4.0);
    const std::size_t len4 = len & ~static_cast<std::size_t>(3);

    std::size_t clamped = 0;
    for (std::size_t i = 0; i < len4; i += 4) {
        __m256d vk = _mm256_loadu_pd(k + i);
        __m256d ph = _mm256_div_pd(_mm256_add_pd(vk, vhalf_z2), vnz2);
        __m256d t = _mm256_mul_pd(vk, vinv_n);
        __m256d term4 = _mm256_sub_pd(_mm256_mul_pd(four, t), two);
        __m256d common = _mm256_add_pd(
            vz2_minus_inv_n,
            _mm256_mul_pd(_mm256_mul_pd(four, vk), _mm256_sub_pd(one, t)));
        __m256d rad_a = _mm256_add_pd(common, term4);
        __m256d rad_b = _mm256_sub_pd(common, term4);
        __m256d neg_a = _mm256_cmp_pd(rad_a, zero, _CMP_LT_OQ);
        __m256d neg_b = _mm256_cmp_pd(rad_b, zero, _CMP_LT_OQ);
        rad_a = _mm256_blendv_pd(rad_a, zero, neg_a);
        rad_b = _mm256_blendv_pd(rad_b, zero, neg_b);
        clamped += static_cast<std::size_t>(
            std::popcount(static_cast<unsigned>(_mm256_movemask_pd(_mm256_or_pd(neg_a, neg_b)))));
        __m256d sa = _mm256_mul_pd(vz, _mm256_sqrt_pd(rad_a));
        __m256d sb = _mm256_mul_pd(vz, _mm256_sqrt_pd(rad_b));
        __m256d two_k = _mm256_mul_pd(two, vk);
        __m256d base = _mm256_add_pd(two_k, vz2);
        __m256d a = _mm256_div_pd(_mm256_sub_pd(base, _mm256_add_pd(one, sa)), vdenom2);
        __m256d b = _mm256_div_pd(_mm256_add_pd(base, _mm256_add_pd(one, sb)), vdenom2);
        a = clamp_low0(a);
        b = clamp_high1(b);
        a = _mm256_blendv_pd(a, zero, _mm256_cmp_pd(vk, zero, _CMP_EQ_OQ));
        b = _mm256_blendv_pd(b, one, _mm256_cmp_pd(vk, vn, _CMP_EQ_OQ));
        _mm256_storeu_pd(phat + i, ph);
        _mm256_storeu_pd(lo + i, a);
        _mm256_storeu_pd(hi + i, b);
    }
    if (len4 < len)
        clamped += scalar::wilson_cc(k + len4, len - len4, n, z,
                                     phat + len4, lo + len4, hi + len4);
    return clamped;
}

void mean_var(const double* x, std::size_t len, double* mean, double* sample_var) {
    if (len < 8) { // below a vector's worth of work; scalar path is the reference
        scalar::mean_var(x, len, mean, sample_var);
        return;
    }
    const std::size_t len4 = len & ~static_cast<std::size_t>(3);

    __m256d acc = _mm256_setzero_pd();
    for (std::size_t i = 0; i < len4; i += 4)
        acc = _mm256_add_pd(acc, _mm256_loadu_pd(x + i));
    double s = reduce_in_lane_order(acc);
    for (std::size_t i = len4; i < len; ++i) s += x[i];
    const double m = s / static_cast<double>(len);
    *mean = m;

    const __m256d vm = _mm256_set1_pd(m);
    __m256d vss = _mm256_setzero_pd();
    for (std::size_t i = 0; i < len4; i += 4) {
        __m256d d = _mm256_sub_pd(_mm256_loadu_pd(x + i), vm);
        vss = _mm256_add_pd(vss, _mm256_mul_pd(d, d));
    }
    double ss = reduce_in_lane_order(vss);
    for (std::size_t i = len4; i < len; ++i) {
        double d = x[i] - m;
        ss += d * d;
    }
    *sample_var = ss / static_cast<double>(len - 1);
}

} // namespace cofocus::kernels::avx2
