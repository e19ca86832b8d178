#include "cofocus/estimator_math.hpp"
#include "cofocus/kernels.hpp"

namespace cofocus::kernels::scalar {

void wald(const double* k, std::size_t len, double n, double z,
          double* phat, double* lo, double* hi) {
    est::BatchConsts c(n, z);
    for (std::size_t i = 0; i < len; ++i) {
        est::Interval r = est::wald(k[i], c);
        phat[i] = r.phat;
        lo[i] = r.lo;
        hi[i] = r.hi;
    }
}

void agresti_coull(const double* k, std::size_t len, double n, double z,
                   double* phat, double* lo, double* hi) {
    est::BatchConsts c(n, z);
    for (std::size_t i = 0; i < len; ++i) {
        est::Interval r = est::agresti_coull(k[i], c);
        phat[i] = r.phat;
        lo[i] = r.lo;
        hi[i] = r.hi;
    }
}

std::size_t wilson_cc(const double* k, std::size_t len, double n, double z,
                      double* phat, double* lo, double* hi) {
    est::BatchConsts c(n, z);
    std::size_t clamped = 0;
    for (std::size_t i = 0; i < len; ++i) {
        est::Interval r = est::wilson_cc(k[i], c);
        phat[i] = r.phat;
        lo[i] = r.lo;
        hi[i] = r.hi;
        clamped += r.radicand_clamped ? 1 : 0;
    }
    return clamped;
}

// Two-pass mean/variance with four interleaved accumulators combined as
// (a0+a1)+(a2+a3), tail elements added afterwards in index order. The AVX2
// lane reproduces this order exactly; do not "simplify" the accumulation.
void mean_var(const double* x, std::size_t len, double* mean, double* sample_var) {
    if (len == 0) {
        *mean = 0.0;
        *sample_var = 0.0;
        return;
    }
    const std::size_t len4 = len & ~static_cast<std::size_t>(3);

    double a0 = 0.0, a1 = 0.0, a2 = 0.0, a3 = 0.0;
    for (std::size_t i = 0; i < len4; i += 4) {
        a0 += x[i];
        a1 += x[i + 1];
        a2 += x[i + 2];
        a3 += x[i + 3];
    }
    double s = (a0 + a1) + (a2 + a3);
    for (std::size_t i = len4; i < len; ++i) s += x[i];
    const double m = s / static_cast<double>(len);
    *mean = m;

    if (len < 2) {
        *sample_var = 0.0;
        return;
    }
    double v0 = 0.0, v1 = 0.0, v2 = 0.0, v3 = 0.0;
    for (std::size_t i = 0; i < len4; i += 4) {
        double d0 = x[i] - m;
        double d1 = x[i + 1] - m;
        double d2 = x[i + 2] - m;
        double d3 = x[i + 3] - m;
        v0 += d0 * d0;
        v1 += d1 * d1;
        v2 += d2 * d2;
        v3 += d3 * d3;
    }
    double ss = (v0 + v1) + (v2 + v3);
    for (std::size_t i = len4; i < len; ++i) {
        double d = x[i] - m;
        ss += d * d;
    }
    *sample_var = ss / static_cast<double>(len - 1);
}

} // namespace cofocus::kernels::scalar
