#pragma once

#include <cmath>

// Per-element formulas for the three binomial-proportion estimators.
// These are the scalar reference kernels: the batch backends (scalar loop
// and AVX2) evaluate exactly this operation sequence, so results are
// bit-identical across lanes. Keep the op order in sync with kernels_avx2.cpp.

namespace cofocus::est {

struct Interval {
    double phat;
    double lo;
    double hi;
    bool radicand_clamped = false; // wilson_cc only
};

// Constants hoisted out of the element loop; computed once per (n, z).
struct BatchConsts {
    double n;
    double z;
    double z2;       // z*z
    double nz2;      // n + z2
    double half_z2;  // 0.5*z2
    double inv_n;    // 1.0/n
    double denom2;   // 2.0*nz2

    BatchConsts(double n_, double z_)
        : n(n_), z(z_), z2(z_ * z_), nz2(n_ + z2), half_z2(0.5 * z2),
          inv_n(1.0 / n_), denom2(2.0 * nz2) {}
};

inline double clamp_low0(double x) { return x < 0.0 ? 0.0 : x; }
inline double clamp_high1(double x) { return x > 1.0 ? 1.0 : x; }

inline Interval wald(double k, const BatchConsts& c) {
    Interval r;
    r.phat = k / c.n;
    double q = r.phat * (1.0 - r.phat) / c.n;
    double w = c.z * std::sqrt(q);
    r.lo = r.phat - w; // deliberately unclamped
    r.hi = r.phat + w;
    return r;
}

inline Interval agresti_coull(double k, const BatchConsts& c) {
    Interval r;
    r.phat = (k + c.half_z2) / c.nz2;
    double q = r.phat * (1.0 - r.phat) / c.nz2;
    double w = c.z * std::sqrt(q);
    r.lo = clamp_low0(r.phat - w);
    r.hi = clamp_high1(r.phat + w);
    return r;
}

inline Interval wilson_cc(double k, const BatchConsts& c) {
    Interval r;
    r.phat = (k + c.half_z2) / c.nz2;
    double t = k * c.inv_n;
    double term4 = 4.0 * t - 2.0;
    double common = c.z2 - c.inv_n + 4.0 * k * (1.0 - t);
    double rad_a = common + term4;
    double rad_b = common - term4;
    if (rad_a < 0.0) { rad_a = 0.0; r.radicand_clamped = true; }
    if (rad_b < 0.0) { rad_b = 0.0; r.radicand_clamped = true; }
    double sa = c.z * std::sqrt(rad_a);
    double sb = c.z * std::sqrt(rad_b);
    double two_k = 2.0 * k;
    double a = (two_k + c.z2 - (1.0 + sa)) / c.denom2;
    double b = (two_k + c.z2 + (1.0 + sb)) / c.denom2;
    a = clamp_low0(a);
    b = clamp_high1(b);
    // Boundary convention: a zero count pins the lower bound to 0 and a
    // full count pins the upper bound to 1.
    if (k == 0.0) a = 0.0;
    if (k == c.n) b = 1.0;
    r.lo = a;
    r.hi = b;
    return r;
}

} // namespace cofocus::est
