#pragma once

#include <cstddef>

// Internal: per-backend entry points. The public dispatch lives in kernels.hpp.

namespace cofocus::kernels::scalar {
void wald(const double* k, std::size_t len, double n, double z,
          double* phat, double* lo, double* hi);
void agresti_coull(const double* k, std::size_t len, double n, double z,
                   double* phat, double* lo, double* hi);
std::size_t wilson_cc(const double* k, std::size_t len, double n, double z,
                      double* phat, double* lo, double* hi);
void mean_var(const double* x, std::size_t len, double* mean, double* sample_var);
} // namespace cofocus::kernels::scalar

#if defined(COFOCUS_HAVE_AVX2)
namespace cofocus::kernels::avx2 {
void wald(const double* k, std::size_t len, double n, double z,
          double* phat, double* lo, double* hi);
void agresti_coull(const double* k, std::size_t len, double n, double z,
                   double* phat, double* lo, double* hi);
std::size_t wilson_cc(const double* k, std::size_t len, double n, double z,
                      double* phat, double* lo, double* hi);
void mean_var(const double* x, std::size_t len, double* mean, double* sample_var);
} // namespace cofocus::kernels::avx2
#endif
