#pragma once

#include <cstddef>
#include <optional>
#include <string>

// Batch kernels for the estimator formulas and moment reductions. Every
// backend implements the same operation sequence (see estimator_math.hpp),
// so outputs are bit-identical regardless of which backend runs; the test
// suite asserts that. Backend selection happens once at first use:
// AVX2 when the CPU has it, overridable with force() or the
// COFOCUS_KERNELS environment variable ("scalar" / "avx2").

namespace cofocus::kernels {

enum class Backend { scalar, avx2 };

using EstimatorFn = void (*)(const double* k, std::size_t len, double n, double z,
                             double* phat, double* lo, double* hi);
// Returns the number of elements whose wilson radicand was clamped to 0.
using WilsonFn = std::size_t (*)(const double* k, std::size_t len, double n, double z,
                                 double* phat, double* lo, double* hi);
// Fixed 4-accumulator order; sample_var uses the (len-1) divisor and is 0
// when len < 2.
using MeanVarFn = void (*)(const double* x, std::size_t len, double* mean, double* sample_var);

struct KernelTable {
    EstimatorFn wald;
    EstimatorFn agresti_coull;
    WilsonFn wilson_cc;
    MeanVarFn mean_var;
};

bool backend_available(Backend b);
const char* backend_name(Backend b);

/// Active backend's table (detection on first call).
const KernelTable& table();
Backend active();

/// Overrides auto-detection; nullopt restores it. Throws ConfigError for an
/// unavailable backend.
void force(std::optional<Backend> b);

/// Table for a specific backend (for equivalence tests).
const KernelTable& table_for(Backend b);

} // namespace cofocus::kernels
