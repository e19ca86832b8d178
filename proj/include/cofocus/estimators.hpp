#pragma once

#include <cstdint>
#include <string>

namespace cofocus::stats {

enum class Method : std::uint8_t { wald, agresti_coull, wilson_cc };

const char* method_name(Method m);

/// Parses "wald", "agresti_coull"/"ac", "wilson_cc"/"wilson". Throws
/// ConfigError on anything else.
Method parse_method(const std::string& name);

/// Point estimate plus confidence interval for a binomial proportion from
/// k successes in n trials at critical value z.
struct Estimate {
    Method method;
    double k;
    double n;
    double z;
    double phat;
    double lower;
    double upper;
    double delta;                  // (upper - lower) / (2 z)
    bool radicand_clamped = false; // wilson_cc: negative radicand forced to 0
};

// Preconditions for all three: n >= 1, 0 <= k <= n, z > 0.
// n == 0 raises DataError("no observations"); other violations DataError.
Estimate estimate_wald(double k, double n, double z);
Estimate estimate_agresti_coull(double k, double n, double z);
Estimate estimate_wilson_cc(double k, double n, double z);

Estimate estimate(Method m, double k, double n, double z);

} // namespace cofocus::stats
