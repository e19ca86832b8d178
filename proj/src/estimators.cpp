#include "cofocus/estimators.hpp"

#include "cofocus/errors.hpp"
#include "cofocus/estimator_math.hpp"

namespace cofocus::stats {

const char* method_name(Method m) {
    switch (m) {
        case Method::wald: return "wald";
        case Method::agresti_coull: return "agresti_coull";
        case Method::wilson_cc: return "wilson_cc";
    }
    return "?";
}

Method parse_method(const std::string& name) {
    if (name == "wald") return Method::wald;
    if (name == "agresti_coull" || name == "ac") return Method::agresti_coull;
    if (name == "wilson_cc" || name == "wilson") return Method::wilson_cc;
    throw ConfigError("unknown estimator method: " + name);
}

namespace {

void check_args(double k, double n, double z) {
    if (n == 0.0) throw DataError("no observations");
    if (!(n >= 1.0)) throw DataError("invalid trial count");
    if (!(k >= 0.0 && k <= n)) throw DataError("count k outside [0, n]");
    if (!(z > 0.0)) throw DataError("z must be positive");
}

Estimate finish(Method m, double k, double n, double z, const est::Interval& iv) {
    Estimate e;
    e.method = m;
    e.k = k;
    e.n = n;
    e.z = z;
    e.phat = iv.phat;
    e.lower = iv.lo;
    e.upper = iv.hi;
    e.delta = (iv.hi - iv.lo) / (2.0 * z);
    e.radicand_clamped = iv.radicand_clamped;
    return e;
}

} // namespace

Estimate estimate_wald(double k, double n, double z) {
    check_args(k, n, z);
    est::BatchConsts c(n, z);
    return finish(Method::wald, k, n, z, est::wald(k, c));
}

Estimate estimate_agresti_coull(double k, double n, double z) {
    check_args(k, n, z);
    est::BatchConsts c(n, z);
    return finish(Method::agresti_coull, k, n, z, est::agresti_coull(k, c));
}

Estimate estimate_wilson_cc(double k, double n, double z) {
    check_args(k, n, z);
    est::BatchConsts c(n, z);
    return finish(Method::wilson_cc, k, n, z, est::wilson_cc(k, c));
}

Estimate estimate(Method m, double k, double n, double z) {
    switch (m) {
        case Method::wald: return estimate_wald(k, n, z);
        case Method::agresti_coull: return estimate_agresti_coull(k, n, z);
        case Method::wilson_cc: return estimate_wilson_cc(k, n, z);
    }
    throw ConfigError("unknown estimator method");
}

} // namespace cofocus::stats
