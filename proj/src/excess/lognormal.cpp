#include "qact/excess/lognormal.hpp"

#include <cmath>
#include <numbers>

#include "qact/errors.hpp"
#include "qact/excess/quadrature.hpp"

namespace qact::excess {

namespace {

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

}  // namespace

void LognormalSpec::validate() const {
    if (!(sigma > 0.0)) throw ValidationError("lognormal sigma must be positive");
    if (!(x_max > 1.0)) throw ValidationError("truncation bound must exceed 1");
}

void ExcessContract::validate() const {
    if (!(slope >= 0.0 && slope <= 1.0)) {
        throw ValidationError("retention slope must lie in [0, 1] so M(x) is non-decreasing");
    }
    if (!(threshold > 0.0)) throw ValidationError("threshold must be positive");
}

double lognormal_pdf(double x, const LognormalSpec& spec) {
    if (x < 0.0) throw UsageError("lognormal density is undefined for negative x");
    if (x == 0.0) return 0.0;  // limit value
    const double z = (std::log(x) - spec.mu) / spec.sigma;
    return std::exp(-0.5 * z * z) /
           (x * spec.sigma * std::sqrt(2.0 * std::numbers::pi));
}

double payment_theory(const LognormalSpec& spec, const ExcessContract& contract) {
    spec.validate();
    contract.validate();
    const double t = contract.threshold;
    // E[X; X > t] = exp(mu + sigma^2/2) * Phi((mu + sigma^2 - ln t) / sigma)
    const double partial =
        std::exp(spec.mu + 0.5 * spec.sigma * spec.sigma) *
        normal_cdf((spec.mu + spec.sigma * spec.sigma - std::log(t)) / spec.sigma);
    const double tail = 1.0 - normal_cdf((std::log(t) - spec.mu) / spec.sigma);
    return contract.payment_factor() * (partial - t * tail);
}

double payment_truncated(const LognormalSpec& spec, const ExcessContract& contract) {
    spec.validate();
    contract.validate();
    auto f = [&](double x) { return lognormal_pdf(x, spec); };
    const double denom = adaptive_simpson(f, 0.0, spec.x_max, 1e-12);
    if (!(denom > 0.0)) throw NumericalError("no density mass below the truncation bound");
    const double numer = adaptive_simpson(
        [&](double x) { return lognormal_pdf(x, spec) * contract.payment(x); },
        contract.threshold, spec.x_max, 1e-11);
    return numer / denom;
}

}  // namespace qact::excess
