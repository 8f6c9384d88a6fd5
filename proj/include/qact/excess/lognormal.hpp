#pragma once

namespace qact::excess {

// Claim-size model: ln X ~ Normal(mu, sigma^2), truncated to [0, x_max] for
// the discretized pipeline.
struct LognormalSpec {
    double mu = 0.0;
    double sigma = 1.0;
    double x_max = 10.0;

    void validate() const;
};

// Piecewise-linear retention: M(x) = 0 below the threshold and
// threshold + slope * (x - threshold) above it, so the reinsurer pays
// payment_factor * (x - threshold) with payment_factor = 1 - slope.
struct ExcessContract {
    double threshold = 1.0;
    double slope = 0.6;

    double payment_factor() const { return 1.0 - slope; }
    double payment(double x) const {
        return x > threshold ? payment_factor() * (x - threshold) : 0.0;
    }
    void validate() const;
};

double lognormal_pdf(double x, const LognormalSpec& spec);

// Untruncated expected payment via the lognormal partial-expectation closed
// form (standard normal CDF); the horizontal reference line of the sweep.
double payment_theory(const LognormalSpec& spec, const ExcessContract& contract);

// Expected payment under the renormalized truncated density, by adaptive
// quadrature to 1e-10 absolute.
double payment_truncated(const LognormalSpec& spec, const ExcessContract& contract);

}  // namespace qact::excess
