#include "qact/excess/discretize.hpp"

#include <cmath>

#include "qact/errors.hpp"

namespace qact::excess {

double DiscretizedLoss::exact_discrete_payment(double payment_factor) const {
    double sum = 0.0;
    for (std::uint64_t j = threshold_index; j < probabilities.size(); ++j) {
        sum += probabilities[j] * static_cast<double>(j - threshold_index);
    }
    return payment_factor * unit * sum;
}

double DiscretizedLoss::taylor_bias_bound(double payment_factor, double c) const {
    double sum = 0.0;
    for (std::uint64_t j = threshold_index; j < probabilities.size(); ++j) {
        const double m = static_cast<double>(j - threshold_index);
        sum += probabilities[j] * m * m;
    }
    return payment_factor * unit * c * sum;
}

DiscretizedLoss discretize(const LognormalSpec& spec, const ExcessContract& contract,
                           int n_qubits) {
    spec.validate();
    contract.validate();
    if (n_qubits < 2 || n_qubits > 14) {
        throw CapacityError("discretization supports 2..14 qubits");
    }

    DiscretizedLoss dist;
    dist.n_qubits = n_qubits;
    const std::uint64_t count = std::uint64_t{1} << n_qubits;
    const double steps = static_cast<double>(count - 1);
    dist.unit = spec.x_max / steps;
    dist.grid.resize(count);
    dist.probabilities.resize(count);

    double total = 0.0;
    for (std::uint64_t j = 0; j < count; ++j) {
        dist.grid[j] = spec.x_max * static_cast<double>(j) / steps;
        dist.probabilities[j] = lognormal_pdf(dist.grid[j], spec);
        total += dist.probabilities[j];
    }
    if (!(total > 0.0)) throw NumericalError("discretized density has no mass");
    for (double& p : dist.probabilities) p /= total;

    const auto rounded =
        static_cast<std::int64_t>(std::llround(steps / spec.x_max * contract.threshold));
    dist.threshold_index = static_cast<std::uint64_t>(
        std::min<std::int64_t>(std::max<std::int64_t>(rounded, 1),
                               static_cast<std::int64_t>(count) - 1));
    return dist;
}

}  // namespace qact::excess
