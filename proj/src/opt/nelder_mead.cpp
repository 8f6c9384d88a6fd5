#include <algorithm>
#include <cmath>
#include <numeric>

#include "qact/errors.hpp"
#include "qact/opt/optimizers.hpp"
#include "trace_detail.hpp"

namespace qact::opt {

OptimizationTrace minimize_nelder_mead(const Objective& objective, std::span<const double> theta0,
                                       const NelderMeadConfig& config,
                                       const IterationCallback& on_iteration) {
    if (config.iterations < 0) throw UsageError("iteration count must be >= 0");
    if (!(config.simplex_scale > 0.0)) throw UsageError("simplex scale must be positive");
    const std::size_t dim = theta0.size();
    if (dim == 0) throw UsageError("empty parameter vector");

    OptimizationTrace trace;
    std::vector<std::vector<double>> xs(dim + 1, std::vector<double>(theta0.begin(), theta0.end()));
    for (std::size_t i = 0; i < dim; ++i) xs[i + 1][i] += config.simplex_scale;

    std::vector<double> fs(dim + 1);
    for (std::size_t i = 0; i <= dim; ++i) {
        fs[i] = objective(xs[i]);
        if (!std::isfinite(fs[i])) {
            trace.status = TerminalStatus::kAbortedNonFinite;
            trace.best_params.assign(theta0.begin(), theta0.end());
            return trace;
        }
    }
    trace.best_params = xs[0];
    trace.best_value = fs[0];

    auto eval = [&](const std::vector<double>& x, double& out) {
        out = objective(x);
        return std::isfinite(out);
    };

    std::vector<std::size_t> order(dim + 1);
    std::vector<double> centroid(dim), xr(dim), xe(dim), xc(dim);
    constexpr double kReflect = 1.0, kExpand = 2.0, kContract = 0.5, kShrink = 0.5;

    for (int it = 0; it < config.iterations; ++it) {
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return fs[a] < fs[b];
        });
        {
            std::vector<std::vector<double>> xs2(dim + 1);
            std::vector<double> fs2(dim + 1);
            for (std::size_t i = 0; i <= dim; ++i) {
                xs2[i] = std::move(xs[order[i]]);
                fs2[i] = fs[order[i]];
            }
            xs = std::move(xs2);
            fs = std::move(fs2);
        }

        double f_spread = 0.0, x_spread = 0.0;
        for (std::size_t i = 1; i <= dim; ++i) {
            f_spread = std::max(f_spread, std::abs(fs[i] - fs[0]));
            for (std::size_t d = 0; d < dim; ++d) {
                x_spread = std::max(x_spread, std::abs(xs[i][d] - xs[0][d]));
            }
        }
        if (f_spread < config.f_tol && x_spread < config.x_tol) {
            detail::record(trace, it, xs[0], fs[0], on_iteration);
            trace.status = TerminalStatus::kConverged;
            return trace;
        }

        for (std::size_t d = 0; d < dim; ++d) {
            double s = 0.0;
            for (std::size_t i = 0; i < dim; ++i) s += xs[i][d];
            centroid[d] = s / static_cast<double>(dim);
        }
        for (std::size_t d = 0; d < dim; ++d) {
            xr[d] = centroid[d] + kReflect * (centroid[d] - xs[dim][d]);
        }
        double fr;
        if (!eval(xr, fr)) {
            trace.status = TerminalStatus::kAbortedNonFinite;
            return trace;
        }

        bool shrink = false;
        if (fr < fs[0]) {
            for (std::size_t d = 0; d < dim; ++d) {
                xe[d] = centroid[d] + kExpand * (centroid[d] - xs[dim][d]);
            }
            double fe;
            if (!eval(xe, fe)) {
                trace.status = TerminalStatus::kAbortedNonFinite;
                return trace;
            }
            if (fe < fr) {
                xs[dim] = xe;
                fs[dim] = fe;
            } else {
                xs[dim] = xr;
                fs[dim] = fr;
            }
        } else if (fr < fs[dim - 1]) {
            xs[dim] = xr;
            fs[dim] = fr;
        } else if (fr < fs[dim]) {
            for (std::size_t d = 0; d < dim; ++d) xc[d] = centroid[d] + kContract * (xr[d] - centroid[d]);
            double fc;
            if (!eval(xc, fc)) {
                trace.status = TerminalStatus::kAbortedNonFinite;
                return trace;
            }
            if (fc <= fr) {
                xs[dim] = xc;
                fs[dim] = fc;
            } else {
                shrink = true;
            }
        } else {
            for (std::size_t d = 0; d < dim; ++d) {
                xc[d] = centroid[d] + kContract * (xs[dim][d] - centroid[d]);
            }
            double fc;
            if (!eval(xc, fc)) {
                trace.status = TerminalStatus::kAbortedNonFinite;
                return trace;
            }
            if (fc < fs[dim]) {
                xs[dim] = xc;
                fs[dim] = fc;
            } else {
                shrink = true;
            }
        }
        if (shrink) {
            for (std::size_t i = 1; i <= dim; ++i) {
                for (std::size_t d = 0; d < dim; ++d) {
                    xs[i][d] = xs[0][d] + kShrink * (xs[i][d] - xs[0][d]);
                }
                if (!eval(xs[i], fs[i])) {
                    trace.status = TerminalStatus::kAbortedNonFinite;
                    return trace;
                }
            }
        }

        const std::size_t lo = static_cast<std::size_t>(
            std::min_element(fs.begin(), fs.end()) - fs.begin());
        detail::record(trace, it, xs[lo], fs[lo], on_iteration);
    }
    trace.status = TerminalStatus::kCompleted;
    return trace;
}

}  // namespace qact::opt
