#pragma once

#include <algorithm>

#include "qact/opt/optimizers.hpp"

namespace qact::opt::detail {

inline void record(OptimizationTrace& trace, int iteration, const std::vector<double>& params,
                   double value, const IterationCallback& cb) {
    const bool first = trace.records.empty();
    const double best = first ? value : std::min(value, trace.records.back().best_value);
    trace.records.push_back({iteration, params, value, best});
    if (first || value < trace.best_value) {
        trace.best_value = value;
        trace.best_params = params;
    }
    if (cb) cb(trace.records.back());
}

}  // namespace qact::opt::detail
