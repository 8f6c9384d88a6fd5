#pragma once

#include <functional>

namespace qact::excess {

// Adaptive Simpson integration with absolute tolerance. Throws NumericalError
// if the recursion cannot reach the tolerance before max_depth.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double abs_tol = 1e-12, int max_depth = 60);

}  // namespace qact::excess
