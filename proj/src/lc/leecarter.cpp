#include "qact/lc/leecarter.hpp"

#include <cmath>

namespace qact::lc {

LeeCarterDecomposition build_log_matrix(const MortalitySurface& surface) {
    const int rows = surface.rates.rows;
    const int cols = surface.rates.cols;
    LeeCarterDecomposition out;
    out.alpha.resize(static_cast<std::size_t>(rows));
    out.d = Matrix(rows, cols);
    for (int x = 0; x < rows; ++x) {
        double mean = 0.0;
        for (int t = 0; t < cols; ++t) mean += std::log(surface.rate(x, t));
        mean /= cols;
        out.alpha[static_cast<std::size_t>(x)] = mean;
        for (int t = 0; t < cols; ++t) {
            out.d.at(x, t) = std::log(surface.rate(x, t)) - mean;
        }
    }
    return out;
}

}  // namespace qact::lc
