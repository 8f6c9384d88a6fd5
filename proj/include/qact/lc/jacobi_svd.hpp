#pragma once

#include <vector>

#include "qact/lc/matrix.hpp"

namespace qact::lc {

// Full SVD by one-sided Jacobi column rotations, swept until every column
// pair is orthogonal to 1e-12 relative. The validation oracle for the
// variational solver; independent of the quantum path by construction.
struct SvdResult {
    std::vector<double> singular_values;  // descending
    Matrix u;                             // left vectors in columns
    Matrix v;                             // right vectors in columns

    std::vector<double> left(int i) const;
    std::vector<double> right(int i) const;
};

SvdResult classical_svd_oracle(const Matrix& d);

}  // namespace qact::lc
