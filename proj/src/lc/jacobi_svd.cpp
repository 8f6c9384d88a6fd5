#include "qact/lc/jacobi_svd.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qact/errors.hpp"

namespace qact::lc {

std::vector<double> SvdResult::left(int i) const {
    std::vector<double> out(static_cast<std::size_t>(u.rows));
    for (int r = 0; r < u.rows; ++r) out[static_cast<std::size_t>(r)] = u.at(r, i);
    return out;
}

std::vector<double> SvdResult::right(int i) const {
    std::vector<double> out(static_cast<std::size_t>(v.rows));
    for (int r = 0; r < v.rows; ++r) out[static_cast<std::size_t>(r)] = v.at(r, i);
    return out;
}

namespace {

constexpr double kOrthTol = 1e-12;
constexpr int kMaxSweeps = 64;

// rows >= cols assumed; returns thin SVD with k = cols vectors.
SvdResult svd_tall(const Matrix& d) {
    const int rows = d.rows;
    const int cols = d.cols;
    Matrix w = d;  // columns rotated toward mutual orthogonality
    Matrix v(cols, cols);
    for (int j = 0; j < cols; ++j) v.at(j, j) = 1.0;

    for (int sweep = 0;; ++sweep) {
        if (sweep >= kMaxSweeps) {
            throw NumericalError("one-sided Jacobi SVD did not converge");
        }
        bool rotated = false;
        for (int p = 0; p < cols - 1; ++p) {
            for (int q = p + 1; q < cols; ++q) {
                double app = 0.0, aqq = 0.0, apq = 0.0;
                for (int r = 0; r < rows; ++r) {
                    app += w.at(r, p) * w.at(r, p);
                    aqq += w.at(r, q) * w.at(r, q);
                    apq += w.at(r, p) * w.at(r, q);
                }
                if (std::abs(apq) <= kOrthTol * std::sqrt(app * aqq) || apq == 0.0) continue;
                rotated = true;
                const double tau = (aqq - app) / (2.0 * apq);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double cs = 1.0 / std::sqrt(1.0 + t * t);
                const double sn = cs * t;
                for (int r = 0; r < rows; ++r) {
                    const double wp = w.at(r, p);
                    const double wq = w.at(r, q);
                    w.at(r, p) = cs * wp - sn * wq;
                    w.at(r, q) = sn * wp + cs * wq;
                }
                for (int r = 0; r < cols; ++r) {
                    const double vp = v.at(r, p);
                    const double vq = v.at(r, q);
                    v.at(r, p) = cs * vp - sn * vq;
                    v.at(r, q) = sn * vp + cs * vq;
                }
            }
        }
        if (!rotated) break;
    }

    std::vector<double> sigma(static_cast<std::size_t>(cols), 0.0);
    for (int j = 0; j < cols; ++j) {
        double s = 0.0;
        for (int r = 0; r < rows; ++r) s += w.at(r, j) * w.at(r, j);
        sigma[static_cast<std::size_t>(j)] = std::sqrt(s);
    }
    std::vector<int> order(static_cast<std::size_t>(cols));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return sigma[static_cast<std::size_t>(a)] > sigma[static_cast<std::size_t>(b)];
    });

    SvdResult out;
    out.singular_values.resize(static_cast<std::size_t>(cols));
    out.u = Matrix(rows, cols);
    out.v = Matrix(cols, cols);
    const double rank_tol = 1e-14 * std::max(1.0, d.frobenius());
    for (int j = 0; j < cols; ++j) {
        const int src = order[static_cast<std::size_t>(j)];
        const double s = sigma[static_cast<std::size_t>(src)];
        out.singular_values[static_cast<std::size_t>(j)] = s;
        for (int r = 0; r < cols; ++r) out.v.at(r, j) = v.at(r, src);
        if (s > rank_tol) {
            for (int r = 0; r < rows; ++r) out.u.at(r, j) = w.at(r, src) / s;
        }
    }
    // Orthonormal completion for null columns so U is always usable.
    for (int j = 0; j < cols; ++j) {
        if (out.singular_values[static_cast<std::size_t>(j)] > rank_tol) continue;
        for (int cand = 0; cand < rows; ++cand) {
            std::vector<double> e(static_cast<std::size_t>(rows), 0.0);
            e[static_cast<std::size_t>(cand)] = 1.0;
            for (int prev = 0; prev < cols; ++prev) {
                if (prev == j) continue;
                double dot = 0.0;
                for (int r = 0; r < rows; ++r) dot += e[static_cast<std::size_t>(r)] * out.u.at(r, prev);
                for (int r = 0; r < rows; ++r) e[static_cast<std::size_t>(r)] -= dot * out.u.at(r, prev);
            }
            double norm = 0.0;
            for (double x : e) norm += x * x;
            if (norm > 0.25) {
                norm = std::sqrt(norm);
                for (int r = 0; r < rows; ++r) out.u.at(r, j) = e[static_cast<std::size_t>(r)] / norm;
                break;
            }
        }
    }
    return out;
}

Matrix transpose(const Matrix& m) {
    Matrix t(m.cols, m.rows);
    for (int r = 0; r < m.rows; ++r) {
        for (int c = 0; c < m.cols; ++c) t.at(c, r) = m.at(r, c);
    }
    return t;
}

}  // namespace

SvdResult classical_svd_oracle(const Matrix& d) {
    if (d.rows < 1 || d.cols < 1 || d.rows > 64 || d.cols > 64) {
        throw CapacityError("SVD oracle accepts matrices up to 64x64");
    }
    if (d.rows >= d.cols) return svd_tall(d);
    SvdResult flipped = svd_tall(transpose(d));
    std::swap(flipped.u, flipped.v);
    return flipped;
}

}  // namespace qact::lc
