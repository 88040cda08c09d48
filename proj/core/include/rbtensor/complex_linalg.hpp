#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "rbtensor/complex_matrix.hpp"

namespace rbt {

/// Full singular value decomposition M = U * diag(sigma) * V^H.
struct CSvd {
    CMatrix U;                  ///< m x m, unitary
    std::vector<double> sigma;  ///< min(m, n) values, descending, >= 0
    CMatrix V;                  ///< n x n, unitary
};

/// max(rows, cols) * machine epsilon.
inline double default_rtol(std::size_t rows, std::size_t cols) {
    return static_cast<double>(rows > cols ? rows : cols) * std::numeric_limits<double>::epsilon();
}

/// One-sided (Hestenes) Jacobi SVD. The phase of each U column is fixed so
/// that its first non-negligible component is real and positive, which makes
/// the result deterministic for a given input.
///
/// Throws NonFiniteError on NaN/Inf input and ConvergenceError after
/// 100 * max(m, n) sweeps without convergence.
CSvd complex_svd(const CMatrix& m);

/// Moore-Penrose inverse V * diag(1/sigma_i) * U^H keeping sigma_i > max(rtol * sigma_max, atol).
CMatrix complex_pinv(const CMatrix& m, double rtol, double atol = 0.0);
inline CMatrix complex_pinv(const CMatrix& m) { return complex_pinv(m, default_rtol(m.rows(), m.cols())); }

/// Pseudo-inverse assembled from an existing decomposition.
CMatrix pinv_from_svd(const CSvd& svd, double rtol, double atol = 0.0);

/// Number of sigma_i > max(rtol * sigma_max, atol); zero for empty or all-zero input.
std::size_t numeric_rank(std::span<const double> sigma, double rtol, double atol = 0.0);

}  // namespace rbt
