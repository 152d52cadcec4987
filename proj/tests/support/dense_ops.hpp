#pragma once

#include <span>
#include <vector>

#include "swnh/grid.hpp"
#include "swnh/sw_operators.hpp"

namespace testsupport {

using Matrix = std::vector<std::vector<double>>;

/// Dense equivalent of a (possibly cyclic, possibly pinned) TriDiagSystem.
Matrix dense_from_tridiag(const swnh::TriDiagSystem& sys);

/// Unscaled discrete divergence as a dense matrix B: rows = faces 0..I
/// (non-periodic; boundary rows zero) or faces 0..I-1 (periodic), columns =
/// stacked velocities (u_0..u_{I-1}, w_0..w_{I-1}). Built column-by-column by
/// applying div_sw to basis vectors and unscaling by the face widths.
Matrix dense_divergence(std::span<const double> h, std::span<const double> zb,
                        const swnh::Grid& grid,
                        const swnh::OperatorParams& params, bool periodic);

/// B diag(1/(H_i dx_i)) B^T (the face-pressure operator on wet domains).
Matrix dense_pressure_operator(std::span<const double> h,
                               std::span<const double> zb,
                               const swnh::Grid& grid,
                               const swnh::OperatorParams& params,
                               bool periodic);

/// Smallest eigenvalue of a small symmetric matrix (cyclic Jacobi sweeps).
double smallest_eigenvalue(Matrix a);

/// Dense mat-vec.
std::vector<double> matvec(const Matrix& a, std::span<const double> x);

}  // namespace testsupport
