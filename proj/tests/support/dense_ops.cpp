#include "support/dense_ops.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>

namespace testsupport {

using swnh::Grid;
using swnh::OperatorParams;
using swnh::TriDiagSystem;

Matrix dense_from_tridiag(const TriDiagSystem& sys) {
  const int n = sys.size();
  Matrix a(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i) {
    a[i][i] = sys.diag[i];
    if (i > 0) a[i][i - 1] = sys.lower[i];
    if (i + 1 < n) a[i][i + 1] = sys.upper[i];
  }
  if (sys.cyclic && n >= 3) {
    a[0][n - 1] += sys.corner_lower;
    a[n - 1][0] += sys.corner_upper;
  }
  return a;
}

Matrix dense_divergence(std::span<const double> h, std::span<const double> zb,
                        const Grid& grid, const OperatorParams& params,
                        bool periodic) {
  const int n = grid.cells();
  const int rows = periodic ? n : n + 1;
  const double wrap_dxf = 0.5 * (grid.dx.front() + grid.dx.back());
  Matrix b(rows, std::vector<double>(2 * n, 0.0));
  std::vector<double> u(n, 0.0), w(n, 0.0);
  for (int col = 0; col < 2 * n; ++col) {
    const bool is_w = col >= n;
    const int cell = is_w ? col - n : col;
    (is_w ? w : u)[cell] = 1.0;
    const std::vector<double> div =
        swnh::div_sw(u, w, h, zb, grid, params, periodic);
    (is_w ? w : u)[cell] = 0.0;
    for (int j = 0; j < rows; ++j) {
      const double dxf =
          (periodic && j == 0) ? wrap_dxf : grid.dxf[j];
      b[j][col] = div[j] * dxf;  // unscale
    }
  }
  return b;
}

Matrix dense_pressure_operator(std::span<const double> h,
                               std::span<const double> zb, const Grid& grid,
                               const OperatorParams& params, bool periodic) {
  const int n = grid.cells();
  const Matrix b = dense_divergence(h, zb, grid, params, periodic);
  const int rows = static_cast<int>(b.size());
  std::vector<double> lambda(2 * n);
  for (int i = 0; i < n; ++i)
    lambda[i] = lambda[n + i] = 1.0 / (h[i] * grid.dx[i]);
  Matrix e(rows, std::vector<double>(rows, 0.0));
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < rows; ++c) {
      double sum = 0.0;
      for (int k = 0; k < 2 * n; ++k) sum += b[r][k] * lambda[k] * b[c][k];
      e[r][c] = sum;
    }
  return e;
}

double smallest_eigenvalue(Matrix a) {
  const int n = static_cast<int>(a.size());
  if (n == 0) throw std::invalid_argument("empty matrix");
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) off += a[i][j] * a[i][j];
    if (off < 1e-30) break;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        if (std::abs(a[p][q]) < 1e-300) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
      }
  }
  double min_ev = a[0][0];
  for (int i = 1; i < n; ++i) min_ev = std::min(min_ev, a[i][i]);
  return min_ev;
}

std::vector<double> matvec(const Matrix& a, std::span<const double> x) {
  std::vector<double> y(a.size(), 0.0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) y[i] += a[i][j] * x[j];
  return y;
}

}  // namespace testsupport
