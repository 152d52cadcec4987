#include "support/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace testsupport {

std::vector<std::pair<double, double>> gauss_legendre(int n) {
  if (n < 1 || n > 64) throw std::invalid_argument("gauss_legendre: bad n");
  std::vector<std::pair<double, double>> out(n);
  for (int i = 0; i < n; ++i) {
    // Chebyshev-asymptotic initial guess, then Newton on P_n.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      pp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    out[i] = {x, 2.0 / ((1.0 - x * x) * pp * pp)};
  }
  return out;
}

double integrate(const std::function<double(double)>& f, double a, double b,
                 int n, int panels) {
  const auto rule = gauss_legendre(n);
  const double width = (b - a) / panels;
  double total = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double lo = a + p * width;
    const double mid = lo + 0.5 * width;
    double sum = 0.0;
    for (const auto& [node, weight] : rule)
      sum += weight * f(mid + 0.5 * width * node);
    total += 0.5 * width * sum;
  }
  return total;
}

}  // namespace testsupport
