#pragma once

#include <functional>
#include <utility>
#include <vector>

namespace testsupport {

/// Gauss-Legendre nodes and weights on [-1, 1] (Newton iteration on the
/// Legendre polynomial; n up to 64).
std::vector<std::pair<double, double>> gauss_legendre(int n);

/// Composite Gauss-Legendre integration of f over [a, b]: `panels` equal
/// sub-intervals, `n` nodes each.
double integrate(const std::function<double(double)>& f, double a, double b,
                 int n = 32, int panels = 8);

}  // namespace testsupport
