#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include "mckay/error.hpp"
#include "mckay/groups.hpp"
#include "mckay/repgraph.hpp"

namespace mckay {

namespace {

long double max_sorted_mismatch(const std::vector<long double>& a, const std::vector<long double>& b) {
  if (a.size() != b.size()) return INFINITY;
  long double m = 0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::fabs(a[i] - b[i]));
  return m;
}

}  // namespace

SpectrumReport steinberg_spectrum_check(GroupKind kind, long double tolerance) {
  const RepGraph g = mckay_graph(kind);
  const std::size_t n = g.size();
  Eigen::MatrixXd a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = g.adjacency(i, j);

  SpectrumReport report;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) report.eigenvalues.push_back(solver.eigenvalues()(i));

  report.chi_values = class_data(kind).chi_values();

  // For real multisets, sorting both sides gives the optimal matching.
  std::sort(report.eigenvalues.begin(), report.eigenvalues.end(), std::greater<>());
  std::sort(report.chi_values.begin(), report.chi_values.end(), std::greater<>());
  report.chi_mismatch = max_sorted_mismatch(report.eigenvalues, report.chi_values);

  const GroupDescriptor d = descriptor(kind);
  bool exponents_ok = true;
  if (kind.is_su2() && kind.has_affine_exponent_table()) {
    for (unsigned m : d.exponents_affine) {
      report.exponent_values.push_back(2.0L * std::cos(std::numbers::pi_v<long double> * m / d.h_hat));
    }
    std::sort(report.exponent_values.begin(), report.exponent_values.end(), std::greater<>());
    report.exponent_mismatch = max_sorted_mismatch(report.eigenvalues, report.exponent_values);
    exponents_ok = report.exponent_mismatch < tolerance;
  }
  report.passed = report.chi_mismatch < tolerance && exponents_ok;
  return report;
}

}  // namespace mckay
