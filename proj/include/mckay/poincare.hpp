#pragma once

// Poincare series m^mu(t) = sum_k m_k^mu t^k for the multiplicity of each
// irreducible in the tensor powers of V, as rational functions.

#include <cstddef>
#include <string>
#include <vector>

#include "mckay/groups.hpp"
#include "mckay/polyring.hpp"
#include "mckay/repgraph.hpp"

namespace mckay {

struct SeriesResult {
  std::string node;
  RationalFn series;         // reduced
  IntPoly numerator_det;     // det(M^mu)
  IntPoly denominator_det;   // det(I - tA)
};

/// Cramer's rule on (I - tA) m = delta: column mu of I - tA replaced by e_0.
/// Throws AsymmetricAdjacency, DisconnectedGraph.
SeriesResult series_cramer(const RepGraph& g, std::size_t mu);
SeriesResult series_cramer(const RepGraph& g, std::string_view mu_label);

/// Solves (I - tA) m = delta by exact Gaussian elimination over Q(t),
/// independently of any determinant.
std::vector<RationalFn> solve_series_system(const RepGraph& g);

/// Every node's series. Each solve result is checked against Cramer's rule
/// and against m^mu = delta_{mu,0} + t sum_l a(mu,l) m^l; a failure throws
/// InvariantViolation.
std::vector<SeriesResult> series_all(const RepGraph& g);

/// series_cramer at node 0, with det(M^0) checked against det(I - t A')
/// where A' is the adjacency matrix after deleting node 0.
SeriesResult invariants_series(const RepGraph& g);

/// (1 + t^h) / ((1 - t^a)(1 - t^b)). Throws InvalidKind for S4Demo.
RationalFn sym_invariants_series(const GroupDescriptor& g);

/// 1/|G| sum over classes |c| / (1 - chi_V(c) t + t^2), as a floating-point
/// power series. Throws InvalidKind for S4Demo.
std::vector<long double> molien_invariants(GroupKind kind, std::size_t n_terms);

}  // namespace mckay
