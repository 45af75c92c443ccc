#pragma once

// Representation graphs: nodes are the irreducible modules, and node mu has
// a(mu, lambda) edges to lambda when G^mu (x) V contains G^lambda with that
// multiplicity.

#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mckay/bigint.hpp"
#include "mckay/groups.hpp"

namespace mckay {

using IntMatrix = std::vector<std::vector<long>>;

class RepGraph {
public:
  RepGraph() = default;
  /// Throws InvalidParameter on shape errors, duplicate labels or
  /// non-positive marks and negative multiplicities. Does not check the
  /// dimension count; see check_dimension_count().
  RepGraph(std::vector<std::string> labels, std::vector<long> marks, IntMatrix adjacency, long v_dim);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<long>& marks() const { return marks_; }
  const IntMatrix& adjacency() const { return adj_; }
  long adjacency(std::size_t mu, std::size_t lambda) const { return adj_[mu][lambda]; }
  long v_dim() const { return v_dim_; }

  /// Throws UnknownNode.
  std::size_t index_of(std::string_view label) const;
  bool is_symmetric() const;
  /// Every node reachable from node 0 along edges.
  bool is_connected_from_trivial() const;

  /// Throws DimensionMismatch unless sum_l a(mu,l) marks[l] = v_dim marks[mu].
  void check_dimension_count() const;

  friend bool operator==(const RepGraph&, const RepGraph&) = default;

private:
  std::vector<std::string> labels_;
  std::vector<long> marks_;
  IntMatrix adj_;
  long v_dim_ = 0;
};

struct BratteliLevel {
  std::size_t k = 0;
  std::vector<BigInt> mults;  // m_k^lambda per node
  BigInt z_dim;               // sum of squares of mults
};

/// Affine Dynkin diagram of an SU(2) subgroup with node 0 affine, or the S4
/// reflection-representation graph.
RepGraph mckay_graph(GroupKind kind);

/// Character table with complex entries; class 0 must be the identity.
struct CharacterTable {
  std::vector<std::string> class_labels;
  std::vector<double> class_sizes;
  std::vector<std::string> irrep_labels;
  std::vector<std::vector<std::complex<double>>> values;  // [irrep][class]
  std::optional<std::string> v_label;                      // "#V=" directive

  double order() const;
};

/// Table 1 of the S4 example: classes (1), (12), (123), (1234), (12)(34).
CharacterTable s4_character_table();

/// a(mu,lambda) = 1/|G| sum_c |c| chi_mu(c) chi_V(c) conj(chi_lambda(c)),
/// rounded after a 1e-6 integrality gate. Throws NotOrthonormal, NotIntegral,
/// UnknownNode. Non-self-dual V yields an asymmetric graph and a warning.
RepGraph graph_from_chartable(const CharacterTable& table, std::string_view v_label,
                              std::vector<std::string>* warnings = nullptr);

/// Removes node 0. Throws TooSmall for graphs with fewer than two nodes.
RepGraph delete_affine(const RepGraph& g);

/// Level k holds the number of k-step walks from node 0 to each node.
std::vector<std::vector<BigInt>> walk_counts(const RepGraph& g, std::size_t k_max);

/// Levels 0..k_max. For symmetric graphs also checks z_dim(k) = m_{2k}^0 and
/// throws InvariantViolation otherwise.
std::vector<BratteliLevel> bratteli(const RepGraph& g, std::size_t k_max);

}  // namespace mckay
