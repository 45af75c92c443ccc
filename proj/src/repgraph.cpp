#include "mckay/repgraph.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "mckay/error.hpp"

namespace mckay {

RepGraph::RepGraph(std::vector<std::string> labels, std::vector<long> marks, IntMatrix adjacency, long v_dim)
    : labels_(std::move(labels)), marks_(std::move(marks)), adj_(std::move(adjacency)), v_dim_(v_dim) {
  const std::size_t n = labels_.size();
  if (marks_.size() != n || adj_.size() != n) {
    throw Error(ErrorKind::InvalidParameter, "labels, marks and adjacency sizes differ");
  }
  if (std::set<std::string>(labels_.begin(), labels_.end()).size() != n) {
    throw Error(ErrorKind::InvalidParameter, "duplicate node label");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (adj_[i].size() != n) throw Error(ErrorKind::InvalidParameter, "adjacency matrix is not square");
    if (marks_[i] <= 0) throw Error(ErrorKind::InvalidParameter, "mark of node " + labels_[i] + " is not positive");
    for (long a : adj_[i]) {
      if (a < 0) throw Error(ErrorKind::InvalidParameter, "negative edge multiplicity at node " + labels_[i]);
    }
  }
  if (v_dim_ < 0) throw Error(ErrorKind::InvalidParameter, "negative v_dim");
}

std::size_t RepGraph::index_of(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw Error(ErrorKind::UnknownNode, "no node labelled '" + std::string(label) + "'");
  return static_cast<std::size_t>(it - labels_.begin());
}

bool RepGraph::is_symmetric() const {
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (adj_[i][j] != adj_[j][i]) return false;
  return true;
}

bool RepGraph::is_connected_from_trivial() const {
  if (size() == 0) return true;
  std::vector<bool> seen(size(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    const std::size_t u = stack.back();
    stack.pop_back();
    for (std::size_t v = 0; v < size(); ++v) {
      if (adj_[u][v] > 0 && !seen[v]) {
        seen[v] = true;
        stack.push_back(v);
      }
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

void RepGraph::check_dimension_count() const {
  for (std::size_t mu = 0; mu < size(); ++mu) {
    long sum = 0;
    for (std::size_t l = 0; l < size(); ++l) sum += adj_[mu][l] * marks_[l];
    if (sum != v_dim_ * marks_[mu]) {
      throw Error(ErrorKind::DimensionMismatch,
                  "node " + labels_[mu] + ": sum of a(mu,l)*mark(l) is " + std::to_string(sum) + ", expected v_dim*mark = " +
                      std::to_string(v_dim_ * marks_[mu]));
    }
  }
}

RepGraph mckay_graph(GroupKind kind) {
  const GroupDescriptor d = descriptor(kind);
  const std::size_t n = d.node_labels.size();
  IntMatrix a(n, std::vector<long>(n, 0));
  auto edge = [&a](std::size_t i, std::size_t j) {
    a[i][j] += 1;
    a[j][i] += 1;
  };
  switch (kind.family) {
    case GroupFamily::Cyclic:
      // n = 2 degenerates to a double edge between the two nodes.
      for (std::size_t i = 0; i < n; ++i) edge(i, (i + 1) % n);
      break;
    case GroupFamily::BinaryDihedral: {
      const std::size_t m = kind.n;
      edge(0, 1);
      for (std::size_t i = 1; i + 1 < m; ++i) edge(i, i + 1);
      edge(m, 1);
      edge(m + 1, m - 1);
      edge(m + 2, m - 1);
      break;
    }
    case GroupFamily::BinaryTetrahedral:
      for (auto [i, j] : {std::pair{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 5}, {5, 6}}) edge(i, j);
      break;
    case GroupFamily::BinaryOctahedral:
      for (auto [i, j] : {std::pair{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {3, 7}}) edge(i, j);
      break;
    case GroupFamily::BinaryIcosahedral:
      for (auto [i, j] : {std::pair{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {5, 8}}) edge(i, j);
      break;
    case GroupFamily::S4Demo:
      a = {{0, 1, 0, 0, 0}, {1, 1, 1, 1, 0}, {0, 1, 0, 1, 0}, {0, 1, 1, 1, 1}, {0, 0, 0, 1, 0}};
      return RepGraph(d.node_labels, d.marks, std::move(a), 3);
  }
  return RepGraph(d.node_labels, d.marks, std::move(a), 2);
}

double CharacterTable::order() const {
  double s = 0;
  for (double c : class_sizes) s += c;
  return s;
}

CharacterTable s4_character_table() {
  CharacterTable t;
  t.class_labels = {"(1)", "(12)", "(123)", "(1234)", "(12)(34)"};
  t.class_sizes = {1, 6, 8, 6, 3};
  t.irrep_labels = {"(4)", "(3,1)", "(2^2)", "(2,1^2)", "(1^4)"};
  const std::vector<std::vector<double>> rows = {
      {1, 1, 1, 1, 1}, {3, 1, 0, -1, -1}, {2, 0, -1, 0, 2}, {3, -1, 0, 1, -1}, {1, -1, 1, -1, 1}};
  for (const auto& r : rows) t.values.emplace_back(r.begin(), r.end());
  t.v_label = "(3,1)";
  return t;
}

RepGraph graph_from_chartable(const CharacterTable& table, std::string_view v_label,
                              std::vector<std::string>* warnings) {
  constexpr double gate = 1e-6;
  const std::size_t n_irr = table.irrep_labels.size();
  const std::size_t n_cls = table.class_labels.size();
  if (n_irr == 0 || table.values.size() != n_irr || table.class_sizes.size() != n_cls) {
    throw Error(ErrorKind::ParseError, "character table shape is inconsistent");
  }
  for (const auto& row : table.values) {
    if (row.size() != n_cls) throw Error(ErrorKind::ParseError, "character table row has the wrong length");
  }
  if (n_irr != n_cls) {
    throw Error(ErrorKind::NotOrthonormal, std::to_string(n_irr) + " irreducibles but " + std::to_string(n_cls) +
                                               " conjugacy classes");
  }
  const double order = table.order();

  auto inner = [&](const std::vector<std::complex<double>>& x, const std::vector<std::complex<double>>& y,
                   const std::vector<std::complex<double>>* z) {
    std::complex<double> s = 0;
    for (std::size_t c = 0; c < n_cls; ++c) {
      std::complex<double> v = x[c] * std::conj(y[c]);
      if (z) v *= (*z)[c];
      s += table.class_sizes[c] * v;
    }
    return s / order;
  };

  auto it = std::find(table.irrep_labels.begin(), table.irrep_labels.end(), v_label);
  if (it == table.irrep_labels.end()) {
    throw Error(ErrorKind::UnknownNode, "V label '" + std::string(v_label) + "' is not an irreducible of the table");
  }
  const auto& chi_v = table.values[static_cast<std::size_t>(it - table.irrep_labels.begin())];

  std::vector<long> marks(n_irr);
  for (std::size_t i = 0; i < n_irr; ++i) {
    const std::complex<double> d = table.values[i][0];
    const double r = std::round(d.real());
    if (std::abs(d - r) > gate || r < 1) {
      throw Error(ErrorKind::NotIntegral, "dimension of " + table.irrep_labels[i] + " is not a positive integer");
    }
    marks[i] = static_cast<long>(r);
  }
  const double v_dim = std::round(chi_v[0].real());

  IntMatrix a(n_irr, std::vector<long>(n_irr));
  for (std::size_t mu = 0; mu < n_irr; ++mu) {
    for (std::size_t l = 0; l < n_irr; ++l) {
      const std::complex<double> val = inner(table.values[mu], table.values[l], &chi_v);
      const double r = std::round(val.real());
      if (std::abs(val - r) > gate || r < 0) {
        throw Error(ErrorKind::NotIntegral, "a(" + table.irrep_labels[mu] + ", " + table.irrep_labels[l] +
                                                ") = " + std::to_string(val.real()) + " is not a non-negative integer");
      }
      a[mu][l] = static_cast<long>(r);
    }
  }
  for (std::size_t i = 0; i < n_irr; ++i) {
    for (std::size_t j = 0; j < n_irr; ++j) {
      const std::complex<double> ip = inner(table.values[i], table.values[j], nullptr);
      if (std::abs(ip - (i == j ? 1.0 : 0.0)) > gate) {
        throw Error(ErrorKind::NotOrthonormal, "<" + table.irrep_labels[i] + ", " + table.irrep_labels[j] +
                                                   "> deviates from the Kronecker delta by " +
                                                   std::to_string(std::abs(ip - (i == j ? 1.0 : 0.0))));
      }
    }
  }

  for (std::size_t c = 0; c < n_cls; ++c) {
    if (std::abs(table.values[0][c] - 1.0) > gate) {
      throw Error(ErrorKind::InvalidParameter, "first row must be the trivial character");
    }
  }

  RepGraph g(table.irrep_labels, std::move(marks), std::move(a), static_cast<long>(v_dim));
  if (!g.is_symmetric() && warnings) {
    warnings->push_back("NotSymmetric: V = " + std::string(v_label) +
                        " is not self-dual; the graph supports walk counting only");
  }
  return g;
}

RepGraph delete_affine(const RepGraph& g) {
  if (g.size() < 2) throw Error(ErrorKind::TooSmall, "cannot delete the affine node of a graph with fewer than two nodes");
  const std::size_t n = g.size() - 1;
  std::vector<std::string> labels(g.labels().begin() + 1, g.labels().end());
  std::vector<long> marks(g.marks().begin() + 1, g.marks().end());
  IntMatrix a(n, std::vector<long>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = g.adjacency(i + 1, j + 1);
  return RepGraph(std::move(labels), std::move(marks), std::move(a), g.v_dim());
}

std::vector<std::vector<BigInt>> walk_counts(const RepGraph& g, std::size_t k_max) {
  const std::size_t n = g.size();
  std::vector<std::vector<BigInt>> levels;
  levels.reserve(k_max + 1);
  std::vector<BigInt> cur(n);
  if (n > 0) cur[0] = 1;
  levels.push_back(cur);
  for (std::size_t k = 1; k <= k_max; ++k) {
    std::vector<BigInt> next(n);
    for (std::size_t mu = 0; mu < n; ++mu) {
      if (cur[mu] == 0) continue;
      for (std::size_t l = 0; l < n; ++l) {
        const long a = g.adjacency(mu, l);
        if (a != 0) next[l] += cur[mu] * a;
      }
    }
    cur = std::move(next);
    levels.push_back(cur);
  }
  return levels;
}

std::vector<BratteliLevel> bratteli(const RepGraph& g, std::size_t k_max) {
  const bool symmetric = g.is_symmetric();
  const auto walks = walk_counts(g, symmetric ? 2 * k_max : k_max);
  std::vector<BratteliLevel> out;
  for (std::size_t k = 0; k <= k_max; ++k) {
    BratteliLevel level{k, walks[k], 0};
    for (const auto& m : level.mults) level.z_dim += m * m;
    if (symmetric && g.size() > 0 && level.z_dim != walks[2 * k][0]) {
      throw Error(ErrorKind::InvariantViolation, "level " + std::to_string(k) + ": sum of squares " +
                                                     level.z_dim.get_str() + " differs from closed walks " +
                                                     walks[2 * k][0].get_str());
    }
    out.push_back(std::move(level));
  }
  return out;
}

}  // namespace mckay
