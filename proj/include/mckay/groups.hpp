#pragma once

// Catalog of the finite subgroups of SU(2) together with the S4 example
// group acting on its reflection representation.

#include <cstdint>
#include <string>
#include <vector>

#include "mckay/polyring.hpp"

namespace mckay {

enum class GroupFamily {
  Cyclic,
  BinaryDihedral,
  BinaryTetrahedral,
  BinaryOctahedral,
  BinaryIcosahedral,
  S4Demo,
};

struct GroupKind {
  GroupFamily family = GroupFamily::Cyclic;
  unsigned n = 0;  // parameter for Cyclic / BinaryDihedral, 0 otherwise

  static GroupKind cyclic(unsigned n) { return {GroupFamily::Cyclic, n}; }
  static GroupKind binary_dihedral(unsigned n) { return {GroupFamily::BinaryDihedral, n}; }
  static GroupKind tetrahedral() { return {GroupFamily::BinaryTetrahedral, 0}; }
  static GroupKind octahedral() { return {GroupFamily::BinaryOctahedral, 0}; }
  static GroupKind icosahedral() { return {GroupFamily::BinaryIcosahedral, 0}; }
  static GroupKind s4() { return {GroupFamily::S4Demo, 0}; }

  /// Case-insensitive "C5", "D6", "T", "O", "I", "S4". Throws ParseError.
  static GroupKind parse(std::string_view spec);

  bool is_su2() const { return family != GroupFamily::S4Demo; }
  bool is_exceptional() const {
    return family == GroupFamily::BinaryTetrahedral || family == GroupFamily::BinaryOctahedral ||
           family == GroupFamily::BinaryIcosahedral;
  }
  /// Odd cyclic groups have no entry in the exponent table.
  bool has_affine_exponent_table() const { return !(family == GroupFamily::Cyclic && n % 2 == 1); }

  std::string to_string() const;
  friend bool operator==(const GroupKind&, const GroupKind&) = default;
};

/// Every SU(2) catalog kind with parametric families swept over [n_min, n_max],
/// followed by T, O, I.
std::vector<GroupKind> su2_catalog(unsigned n_min = 2, unsigned n_max = 12);

struct GroupDescriptor {
  GroupKind kind;
  std::uint64_t order = 0;
  std::vector<std::string> node_labels;  // index 0 is the trivial module
  std::vector<long> marks;               // dim of each irreducible
  std::string affine_diagram;            // e.g. "A^5", "D^8", "E^6"; empty for S4
  std::string finite_diagram;
  unsigned h = 0;      // finite Coxeter number
  unsigned h_hat = 0;  // affine Coxeter number
  std::vector<unsigned> exponents_finite;
  std::vector<unsigned> exponents_affine;
  /// False when the affine exponents were derived from the class data rather
  /// than read from the exponent table (odd cyclic groups).
  bool affine_exponents_tabulated = true;
  long a_const = 0;
  long b_const = 0;
};

/// Throws InvalidParameter for n < 2 in the parametric families.
GroupDescriptor descriptor(GroupKind kind);

/// A character value chi_V(g): either a rational integer or 2cos(pi*p/q).
class CharValue {
public:
  static CharValue integer(long v) { return CharValue(v, 0, 0); }
  static CharValue two_cos(long p, long q);

  bool is_integer() const { return q_ == 0; }
  long integer_value() const { return value_; }
  long p() const { return p_; }
  long q() const { return q_; }
  long double approx() const;
  std::string to_string() const;

private:
  CharValue(long v, long p, long q) : value_(v), p_(p), q_(q) {}
  long value_;
  long p_;
  long q_;
};

struct ConjugacyClass {
  std::string label;
  std::uint64_t size = 0;
  CharValue chi_v = CharValue::integer(0);
};

struct ClassData {
  GroupKind kind;
  std::uint64_t order = 0;
  std::vector<ConjugacyClass> classes;

  /// prod over classes of (1 - chi_V(g) t), computed exactly in a cyclotomic
  /// ring and asserted to have integer coefficients.
  IntPoly class_product() const;
  std::vector<long double> chi_values() const;
};

ClassData class_data(GroupKind kind);

struct SpectrumReport {
  std::vector<long double> eigenvalues;     // sorted descending
  std::vector<long double> chi_values;      // sorted descending
  std::vector<long double> exponent_values;  // 2cos(pi m/h_hat), sorted; empty for odd cyclic
  long double chi_mismatch = 0;
  long double exponent_mismatch = 0;
  bool passed = false;
};

/// Numerical spectrum of the representation-graph adjacency matrix against
/// the character values of V and, where tabulated, the affine exponents.
SpectrumReport steinberg_spectrum_check(GroupKind kind, long double tolerance);

/// (1 - 2cos(pi m / h) t) multiplied out numerically.
std::vector<long double> cosine_product(const std::vector<unsigned>& exponents, unsigned h);

}  // namespace mckay
