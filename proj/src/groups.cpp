#include "mckay/groups.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>

#include "mckay/error.hpp"

namespace mckay {

// ---------------------------------------------------------------- GroupKind

GroupKind GroupKind::parse(std::string_view spec) {
  std::string s;
  for (char c : spec) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  }
  if (s == "T") return tetrahedral();
  if (s == "O") return octahedral();
  if (s == "I") return icosahedral();
  if (s == "S4") return s4();
  if (s.size() >= 2 && (s[0] == 'C' || s[0] == 'D')) {
    unsigned n = 0;
    auto [ptr, ec] = std::from_chars(s.data() + 1, s.data() + s.size(), n);
    if (ec == std::errc() && ptr == s.data() + s.size()) {
      return s[0] == 'C' ? cyclic(n) : binary_dihedral(n);
    }
  }
  throw Error(ErrorKind::ParseError, "unrecognized group spec '" + std::string(spec) +
                                         "' (expected Cn, Dn, T, O, I or S4)");
}

std::string GroupKind::to_string() const {
  switch (family) {
    case GroupFamily::Cyclic: return "C" + std::to_string(n);
    case GroupFamily::BinaryDihedral: return "D" + std::to_string(n);
    case GroupFamily::BinaryTetrahedral: return "T";
    case GroupFamily::BinaryOctahedral: return "O";
    case GroupFamily::BinaryIcosahedral: return "I";
    case GroupFamily::S4Demo: return "S4";
  }
  return "?";
}

std::vector<GroupKind> su2_catalog(unsigned n_min, unsigned n_max) {
  std::vector<GroupKind> out;
  for (unsigned n = n_min; n <= n_max; ++n) out.push_back(GroupKind::cyclic(n));
  for (unsigned n = n_min; n <= n_max; ++n) out.push_back(GroupKind::binary_dihedral(n));
  out.push_back(GroupKind::tetrahedral());
  out.push_back(GroupKind::octahedral());
  out.push_back(GroupKind::icosahedral());
  return out;
}

// ---------------------------------------------------------------- descriptors

namespace {

std::vector<std::string> index_labels(std::size_t count) {
  std::vector<std::string> v;
  for (std::size_t i = 0; i < count; ++i) v.push_back(std::to_string(i));
  return v;
}

std::vector<unsigned> iota_exponents(unsigned first, unsigned last, unsigned step) {
  std::vector<unsigned> v;
  for (unsigned m = first; m <= last; m += step) v.push_back(m);
  return v;
}

void check_parameter(GroupKind kind) {
  if ((kind.family == GroupFamily::Cyclic || kind.family == GroupFamily::BinaryDihedral) && kind.n < 2) {
    throw Error(ErrorKind::InvalidParameter, kind.to_string() + ": parameter must be at least 2");
  }
}

void finish(GroupDescriptor& d) {
  const long max_mark = *std::max_element(d.marks.begin(), d.marks.end());
  d.a_const = 2 * max_mark;
  d.b_const = static_cast<long>(d.h) + 2 - d.a_const;
}

}  // namespace

GroupDescriptor descriptor(GroupKind kind) {
  check_parameter(kind);
  GroupDescriptor d;
  d.kind = kind;
  const unsigned n = kind.n;
  switch (kind.family) {
    case GroupFamily::Cyclic: {
      // Irreducibles C_n^(l), l = 0..n-1, on the cycle A^_{n-1}.
      d.order = n;
      d.node_labels = index_labels(n);
      d.marks.assign(n, 1);
      d.affine_diagram = "A^" + std::to_string(n - 1);
      d.finite_diagram = "A" + std::to_string(n - 1);
      d.h = n;
      d.exponents_finite = iota_exponents(1, n - 1, 1);
      if (n % 2 == 0) {
        // A^_{2l+1}: 0, 1, 1, ..., l, l, l+1 with h^ = l+1
        const unsigned l = (n - 2) / 2;
        d.h_hat = l + 1;
        d.exponents_affine.push_back(0);
        for (unsigned m = 1; m <= l; ++m) d.exponents_affine.insert(d.exponents_affine.end(), {m, m});
        d.exponents_affine.push_back(l + 1);
      } else {
        // Not tabulated: chi_V(z^r) = 2cos(2 pi r / n) written over h^ = n.
        d.h_hat = n;
        d.affine_exponents_tabulated = false;
        d.exponents_affine.push_back(0);
        for (unsigned m = 2; m < n; m += 2) d.exponents_affine.insert(d.exponents_affine.end(), {m, m});
      }
      break;
    }
    case GroupFamily::BinaryDihedral: {
      // D^_{n+2}: node 0 affine, 1..n-1 the two-dimensional chain, then the
      // leaf on node 1 and the two leaves on node n-1.
      const unsigned m = n + 2;
      d.order = 4ULL * n;
      d.node_labels = index_labels(n + 3);
      d.marks.assign(n + 3, 1);
      for (unsigned i = 1; i <= n - 1; ++i) d.marks[i] = 2;
      d.affine_diagram = "D^" + std::to_string(m);
      d.finite_diagram = "D" + std::to_string(m);
      d.h = 2 * n + 2;
      d.exponents_finite = iota_exponents(1, 2 * n + 1, 2);
      d.exponents_finite.push_back(n + 1);
      if (m % 2 == 0) {
        // D^_{2l}: 0, 1, ..., l-1, l-1, l-1, l, ..., 2l-2 with h^ = 2l-2
        const unsigned l = m / 2;
        d.h_hat = 2 * l - 2;
        d.exponents_affine = iota_exponents(0, l - 1, 1);
        d.exponents_affine.insert(d.exponents_affine.end(), {l - 1, l - 1});
        for (unsigned e = l; e <= 2 * l - 2; ++e) d.exponents_affine.push_back(e);
      } else {
        // D^_{2l+1}: 0, 2, ..., 2l-2, 2l-1, 2l-1, 2l, ..., 2(2l-1) with h^ = 2(2l-1)
        const unsigned l = (m - 1) / 2;
        d.h_hat = 2 * (2 * l - 1);
        d.exponents_affine = iota_exponents(0, 2 * l - 2, 2);
        d.exponents_affine.insert(d.exponents_affine.end(), {2 * l - 1, 2 * l - 1});
        for (unsigned e = 2 * l; e <= 2 * (2 * l - 1); e += 2) d.exponents_affine.push_back(e);
      }
      break;
    }
    case GroupFamily::BinaryTetrahedral:
      // E^6: 0 - 1 - 2 - 3 - 4 with the arm 2 - 5 - 6.
      d.order = 24;
      d.node_labels = index_labels(7);
      d.marks = {1, 2, 3, 2, 1, 2, 1};
      d.affine_diagram = "E^6";
      d.finite_diagram = "E6";
      d.h = 12;
      d.h_hat = 6;
      d.exponents_finite = {1, 4, 5, 7, 8, 11};
      d.exponents_affine = {0, 2, 2, 3, 4, 4, 6};
      break;
    case GroupFamily::BinaryOctahedral:
      // E^7: chain 0 - ... - 6 with the branch node 7 on node 3.
      d.order = 48;
      d.node_labels = index_labels(8);
      d.marks = {1, 2, 3, 4, 3, 2, 1, 2};
      d.affine_diagram = "E^7";
      d.finite_diagram = "E7";
      d.h = 18;
      d.h_hat = 12;
      d.exponents_finite = {1, 5, 7, 9, 11, 13, 17};
      d.exponents_affine = {0, 3, 4, 6, 6, 8, 9, 12};
      break;
    case GroupFamily::BinaryIcosahedral:
      // E^8: chain 0 - ... - 7 with the branch node 8 on node 5.
      d.order = 120;
      d.node_labels = index_labels(9);
      d.marks = {1, 2, 3, 4, 5, 6, 4, 2, 3};
      d.affine_diagram = "E^8";
      d.finite_diagram = "E8";
      d.h = 30;
      d.h_hat = 30;
      d.exponents_finite = {1, 7, 11, 13, 17, 19, 23, 29};
      d.exponents_affine = {0, 6, 10, 12, 15, 18, 20, 24, 30};
      break;
    case GroupFamily::S4Demo:
      d.order = 24;
      d.node_labels = {"(4)", "(3,1)", "(2^2)", "(2,1^2)", "(1^4)"};
      d.marks = {1, 3, 2, 3, 1};
      return d;
  }
  finish(d);
  return d;
}

// ---------------------------------------------------------------- CharValue

CharValue CharValue::two_cos(long p, long q) {
  if (q <= 0) throw Error(ErrorKind::InvalidParameter, "2cos(pi p/q) needs q > 0");
  // Normalize the angle into [0, pi]: cos is even and 2pi-periodic.
  long r = ((p % (2 * q)) + 2 * q) % (2 * q);
  if (r > q) r = 2 * q - r;
  const long g = std::gcd(r, q);
  r /= g;
  q /= g;
  if (r == 0) return integer(2);
  if (q == 1) return integer(-2);
  if (q == 2) return integer(0);
  if (q == 3) return integer(r == 1 ? 1 : -1);
  return CharValue(0, r, q);
}

long double CharValue::approx() const {
  if (is_integer()) return static_cast<long double>(value_);
  return 2.0L * std::cos(std::numbers::pi_v<long double> * p_ / q_);
}

std::string CharValue::to_string() const {
  if (is_integer()) return std::to_string(value_);
  return "2cos(" + std::to_string(p_) + "pi/" + std::to_string(q_) + ")";
}

// ---------------------------------------------------------------- ClassData

namespace {

IntPoly cyclotomic(unsigned long n) {
  IntPoly xn_minus_1 = IntPoly::monomial(1, n) - IntPoly{1};
  IntPoly divisor{1};
  for (unsigned long d = 1; d < n; ++d) {
    if (n % d == 0) divisor *= cyclotomic(d);
  }
  return divide_exact(xn_minus_1, divisor);
}

}  // namespace

IntPoly ClassData::class_product() const {
  long lcm = 1;
  for (const auto& c : classes) {
    if (!c.chi_v.is_integer()) lcm = std::lcm(lcm, c.chi_v.q());
  }
  const unsigned long big_n = 2UL * static_cast<unsigned long>(lcm);
  const IntPoly phi = cyclotomic(big_n);

  // Coefficients in t, each an element of Z[x]/Phi_N(x) with x = exp(2 pi i / N).
  std::vector<IntPoly> acc{IntPoly{1}};
  for (const auto& c : classes) {
    IntPoly value;
    if (c.chi_v.is_integer()) {
      value = IntPoly::constant(c.chi_v.integer_value());
    } else {
      // 2cos(pi p / q) = x^k + x^(N-k) with k = p N / (2q)
      const unsigned long k = static_cast<unsigned long>(c.chi_v.p()) * big_n / (2UL * c.chi_v.q());
      value = divmod_monic(IntPoly::monomial(1, k) + IntPoly::monomial(1, big_n - k), phi).second;
    }
    std::vector<IntPoly> next(acc.size() + 1);
    for (std::size_t j = 0; j < acc.size(); ++j) {
      next[j] += acc[j];
      next[j + 1] -= divmod_monic(acc[j] * value, phi).second;
    }
    acc = std::move(next);
  }
  std::vector<BigInt> coeffs;
  for (std::size_t j = 0; j < acc.size(); ++j) {
    if (acc[j].degree() > 0) {
      throw Error(ErrorKind::NonIntegralResult,
                  kind.to_string() + ": class product coefficient of t^" + std::to_string(j) + " is irrational");
    }
    coeffs.push_back(acc[j][0]);
  }
  return IntPoly(std::move(coeffs));
}

std::vector<long double> ClassData::chi_values() const {
  std::vector<long double> v;
  for (const auto& c : classes) v.push_back(c.chi_v.approx());
  return v;
}

ClassData class_data(GroupKind kind) {
  check_parameter(kind);
  ClassData data;
  data.kind = kind;
  const long n = kind.n;
  auto add = [&](std::string label, std::uint64_t size, CharValue chi) {
    data.classes.push_back({std::move(label), size, chi});
  };
  using CV = CharValue;
  switch (kind.family) {
    case GroupFamily::Cyclic:
      data.order = static_cast<std::uint64_t>(n);
      for (long r = 0; r < n; ++r) add("z^" + std::to_string(r), 1, CV::two_cos(2 * r, n));
      break;
    case GroupFamily::BinaryDihedral:
      data.order = 4ULL * static_cast<std::uint64_t>(n);
      add("I", 1, CV::integer(2));
      add("-I", 1, CV::integer(-2));
      for (long r = 1; r < n; ++r) add("x^" + std::to_string(r), 2, CV::two_cos(r, n));
      add("y", static_cast<std::uint64_t>(n), CV::integer(0));
      add("yx", static_cast<std::uint64_t>(n), CV::integer(0));
      break;
    case GroupFamily::BinaryTetrahedral:
      data.order = 24;
      add("1", 1, CV::integer(2));
      add("-1", 1, CV::integer(-2));
      add("4", 6, CV::integer(0));
      add("6a", 4, CV::integer(1));
      add("6b", 4, CV::integer(1));
      add("3a", 4, CV::integer(-1));
      add("3b", 4, CV::integer(-1));
      break;
    case GroupFamily::BinaryOctahedral:
      data.order = 48;
      add("1", 1, CV::integer(2));
      add("-1", 1, CV::integer(-2));
      add("4a", 6, CV::integer(0));
      add("6", 8, CV::integer(1));
      add("3", 8, CV::integer(-1));
      add("8a", 6, CV::two_cos(1, 4));
      add("8b", 6, CV::two_cos(3, 4));
      add("4b", 12, CV::integer(0));
      break;
    case GroupFamily::BinaryIcosahedral:
      data.order = 120;
      add("1", 1, CV::integer(2));
      add("-1", 1, CV::integer(-2));
      add("4", 30, CV::integer(0));
      add("6", 20, CV::integer(1));
      add("3", 20, CV::integer(-1));
      add("10a", 12, CV::two_cos(1, 5));  // phi
      add("10b", 12, CV::two_cos(3, 5));  // phi*
      add("5a", 12, CV::two_cos(2, 5));   // -phi*
      add("5b", 12, CV::two_cos(4, 5));   // -phi
      break;
    case GroupFamily::S4Demo:
      data.order = 24;
      add("(1)", 1, CV::integer(3));
      add("(12)", 6, CV::integer(1));
      add("(123)", 8, CV::integer(0));
      add("(1234)", 6, CV::integer(-1));
      add("(12)(34)", 3, CV::integer(-1));
      break;
  }
  return data;
}

std::vector<long double> cosine_product(const std::vector<unsigned>& exponents, unsigned h) {
  std::vector<long double> acc{1.0L};
  for (unsigned m : exponents) {
    const long double c = 2.0L * std::cos(std::numbers::pi_v<long double> * m / h);
    std::vector<long double> next(acc.size() + 1, 0.0L);
    for (std::size_t j = 0; j < acc.size(); ++j) {
      next[j] += acc[j];
      next[j + 1] -= c * acc[j];
    }
    acc = std::move(next);
  }
  return acc;
}

}  // namespace mckay
