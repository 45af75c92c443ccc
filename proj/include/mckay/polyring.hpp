#pragma once

// Dense univariate polynomials over Z and Q in the variable t, rational
// functions with constant term one in the denominator, and determinants of
// square matrices with polynomial entries.

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mckay/bigint.hpp"

namespace mckay {

/// Polynomial with arbitrary-precision integer coefficients, lowest degree
/// first. Trailing zeros are always trimmed, so the zero polynomial has no
/// coefficients.
class IntPoly {
public:
  IntPoly() = default;
  IntPoly(std::initializer_list<long> coeffs);
  explicit IntPoly(std::vector<BigInt> coeffs);

  static IntPoly constant(const BigInt& c);
  static IntPoly monomial(const BigInt& c, std::size_t degree);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  std::size_t size() const { return coeffs_.size(); }

  /// Coefficient of t^i; zero past the degree.
  const BigInt& operator[](std::size_t i) const;
  std::span<const BigInt> coeffs() const { return coeffs_; }
  const BigInt& leading() const { return coeffs_.back(); }

  IntPoly& operator+=(const IntPoly& rhs);
  IntPoly& operator-=(const IntPoly& rhs);
  IntPoly& operator*=(const IntPoly& rhs);
  IntPoly& operator*=(const BigInt& rhs);

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(IntPoly a, const BigInt& c) { return a *= c; }
  friend IntPoly operator*(const BigInt& c, IntPoly a) { return a *= c; }
  IntPoly operator-() const;

  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// Multiply by t^k.
  IntPoly shifted(std::size_t k) const;
  /// t^n p(1/t); requires degree() <= n.
  IntPoly reversed(std::size_t n) const;
  /// p(-t)
  IntPoly negated_variable() const;

  /// Non-negative gcd of the coefficients (0 for the zero polynomial).
  BigInt content() const;
  /// p / content(p), with positive leading coefficient.
  IntPoly primitive_part() const;

  long double evaluate(long double x) const;
  BigRat evaluate(const BigRat& x) const;

  std::string to_string(char var = 't') const;

private:
  void trim();
  std::vector<BigInt> coeffs_;
};

IntPoly pow(const IntPoly& base, unsigned exponent);

/// Exact quotient a / b in Z[t]; throws NotDivisible if b does not divide a.
IntPoly divide_exact(const IntPoly& a, const IntPoly& b);

/// Quotient and remainder by a monic divisor.
std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& a, const IntPoly& monic);

/// Primitive gcd with positive leading coefficient; gcd(0, 0) = 0.
IntPoly gcd(const IntPoly& a, const IntPoly& b);

/// Polynomial with exact rational coefficients.
class RatPoly {
public:
  RatPoly() = default;
  explicit RatPoly(std::vector<BigRat> coeffs);
  explicit RatPoly(const IntPoly& p);

  static RatPoly constant(const BigRat& c);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const BigRat& operator[](std::size_t i) const;
  std::span<const BigRat> coeffs() const { return coeffs_; }
  const BigRat& leading() const { return coeffs_.back(); }

  RatPoly& operator+=(const RatPoly& rhs);
  RatPoly& operator-=(const RatPoly& rhs);
  RatPoly& operator*=(const BigRat& rhs);

  friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
  friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator*(RatPoly a, const BigRat& c) { return a *= c; }

  friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.coeffs_ == b.coeffs_; }

  bool is_integral() const;
  /// Throws NonIntegralResult when some coefficient is not an integer.
  IntPoly to_int_poly() const;

  std::pair<RatPoly, RatPoly> divmod(const RatPoly& divisor) const;
  /// Scales to a primitive integer polynomial with positive leading coefficient.
  IntPoly primitive_int() const;

private:
  void trim();
  std::vector<BigRat> coeffs_;
};

/// Quotient num/den in lowest terms with den(0) = 1.
class RationalFn {
public:
  /// Zero function.
  RationalFn();
  /// Throws ZeroConstantTerm if den(0) = 0 and NonUnitConstantTerm if the
  /// reduced denominator has a constant term other than +-1.
  RationalFn(IntPoly num, IntPoly den);

  const IntPoly& num() const { return num_; }
  const IntPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  std::string to_string(char var = 't') const;

private:
  IntPoly num_;
  IntPoly den_;
};

/// First n_terms Maclaurin coefficients of num/den, den(0) = +-1.
std::vector<BigInt> series_expand(const IntPoly& num, const IntPoly& den, std::size_t n_terms);
std::vector<BigInt> series_expand(const RationalFn& f, std::size_t n_terms);
/// Rational-coefficient variant; den(0) != 0.
std::vector<BigRat> series_expand(const RatPoly& num, const RatPoly& den, std::size_t n_terms);

/// Equality by cross-multiplication; independent of how either side is reduced.
bool ratfn_eq(const RationalFn& f, const RationalFn& g);
bool ratfn_eq(const IntPoly& f_num, const IntPoly& f_den, const IntPoly& g_num, const IntPoly& g_den);

/// Square matrix of integer polynomials, row major.
class PolyMatrix {
public:
  explicit PolyMatrix(std::size_t n = 0) : n_(n), entries_(n * n) {}
  /// Throws InvalidParameter unless every row has rows.size() entries.
  explicit PolyMatrix(const std::vector<std::vector<IntPoly>>& rows);

  /// I - t*A for an integer matrix A.
  static PolyMatrix identity_minus_t(const std::vector<std::vector<long>>& adjacency);

  std::size_t dim() const { return n_; }
  IntPoly& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
  const IntPoly& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

  PolyMatrix with_column(std::size_t col, const std::vector<IntPoly>& values) const;
  PolyMatrix minor(std::size_t row, std::size_t col) const;

private:
  std::size_t n_;
  std::vector<IntPoly> entries_;
};

IntPoly det_cofactor(const PolyMatrix& m);
IntPoly det_bareiss(const PolyMatrix& m);
/// Cofactor expansion below dimension 5, fraction-free elimination above.
IntPoly poly_det(const PolyMatrix& m);

}  // namespace mckay
