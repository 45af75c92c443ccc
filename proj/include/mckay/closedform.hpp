#pragma once

// Closed forms for the invariant series m^0(t) of the SU(2) subgroups, built
// from Chebyshev-type polynomials and tabulated data, independently of the
// representation-graph determinants.

#include <string>
#include <vector>

#include "mckay/groups.hpp"
#include "mckay/polyring.hpp"

namespace mckay {

struct ClosedFormSeries {
  GroupKind kind;
  IntPoly numerator;
  IntPoly denominator;
  std::string provenance;

  RationalFn as_ratfn() const { return RationalFn(numerator, denominator); }
};

/// a_{n-1}(t) over 2^(1-n) sum_r C(n,2r)(1-4t^2)^r - 2t^n. n >= 2.
ClosedFormSeries cyclic_closed(unsigned n);

/// t^n (p_n(1/t) - p_{n-2}(1/t) - 2), the same cyclic denominator by
/// coefficient reversal of Chebyshev polynomials.
IntPoly cyclic_denominator_via_chebyshev(unsigned n);

/// d_n(t) over (1 - 4t^2) a_{n-1}(t). n >= 2.
ClosedFormSeries dihedral_closed(unsigned n);

/// Stored numerator/denominator pairs for T, O, I. Throws InvalidKind.
ClosedFormSeries exceptional_closed(GroupKind kind);

/// Dispatches to the three constructors above.
ClosedFormSeries closed_form(GroupKind kind);

struct ExponentProductReport {
  std::vector<long double> finite_product;  // prod over finite exponents
  std::vector<long double> affine_product;  // prod over affine exponents
  long double finite_residual = 0;          // vs det(I - t A')
  long double affine_residual = 0;          // vs det(I - t A)
  long double series_residual = 0;          // relative, first n_terms of the ratio
  bool passed = false;
};

/// Compares the cosine products over the tabulated exponents with the exact
/// determinants from the representation graph. Throws InvalidKind for odd
/// cyclic groups and S4.
ExponentProductReport exponent_product(GroupKind kind, std::size_t n_terms, long double tolerance);

/// Lucas numbers, L_0 = 2, L_1 = 1.
BigInt lucas(unsigned r);

/// m_{2n}^0 for T, O, I from the Lucas-number formulas; exact division is
/// asserted. Throws InvalidKind, InvalidParameter for n < 1.
BigInt exceptional_m0(GroupKind kind, unsigned n);

}  // namespace mckay
