#include <doctest.h>

#include "brute.hpp"
#include "mckay/closedform.hpp"
#include "mckay/error.hpp"
#include "mckay/poincare.hpp"

using namespace mckay;
using brute::big;

TEST_CASE("cyclic closed form") {
  for (unsigned n = 2; n <= 12; ++n) {
    CAPTURE(n);
    const ClosedFormSeries cf = cyclic_closed(n);
    const SeriesResult r = invariants_series(mckay_graph(GroupKind::cyclic(n)));
    CHECK(ratfn_eq(cf.as_ratfn(), r.series));
    CHECK(cf.numerator == r.numerator_det);
    CHECK(cf.denominator == r.denominator_det);
  }
  for (unsigned n = 2; n <= 30; ++n) CHECK(cyclic_closed(n).denominator == cyclic_denominator_via_chebyshev(n));
  CHECK(cyclic_closed(5).denominator == IntPoly{1, 0, -5, 0, 5, -2});
  CHECK_THROWS_AS(cyclic_closed(1), Error);
}

TEST_CASE("dihedral closed form") {
  for (unsigned n = 2; n <= 12; ++n) {
    CAPTURE(n);
    const ClosedFormSeries cf = dihedral_closed(n);
    const SeriesResult r = invariants_series(mckay_graph(GroupKind::binary_dihedral(n)));
    CHECK(ratfn_eq(cf.as_ratfn(), r.series));
  }
  CHECK(dihedral_closed(6).denominator == IntPoly{1, 0, -8, 0, 19, 0, -12});
  CHECK(series_expand(dihedral_closed(3).as_ratfn(), 11) == big({1, 0, 1, 0, 3, 0, 11, 0, 43, 0, 171}));
  CHECK_THROWS_AS(dihedral_closed(0), Error);
}

TEST_CASE("exceptional closed forms") {
  for (const GroupKind& kind : {GroupKind::tetrahedral(), GroupKind::octahedral(), GroupKind::icosahedral()}) {
    CAPTURE(kind.to_string());
    const ClosedFormSeries cf = exceptional_closed(kind);
    const SeriesResult r = invariants_series(mckay_graph(kind));
    CHECK(cf.numerator == r.numerator_det);
    CHECK(cf.denominator == r.denominator_det);
  }
  CHECK_THROWS_AS(exceptional_closed(GroupKind::cyclic(4)), Error);
  CHECK_THROWS_AS(closed_form(GroupKind::s4()), Error);
}

TEST_CASE("exponent products") {
  for (const GroupKind& kind : su2_catalog(2, 12)) {
    CAPTURE(kind.to_string());
    if (!kind.has_affine_exponent_table()) {
      CHECK_THROWS_WITH_AS(exponent_product(kind, 10, 1e-9L), doctest::Contains("InvalidKind"), Error);
      continue;
    }
    const ExponentProductReport r = exponent_product(kind, 20, 1e-9L);
    CHECK(r.finite_residual < 1e-9L);
    CHECK(r.affine_residual < 1e-9L);
    CHECK(r.passed);
  }
  CHECK_THROWS_AS(exponent_product(GroupKind::s4(), 10, 1e-9L), Error);
}

TEST_CASE("Lucas numbers and m_2n^0") {
  CHECK(lucas(0) == 2);
  CHECK(lucas(1) == 1);
  CHECK(lucas(10) == 123);
  for (const GroupKind& kind : {GroupKind::tetrahedral(), GroupKind::octahedral(), GroupKind::icosahedral()}) {
    const auto s = series_expand(invariants_series(mckay_graph(kind)).series, 31);
    for (unsigned n = 1; n <= 15; ++n) CHECK(exceptional_m0(kind, n) == s[2 * n]);
  }
  BigInt four40;
  mpz_ui_pow_ui(four40.get_mpz_t(), 4, 40);
  const BigInt t40 = exceptional_m0(GroupKind::tetrahedral(), 40);
  CHECK(t40 * 12 == four40 + 8);
  CHECK_FALSE(t40.fits_slong_p());
  const auto s = series_expand(invariants_series(mckay_graph(GroupKind::tetrahedral())).series, 81);
  CHECK(s[80] == t40);
  CHECK_THROWS_AS(exceptional_m0(GroupKind::tetrahedral(), 0), Error);
  CHECK_THROWS_AS(exceptional_m0(GroupKind::cyclic(3), 2), Error);
}
