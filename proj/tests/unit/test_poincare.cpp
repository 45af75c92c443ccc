#include <doctest.h>

#include <cmath>

#include "brute.hpp"
#include "mckay/error.hpp"
#include "mckay/poincare.hpp"

using namespace mckay;
using brute::big;

TEST_CASE("S4 series by Cramer's rule") {
  const RepGraph g = mckay_graph(GroupKind::s4());
  const IntPoly den{1, -2, -4, 2, 3};
  struct Row {
    const char* label;
    IntPoly num;
    std::vector<BigInt> series;
  };
  const Row rows[] = {
      {"(4)", IntPoly{1, -2, -3, 1, 1}, big({1, 0, 1, 1, 4, 10, 31})},
      {"(3,1)", IntPoly{0, 1, -1, -2}, big({0, 1, 1, 4, 10, 31, 91})},
      {"(2^2)", IntPoly{0, 0, 1, 0, -1}, big({0, 0, 1, 2, 7, 20, 61})},
      {"(2,1^2)", IntPoly{0, 0, 1, 1}, big({0, 0, 1, 3, 10, 30, 91})},
      {"(1^4)", IntPoly{0, 0, 0, 1, 1}, big({0, 0, 0, 1, 3, 10, 30})},
  };
  for (const Row& row : rows) {
    CAPTURE(row.label);
    const SeriesResult r = series_cramer(g, row.label);
    CHECK(r.denominator_det == den);
    CHECK(r.numerator_det == row.num);
    CHECK(series_expand(r.series, 7) == row.series);
    CHECK(ratfn_eq(r.series.num(), r.series.den(), row.num, den));
  }
}

TEST_CASE("elimination, Cramer and the recursion agree") {
  auto kinds = su2_catalog(2, 12);
  kinds.push_back(GroupKind::s4());
  for (const GroupKind& kind : kinds) {
    CAPTURE(kind.to_string());
    const RepGraph g = mckay_graph(kind);
    std::vector<SeriesResult> all;
    REQUIRE_NOTHROW(all = series_all(g));
    CHECK(all.size() == g.size());
  }
}

TEST_CASE("invariant series values") {
  CHECK(series_expand(invariants_series(mckay_graph(GroupKind::cyclic(3))).series, 7) == big({1, 0, 2, 2, 6, 10, 22}));
  CHECK(series_expand(invariants_series(mckay_graph(GroupKind::cyclic(4))).series, 9) ==
        big({1, 0, 2, 0, 8, 0, 32, 0, 128}));
  CHECK(series_expand(invariants_series(mckay_graph(GroupKind::cyclic(5))).series, 8) ==
        big({1, 0, 2, 0, 6, 2, 20, 14}));
  CHECK(series_expand(invariants_series(mckay_graph(GroupKind::cyclic(7))).series, 9) ==
        big({1, 0, 2, 0, 6, 0, 20, 2, 70}));
  CHECK(series_expand(invariants_series(mckay_graph(GroupKind::binary_dihedral(5))).series, 11) ==
        big({1, 0, 1, 0, 3, 0, 10, 0, 35, 0, 127}));
  const SeriesResult c7 = invariants_series(mckay_graph(GroupKind::cyclic(7)));
  CHECK(c7.numerator_det == IntPoly{1, 0, -5, 0, 6, 0, -1});
  CHECK(c7.denominator_det == IntPoly{1, 0, -7, 0, 14, 0, -7, -2});
  CHECK(series_expand(series_cramer(mckay_graph(GroupKind::cyclic(3)), 0).series, 1) == big({1}));
}

TEST_CASE("series hypotheses") {
  const RepGraph directed({"0", "1", "2"}, {1, 1, 1}, {{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}, 1);
  CHECK_THROWS_WITH_AS(series_cramer(directed, 0), doctest::Contains("AsymmetricAdjacency"), Error);
  const RepGraph split({"0", "1", "2"}, {1, 1, 1}, {{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}, 1);
  CHECK_THROWS_WITH_AS(series_cramer(split, 0), doctest::Contains("DisconnectedGraph"), Error);
  CHECK_THROWS_AS(series_cramer(mckay_graph(GroupKind::s4()), "(5)"), Error);
  CHECK_THROWS_AS(series_cramer(mckay_graph(GroupKind::s4()), 17), Error);
}

TEST_CASE("symmetric-algebra invariants") {
  CHECK(ratfn_eq(sym_invariants_series(descriptor(GroupKind::cyclic(2))),
                 RationalFn(IntPoly{1, 0, 1}, IntPoly{1, 0, -2, 0, 1})));
  CHECK_THROWS_AS(sym_invariants_series(descriptor(GroupKind::s4())), Error);

  // brute-force monomial count for C_n acting by diag(z, 1/z)
  for (long n = 2; n <= 9; ++n) {
    CAPTURE(n);
    const auto counts = brute::cyclic_invariant_monomials(n, 30);
    const auto sym = series_expand(sym_invariants_series(descriptor(GroupKind::cyclic(static_cast<unsigned>(n)))), 30);
    const auto mol = molien_invariants(GroupKind::cyclic(static_cast<unsigned>(n)), 30);
    for (std::size_t k = 0; k < 30; ++k) {
      CHECK(sym[k] == counts[k]);
      CHECK(std::fabs(mol[k] - counts[k]) < 1e-9L);
    }
  }
  CHECK(brute::cyclic_invariant_monomials(3, 7) == std::vector<long>{1, 0, 1, 2, 1, 2, 3});
  CHECK_THROWS_AS(molien_invariants(GroupKind::s4(), 5), Error);
}

TEST_CASE("Molien sums for the non-abelian groups") {
  std::vector<GroupKind> kinds = {GroupKind::tetrahedral(), GroupKind::octahedral(), GroupKind::icosahedral()};
  for (unsigned n = 2; n <= 12; ++n) kinds.push_back(GroupKind::binary_dihedral(n));
  for (const GroupKind& kind : kinds) {
    CAPTURE(kind.to_string());
    const auto mol = molien_invariants(kind, 40);
    const auto sym = series_expand(sym_invariants_series(descriptor(kind)), 40);
    for (std::size_t k = 0; k < 40; ++k) CHECK(std::fabs(mol[k] - sym[k].get_d()) < 1e-8L);
  }
}
