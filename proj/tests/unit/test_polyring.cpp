#include <doctest.h>

#include <random>

#include "brute.hpp"
#include "mckay/error.hpp"
#include "mckay/polyring.hpp"

using namespace mckay;

TEST_CASE("IntPoly basics") {
  const IntPoly p{1, -2, 1};
  CHECK(p.degree() == 2);
  CHECK(IntPoly{}.degree() == -1);
  CHECK(IntPoly{0, 0, 0}.is_zero());
  CHECK(IntPoly{3, 0, 0}.degree() == 0);
  CHECK(p.to_string() == "1 - 2*t + t^2");
  CHECK(IntPoly{}.to_string() == "0");
  CHECK(p[7] == 0);
  CHECK(p * IntPoly{1, 1} == IntPoly{1, -1, -1, 1});
  CHECK(IntPoly{1, 2, 3}.reversed(4) == IntPoly{0, 0, 3, 2, 1});
  CHECK_THROWS_AS(IntPoly({1, 2, 3}).reversed(1), Error);
  CHECK(IntPoly{1, 2, 3}.negated_variable() == IntPoly{1, -2, 3});
  CHECK(IntPoly{6, -4, 2}.content() == 2);
  CHECK(IntPoly{-6, 4, -2}.primitive_part() == IntPoly{3, -2, 1});
  CHECK(pow(IntPoly{1, 1}, 3) == IntPoly{1, 3, 3, 1});
  CHECK(IntPoly{1, 0, -4}.evaluate(BigRat(1, 2)) == 0);
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 200; ++trial) {
    const IntPoly a = brute::random_poly(rng, 7, 50);
    const IntPoly b = brute::random_poly(rng, 7, 50);
    const IntPoly c = brute::random_poly(rng, 7, 50);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == IntPoly{});
    CHECK(a * IntPoly{1} == a);
    if (!b.is_zero()) CHECK(divide_exact(a * b, b) == a);
  }
}

TEST_CASE("exact division and gcd") {
  CHECK_THROWS_AS(divide_exact(IntPoly{1, 0, 1}, IntPoly{1, 1}), Error);
  const auto [q, r] = divmod_monic(IntPoly{1, 0, 0, 1}, IntPoly{1, 1});
  CHECK(q == IntPoly{1, -1, 1});
  CHECK(r.is_zero());
  const IntPoly g = gcd(IntPoly{1, 0, -1} * IntPoly{2, 3}, IntPoly{1, 1} * IntPoly{5, 0, 1});
  CHECK(g == IntPoly{1, 1});
  CHECK(gcd(IntPoly{2, 4}, IntPoly{3}) == IntPoly{1});
}

TEST_CASE("RatPoly integrality") {
  RatPoly p(std::vector<BigRat>{BigRat(1, 2), BigRat(1)});
  CHECK_FALSE(p.is_integral());
  CHECK_THROWS_AS(p.to_int_poly(), Error);
  p *= BigRat(2);
  CHECK(p.to_int_poly() == IntPoly{1, 2});
  CHECK(RatPoly(std::vector<BigRat>{BigRat(1, 2), BigRat(1, 3)}).primitive_int() == IntPoly{3, 2});
}

TEST_CASE("RationalFn normalization and errors") {
  const RationalFn f(IntPoly{1, 0, -1}, IntPoly{1, -1, -1, 1});  // (1-t)(1+t) / (1-t)^2 (1+t)
  CHECK(f.num() == IntPoly{1});
  CHECK(f.den() == IntPoly{1, -1});
  const RationalFn neg(IntPoly{2}, IntPoly{-2, 4});
  CHECK(neg.num() == IntPoly{-1});
  CHECK(neg.den() == IntPoly{1, -2});
  CHECK_THROWS_WITH_AS(RationalFn(IntPoly{1}, IntPoly{0, 1}), doctest::Contains("ZeroConstantTerm"), Error);
  CHECK_THROWS_WITH_AS(RationalFn(IntPoly{1}, IntPoly{2, 1}), doctest::Contains("NonUnitConstantTerm"), Error);
  CHECK(RationalFn(IntPoly{}, IntPoly{1, 5}).den() == IntPoly{1});
  CHECK(ratfn_eq(IntPoly{1, 1}, IntPoly{1, -1}, IntPoly{1, 2, 1}, IntPoly{1, 0, -1}));
  CHECK_FALSE(ratfn_eq(IntPoly{1, 1}, IntPoly{1, -1}, IntPoly{1, 2}, IntPoly{1, 0, -1}));
}

TEST_CASE("series expansion") {
  CHECK(series_expand(IntPoly{1}, IntPoly{1, -1, -1}, 8) == brute::big({1, 1, 2, 3, 5, 8, 13, 21}));
  CHECK(series_expand(IntPoly{1, 0, -1}, IntPoly{1, 0, -3, -2}, 7) == brute::big({1, 0, 2, 2, 6, 10, 22}));
  CHECK(series_expand(IntPoly{1}, IntPoly{1, 1}, 0).empty());
  CHECK_THROWS_AS(series_expand(IntPoly{1}, IntPoly{2, 1}, 3), Error);

  // Reconvolution: den * series agrees with num below the truncation order.
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const IntPoly num = brute::random_poly(rng, 6, 20);
    IntPoly den = brute::random_poly(rng, 6, 20);
    den = den.shifted(1) + IntPoly{trial % 2 ? 1L : -1L};
    const std::size_t n = 25;
    const std::vector<BigInt> s = series_expand(num, den, n);
    for (std::size_t k = 0; k < n; ++k) {
      BigInt acc = 0;
      for (std::size_t j = 0; j <= k; ++j) acc += den[j] * s[k - j];
      CHECK(acc == num[k]);
    }
  }
}

TEST_CASE("determinants") {
  SUBCASE("triangular") {
    PolyMatrix m(4);
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = i; j < 4; ++j) m(i, j) = IntPoly{static_cast<long>(i + j), 1};
    }
    const IntPoly expect = IntPoly{0, 1} * IntPoly{2, 1} * IntPoly{4, 1} * IntPoly{6, 1};
    CHECK(det_cofactor(m) == expect);
    CHECK(det_bareiss(m) == expect);
  }
  SUBCASE("needs a row swap") {
    PolyMatrix m(std::vector<std::vector<IntPoly>>{{IntPoly{}, IntPoly{1}}, {IntPoly{1}, IntPoly{}}});
    CHECK(det_bareiss(m) == IntPoly{-1});
  }
  SUBCASE("cofactor and Bareiss agree on random matrices") {
    std::mt19937_64 rng(99);
    for (std::size_t n = 1; n <= 6; ++n) {
      for (int trial = 0; trial < 15; ++trial) {
        PolyMatrix m(n);
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) m(i, j) = brute::random_poly(rng, 2, 5);
        CHECK(det_cofactor(m) == det_bareiss(m));
      }
    }
  }
  SUBCASE("identity minus tA on a 2-cycle with a double edge") {
    const PolyMatrix m = PolyMatrix::identity_minus_t({{0, 2}, {2, 0}});
    CHECK(poly_det(m) == IntPoly{1, 0, -4});
    CHECK(poly_det(PolyMatrix(0)) == IntPoly{1});
  }
}
