#include "mckay/closedform.hpp"

#include <algorithm>
#include <cmath>

#include "mckay/chebyshev.hpp"
#include "mckay/error.hpp"
#include "mckay/repgraph.hpp"

namespace mckay {

namespace {

void require_n(unsigned n, const char* what) {
  if (n < 2) throw Error(ErrorKind::InvalidParameter, std::string(what) + ": n must be at least 2");
}

long double max_abs_diff(const std::vector<long double>& numeric, const IntPoly& exact) {
  long double m = 0;
  const std::size_t len = std::max(numeric.size(), exact.size());
  for (std::size_t i = 0; i < len; ++i) {
    const long double a = i < numeric.size() ? numeric[i] : 0.0L;
    const long double b = static_cast<long double>(exact[i].get_d());
    m = std::max(m, std::fabs(a - b));
  }
  return m;
}

}  // namespace

ClosedFormSeries cyclic_closed(unsigned n) {
  require_n(n, "cyclic_closed");
  const RatPoly base(IntPoly{1, 0, -4});
  RatPoly power = RatPoly::constant(1);
  RatPoly sum;
  for (unsigned r = 0; 2 * r <= n; ++r) {
    sum += power * BigRat(binomial(n, 2 * r));
    power = power * base;
  }
  sum *= BigRat(1, pow2(n - 1));
  sum -= RatPoly(IntPoly::monomial(2, n));
  return {GroupKind::cyclic(n), dynkin_a(n - 1), sum.to_int_poly(), "cyclic theorem: a_{n-1} / Chebyshev sum"};
}

IntPoly cyclic_denominator_via_chebyshev(unsigned n) {
  require_n(n, "cyclic_denominator_via_chebyshev");
  // t^n p_n(1/t) - t^n p_{n-2}(1/t) - 2 t^n
  return cheb_p(n).reversed(n) - cheb_p(n - 2).reversed(n) - IntPoly::monomial(2, n);
}

ClosedFormSeries dihedral_closed(unsigned n) {
  require_n(n, "dihedral_closed");
  return {GroupKind::binary_dihedral(n), dynkin_d(n), IntPoly{1, 0, -4} * dynkin_a(n - 1),
          "binary dihedral theorem: d_n / ((1-4t^2) a_{n-1})"};
}

ClosedFormSeries exceptional_closed(GroupKind kind) {
  switch (kind.family) {
    case GroupFamily::BinaryTetrahedral:
      return {kind, IntPoly{1, 0, -5, 0, 5, 0, -1}, IntPoly{1, 0, -6, 0, 9, 0, -4}, "exceptional table: T"};
    case GroupFamily::BinaryOctahedral:
      return {kind, IntPoly{1, 0, -6, 0, 9, 0, -3}, IntPoly{1, 0, -7, 0, 14, 0, -8}, "exceptional table: O"};
    case GroupFamily::BinaryIcosahedral:
      return {kind, IntPoly{1, 0, -7, 0, 14, 0, -8, 0, 1}, IntPoly{1, 0, -8, 0, 20, 0, -17, 0, 4},
              "exceptional table: I"};
    default:
      throw Error(ErrorKind::InvalidKind, kind.to_string() + " is not an exceptional group");
  }
}

ClosedFormSeries closed_form(GroupKind kind) {
  switch (kind.family) {
    case GroupFamily::Cyclic: return cyclic_closed(kind.n);
    case GroupFamily::BinaryDihedral: return dihedral_closed(kind.n);
    case GroupFamily::S4Demo: throw Error(ErrorKind::InvalidKind, "S4 has no closed form");
    default: return exceptional_closed(kind);
  }
}

ExponentProductReport exponent_product(GroupKind kind, std::size_t n_terms, long double tolerance) {
  if (!kind.is_su2()) throw Error(ErrorKind::InvalidKind, kind.to_string() + " is not a subgroup of SU(2)");
  if (!kind.has_affine_exponent_table()) {
    throw Error(ErrorKind::InvalidKind, kind.to_string() + ": odd cyclic groups are outside the exponent formula");
  }
  const GroupDescriptor d = descriptor(kind);
  const RepGraph g = mckay_graph(kind);
  const IntPoly affine_det = poly_det(PolyMatrix::identity_minus_t(g.adjacency()));
  const IntPoly finite_det = poly_det(PolyMatrix::identity_minus_t(delete_affine(g).adjacency()));

  ExponentProductReport r;
  r.finite_product = cosine_product(d.exponents_finite, d.h);
  r.affine_product = cosine_product(d.exponents_affine, d.h_hat);
  r.finite_residual = max_abs_diff(r.finite_product, finite_det);
  r.affine_residual = max_abs_diff(r.affine_product, affine_det);

  // Series of the numeric quotient against the exact one, relative error.
  const std::vector<BigInt> exact = series_expand(finite_det, affine_det, n_terms);
  std::vector<long double> approx(n_terms, 0.0L);
  for (std::size_t k = 0; k < n_terms; ++k) {
    long double acc = k < r.finite_product.size() ? r.finite_product[k] : 0.0L;
    for (std::size_t j = 1; j <= k && j < r.affine_product.size(); ++j) acc -= r.affine_product[j] * approx[k - j];
    approx[k] = acc;
    const long double e = static_cast<long double>(exact[k].get_d());
    r.series_residual = std::max(r.series_residual, std::fabs(approx[k] - e) / std::max(1.0L, std::fabs(e)));
  }
  r.passed = r.finite_residual < tolerance && r.affine_residual < tolerance && r.series_residual < tolerance;
  return r;
}

BigInt lucas(unsigned r) {
  BigInt a = 2;
  BigInt b = 1;
  for (unsigned i = 0; i < r; ++i) {
    BigInt next = a + b;
    a = std::move(b);
    b = std::move(next);
  }
  return a;
}

BigInt exceptional_m0(GroupKind kind, unsigned n) {
  if (n < 1) throw Error(ErrorKind::InvalidParameter, "exceptional_m0 needs n >= 1");
  BigInt four_n;
  mpz_ui_pow_ui(four_n.get_mpz_t(), 4, n);
  BigInt numer;
  unsigned long divisor = 1;
  switch (kind.family) {
    case GroupFamily::BinaryTetrahedral:
      numer = four_n + 8;
      divisor = 12;
      break;
    case GroupFamily::BinaryOctahedral:
      numer = four_n + 6 * pow2(n) + 8;
      divisor = 24;
      break;
    case GroupFamily::BinaryIcosahedral:
      numer = four_n + 12 * lucas(2 * n) + 20;
      divisor = 60;
      break;
    default:
      throw Error(ErrorKind::InvalidKind, kind.to_string() + " is not an exceptional group");
  }
  if (!mpz_divisible_ui_p(numer.get_mpz_t(), divisor)) {
    throw Error(ErrorKind::NonIntegralResult, numer.get_str() + " is not divisible by " + std::to_string(divisor));
  }
  BigInt q;
  mpz_divexact_ui(q.get_mpz_t(), numer.get_mpz_t(), divisor);
  return q;
}

}  // namespace mckay
