#include "mckay/poincare.hpp"

#include <cmath>

#include "mckay/error.hpp"

namespace mckay {

namespace {

void require_series_hypotheses(const RepGraph& g) {
  if (g.size() == 0) throw Error(ErrorKind::TooSmall, "empty graph");
  if (!g.is_symmetric()) {
    throw Error(ErrorKind::AsymmetricAdjacency, "series need a self-dual V (symmetric adjacency matrix)");
  }
  if (!g.is_connected_from_trivial()) {
    throw Error(ErrorKind::DisconnectedGraph, "some node is unreachable from the trivial node; the action is not faithful");
  }
}

// Element of Q(t) as a quotient of integer polynomials, reduced on demand.
struct Frac {
  IntPoly num;
  IntPoly den{1};

  bool is_zero() const { return num.is_zero(); }

  void reduce() {
    if (num.is_zero()) {
      den = IntPoly{1};
      return;
    }
    IntPoly g = gcd(num, den);
    if (g.degree() > 0) {
      num = divide_exact(num, g);
      den = divide_exact(den, g);
    }
    BigInt c;
    BigInt cn = num.content();
    BigInt cd = den.content();
    mpz_gcd(c.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
    if (den.leading() < 0) c = -c;
    if (c != 1) {
      num = divide_exact(num, IntPoly::constant(c));
      den = divide_exact(den, IntPoly::constant(c));
    }
  }

  friend Frac operator+(const Frac& a, const Frac& b) {
    if (a.den == b.den) return {a.num + b.num, a.den};
    return {a.num * b.den + b.num * a.den, a.den * b.den};
  }
  friend Frac operator-(const Frac& a, const Frac& b) {
    if (a.den == b.den) return {a.num - b.num, a.den};
    return {a.num * b.den - b.num * a.den, a.den * b.den};
  }
  friend Frac operator*(const Frac& a, const Frac& b) { return {a.num * b.num, a.den * b.den}; }
  friend Frac operator/(const Frac& a, const Frac& b) {
    if (b.is_zero()) throw Error(ErrorKind::NotDivisible, "division by zero in Q(t)");
    return {a.num * b.den, a.den * b.num};
  }
};

}  // namespace

SeriesResult series_cramer(const RepGraph& g, std::size_t mu) {
  require_series_hypotheses(g);
  if (mu >= g.size()) throw Error(ErrorKind::UnknownNode, "node index " + std::to_string(mu) + " out of range");
  const PolyMatrix m = PolyMatrix::identity_minus_t(g.adjacency());
  std::vector<IntPoly> delta(g.size());
  delta[0] = IntPoly{1};
  IntPoly den = poly_det(m);
  IntPoly num = poly_det(m.with_column(mu, delta));
  if (num.is_zero()) {
    throw Error(ErrorKind::InvariantViolation, "det(M^mu) vanished for node " + g.labels()[mu]);
  }
  return SeriesResult{g.labels()[mu], RationalFn(num, den), std::move(num), std::move(den)};
}

SeriesResult series_cramer(const RepGraph& g, std::string_view mu_label) {
  return series_cramer(g, g.index_of(mu_label));
}

std::vector<RationalFn> solve_series_system(const RepGraph& g) {
  require_series_hypotheses(g);
  const std::size_t n = g.size();
  std::vector<std::vector<Frac>> a(n, std::vector<Frac>(n));
  std::vector<Frac> rhs(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j].num = IntPoly{i == j ? 1L : 0L, -g.adjacency(i, j)};
  }
  rhs[0].num = IntPoly{1};

  for (std::size_t k = 0; k < n; ++k) {
    // Lowest-degree pivot keeps the intermediate degrees small.
    std::size_t pivot = n;
    for (std::size_t i = k; i < n; ++i) {
      if (a[i][k].is_zero()) continue;
      a[i][k].reduce();
      if (pivot == n || a[i][k].num.degree() + a[i][k].den.degree() <
                            a[pivot][k].num.degree() + a[pivot][k].den.degree()) {
        pivot = i;
      }
    }
    if (pivot == n) throw Error(ErrorKind::InvariantViolation, "I - tA is singular over Q(t)");
    std::swap(a[k], a[pivot]);
    std::swap(rhs[k], rhs[pivot]);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a[i][k].is_zero()) continue;
      Frac factor = a[i][k] / a[k][k];
      factor.reduce();
      for (std::size_t j = k + 1; j < n; ++j) {
        if (a[k][j].is_zero()) continue;
        a[i][j] = a[i][j] - factor * a[k][j];
        a[i][j].reduce();
      }
      rhs[i] = rhs[i] - factor * rhs[k];
      rhs[i].reduce();
      a[i][k] = Frac{};
    }
  }
  std::vector<Frac> x(n);
  for (std::size_t k = n; k-- > 0;) {
    Frac acc = rhs[k];
    for (std::size_t j = k + 1; j < n; ++j) {
      if (!a[k][j].is_zero()) acc = acc - a[k][j] * x[j];
    }
    x[k] = acc / a[k][k];
    x[k].reduce();
  }
  std::vector<RationalFn> out;
  out.reserve(n);
  for (auto& f : x) out.emplace_back(f.num, f.den);
  return out;
}

std::vector<SeriesResult> series_all(const RepGraph& g) {
  const std::vector<RationalFn> solved = solve_series_system(g);
  const std::size_t n = g.size();
  std::vector<SeriesResult> out;
  out.reserve(n);
  for (std::size_t mu = 0; mu < n; ++mu) {
    SeriesResult cramer = series_cramer(g, mu);
    if (!ratfn_eq(cramer.series, solved[mu])) {
      throw Error(ErrorKind::InvariantViolation, "Cramer and elimination disagree at node " + g.labels()[mu]);
    }
    cramer.series = solved[mu];
    out.push_back(std::move(cramer));
  }
  // m^mu = delta_{mu,0} + t sum_l a(mu,l) m^l
  for (std::size_t mu = 0; mu < n; ++mu) {
    Frac rhs{IntPoly{mu == 0 ? 1L : 0L}, IntPoly{1}};
    for (std::size_t l = 0; l < n; ++l) {
      const long a = g.adjacency(mu, l);
      if (a == 0) continue;
      rhs = rhs + Frac{solved[l].num() * IntPoly{0, a}, solved[l].den()};
    }
    const Frac diff = Frac{solved[mu].num(), solved[mu].den()} - rhs;
    if (!diff.is_zero()) {
      throw Error(ErrorKind::InvariantViolation, "recursion fails at node " + g.labels()[mu]);
    }
  }
  return out;
}

SeriesResult invariants_series(const RepGraph& g) {
  SeriesResult r = series_cramer(g, 0);
  const IntPoly finite = g.size() == 1 ? IntPoly{1}
                                       : poly_det(PolyMatrix::identity_minus_t(delete_affine(g).adjacency()));
  if (finite != r.numerator_det) {
    throw Error(ErrorKind::InvariantViolation,
                "det(M^0) = " + r.numerator_det.to_string() + " but det(I - tA') = " + finite.to_string());
  }
  return r;
}

RationalFn sym_invariants_series(const GroupDescriptor& g) {
  if (!g.kind.is_su2()) throw Error(ErrorKind::InvalidKind, g.kind.to_string() + " is not a subgroup of SU(2)");
  const IntPoly num = IntPoly{1} + IntPoly::monomial(1, g.h);
  const IntPoly den = (IntPoly{1} - IntPoly::monomial(1, static_cast<std::size_t>(g.a_const))) *
                      (IntPoly{1} - IntPoly::monomial(1, static_cast<std::size_t>(g.b_const)));
  return RationalFn(num, den);
}

std::vector<long double> molien_invariants(GroupKind kind, std::size_t n_terms) {
  if (!kind.is_su2()) throw Error(ErrorKind::InvalidKind, kind.to_string() + " is not a subgroup of SU(2)");
  const ClassData data = class_data(kind);
  std::vector<long double> out(n_terms, 0.0L);
  for (const auto& c : data.classes) {
    // 1/(1 - x t + t^2) = sum_k p_k(x) t^k
    const long double x = c.chi_v.approx();
    long double prev = 0;
    long double cur = 1;
    for (std::size_t k = 0; k < n_terms; ++k) {
      out[k] += static_cast<long double>(c.size) * cur;
      const long double next = x * cur - prev;
      prev = cur;
      cur = next;
    }
  }
  for (auto& v : out) v /= static_cast<long double>(data.order);
  return out;
}

}  // namespace mckay
