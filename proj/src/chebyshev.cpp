#include "mckay/chebyshev.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "mckay/error.hpp"

namespace mckay {

namespace {

IntPoly recurrence(unsigned n, IntPoly first, IntPoly second, const IntPoly& multiplier) {
  if (n == 0) return first;
  for (unsigned k = 1; k < n; ++k) {
    IntPoly next = multiplier * second - first;
    first = std::move(second);
    second = std::move(next);
  }
  return second;
}

// Horner evaluation in 256-bit floating point, so that cancellation between
// large coefficients does not swamp residuals near roots.
mpf_class evaluate_mpf(const IntPoly& p, const mpf_class& x) {
  mpf_class acc(0, 256);
  for (std::size_t i = p.size(); i-- > 0;) {
    acc = acc * x + mpf_class(p[i], 256);
  }
  return acc;
}

long double to_ld(const mpf_class& v) { return static_cast<long double>(v.get_d()); }

}  // namespace

IntPoly cheb_T(unsigned n) { return recurrence(n, IntPoly{1}, IntPoly{0, 1}, IntPoly{0, 2}); }
IntPoly cheb_U(unsigned n) { return recurrence(n, IntPoly{1}, IntPoly{0, 2}, IntPoly{0, 2}); }
IntPoly cheb_p(unsigned n) { return recurrence(n, IntPoly{1}, IntPoly{0, 1}, IntPoly{0, 1}); }

IntPoly cheb_T_closed(unsigned n) {
  const IntPoly t2m1{-1, 0, 1};
  IntPoly acc;
  for (unsigned r = 0; r <= n / 2; ++r) {
    acc += binomial(n, 2 * r) * pow(t2m1, r).shifted(n - 2 * r);
  }
  return acc;
}

IntPoly cheb_U_closed(unsigned n) {
  std::vector<BigInt> c(n + 1);
  for (unsigned r = 0; r <= n / 2; ++r) {
    BigInt term = binomial(n - r, r) * pow2(n - 2 * r);
    c[n - 2 * r] = (r % 2 == 0) ? term : BigInt(-term);
  }
  return IntPoly(std::move(c));
}

IntPoly cheb_p_closed(unsigned n) {
  std::vector<BigInt> c(n + 1);
  for (unsigned r = 0; r <= n / 2; ++r) {
    BigInt term = binomial(n - r, r);
    c[n - 2 * r] = (r % 2 == 0) ? term : BigInt(-term);
  }
  return IntPoly(std::move(c));
}

IntPoly dynkin_a(unsigned n) {
  std::vector<BigInt> c(2 * (n / 2) + 1);
  for (unsigned r = 0; r <= n / 2; ++r) {
    BigInt term = binomial(n - r, r);
    c[2 * r] = (r % 2 == 0) ? term : BigInt(-term);
  }
  return IntPoly(std::move(c));
}

IntPoly dynkin_a_recursive(unsigned n) {
  const IntPoly t2{0, 0, 1};
  IntPoly prev{1};
  IntPoly cur{1};
  for (unsigned k = 1; k < n; ++k) {
    IntPoly next = cur - t2 * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

IntPoly dynkin_a_from_p(unsigned n) { return cheb_p(n).reversed(n); }

IntPoly dynkin_d(unsigned n) {
  const RatPoly base(IntPoly{1, 0, -4});
  RatPoly power = RatPoly::constant(1);
  RatPoly acc;
  for (unsigned r = 0; 2 * r <= n + 1; ++r) {
    acc += power * BigRat(binomial(n + 1, 2 * r));
    power = power * base;
  }
  acc *= BigRat(1, pow2(n));
  if (!acc.is_integral()) {
    throw Error(ErrorKind::NonIntegralResult, "d_" + std::to_string(n) + " has a non-integral coefficient");
  }
  return acc.to_int_poly();
}

IntPoly dynkin_d_recursive(unsigned n) {
  const IntPoly t2{0, 0, 1};
  IntPoly prev{1};
  if (n == 0) return prev;
  IntPoly cur{1, 0, -2};
  for (unsigned k = 1; k < n; ++k) {
    IntPoly next = cur - t2 * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

IntPoly dynkin_d_from_T(unsigned n) {
  // 2 t^(n+1) sum_j c_j (2t)^-j = sum_j 2^(1-j) c_j t^(n+1-j)
  const IntPoly tn = cheb_T(n + 1);
  std::vector<BigRat> c(n + 2);
  for (std::size_t j = 0; j < tn.size(); ++j) {
    c[n + 1 - j] = BigRat(tn[j] * 2, pow2(j));
  }
  return RatPoly(std::move(c)).to_int_poly();
}

void ChebCache::extend(std::vector<IntPoly>& seq, unsigned n, const IntPoly& multiplier) {
  while (seq.size() <= n) {
    const std::size_t k = seq.size();
    seq.push_back(multiplier * seq[k - 1] - seq[k - 2]);
  }
}

IntPoly ChebCache::T(unsigned n) {
  std::lock_guard lock(mutex_);
  extend(t_, n, IntPoly{0, 2});
  return t_[n];
}

IntPoly ChebCache::U(unsigned n) {
  std::lock_guard lock(mutex_);
  extend(u_, n, IntPoly{0, 2});
  return u_[n];
}

IntPoly ChebCache::p(unsigned n) {
  std::lock_guard lock(mutex_);
  extend(p_, n, IntPoly{0, 1});
  return p_[n];
}

ChebyshevReport verify_identities(unsigned n_max, long double tolerance) {
  if (n_max < 2) throw Error(ErrorKind::InvalidParameter, "n_max must be at least 2");
  ChebyshevReport report;
  report.n_max = n_max;
  ChebCache cache;
  constexpr long double pi = std::numbers::pi_v<long double>;

  for (unsigned n = 0; n <= n_max; ++n) {
    if (n >= 2 && cache.U(n) - cache.U(n - 2) != cache.T(n) * BigInt(2)) report.ut_identity = false;

    const bool forms = cache.T(n) == cheb_T_closed(n) && cache.U(n) == cheb_U_closed(n) &&
                       cache.p(n) == cheb_p_closed(n) && dynkin_a(n) == dynkin_a_recursive(n) &&
                       dynkin_a(n) == dynkin_a_from_p(n) && dynkin_d(n) == dynkin_d_recursive(n) &&
                       dynkin_d(n) == dynkin_d_from_T(n);
    if (!forms) report.closed_forms = false;

    const IntPoly pn = cache.p(n);
    for (unsigned r = 1; r <= n; ++r) {
      mpf_class root(static_cast<double>(2.0L * std::cos(pi * r / (n + 1))), 256);
      report.max_root_residual =
          std::max(report.max_root_residual, std::fabs(to_ld(evaluate_mpf(pn, root))));
    }

    if (n >= 1) {
      const IntPoly tn = cache.T(n);
      // Sample points are exact doubles so both sides see the same argument.
      for (double x : {-0.93, -0.41, 0.17, 0.58, 0.99}) {
        long double prod = std::ldexp(1.0L, static_cast<int>(n) - 1);
        for (unsigned r = 1; r <= n; ++r) prod *= x - std::cos((2.0L * r - 1) * pi / (2.0L * n));
        const long double exact = to_ld(evaluate_mpf(tn, mpf_class(x, 256)));
        report.max_product_residual = std::max(report.max_product_residual, std::fabs(prod - exact));
      }
    }
  }
  report.passed = report.ut_identity && report.closed_forms && report.max_root_residual < tolerance &&
                  report.max_product_residual < tolerance;
  return report;
}

}  // namespace mckay
