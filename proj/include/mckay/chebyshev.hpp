#pragma once

#include <cstddef>
#include <mutex>
#include <vector>

#include "mckay/polyring.hpp"

namespace mckay {

// Chebyshev polynomials by their three-term recurrences.
IntPoly cheb_T(unsigned n);
IntPoly cheb_U(unsigned n);
/// p_n(t) = U_n(t/2)
IntPoly cheb_p(unsigned n);

// Independent closed forms of the same families, used as cross-checks.
IntPoly cheb_T_closed(unsigned n);  // sum_r C(n,2r) t^(n-2r) (t^2-1)^r
IntPoly cheb_U_closed(unsigned n);  // sum_r (-1)^r C(n-r,r) (2t)^(n-2r)
IntPoly cheb_p_closed(unsigned n);  // sum_r (-1)^r C(n-r,r) t^(n-2r)

/// det(I - tA) for the path A_n: sum_r (-1)^r C(n-r, r) t^(2r).
IntPoly dynkin_a(unsigned n);
/// a_{n+1} = a_n - t^2 a_{n-1}, a_0 = a_1 = 1.
IntPoly dynkin_a_recursive(unsigned n);
/// t^n p_n(1/t) by coefficient reversal.
IntPoly dynkin_a_from_p(unsigned n);

/// det(I - tA) for D_{n+2}: 2^-n sum_r C(n+1, 2r) (1-4t^2)^r, evaluated over Q.
IntPoly dynkin_d(unsigned n);
/// d_{n+1} = d_n - t^2 d_{n-1}, d_0 = 1, d_1 = 1 - 2t^2.
IntPoly dynkin_d_recursive(unsigned n);
/// 2 t^(n+1) T_{n+1}(1/(2t)).
IntPoly dynkin_d_from_T(unsigned n);

/// Memoized T_n, U_n, p_n. Safe to share between threads.
class ChebCache {
public:
  IntPoly T(unsigned n);
  IntPoly U(unsigned n);
  IntPoly p(unsigned n);

private:
  static void extend(std::vector<IntPoly>& seq, unsigned n, const IntPoly& multiplier);

  std::mutex mutex_;
  std::vector<IntPoly> t_{IntPoly{1}, IntPoly{0, 1}};
  std::vector<IntPoly> u_{IntPoly{1}, IntPoly{0, 2}};
  std::vector<IntPoly> p_{IntPoly{1}, IntPoly{0, 1}};
};

struct ChebyshevReport {
  unsigned n_max = 0;
  bool ut_identity = true;           // U_n - U_{n-2} = 2 T_n, exact
  bool closed_forms = true;          // recurrence == closed form for T, U, p, a, d
  long double max_root_residual = 0;  // |p_n(2cos(pi r/(n+1)))|
  long double max_product_residual = 0;  // T_n against 2^(n-1) prod (t - cos((2r-1)pi/2n))
  bool passed = false;
};

ChebyshevReport verify_identities(unsigned n_max, long double tolerance);

}  // namespace mckay
