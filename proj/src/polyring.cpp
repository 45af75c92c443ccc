#include "mckay/polyring.hpp"

#include <algorithm>
#include <sstream>

#include "mckay/error.hpp"

namespace mckay {

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

BigInt pow2(unsigned long e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

namespace {

const BigInt& zero_int() {
  static const BigInt z{0};
  return z;
}

const BigRat& zero_rat() {
  static const BigRat z{0};
  return z;
}

void append_term(std::ostringstream& os, const std::string& coeff_abs, bool negative, std::size_t deg,
                 char var, bool first) {
  if (first) {
    if (negative) os << '-';
  } else {
    os << (negative ? " - " : " + ");
  }
  bool unit = coeff_abs == "1";
  if (deg == 0) {
    os << coeff_abs;
    return;
  }
  if (!unit) os << coeff_abs << '*';
  os << var;
  if (deg > 1) os << '^' << deg;
}

}  // namespace

// ---------------------------------------------------------------- IntPoly

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::constant(const BigInt& c) { return IntPoly(std::vector<BigInt>{c}); }

IntPoly IntPoly::monomial(const BigInt& c, std::size_t degree) {
  std::vector<BigInt> v(degree + 1);
  v[degree] = c;
  return IntPoly(std::move(v));
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const BigInt& IntPoly::operator[](std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : zero_int();
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPoly(std::move(out));
}

IntPoly& IntPoly::operator*=(const IntPoly& rhs) { return *this = *this * rhs; }

IntPoly& IntPoly::operator*=(const BigInt& rhs) {
  for (auto& c : coeffs_) c *= rhs;
  trim();
  return *this;
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

IntPoly IntPoly::shifted(std::size_t k) const {
  if (is_zero()) return {};
  std::vector<BigInt> v(k);
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return IntPoly(std::move(v));
}

IntPoly IntPoly::reversed(std::size_t n) const {
  if (degree() > static_cast<int>(n)) {
    throw Error(ErrorKind::InvalidParameter, "reversal degree " + std::to_string(n) +
                                                 " below polynomial degree " + std::to_string(degree()));
  }
  std::vector<BigInt> v(n + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[n - i] = coeffs_[i];
  return IntPoly(std::move(v));
}

IntPoly IntPoly::negated_variable() const {
  IntPoly r = *this;
  for (std::size_t i = 1; i < r.coeffs_.size(); i += 2) r.coeffs_[i] = -r.coeffs_[i];
  return r;
}

BigInt IntPoly::content() const {
  BigInt g = 0;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  }
  return g;
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) return {};
  BigInt g = content();
  if (leading() < 0) g = -g;
  IntPoly r = *this;
  for (auto& c : r.coeffs_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return r;
}

long double IntPoly::evaluate(long double x) const {
  long double acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

BigRat IntPoly::evaluate(const BigRat& x) const {
  BigRat acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + BigRat(*it);
  return acc;
}

std::string IntPoly::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    BigInt a = abs(coeffs_[i]);
    append_term(os, a.get_str(), coeffs_[i] < 0, i, var, first);
    first = false;
  }
  return os.str();
}

IntPoly pow(const IntPoly& base, unsigned exponent) {
  IntPoly result{1};
  IntPoly b = base;
  while (exponent > 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent > 0) b *= b;
  }
  return result;
}

IntPoly divide_exact(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw Error(ErrorKind::NotDivisible, "division by the zero polynomial");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw Error(ErrorKind::NotDivisible, a.to_string() + " by " + b.to_string());
  std::vector<BigInt> rem(a.coeffs().begin(), a.coeffs().end());
  const std::size_t db = static_cast<std::size_t>(b.degree());
  std::vector<BigInt> quot(rem.size() - db);
  const BigInt& lead = b.leading();
  for (std::size_t k = quot.size(); k-- > 0;) {
    BigInt& top = rem[k + db];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) {
      throw Error(ErrorKind::NotDivisible, a.to_string() + " by " + b.to_string());
    }
    BigInt q;
    mpz_divexact(q.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= q * b[j];
    quot[k] = std::move(q);
  }
  for (const auto& r : rem) {
    if (r != 0) throw Error(ErrorKind::NotDivisible, a.to_string() + " by " + b.to_string());
  }
  return IntPoly(std::move(quot));
}

std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& a, const IntPoly& monic) {
  if (monic.is_zero() || monic.leading() != 1) {
    throw Error(ErrorKind::InvalidParameter, "divisor is not monic: " + monic.to_string());
  }
  if (a.degree() < monic.degree()) return {IntPoly{}, a};
  std::vector<BigInt> rem(a.coeffs().begin(), a.coeffs().end());
  const std::size_t dm = static_cast<std::size_t>(monic.degree());
  std::vector<BigInt> quot(rem.size() - dm);
  for (std::size_t k = quot.size(); k-- > 0;) {
    BigInt q = rem[k + dm];
    if (q == 0) continue;
    for (std::size_t j = 0; j <= dm; ++j) rem[k + j] -= q * monic[j];
    quot[k] = std::move(q);
  }
  return {IntPoly(std::move(quot)), IntPoly(std::move(rem))};
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero()) return b.primitive_part();
  if (b.is_zero()) return a.primitive_part();
  RatPoly x(a.primitive_part());
  RatPoly y(b.primitive_part());
  while (!y.is_zero()) {
    auto r = x.divmod(y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.primitive_int();
}

// ---------------------------------------------------------------- RatPoly

RatPoly::RatPoly(std::vector<BigRat> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

RatPoly::RatPoly(const IntPoly& p) {
  coeffs_.reserve(p.size());
  for (const auto& c : p.coeffs()) coeffs_.emplace_back(c);
}

RatPoly RatPoly::constant(const BigRat& c) { return RatPoly(std::vector<BigRat>{c}); }

void RatPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const BigRat& RatPoly::operator[](std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : zero_rat();
}

RatPoly& RatPoly::operator+=(const RatPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

RatPoly& RatPoly::operator*=(const BigRat& rhs) {
  for (auto& c : coeffs_) c *= rhs;
  trim();
  return *this;
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigRat> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return RatPoly(std::move(out));
}

bool RatPoly::is_integral() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const BigRat& c) { return c.get_den() == 1; });
}

IntPoly RatPoly::to_int_poly() const {
  std::vector<BigInt> v;
  v.reserve(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].get_den() != 1) {
      throw Error(ErrorKind::NonIntegralResult,
                  "coefficient of t^" + std::to_string(i) + " is " + coeffs_[i].get_str());
    }
    v.push_back(coeffs_[i].get_num());
  }
  return IntPoly(std::move(v));
}

std::pair<RatPoly, RatPoly> RatPoly::divmod(const RatPoly& divisor) const {
  if (divisor.is_zero()) throw Error(ErrorKind::NotDivisible, "division by the zero polynomial");
  if (degree() < divisor.degree()) return {RatPoly{}, *this};
  std::vector<BigRat> rem = coeffs_;
  const std::size_t dd = static_cast<std::size_t>(divisor.degree());
  std::vector<BigRat> quot(rem.size() - dd);
  for (std::size_t k = quot.size(); k-- > 0;) {
    BigRat q = rem[k + dd] / divisor.leading();
    if (q == 0) continue;
    for (std::size_t j = 0; j <= dd; ++j) rem[k + j] -= q * divisor[j];
    quot[k] = std::move(q);
  }
  return {RatPoly(std::move(quot)), RatPoly(std::move(rem))};
}

IntPoly RatPoly::primitive_int() const {
  BigInt l = 1;
  for (const auto& c : coeffs_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<BigInt> v;
  v.reserve(coeffs_.size());
  for (const auto& c : coeffs_) v.push_back(c.get_num() * (l / c.get_den()));
  return IntPoly(std::move(v)).primitive_part();
}

// ---------------------------------------------------------------- RationalFn

RationalFn::RationalFn() : den_{1} {}

RationalFn::RationalFn(IntPoly num, IntPoly den) {
  if (den[0] == 0) throw Error(ErrorKind::ZeroConstantTerm, "denominator " + den.to_string());
  if (num.is_zero()) {
    den_ = IntPoly{1};
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
  if (den[0] < 0) c = -c;
  if (c != 1) {
    num = divide_exact(num, IntPoly::constant(c));
    den = divide_exact(den, IntPoly::constant(c));
  }
  if (den[0] != 1) {
    throw Error(ErrorKind::NonUnitConstantTerm,
                "reduced denominator " + den.to_string() + " has constant term " + den[0].get_str());
  }
  num_ = std::move(num);
  den_ = std::move(den);
}

std::string RationalFn::to_string(char var) const {
  return "(" + num_.to_string(var) + ") / (" + den_.to_string(var) + ")";
}

std::vector<BigInt> series_expand(const IntPoly& num, const IntPoly& den, std::size_t n_terms) {
  const BigInt& d0 = den[0];
  if (d0 != 1 && d0 != -1) {
    throw Error(ErrorKind::NonUnitConstantTerm, "denominator " + den.to_string());
  }
  std::vector<BigInt> c(n_terms);
  for (std::size_t k = 0; k < n_terms; ++k) {
    BigInt acc = num[k];
    const std::size_t upto = std::min<std::size_t>(k, den.size() == 0 ? 0 : den.size() - 1);
    for (std::size_t j = 1; j <= upto; ++j) acc -= den[j] * c[k - j];
    c[k] = d0 == 1 ? acc : BigInt(-acc);
  }
  return c;
}

std::vector<BigInt> series_expand(const RationalFn& f, std::size_t n_terms) {
  return series_expand(f.num(), f.den(), n_terms);
}

std::vector<BigRat> series_expand(const RatPoly& num, const RatPoly& den, std::size_t n_terms) {
  if (den[0] == 0) throw Error(ErrorKind::ZeroConstantTerm, "rational denominator");
  std::vector<BigRat> c(n_terms);
  const std::size_t dsize = den.is_zero() ? 0 : static_cast<std::size_t>(den.degree());
  for (std::size_t k = 0; k < n_terms; ++k) {
    BigRat acc = num[k];
    for (std::size_t j = 1; j <= std::min(k, dsize); ++j) acc -= den[j] * c[k - j];
    c[k] = acc / den[0];
  }
  return c;
}

bool ratfn_eq(const IntPoly& f_num, const IntPoly& f_den, const IntPoly& g_num, const IntPoly& g_den) {
  return f_num * g_den == g_num * f_den;
}

bool ratfn_eq(const RationalFn& f, const RationalFn& g) { return ratfn_eq(f.num(), f.den(), g.num(), g.den()); }

// ---------------------------------------------------------------- PolyMatrix

PolyMatrix::PolyMatrix(const std::vector<std::vector<IntPoly>>& rows) : n_(rows.size()), entries_() {
  entries_.reserve(n_ * n_);
  for (const auto& r : rows) {
    if (r.size() != n_) throw Error(ErrorKind::InvalidParameter, "polynomial matrix is not square");
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
}

PolyMatrix PolyMatrix::identity_minus_t(const std::vector<std::vector<long>>& adjacency) {
  const std::size_t n = adjacency.size();
  PolyMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (adjacency[i].size() != n) throw Error(ErrorKind::InvalidParameter, "adjacency matrix is not square");
    for (std::size_t j = 0; j < n; ++j) {
      m(i, j) = IntPoly{i == j ? 1L : 0L, -adjacency[i][j]};
    }
  }
  return m;
}

PolyMatrix PolyMatrix::with_column(std::size_t col, const std::vector<IntPoly>& values) const {
  PolyMatrix m = *this;
  for (std::size_t i = 0; i < n_; ++i) m(i, col) = values.at(i);
  return m;
}

PolyMatrix PolyMatrix::minor(std::size_t row, std::size_t col) const {
  PolyMatrix m(n_ - 1);
  for (std::size_t i = 0, r = 0; i < n_; ++i) {
    if (i == row) continue;
    for (std::size_t j = 0, c = 0; j < n_; ++j) {
      if (j == col) continue;
      m(r, c++) = (*this)(i, j);
    }
    ++r;
  }
  return m;
}

IntPoly det_cofactor(const PolyMatrix& m) {
  const std::size_t n = m.dim();
  if (n == 0) return IntPoly{1};
  if (n == 1) return m(0, 0);
  if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  IntPoly acc;
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j).is_zero()) continue;
    IntPoly term = m(0, j) * det_cofactor(m.minor(0, j));
    if (j % 2 == 0)
      acc += term;
    else
      acc -= term;
  }
  return acc;
}

IntPoly det_bareiss(const PolyMatrix& input) {
  const std::size_t n = input.dim();
  if (n == 0) return IntPoly{1};
  PolyMatrix m = input;
  IntPoly prev{1};
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m(swap_row, k).is_zero()) ++swap_row;
      if (swap_row == n) return {};
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(swap_row, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = divide_exact(m(k, k) * m(i, j) - m(i, k) * m(k, j), prev);
      }
      m(i, k) = IntPoly{};
    }
    prev = m(k, k);
  }
  IntPoly d = m(n - 1, n - 1);
  return negate ? -d : d;
}

IntPoly poly_det(const PolyMatrix& m) { return m.dim() < 5 ? det_cofactor(m) : det_bareiss(m); }

}  // namespace mckay
