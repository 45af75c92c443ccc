#include "mckay/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "mckay/chebyshev.hpp"
#include "mckay/closedform.hpp"
#include "mckay/error.hpp"
#include "mckay/poincare.hpp"
#include "mckay/repgraph.hpp"

namespace mckay {

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

std::size_t VerifyReport::failures() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.passed; }));
}

namespace {

class Runner {
public:
  Runner(const VerifyOptions& opt, VerifyReport& report) : opt_(opt), report_(report) {}

  void exact(const std::string& suite, const std::string& name, const std::function<bool(std::string&)>& body) {
    Check c{suite, name, true, 0, false, {}};
    try {
      c.passed = body(c.detail);
    } catch (const std::exception& e) {
      c.passed = false;
      c.detail = e.what();
    }
    report_.checks.push_back(std::move(c));
  }

  void numeric(const std::string& suite, const std::string& name, long double tolerance,
               const std::function<long double()>& body) {
    Check c{suite, name, false, 0, false, {}};
    try {
      c.residual = body();
      c.passed = std::isfinite(static_cast<double>(c.residual)) && c.residual < tolerance;
      if (!c.passed) c.detail = "residual above tolerance";
    } catch (const std::exception& e) {
      c.residual = INFINITY;
      c.detail = e.what();
    }
    report_.checks.push_back(std::move(c));
  }

  std::vector<GroupKind> su2_kinds() const {
    std::vector<GroupKind> out;
    for (const auto& k : su2_catalog(opt_.n_min, opt_.n_max)) {
      if (!opt_.only || *opt_.only == k) out.push_back(k);
    }
    if (opt_.only && opt_.only->is_su2() && out.empty()) out.push_back(*opt_.only);
    return out;
  }

  std::vector<GroupKind> all_kinds() const {
    std::vector<GroupKind> out = su2_kinds();
    if (!opt_.only || *opt_.only == GroupKind::s4()) out.push_back(GroupKind::s4());
    return out;
  }

  void chebyshev();
  void steinberg();
  void closedform();
  void molien();
  void oracle();

private:
  const VerifyOptions& opt_;
  VerifyReport& report_;
};

std::string coeff_list(const std::vector<BigInt>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].get_str();
  return os.str();
}

void Runner::chebyshev() {
  const std::string s = "chebyshev";
  const std::string n = std::to_string(opt_.chebyshev_n);
  const std::string rn = std::to_string(opt_.chebyshev_root_n);
  ChebyshevReport full;
  try {
    full = verify_identities(opt_.chebyshev_n, opt_.tolerance);
  } catch (const std::exception& e) {
    exact(s, "identities up to n=" + n, [&](std::string& d) {
      d = e.what();
      return false;
    });
    return;
  }
  exact(s, "U_n - U_{n-2} = 2 T_n for n <= " + n, [&](std::string&) { return full.ut_identity; });
  exact(s, "recurrence = closed form for T_n, U_n, p_n, a_n, d_n, n <= " + n,
        [&](std::string&) { return full.closed_forms; });
  numeric(s, "|p_n(2cos(pi r/(n+1)))| for n <= " + rn, opt_.tolerance,
          [&] { return verify_identities(std::max(2u, opt_.chebyshev_root_n), opt_.tolerance).max_root_residual; });
  numeric(s, "T_n product over cos((2r-1)pi/2n) for n <= " + n, opt_.tolerance,
          [&] { return full.max_product_residual; });
}

void Runner::steinberg() {
  const std::string s = "steinberg";
  for (const GroupKind& kind : all_kinds()) {
    const std::string k = kind.to_string();
    numeric(s, k + ": spectrum of A = {chi_V(g)}", opt_.tolerance, [&] {
      const SpectrumReport r = steinberg_spectrum_check(kind, opt_.tolerance);
      return r.chi_mismatch;
    });
    if (kind.is_su2() && kind.has_affine_exponent_table()) {
      numeric(s, k + ": spectrum of A = {2cos(pi m/h^)}", opt_.tolerance, [&] {
        const SpectrumReport r = steinberg_spectrum_check(kind, opt_.tolerance);
        return r.exponent_mismatch;
      });
    }
    exact(s, k + ": A marks = dim(V) marks", [&](std::string&) {
      mckay_graph(kind).check_dimension_count();
      return true;
    });
    exact(s, k + ": det(I - tA) vanishes at t = 1/dim(V)", [&](std::string& d) {
      const RepGraph g = mckay_graph(kind);
      const IntPoly det = poly_det(PolyMatrix::identity_minus_t(g.adjacency()));
      const BigRat v = det.evaluate(BigRat(1, g.v_dim()));
      d = "value " + v.get_str();
      return v == 0;
    });
    exact(s, k + ": prod over classes (1 - chi_V t) = det(I - tA)", [&](std::string& d) {
      const RepGraph g = mckay_graph(kind);
      const IntPoly det = poly_det(PolyMatrix::identity_minus_t(g.adjacency()));
      const IntPoly prod = class_data(kind).class_product();
      d = prod.to_string() + " vs " + det.to_string();
      return prod == det;
    });
  }
}

void Runner::closedform() {
  const std::string s = "closedform";
  for (const GroupKind& kind : su2_kinds()) {
    const std::string k = kind.to_string();
    exact(s, k + ": closed form = invariants series", [&](std::string& d) {
      const ClosedFormSeries cf = closed_form(kind);
      const SeriesResult r = invariants_series(mckay_graph(kind));
      d = cf.as_ratfn().to_string() + " vs " + r.series.to_string();
      return ratfn_eq(cf.as_ratfn(), r.series);
    });
    if (kind.has_affine_exponent_table()) {
      numeric(s, k + ": exponent products = det(I - tA'), det(I - tA)", opt_.tolerance, [&] {
        const ExponentProductReport r = exponent_product(kind, 20, opt_.tolerance);
        return std::max({r.finite_residual, r.affine_residual, r.series_residual});
      });
    }
    if (kind.is_exceptional()) {
      exact(s, k + ": Lucas formula for m_{2n}^0, n <= " + std::to_string(opt_.lucas_n), [&](std::string& d) {
        const SeriesResult r = invariants_series(mckay_graph(kind));
        const std::vector<BigInt> coeffs = series_expand(r.series, 2 * opt_.lucas_n + 1);
        for (unsigned n = 1; n <= opt_.lucas_n; ++n) {
          const BigInt m = exceptional_m0(kind, n);
          if (m != coeffs[2 * n]) {
            d = "n=" + std::to_string(n) + ": " + m.get_str() + " vs " + coeffs[2 * n].get_str();
            return false;
          }
        }
        return true;
      });
    }
  }
  if (!opt_.only) {
    exact(s, "cyclic denominator by Chebyshev reversal, n <= 30", [&](std::string& d) {
      for (unsigned n = 2; n <= 30; ++n) {
        if (cyclic_closed(n).denominator != cyclic_denominator_via_chebyshev(n)) {
          d = "n=" + std::to_string(n);
          return false;
        }
      }
      return true;
    });
  }
}

void Runner::molien() {
  const std::string s = "molien";
  for (const GroupKind& kind : su2_kinds()) {
    numeric(s, kind.to_string() + ": Molien sum = (1+t^h)/((1-t^a)(1-t^b)), " + std::to_string(opt_.molien_terms) +
                   " terms",
            opt_.molien_tolerance, [&] {
              const std::vector<long double> mol = molien_invariants(kind, opt_.molien_terms);
              const std::vector<BigInt> exact =
                  series_expand(sym_invariants_series(descriptor(kind)), opt_.molien_terms);
              long double m = 0;
              for (std::size_t i = 0; i < mol.size(); ++i) {
                const long double e = static_cast<long double>(exact[i].get_d());
                m = std::max(m, std::fabs(mol[i] - e) / std::max(1.0L, std::fabs(e)));
              }
              return m;
            });
  }
}

void Runner::oracle() {
  const std::string s = "oracle";
  for (const GroupKind& kind : all_kinds()) {
    const std::string k = kind.to_string();
    exact(s, k + ": series coefficients = walk counts, every node, k <= " + std::to_string(opt_.oracle_levels),
          [&](std::string& d) {
            const RepGraph g = mckay_graph(kind);
            const std::vector<SeriesResult> all = series_all(g);
            const auto walks = walk_counts(g, opt_.oracle_levels);
            for (std::size_t mu = 0; mu < g.size(); ++mu) {
              const std::vector<BigInt> coeffs = series_expand(all[mu].series, opt_.oracle_levels + 1);
              for (std::size_t j = 0; j <= opt_.oracle_levels; ++j) {
                if (coeffs[j] != walks[j][mu]) {
                  d = "node " + g.labels()[mu] + " k=" + std::to_string(j) + ": series " + coeffs[j].get_str() +
                      ", walks " + walks[j][mu].get_str();
                  return false;
                }
              }
            }
            return true;
          });
    exact(s, k + ": sum_l m_k^l d^l = dim(V)^k and sum_l (m_k^l)^2 = m_2k^0, k <= " +
                 std::to_string(opt_.schur_weyl_levels),
          [&](std::string& d) {
            const RepGraph g = mckay_graph(kind);
            const auto walks = walk_counts(g, 2 * opt_.schur_weyl_levels);
            BigInt power = 1;
            for (std::size_t j = 0; j <= opt_.schur_weyl_levels; ++j) {
              BigInt dims = 0;
              BigInt squares = 0;
              for (std::size_t l = 0; l < g.size(); ++l) {
                dims += walks[j][l] * g.marks()[l];
                squares += walks[j][l] * walks[j][l];
              }
              if (dims != power) {
                d = "k=" + std::to_string(j) + ": dimension sum " + dims.get_str() + " vs " + power.get_str();
                return false;
              }
              if (squares != walks[2 * j][0]) {
                d = "k=" + std::to_string(j) + ": square sum " + squares.get_str() + " vs " +
                    walks[2 * j][0].get_str() + " (levels " + coeff_list(walks[j]) + ")";
                return false;
              }
              power *= g.v_dim();
            }
            bratteli(g, opt_.schur_weyl_levels);
            return true;
          });
  }
}

}  // namespace

VerifyReport run_suite(std::string_view suite, const VerifyOptions& options) {
  if (std::find(std::begin(kSuites), std::end(kSuites), suite) == std::end(kSuites)) {
    throw Error(ErrorKind::InvalidParameter, "unknown suite '" + std::string(suite) + "'");
  }
  if (options.n_min < 2 || options.n_max < options.n_min) {
    throw Error(ErrorKind::InvalidParameter, "parameter sweep must satisfy 2 <= n_min <= n_max");
  }
  VerifyReport report;
  Runner run(options, report);
  const bool all = suite == "all";
  if (all || suite == "chebyshev") run.chebyshev();
  if (all || suite == "steinberg") run.steinberg();
  if (all || suite == "closedform") run.closedform();
  if (all || suite == "molien") run.molien();
  if (all || suite == "oracle") run.oracle();
  return report;
}

}  // namespace mckay
