#pragma once

// Verification suites: each check compares two independent computations and
// records either an exact pass/fail or a numeric residual.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mckay/groups.hpp"

namespace mckay {

struct Check {
  std::string suite;
  std::string name;
  bool exact = true;
  long double residual = 0;  // meaningful when !exact
  bool passed = false;
  std::string detail;        // diagnostic on failure
};

struct VerifyOptions {
  long double tolerance = 1e-9L;
  long double molien_tolerance = 1e-8L;
  unsigned n_min = 2;
  unsigned n_max = 12;
  std::optional<GroupKind> only;  // restrict per-group checks to one kind
  std::size_t oracle_levels = 20;
  std::size_t schur_weyl_levels = 10;
  std::size_t molien_terms = 40;
  unsigned chebyshev_n = 50;
  unsigned chebyshev_root_n = 20;
  unsigned lucas_n = 15;
};

struct VerifyReport {
  std::vector<Check> checks;
  bool passed() const;
  std::size_t failures() const;
};

inline constexpr std::string_view kSuites[] = {"all", "chebyshev", "steinberg", "closedform", "molien", "oracle"};

/// Throws InvalidParameter for an unknown suite name.
VerifyReport run_suite(std::string_view suite, const VerifyOptions& options = {});

}  // namespace mckay
