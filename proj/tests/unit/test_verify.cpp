#include <doctest.h>

#include "mckay/error.hpp"
#include "mckay/verify.hpp"

using namespace mckay;

TEST_CASE("every suite passes on the default sweep") {
  for (std::string_view suite : kSuites) {
    CAPTURE(suite);
    const VerifyReport r = run_suite(suite);
    CHECK_FALSE(r.checks.empty());
    for (const Check& c : r.checks) {
      CAPTURE(c.name);
      CAPTURE(c.detail);
      CHECK(c.passed);
    }
  }
}

TEST_CASE("group filter and errors") {
  VerifyOptions opt;
  opt.only = GroupKind::cyclic(4);
  const VerifyReport r = run_suite("steinberg", opt);
  CHECK(r.checks.size() == 5);
  CHECK(r.passed());
  CHECK_THROWS_AS(run_suite("nope"), Error);
  VerifyOptions bad;
  bad.n_min = 1;
  CHECK_THROWS_AS(run_suite("oracle", bad), Error);
}

TEST_CASE("an impossible tolerance fails the numeric checks") {
  VerifyOptions opt;
  opt.tolerance = 1e-30L;
  const VerifyReport r = run_suite("steinberg", opt);
  CHECK_FALSE(r.passed());
  CHECK(r.failures() > 0);
}
