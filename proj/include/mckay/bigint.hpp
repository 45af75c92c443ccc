#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace mckay {

using BigInt = mpz_class;
using BigRat = mpq_class;

inline std::string to_string(const BigInt& v) { return v.get_str(); }

inline std::optional<long> to_long(const BigInt& v) {
  if (!v.fits_slong_p()) return std::nullopt;
  return v.get_si();
}

BigInt binomial(unsigned long n, unsigned long k);
BigInt pow2(unsigned long e);

}  // namespace mckay
