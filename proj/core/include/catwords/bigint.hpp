#pragma once

#include <string>

#include <gmpxx.h>

namespace catwords {

/// Arbitrary-precision integer used for every count in the library.
using BigInt = mpz_class;

/// Exact rational used for power-series coefficients.
using Rational = mpq_class;

inline std::string to_string(const BigInt& value) { return value.get_str(); }

inline std::string to_string(const Rational& value) { return value.get_str(); }

}  // namespace catwords
