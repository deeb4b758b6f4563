#pragma once

#include <gmpxx.h>

#include <string>

namespace stacksort {

using BigInt = mpz_class;
using BigRational = mpq_class;

inline std::string to_string(const BigInt& v) { return v.get_str(); }

// Rationals print as "p" or "p/q" in lowest terms.
inline std::string to_string(const BigRational& v) { return v.get_str(); }

}  // namespace stacksort
