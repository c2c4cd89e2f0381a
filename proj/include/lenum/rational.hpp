#pragma once

#include <gmpxx.h>

#include <string>

namespace lenum {

using Integer = mpz_class;
using Rational = mpq_class;

/// "p/q" with q > 1 omitted, as used in reports.
inline std::string to_string(const Rational& r) { return r.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

}  // namespace lenum
