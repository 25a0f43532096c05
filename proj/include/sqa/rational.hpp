#pragma once

#include <gmpxx.h>

#include <string>

namespace sqa {

using Rational = mpq_class;

// Always "p/q" with q >= 1, e.g. "-1/1".
std::string to_string(const Rational& r);

// Accepts "p", "p/q" and surrounding whitespace.
Rational parse_rational(const std::string& s);

}  // namespace sqa
