#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace pbound {

// All rates, bounds and flow amounts are exact rationals. The value is
// kept canonical (reduced, positive denominator) by the backend, so
// structural equality coincides with numeric equality.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Renders "p/q" with the fraction reduced and the slash always present,
// e.g. "8/5", "16/1".
std::string rational_str(const Rational& r);

// Accepts "p" or "p/q" with an optional leading minus on p; q must be a
// positive integer.
Rational parse_rational(const std::string& token);

}  // namespace pbound
