#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>

namespace acausal {

// Exact rational scalar, always stored canonically reduced with a
// positive denominator (GMP keeps this invariant for all arithmetic).
using Rat = boost::multiprecision::mpq_rational;
using Int = boost::multiprecision::mpz_int;

// Parses "p/q" or "p". Canonicalizes the result; rejects q <= 0 and
// malformed input (GMP itself accepts unreduced or zero denominators).
Rat parse_rational(std::string_view text);

std::string to_string(const Rat& value);

}  // namespace acausal
