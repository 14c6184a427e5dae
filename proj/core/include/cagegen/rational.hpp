#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <string>

namespace cagegen {

/// Exact rational value; index thresholds must be reproducible bit-exactly,
/// so no floats anywhere in the index pipeline.
using Rational = boost::rational<std::int64_t>;

std::string to_string(const Rational& r);      // "p/q" (q always printed)
Rational parse_rational(const std::string& s); // "p" or "p/q"

} // namespace cagegen
