#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace hodgemod {

/// Exact arbitrary-precision integer; every coefficient in the library is
/// one of these. No floating point is used anywhere.
using Int = boost::multiprecision::cpp_int;

inline std::string int_to_string(const Int& v) { return v.str(); }

/// Parses a decimal string (with optional leading '-'); throws on garbage.
inline Int int_from_string(const std::string& s) { return Int(s); }

}  // namespace hodgemod
