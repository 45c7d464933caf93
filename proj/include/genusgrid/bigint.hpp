#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace genusgrid {

using BigInt = boost::multiprecision::cpp_int;

// Fixed-width, overflow-checked signed integer used on hot paths where a
// bound on the magnitude is known up front. No heap allocation.
using CheckedInt512 = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<
    512, 512, boost::multiprecision::signed_magnitude, boost::multiprecision::checked, void>>;

inline std::string to_decimal(const BigInt& v) { return v.str(); }

inline BigInt abs_value(const BigInt& v) { return v < 0 ? BigInt(-v) : v; }

}  // namespace genusgrid
