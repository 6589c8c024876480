#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace symcover {

using BigInt = boost::multiprecision::cpp_int;
using Int128 = __int128;

std::string to_string(const BigInt& value);
BigInt parse_bigint(std::string_view text);

BigInt factorial(unsigned n);

}  // namespace symcover
