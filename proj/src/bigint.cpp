#include "symcover/bigint.hpp"

#include <algorithm>

#include "symcover/error.hpp"

namespace symcover {

std::string to_string(const BigInt& value) { return value.str(); }

BigInt parse_bigint(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw InvalidArgument("malformed integer '" + std::string(text) + "'");
  }
  return BigInt(std::string(text));
}

BigInt factorial(unsigned n) {
  BigInt out = 1;
  for (unsigned i = 2; i <= n; ++i) out *= i;
  return out;
}

}  // namespace symcover
