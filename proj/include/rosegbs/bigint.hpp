#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace rosegbs {

using BigInt = boost::multiprecision::cpp_int;

// Raised when a precondition on numeric input is violated (zero where a
// nonzero value is required, a composite where a prime is required, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline std::string to_string(BigInt const& x) {
  return x.str();
}

inline BigInt abs(BigInt const& x) {
  return x < 0 ? BigInt(-x) : x;
}

// Least non-negative residue of x modulo m (m > 0).
inline std::uint64_t mod_u64(BigInt const& x, std::uint64_t m) {
  BigInt r = x % m;
  if (r < 0) {
    r += m;
  }
  return r.convert_to<std::uint64_t>();
}

inline BigInt big_pow(BigInt base, std::uint64_t e) {
  BigInt result = 1;
  while (e > 0) {
    if (e & 1U) {
      result *= base;
    }
    base *= base;
    e >>= 1U;
  }
  return result;
}

// Parses an optionally signed decimal integer; throws std::invalid_argument.
inline BigInt parse_bigint(std::string_view text) {
  if (text.empty()) {
    throw std::invalid_argument("empty integer literal");
  }
  std::size_t i = text[0] == '-' ? 1 : 0;
  if (i == text.size()) {
    throw std::invalid_argument("sign without digits");
  }
  BigInt value = 0;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (c < '0' || c > '9') {
      throw std::invalid_argument("bad digit in integer literal");
    }
    value = value * 10 + (c - '0');
  }
  return text[0] == '-' ? BigInt(-value) : value;
}

}  // namespace rosegbs
