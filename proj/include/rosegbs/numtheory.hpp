#pragma once

// Exact integer kernel: p-adic valuations, Bezout coefficients, binomial
// valuations, linear Diophantine equations and unit orders modulo p^s.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "rosegbs/bigint.hpp"

namespace rosegbs {

// Deterministic trial division.
inline bool is_prime(std::uint64_t n) {
  if (n < 2) {
    return false;
  }
  if (n % 2 == 0) {
    return n == 2;
  }
  for (std::uint64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) {
      return false;
    }
  }
  return true;
}

inline void require_prime(std::uint64_t p) {
  if (!is_prime(p)) {
    throw DomainError(std::to_string(p) + " is not prime");
  }
}

struct ValuationSplit {
  unsigned valuation = 0;
  BigInt unit_part;  // keeps the sign of the input

  bool operator==(ValuationSplit const&) const = default;
};

inline ValuationSplit p_valuation(BigInt const& x, std::uint64_t p) {
  if (x == 0) {
    throw DomainError("p-adic valuation of zero");
  }
  require_prime(p);
  ValuationSplit out{0, x};
  while (out.unit_part % p == 0) {
    out.unit_part /= p;
    ++out.valuation;
  }
  return out;
}

inline unsigned valuation(BigInt const& x, std::uint64_t p) {
  return p_valuation(x, p).valuation;
}

struct Bezout {
  BigInt g;
  BigInt x;
  BigInt y;
};

// g = gcd(a, b) > 0 and a x + b y = g.
inline Bezout ext_gcd(BigInt const& a, BigInt const& b) {
  if (a == 0 && b == 0) {
    throw DomainError("ext_gcd(0, 0) is undefined");
  }
  BigInt old_r = a, r = b;
  BigInt old_s = 1, s = 0;
  BigInt old_t = 0, t = 1;
  while (r != 0) {
    BigInt q = old_r / r;
    BigInt tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    return {-old_r, -old_s, -old_t};
  }
  return {old_r, old_s, old_t};
}

inline BigInt gcd(BigInt const& a, BigInt const& b) {
  if (a == 0 && b == 0) {
    return 0;
  }
  return ext_gcd(a, b).g;
}

// Number of carries when k is added to n - k in base p.
inline unsigned kummer_valuation(std::uint64_t n, std::uint64_t k, std::uint64_t p) {
  if (k > n) {
    throw DomainError("binomial index k out of range");
  }
  require_prime(p);
  std::uint64_t x = k, y = n - k, carry = 0;
  unsigned carries = 0;
  while (x > 0 || y > 0 || carry > 0) {
    std::uint64_t digit = x % p + y % p + carry;
    carry = digit >= p ? 1 : 0;
    carries += static_cast<unsigned>(carry);
    x /= p;
    y /= p;
  }
  return carries;
}

// nu_p(n!) = sum_{i >= 1} floor(n / p^i)
inline std::uint64_t factorial_valuation(std::uint64_t n, std::uint64_t p) {
  std::uint64_t total = 0;
  while (n > 0) {
    n /= p;
    total += n;
  }
  return total;
}

inline unsigned legendre_valuation(std::uint64_t n, std::uint64_t k, std::uint64_t p) {
  if (k > n) {
    throw DomainError("binomial index k out of range");
  }
  require_prime(p);
  return static_cast<unsigned>(factorial_valuation(n, p) - factorial_valuation(k, p) -
                               factorial_valuation(n - k, p));
}

namespace detail {

  // g = gcd(coeffs) and multipliers r with sum r_i coeffs_i = g. g = 0 when
  // every coefficient is zero.
  inline std::pair<BigInt, std::vector<BigInt>> bezout_multipliers(
      std::span<BigInt const> coeffs) {
    BigInt g = 0;
    std::vector<BigInt> r(coeffs.size(), BigInt(0));
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
      if (coeffs[j] == 0) {
        continue;
      }
      if (g == 0) {
        g = abs(coeffs[j]);
        r[j] = coeffs[j] < 0 ? -1 : 1;
        continue;
      }
      auto [G, alpha, beta] = ext_gcd(g, coeffs[j]);
      for (std::size_t i = 0; i < j; ++i) {
        r[i] *= alpha;
      }
      r[j] = beta;
      g = G;
    }
    return {g, r};
  }

}  // namespace detail

// One particular solution of sum coeffs_j x_j = target, or nullopt when
// gcd(coeffs) does not divide target. The first n-1 coefficients are folded
// into their gcd g, the two-variable equation g y + a_n x_n = c is solved,
// and x_i = r_i y is substituted back.
inline std::optional<std::vector<BigInt>> solve_diophantine(std::span<BigInt const> coeffs,
                                                            BigInt const& target) {
  if (coeffs.empty()) {
    throw DomainError("diophantine equation without coefficients");
  }
  bool all_zero = true;
  for (auto const& c : coeffs) {
    all_zero = all_zero && c == 0;
  }
  if (all_zero) {
    throw DomainError("diophantine equation with all-zero coefficients");
  }
  std::size_t const n = coeffs.size();
  if (n == 1) {
    if (target % coeffs[0] != 0) {
      return std::nullopt;
    }
    return std::vector<BigInt>{target / coeffs[0]};
  }
  auto [g, r] = detail::bezout_multipliers(coeffs.first(n - 1));
  BigInt const& last = coeffs[n - 1];
  auto [G, alpha, beta] = ext_gcd(g, last);
  if (target % G != 0) {
    return std::nullopt;
  }
  BigInt scale = target / G;
  BigInt y = alpha * scale;
  std::vector<BigInt> x(n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    x[i] = r[i] * y;
  }
  x[n - 1] = beta * scale;
  return x;
}

inline std::optional<std::vector<BigInt>> solve_diophantine(std::vector<BigInt> const& coeffs,
                                                            BigInt const& target) {
  return solve_diophantine(std::span<BigInt const>(coeffs), target);
}

// Modulus p^s held as a machine word.
struct PrimePower {
  std::uint64_t p = 2;
  unsigned s = 1;

  std::uint64_t value() const {
    std::uint64_t v = 1;
    for (unsigned i = 0; i < s; ++i) {
      if (v > UINT64_MAX / p) {
        throw DomainError("p^s does not fit in 64 bits");
      }
      v *= p;
    }
    return v;
  }
};

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (e > 0) {
    if (e & 1U) {
      result = mul_mod(result, base, m);
    }
    base = mul_mod(base, base, m);
    e >>= 1U;
  }
  return result;
}

// Inverse of a unit modulo m, as a least non-negative residue.
inline std::uint64_t inverse_mod(BigInt const& c, std::uint64_t m) {
  auto [g, x, y] = ext_gcd(c, BigInt(m));
  if (g != 1) {
    throw DomainError("not a unit modulo " + std::to_string(m));
  }
  return mod_u64(x, m);
}

// Least e >= 1 with c^e = 1 mod p^s.
inline std::uint64_t multiplicative_order(BigInt const& c, PrimePower modulus) {
  require_prime(modulus.p);
  if (modulus.s == 0) {
    throw DomainError("modulus exponent s must be positive");
  }
  if (c % modulus.p == 0) {
    throw DomainError("not a unit modulo p^s");
  }
  std::uint64_t const m = modulus.value();
  std::uint64_t const x = mod_u64(c, m);
  // The unit group has order phi = p^(s-1) (p-1); strip prime factors of phi.
  std::uint64_t order = m / modulus.p * (modulus.p - 1);
  std::vector<std::uint64_t> primes;
  std::uint64_t rest = modulus.p - 1;
  for (std::uint64_t d = 2; d <= rest / d; ++d) {
    if (rest % d == 0) {
      primes.push_back(d);
      while (rest % d == 0) {
        rest /= d;
      }
    }
  }
  if (rest > 1) {
    primes.push_back(rest);
  }
  if (modulus.s > 1) {
    primes.push_back(modulus.p);
  }
  for (std::uint64_t q : primes) {
    while (order % q == 0 && pow_mod(x, order / q, m) == 1 % m) {
      order /= q;
    }
  }
  return order;
}

inline bool is_p_power(BigInt x, std::uint64_t p) {
  if (x <= 0) {
    return false;
  }
  while (x % p == 0) {
    x /= p;
  }
  return x == 1;
}

}  // namespace rosegbs
