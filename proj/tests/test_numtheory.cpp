#include <catch_amalgamated.hpp>

#include <array>
#include <random>

#include "rosegbs/numtheory.hpp"

using namespace rosegbs;

namespace {

BigInt binomial(unsigned n, unsigned k) {
  BigInt c = 1;
  for (unsigned i = 0; i < k; ++i) {
    c = c * (n - i) / (i + 1);
  }
  return c;
}

}  // namespace

TEST_CASE("primality by trial division") {
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(1));
  CHECK(is_prime(2));
  CHECK(is_prime(3));
  CHECK_FALSE(is_prime(4));
  CHECK(is_prime(2147483647ULL));
  CHECK_FALSE(is_prime(2147483649ULL));
  CHECK_THROWS_AS(require_prime(9), DomainError);
}

TEST_CASE("p-adic valuation splits off the unit part") {
  CHECK(p_valuation(12, 2) == ValuationSplit{2, 3});
  CHECK(p_valuation(-5, 5) == ValuationSplit{1, -1});
  CHECK(p_valuation(7, 3) == ValuationSplit{0, 7});
  CHECK(valuation(BigInt(1) << 200, 2) == 200);
  CHECK_THROWS_AS(p_valuation(0, 2), DomainError);
  CHECK_THROWS_AS(p_valuation(12, 4), DomainError);
}

TEST_CASE("p-adic valuation reconstructs its input") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long long> dist(-1000000, 1000000);
  for (int i = 0; i < 2000; ++i) {
    long long x = dist(rng);
    if (x == 0) {
      continue;
    }
    for (std::uint64_t p : {2, 3, 5, 7}) {
      auto s = p_valuation(x, p);
      CHECK(big_pow(p, s.valuation) * s.unit_part == x);
      CHECK(s.unit_part % p != 0);
    }
  }
}

TEST_CASE("extended gcd examples") {
  auto b = ext_gcd(5, 8);
  CHECK(b.g == 1);
  CHECK(5 * b.x + 8 * b.y == 1);
  CHECK(ext_gcd(4, 6).g == 2);
  auto z = ext_gcd(0, -7);
  CHECK(z.g == 7);
  CHECK(z.x == 0);
  CHECK(z.y == -1);
  CHECK_THROWS_AS(ext_gcd(0, 0), DomainError);
}

TEST_CASE("extended gcd postcondition on random inputs") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long long> dist(-1000000000LL, 1000000000LL);
  for (int i = 0; i < 10000; ++i) {
    BigInt a = dist(rng), b = dist(rng);
    if (a == 0 && b == 0) {
      continue;
    }
    auto r = ext_gcd(a, b);
    REQUIRE(r.g > 0);
    REQUIRE(a * r.x + b * r.y == r.g);
    REQUIRE(a % r.g == 0);
    REQUIRE(b % r.g == 0);
  }
}

TEST_CASE("kummer and legendre valuations") {
  CHECK(kummer_valuation(4, 2, 2) == 1);
  CHECK(legendre_valuation(4, 2, 2) == 1);
  CHECK(legendre_valuation(5, 2, 2) == 1);
  CHECK(legendre_valuation(9, 3, 3) == 1);
  for (std::uint64_t p : {2, 3, 5, 7, 11, 101}) {
    CHECK(kummer_valuation(p, 1, p) == 1);
    CHECK(kummer_valuation(17, 0, p) == 0);
  }
  CHECK_THROWS_AS(kummer_valuation(3, 4, 2), DomainError);
  CHECK_THROWS_AS(legendre_valuation(3, 4, 2), DomainError);
}

TEST_CASE("kummer valuation matches exact binomials") {
  for (std::uint64_t p : {2, 3, 5, 7}) {
    for (unsigned n = 0; n <= 120; ++n) {
      for (unsigned k = 0; k <= n; ++k) {
        auto direct = valuation(binomial(n, k), p);
        REQUIRE(kummer_valuation(n, k, p) == direct);
        REQUIRE(legendre_valuation(n, k, p) == direct);
      }
    }
  }
}

TEST_CASE("diophantine examples") {
  std::vector<BigInt> c{4, 6, 9};
  auto s = solve_diophantine(c, 1);
  REQUIRE(s);
  CHECK(4 * (*s)[0] + 6 * (*s)[1] + 9 * (*s)[2] == 1);
  CHECK_FALSE(solve_diophantine(std::vector<BigInt>{2, 4}, 3));
  auto one = solve_diophantine(std::vector<BigInt>{-13}, -13);
  REQUIRE(one);
  CHECK((*one)[0] == 1);
  CHECK_THROWS_AS(solve_diophantine(std::vector<BigInt>{}, 1), DomainError);
  CHECK_THROWS_AS(solve_diophantine(std::vector<BigInt>{0, 0}, 1), DomainError);
  // zero coefficients in front are allowed
  auto z = solve_diophantine(std::vector<BigInt>{0, 0, 5}, 10);
  REQUIRE(z);
  CHECK(5 * (*z)[2] == 10);
}

TEST_CASE("diophantine solutions substitute, random") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> len(1, 6);
  std::uniform_int_distribution<long long> val(-10000, 10000);
  for (int i = 0; i < 3000; ++i) {
    std::vector<BigInt> c(len(rng));
    BigInt g = 0;
    for (auto& x : c) {
      x = val(rng);
      g = gcd(g, x);
    }
    if (g == 0) {
      continue;
    }
    BigInt target = val(rng);
    auto s = solve_diophantine(c, target);
    REQUIRE(s.has_value() == (target % g == 0));
    if (s) {
      BigInt sum = 0;
      for (std::size_t j = 0; j < c.size(); ++j) {
        sum += c[j] * (*s)[j];
      }
      REQUIRE(sum == target);
    }
  }
}

TEST_CASE("multiplicative orders") {
  CHECK(multiplicative_order(1, {2, 5}) == 1);
  CHECK(multiplicative_order(1, {7, 1}) == 1);
  CHECK(multiplicative_order(3, {2, 3}) == 2);
  CHECK(multiplicative_order(2, {3, 2}) == 6);
  CHECK_FALSE(is_p_power(6, 3));
  CHECK(is_p_power(1, 3));
  CHECK(is_p_power(81, 3));
  CHECK_FALSE(is_p_power(0, 3));
  CHECK_THROWS_AS(multiplicative_order(6, {3, 2}), DomainError);
  CHECK_THROWS_AS(multiplicative_order(2, {3, 0}), DomainError);
}

TEST_CASE("multiplicative order agrees with brute force") {
  for (std::uint64_t p : {2, 3, 5, 7}) {
    for (unsigned s = 1; s <= 4; ++s) {
      std::uint64_t m = PrimePower{p, s}.value();
      for (std::uint64_t c = 1; c < m; ++c) {
        if (c % p == 0) {
          continue;
        }
        std::uint64_t e = 1, x = c % m;
        while (x != 1 % m) {
          x = x * c % m;
          ++e;
        }
        REQUIRE(multiplicative_order(c, {p, s}) == e);
      }
    }
  }
}

TEST_CASE("units congruent to 1 have p-power order") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long long> val(-5000, 5000);
  for (int i = 0; i < 500; ++i) {
    std::uint64_t p = std::array<std::uint64_t, 3>{2, 3, 5}[i % 3];
    unsigned s = 1 + i % 8;
    BigInt n = val(rng), m = val(rng);
    if (n % p == 0 || m % p == 0 || (m - n) % p != 0) {
      continue;
    }
    std::uint64_t mod = PrimePower{p, s}.value();
    std::uint64_t c = mul_mod(mod_u64(m, mod), inverse_mod(n, mod), mod);
    REQUIRE(is_p_power(multiplicative_order(c, {p, s}), p));
  }
}

TEST_CASE("modular helpers") {
  CHECK(inverse_mod(3, 8) == 3);
  CHECK(inverse_mod(-1, 9) == 8);
  CHECK_THROWS_AS(inverse_mod(3, 9), DomainError);
  CHECK(pow_mod(3, 0, 1) == 0);
  CHECK(pow_mod(2, 10, 1000) == 24);
  CHECK(mod_u64(-1, 8) == 7);
  CHECK_THROWS_AS(PrimePower({2, 64}).value(), DomainError);
}
