#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "padic_hg/fp.hpp"

using namespace padic_hg;

TEST_CASE("legendre symbol at p = 7") {
  const FieldCtx f(7);
  CHECK(legendre_symbol(f, 0) == 0);
  CHECK(legendre_symbol(f, 1) == 1);
  CHECK(legendre_symbol(f, 2) == 1);
  CHECK(legendre_symbol(f, 5) == -1);
}

TEST_CASE("legendre symbol matches enumeration of squares") {
  for (u64 p : oracle::primes(3, 200)) {
    const FieldCtx f(p);
    for (u64 a = 0; a < p; ++a) REQUIRE(f.legendre(a) == oracle::phi(p, i64(a)));
  }
}

TEST_CASE("Euler criterion and multiplicativity") {
  std::mt19937_64 rng(7);
  for (u64 p : oracle::primes(3, 400)) {
    const FieldCtx f(p);
    std::uniform_int_distribution<u64> pick(1, p - 1);
    for (int i = 0; i < 50; ++i) {
      const u64 a = pick(rng), b = pick(rng);
      const u64 euler = f.pow(a, (p - 1) / 2);
      CHECK(euler == (f.legendre(a) == 1 ? 1 : p - 1));
      CHECK(f.legendre(f.mul(a, b)) == f.legendre(a) * f.legendre(b));
    }
  }
}

TEST_CASE("primitive roots") {
  CHECK(primitive_root(7) == 3);
  CHECK(primitive_root(5) == 2);
  CHECK(primitive_root(3) == 2);
  for (u64 p : oracle::primes(3, 300)) {
    CHECK(FieldCtx(p).primitive_root() == oracle::smallest_generator(p));
  }
}

TEST_CASE("FieldCtx rejects non-primes and 2") {
  CHECK_THROWS_AS(FieldCtx(9), std::invalid_argument);
  CHECK_THROWS_AS(FieldCtx(2), std::invalid_argument);
  CHECK_THROWS_AS(FieldCtx(1), std::invalid_argument);
}

TEST_CASE("primality against trial division") {
  for (u64 n = 0; n < 5000; ++n) REQUIRE(is_prime(n) == oracle::prime(n));
  CHECK(is_prime(2305843009213693951ULL));   // 2^61 - 1
  CHECK_FALSE(is_prime(3215031751ULL));      // strong pseudoprime to 2, 3, 5, 7
  CHECK(is_prime(18446744073709551557ULL));  // largest 64-bit prime
}

TEST_CASE("nth roots examples") {
  const FieldCtx f7(7), f13(13);
  CHECK(nth_roots(f7, 3, 6) == std::vector<u64>{3, 5, 6});
  CHECK(nth_roots(f7, 3, 2).empty());
  CHECK(nth_roots(f13, 3, 1) == std::vector<u64>{1, 3, 9});
  CHECK(nth_power_residue_test(f7, 3, 6));
  CHECK_FALSE(nth_power_residue_test(f7, 3, 2));
  CHECK(nth_power_residue_test(f7, 5, 3));
}

TEST_CASE("root counts are 0 or gcd(n, p-1) and agree with the residue test") {
  for (u64 p : oracle::primes(3, 200)) {
    const FieldCtx f(p);
    for (u64 n = 1; n <= 8; ++n) {
      const u64 d = std::gcd(n, p - 1);
      for (u64 t = 1; t < p; ++t) {
        const auto r = nth_roots(f, n, t);
        REQUIRE((r.empty() || r.size() == d));
        REQUIRE(nth_power_residue_test(f, n, t) == !r.empty());
        if (p < 60) REQUIRE(r == oracle::roots_of_power(p, n, t));
      }
    }
  }
}

TEST_CASE("discrete-log roots agree with the scan") {
  for (u64 p : {10007ULL, 10009ULL, 12289ULL}) {
    const FieldCtx f(p);
    std::mt19937_64 rng(p);
    std::uniform_int_distribution<u64> pick(1, p - 1);
    for (u64 n : {2ULL, 3ULL, 4ULL, 6ULL, 8ULL}) {
      for (int i = 0; i < 20; ++i) {
        const u64 t = i < 10 ? f.pow(pick(rng), n) : pick(rng);
        REQUIRE(nth_roots_dlog(f, n, t) == nth_roots_scan(f, n, t));
      }
    }
    CHECK(nth_roots(f, 3, 1) == nth_roots_scan(f, 3, 1));
  }
}

TEST_CASE("roots of f_t") {
  const FieldCtx f7(7), f5(5);
  CHECK(f_t_roots(f7, 3, 1) == std::vector<u64>{2, 3});
  CHECK(f_t_roots(f7, 4, 1) == std::vector<u64>{6});
  CHECK(f_t_roots(f5, 3, 1) == oracle::f_roots(5, 3, 1));
  CHECK(f_t_roots(f5, 3, 1) == std::vector<u64>{3, 4});
  CHECK_THROWS_AS(f_t_roots(f5, 5, 1), std::domain_error);
  CHECK_THROWS_AS(f_t_roots(f7, 3, 0), std::invalid_argument);
}

TEST_CASE("f_t roots are distinct, at most n, and match evaluation") {
  for (u64 p : oracle::primes(5, 80)) {
    const FieldCtx f(p);
    for (u64 n = 3; n <= 8; ++n) {
      if (n % p == 0 || (n - 1) % p == 0) continue;
      for (u64 t = 1; t < p; ++t) {
        const auto r = f_t_roots(f, n, t);
        REQUIRE(r.size() <= n);
        REQUIRE(r == oracle::f_roots(p, n, t));
      }
    }
  }
}
