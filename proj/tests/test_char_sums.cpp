#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "padic_hg/char_sums.hpp"
#include "padic_hg/closed_forms.hpp"

using namespace padic_hg;

TEST_CASE("Gauss sums") {
  for (u64 p : oracle::primes(3, 200)) {
    const CharTable t{FieldCtx(p)};
    CHECK(std::abs(t.gauss_sum(0) + 1.0) < 1e-9);
    for (std::int64_t a = 1; a < std::int64_t(p - 1); ++a) {
      REQUIRE(std::abs(std::norm(t.gauss_sum(a)) - double(p)) < 1e-7 * double(p));
      if (p < 60) REQUIRE(std::abs(t.gauss_sum(a) - oracle::gauss(p, a)) < 1e-9);
    }
  }
  const CharTable t5{FieldCtx(5)};
  CHECK(std::abs(t5.gauss_sum(t5.quadratic()) - std::sqrt(5.0)) < 1e-9);
}

TEST_CASE("Jacobi sums") {
  const CharTable t7{FieldCtx(7)};
  CHECK(std::abs(t7.jacobi_sum(0, 0) - 5.0) < 1e-9);
  for (u64 p : oracle::primes(3, 100)) {
    const CharTable t{FieldCtx(p)};
    const double phi_minus_one = oracle::phi(p, -1);
    REQUIRE(std::abs(t.jacobi_sum(t.quadratic(), t.quadratic()) + phi_minus_one) < 1e-9);
  }
}

TEST_CASE("character values are multiplicative and orthogonal") {
  for (u64 p : oracle::primes(3, 200)) {
    const CharTable t{FieldCtx(p)};
    std::mt19937_64 rng(p);
    std::uniform_int_distribution<u64> pick(1, p - 1);
    for (int i = 0; i < 30; ++i) {
      const auto a = static_cast<std::int64_t>(pick(rng));
      const u64 x = pick(rng), y = pick(rng);
      REQUIRE(std::abs(t.chi(a, x * y % p) - t.chi(a, x) * t.chi(a, y)) < 1e-9);
    }
    for (u64 x = 0; x < p; ++x) {
      cplx s = 0;
      for (std::int64_t a = 0; a < std::int64_t(p - 1); ++a) s += t.chi(a, x);
      REQUIRE(std::abs(s - (x == 1 ? double(p - 1) : 0.0)) < 1e-7 * double(p));
    }
    CHECK(std::abs(t.chi(t.quadratic(), 2) - double(oracle::phi(p, 2))) < 1e-12);
  }
}

TEST_CASE("Gauss and Jacobi identity grid") {
  CHECK(check_gauss_identities(CharTable{FieldCtx(7)}).max() < 1e-8);
  CHECK(check_gauss_identities(CharTable{FieldCtx(97)}).max() < 1e-6);
}

TEST_CASE("Hasse-Davenport") {
  const CharTable t7{FieldCtx(7)}, t13{FieldCtx(13)};
  CHECK(hasse_davenport_check(t7, 2, 1) < 1e-8);
  CHECK(hasse_davenport_check(t13, 3, 2) < 1e-8);
  for (std::int64_t c = 0; c < 6; ++c) CHECK(hasse_davenport_check(t7, 1, c) == 0.0);
  CHECK_THROWS_AS(hasse_davenport_check(t7, 4, 1), std::invalid_argument);
}

TEST_CASE("B_n and A_n quotients") {
  const FieldCtx f13(13), f7(7), f11(11);
  const CharTable t13{f13}, t7{f7}, t11{f11};
  const auto b = compare_B_n(t13, 3, 1, -2);
  CHECK(b.pass);
  CHECK(std::abs(b.quotient - cplx(-2.0)) < 1e-9);
  CHECK(compare_B_n(t7, 3, 2, 0).pass);
  const auto a = compare_A_n(t11, 3, 1, Rational(2));
  CHECK(a.pass);
  CHECK(std::abs(a.quotient - cplx(23.0)) < 1e-9);
  CHECK_FALSE(compare_B_n(t13, 3, 1, 2).pass);
}

TEST_CASE("B_n and A_n agree with enumeration") {
  for (u64 p : oracle::primes(5, 60)) {
    const FieldCtx f(p);
    const CharTable t{f};
    for (u64 n = 3; n <= 6; ++n) {
      if (n % p == 0) continue;
      for (u64 tt = 1; tt < p; ++tt) {
        const auto b = compare_B_n(t, n, tt, oracle::nGn(p, n, tt));
        REQUIRE(b.pass);
        REQUIRE(std::abs(b.quotient.imag()) < b.tolerance);
        if ((n - 1) % p == 0) continue;
        const auto a = compare_A_n(t, n, tt, Rational(oracle::nGtilde_times_p(p, n, tt), std::int64_t(p)));
        REQUIRE(a.pass);
      }
    }
  }
}

TEST_CASE("the oracle is capped") {
  CHECK_THROWS_AS(CharTable(FieldCtx(10007)), std::domain_error);
  CHECK_THROWS_AS(CharTable(FieldCtx(211), 150), std::domain_error);
}

TEST_CASE("classical 3F2 values") {
  CHECK(hypergeometric_3f2_unit({0.0, 0.5, 0.5}, {1.5, 2.0}, 10) == 1.0);
  const auto e = classical_sanity();
  CHECK(e.dixon < 1e-3);
  CHECK(e.whipple < 1e-3);
}
