#include "padic_hg/char_sums.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace padic_hg {

CharTable::CharTable(const FieldCtx& field, u64 max_p) : p_(field.p()) {
  if (p_ > max_p) {
    throw std::domain_error("complex character sums are capped at p <= " + std::to_string(max_p) + " (got " +
                            std::to_string(p_) + ")");
  }
  const u64 order = p_ - 1;
  log_.assign(p_, 0);
  u64 x = 1;
  for (u64 k = 0; k < order; ++k) {
    log_[x] = k;
    x = field.mul(x, field.primitive_root());
  }
  unity_pm1_.resize(order);
  for (u64 k = 0; k < order; ++k) {
    unity_pm1_[k] = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(order));
  }
  unity_p_.resize(p_);
  for (u64 k = 0; k < p_; ++k) {
    unity_p_[k] = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(p_));
  }
  gauss_.resize(order);
  for (u64 a = 0; a < order; ++a) gauss_[a] = gauss_sum_direct(static_cast<std::int64_t>(a));
}

u64 CharTable::index(std::int64_t a) const {
  const auto order = static_cast<std::int64_t>(p_ - 1);
  std::int64_t r = a % order;
  if (r < 0) r += order;
  return static_cast<u64>(r);
}

cplx CharTable::chi(std::int64_t a, u64 x) const {
  x %= p_;
  if (x == 0) return 0.0;
  return unity_pm1_[mulmod(index(a), log_[x], p_ - 1)];
}

cplx CharTable::gauss_sum_direct(std::int64_t a) const {
  cplx sum = 0.0;
  for (u64 x = 1; x < p_; ++x) sum += chi(a, x) * unity_p_[x];
  return sum;
}

cplx CharTable::jacobi_sum(std::int64_t a, std::int64_t b) const {
  cplx sum = 0.0;
  // y = 0 and y = 1 contribute nothing since χ(0) = 0
  for (u64 y = 2; y < p_; ++y) sum += chi(a, y) * chi(b, p_ + 1 - y);
  return sum;
}

cplx CharTable::binomial(std::int64_t a, std::int64_t b) const {
  return chi(b, p_ - 1) / static_cast<double>(p_) * jacobi_sum(a, -b);
}

double IdentityErrors::max() const {
  return std::max({orthogonality, gauss_product, gauss_jacobi, binomial_trivial, binomial_symmetry, gauss_trivial});
}

IdentityErrors check_gauss_identities(const CharTable& table) {
  IdentityErrors err;
  const u64 p = table.p();
  const auto order = static_cast<std::int64_t>(table.order());
  const double pd = static_cast<double>(p);
  auto delta = [&](std::int64_t a) { return table.index(a) == 0 ? 1.0 : 0.0; };

  for (u64 x = 0; x < p; ++x) {
    cplx sum = 0.0;
    for (std::int64_t a = 0; a < order; ++a) sum += table.chi(a, x);
    const double expect = x == 1 ? static_cast<double>(order) : 0.0;
    err.orthogonality = std::max(err.orthogonality, std::abs(sum - expect));
  }

  err.gauss_trivial = std::abs(table.gauss_sum(0) + 1.0);
  for (std::int64_t a = 0; a < order; ++a) {
    const cplx lhs = table.gauss_sum(a) * table.gauss_sum(-a);
    const cplx rhs = pd * table.chi(a, p - 1) - (pd - 1.0) * delta(a);
    err.gauss_product = std::max(err.gauss_product, std::abs(lhs - rhs));
    if (a != 0) err.gauss_trivial = std::max(err.gauss_trivial, std::abs(std::norm(table.gauss_sum(a)) - pd));

    const double rel1 = -1.0 / pd + (pd - 1.0) / pd * delta(a);
    err.binomial_trivial = std::max(err.binomial_trivial, std::abs(table.binomial(a, 0) - rel1));
    err.binomial_trivial = std::max(err.binomial_trivial, std::abs(table.binomial(a, a) - rel1));
  }

  for (std::int64_t a = 0; a < order; ++a) {
    for (std::int64_t b = 0; b < order; ++b) {
      const cplx j = table.jacobi_sum(a, b);
      const cplx via_gauss = table.gauss_sum(a) * table.gauss_sum(b) / table.gauss_sum(a + b) +
                             (pd - 1.0) * table.chi(b, p - 1) * delta(a + b);
      err.gauss_jacobi = std::max(err.gauss_jacobi, std::abs(j - via_gauss));
      err.binomial_symmetry =
          std::max(err.binomial_symmetry, std::abs(table.binomial(a, b) - table.binomial(a, a - b)));
    }
  }
  return err;
}

double hasse_davenport_check(const CharTable& table, u64 m, std::int64_t chi) {
  if (m == 0 || table.order() % m != 0) {
    throw std::invalid_argument("Hasse-Davenport needs m | p-1 (m = " + std::to_string(m) + ")");
  }
  const auto psi = static_cast<std::int64_t>(table.order() / m);
  const auto mm = static_cast<std::int64_t>(m);
  cplx lhs = 1.0;
  for (std::int64_t i = 0; i < mm; ++i) lhs *= table.gauss_sum(chi + i * psi);
  cplx rhs = table.gauss_sum(mm * chi) * table.chi(-mm * chi, m);
  for (std::int64_t i = 1; i < mm; ++i) rhs *= table.gauss_sum(i * psi);
  return std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs));
}

cplx B_n_oracle(const CharTable& table, u64 n, u64 t) {
  const u64 p = table.p();
  if (n % p == 0) throw std::domain_error("B_n needs p ∤ n");
  if (t % p == 0) throw std::invalid_argument("B_n needs t != 0");
  const auto order = static_cast<std::int64_t>(table.order());
  const auto nn = static_cast<std::int64_t>(n % table.order());
  const u64 arg = n % 2 == 0 ? t % p : p - t % p;
  cplx sum = 0.0;
  for (std::int64_t a = 0; a < order; ++a) {
    sum += table.gauss_sum(table.quadratic() + nn * a) * table.gauss_sum(-nn * a) * table.chi(-a, arg);
  }
  return sum;
}

cplx A_n_oracle(const CharTable& table, u64 n, u64 t) {
  const u64 p = table.p();
  if (n % p == 0 || (n - 1) % p == 0) throw std::domain_error("A_n needs p ∤ n(n-1)");
  if (t % p == 0) throw std::invalid_argument("A_n needs t != 0");
  // α = 4 (1-n)^(n-1) / n^n
  const u64 one_minus_n = (p + 1 - n % p) % p;
  const u64 alpha = mulmod(mulmod(4 % p, powmod(one_minus_n, n - 1, p), p), invmod(powmod(n % p, n, p), p), p);
  const u64 arg = mulmod(alpha, t % p, p);
  const auto order = static_cast<std::int64_t>(table.order());
  const auto nn = static_cast<std::int64_t>(n % table.order());
  cplx sum = 0.0;
  for (std::int64_t a = 0; a < order; ++a) {
    sum += table.gauss_sum(table.quadratic() + (nn - 1) * a) * table.gauss_sum(-nn * a) * table.gauss_sum(-a) *
           table.gauss_sum(2 * a) * table.chi(-a, arg);
  }
  return sum;
}

double oracle_tolerance(u64 p) { return 1e-6 * std::pow(static_cast<double>(p), 1.5); }

namespace {

OracleComparison compare(const CharTable& table, cplx raw, double expected) {
  OracleComparison cmp;
  const double scale = static_cast<double>(table.order());
  cmp.quotient = raw / (scale * table.gauss_sum(table.quadratic()));
  cmp.expected = expected;
  cmp.error = std::abs(cmp.quotient - expected);
  cmp.tolerance = oracle_tolerance(table.p());
  cmp.pass = cmp.error <= cmp.tolerance;
  return cmp;
}

}  // namespace

OracleComparison compare_B_n(const CharTable& table, u64 n, u64 t, std::int64_t expected) {
  return compare(table, B_n_oracle(table, n, t), static_cast<double>(expected));
}

OracleComparison compare_A_n(const CharTable& table, u64 n, u64 t, const Rational& expected_gtilde) {
  const double g = static_cast<double>(expected_gtilde.num()) / static_cast<double>(expected_gtilde.den());
  return compare(table, A_n_oracle(table, n, t), 1.0 + static_cast<double>(table.p()) * g);
}

double hypergeometric_3f2_unit(const std::array<double, 3>& a, const std::array<double, 2>& b, std::size_t terms) {
  double sum = 0.0, term = 1.0;
  for (std::size_t k = 0; k < terms; ++k) {
    sum += term;
    const double kd = static_cast<double>(k);
    term *= (a[0] + kd) * (a[1] + kd) * (a[2] + kd) / ((b[0] + kd) * (b[1] + kd) * (1.0 + kd));
    if (term == 0.0) break;
  }
  return sum;
}

ClassicalErrors classical_sanity(std::size_t terms) {
  using std::tgamma;
  ClassicalErrors err;
  const double dixon_series = hypergeometric_3f2_unit({0.5, 1.0 / 6, 5.0 / 6}, {4.0 / 3, 2.0 / 3}, terms);
  const double dixon_closed = tgamma(1.25) * tgamma(4.0 / 3) * tgamma(2.0 / 3) * tgamma(0.25) /
                              (tgamma(1.5) * tgamma(13.0 / 12) * tgamma(5.0 / 12) * tgamma(0.5));
  err.dixon = std::abs(dixon_series - dixon_closed);

  const double whipple_series = hypergeometric_3f2_unit({0.25, 0.75, 0.5}, {1.0 / 3, 5.0 / 3}, terms);
  const double whipple_closed = std::numbers::pi * tgamma(1.0 / 3) * tgamma(5.0 / 3) /
                                (tgamma(7.0 / 24) * tgamma(23.0 / 24) * tgamma(13.0 / 24) * tgamma(29.0 / 24));
  err.whipple = std::abs(whipple_series - whipple_closed);
  return err;
}

}  // namespace padic_hg
