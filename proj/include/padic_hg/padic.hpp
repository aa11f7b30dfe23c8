#pragma once

#include <cstdint>
#include <limits>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "padic_hg/fp.hpp"
#include "padic_hg/rational.hpp"

namespace padic_hg {

/// Default ceiling on the number of Γ_p table entries (p^M).
inline constexpr u64 kDefaultTableBudget = u64(1) << 31;

/// Raised when a requested p^M table would exceed the configured budget.
class capacity_error : public std::length_error {
 public:
  capacity_error(u64 required, u64 budget);
  u64 required() const { return required_; }
  u64 budget() const { return budget_; }

 private:
  u64 required_;
  u64 budget_;
};

/// p^M, or throws std::overflow_error unless p^M < 2^63.
u64 checked_prime_power(u64 p, int exponent);

/// Morita Γ_p(k) mod p^M for k = 0 .. p^M - 1, built by the functional
/// equation Γ_p(k+1) = -k Γ_p(k) (p ∤ k), -Γ_p(k) (p | k).
std::vector<std::uint32_t> build_gamma_table(u64 p, int precision, u64 budget = kDefaultTableBudget);

/// Working context for Z_p modulo p^M. Optionally owns a Γ_p table, which
/// is shared (not copied) between copies of the context.
class PadicCtx {
 public:
  /// Arithmetic only; gamma_p() throws std::logic_error on such a context.
  PadicCtx(u64 p, int precision);

  static PadicCtx with_gamma_table(u64 p, int precision, u64 budget = kDefaultTableBudget);

  u64 p() const { return p_; }
  int precision() const { return precision_; }
  u64 modulus() const { return modulus_; }
  bool has_gamma_table() const { return static_cast<bool>(gamma_); }

  u64 mul(u64 a, u64 b) const { return mulmod(a, b, modulus_); }
  u64 pow(u64 a, u64 e) const { return powmod(a, e, modulus_); }
  u64 inv(u64 a) const { return invmod(a, modulus_); }
  u64 neg(u64 a) const { return a == 0 ? 0 : modulus_ - a; }

  /// num/den mod p^M; throws std::domain_error when p | den.
  u64 residue_of(const Rational& q) const;

  /// Γ_p(k) for an integer 0 <= k < p^M.
  u64 gamma_at(u64 k) const;

  /// Γ_p(q) mod p^M, by lookup at the residue of q mod p^M.
  u64 gamma_p(const Rational& q) const;

 private:
  u64 p_;
  int precision_;
  u64 modulus_;
  std::shared_ptr<const std::vector<std::uint32_t>> gamma_;
};

/// Teichmüller representative ω(a) mod p^M for 1 <= a <= p-1.
u64 teichmuller(const PadicCtx& ctx, u64 a);

/// An element p^val * unit of Q_p known to a finite number of p-adic digits.
///
/// Three states are kept apart: an exact zero (e.g. the value at t = 0),
/// a value only known to be divisible by p^N ("zero at precision N"), and
/// a nonzero value whose unit is known modulo p^prec. Relative precision
/// never exceeds the cap it was created with.
class PadicNumber {
 public:
  enum class Kind { exact_zero, zero_at_precision, nonzero };

  static constexpr int kInfinitePrecision = std::numeric_limits<int>::max();

  /// Exact zero.
  explicit PadicNumber(u64 p);

  /// p^val * raw, with raw taken modulo p^prec and any factors of p in raw
  /// moved into the valuation (one digit of relative precision lost per factor).
  static PadicNumber normalized(u64 p, int val, u64 raw, int prec);

  static PadicNumber zero_to(u64 p, int absolute_precision);
  static PadicNumber from_integer(u64 p, std::int64_t v, int prec);
  static PadicNumber from_rational(u64 p, const Rational& q, int prec);

  u64 p() const { return p_; }
  Kind kind() const { return kind_; }
  bool is_exact_zero() const { return kind_ == Kind::exact_zero; }
  bool is_zero() const { return kind_ != Kind::nonzero; }

  /// Valuation for nonzero numbers; for zero-at-precision the guaranteed
  /// divisibility exponent.
  int valuation() const { return val_; }
  u64 unit() const { return unit_; }
  int relative_precision() const { return prec_; }
  int absolute_precision() const;

  PadicNumber operator-() const;
  friend PadicNumber operator+(const PadicNumber& a, const PadicNumber& b);
  friend PadicNumber operator-(const PadicNumber& a, const PadicNumber& b);
  friend PadicNumber operator*(const PadicNumber& a, const PadicNumber& b);

  PadicNumber inverse() const;
  PadicNumber pow(std::int64_t e) const;

  /// Residue mod p^n of a p-integral value, requires absolute_precision() >= n.
  u64 residue(int n) const;

  std::string str() const;

 private:
  PadicNumber(u64 p, Kind kind, int val, u64 unit, int prec) : p_(p), kind_(kind), val_(val), unit_(unit), prec_(prec) {}

  u64 p_;
  Kind kind_;
  int val_ = 0;
  u64 unit_ = 0;
  int prec_ = 0;
};

/// Largest N with a ≡ b (mod p^N) established by the tracked precision
/// (kInfinitePrecision when both are exact zeros).
int agreement_precision(const PadicNumber& a, const PadicNumber& b);

}  // namespace padic_hg
