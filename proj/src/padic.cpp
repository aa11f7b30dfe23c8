#include "padic_hg/padic.hpp"

#include <algorithm>
#include <sstream>

namespace padic_hg {

capacity_error::capacity_error(u64 required, u64 budget)
    : std::length_error("gamma table needs p^M = " + std::to_string(required) + " entries, budget is " +
                        std::to_string(budget)),
      required_(required),
      budget_(budget) {}

u64 checked_prime_power(u64 p, int exponent) {
  if (exponent < 0) throw std::invalid_argument("checked_prime_power: negative exponent");
  constexpr u64 limit = u64(1) << 63;
  u64 r = 1;
  for (int i = 0; i < exponent; ++i) {
    if (r > (limit - 1) / p) {
      throw std::overflow_error("p^" + std::to_string(exponent) + " exceeds 2^63 for p = " + std::to_string(p));
    }
    r *= p;
  }
  return r;
}

std::vector<std::uint32_t> build_gamma_table(u64 p, int precision, u64 budget) {
  if (precision < 1) throw std::invalid_argument("gamma table precision must be at least 1");
  const u64 n = checked_prime_power(p, precision);
  budget = std::min<u64>(budget, u64(1) << 32);
  if (n > budget) throw capacity_error(n, budget);
  std::vector<std::uint32_t> table(n);
  table[0] = 1;
  u64 cur = 1;
  for (u64 k = 0; k + 1 < n; ++k) {
    // Γ_p(k+1) = -k Γ_p(k) if p ∤ k, else -Γ_p(k)
    const u64 factor = (k % p != 0) ? k : 1;
    cur = mulmod(cur, factor, n);
    cur = cur == 0 ? 0 : n - cur;
    table[k + 1] = static_cast<std::uint32_t>(cur);
  }
  return table;
}

PadicCtx::PadicCtx(u64 p, int precision) : p_(p), precision_(precision), modulus_(0) {
  if (p < 3 || (p & 1) == 0 || !is_prime(p)) {
    throw std::invalid_argument("p must be an odd prime (got " + std::to_string(p) + ")");
  }
  if (precision < 1) throw std::invalid_argument("p-adic precision must be at least 1");
  modulus_ = checked_prime_power(p, precision);
}

PadicCtx PadicCtx::with_gamma_table(u64 p, int precision, u64 budget) {
  PadicCtx ctx(p, precision);
  ctx.gamma_ = std::make_shared<const std::vector<std::uint32_t>>(build_gamma_table(p, precision, budget));
  return ctx;
}

u64 PadicCtx::residue_of(const Rational& q) const {
  const std::int64_t den = q.den();
  if (static_cast<u64>(den) % p_ == 0) {
    throw std::domain_error("parameter " + q.str() + " is not " + std::to_string(p_) + "-integral");
  }
  const i64 m = static_cast<i64>(modulus_);
  i64 num = q.num() % m;
  if (num < 0) num += m;
  return mulmod(static_cast<u64>(num), invmod(static_cast<u64>(den) % modulus_, modulus_), modulus_);
}

u64 PadicCtx::gamma_at(u64 k) const {
  if (!gamma_) throw std::logic_error("PadicCtx has no gamma table");
  return (*gamma_)[k % modulus_];
}

u64 PadicCtx::gamma_p(const Rational& q) const { return gamma_at(residue_of(q)); }

u64 teichmuller(const PadicCtx& ctx, u64 a) {
  if (a % ctx.p() == 0) throw std::domain_error("teichmuller: argument divisible by p");
  u64 x = a % ctx.modulus();
  for (int i = 0; i <= ctx.precision(); ++i) {
    const u64 next = ctx.pow(x, ctx.p());
    if (next == x) return x;
    x = next;
  }
  throw std::logic_error("teichmuller: lift did not stabilise");
}

// --- PadicNumber ------------------------------------------------------------

namespace {

u64 pow_p(u64 p, int e) { return checked_prime_power(p, e); }

void require_same_prime(const PadicNumber& a, const PadicNumber& b) {
  if (a.p() != b.p()) throw std::invalid_argument("p-adic operands over different primes");
}

}  // namespace

PadicNumber::PadicNumber(u64 p) : p_(p), kind_(Kind::exact_zero) {}

PadicNumber PadicNumber::zero_to(u64 p, int absolute_precision) {
  return PadicNumber(p, Kind::zero_at_precision, absolute_precision, 0, 0);
}

PadicNumber PadicNumber::normalized(u64 p, int val, u64 raw, int prec) {
  if (prec < 1) return zero_to(p, val + std::max(prec, 0));
  const u64 mod = pow_p(p, prec);
  raw %= mod;
  if (raw == 0) return zero_to(p, val + prec);
  int k = 0;
  while (raw % p == 0) {
    raw /= p;
    ++k;
  }
  return PadicNumber(p, Kind::nonzero, val + k, raw, prec - k);
}

PadicNumber PadicNumber::from_integer(u64 p, std::int64_t v, int prec) {
  if (v == 0) return PadicNumber(p);
  u64 mag = v < 0 ? static_cast<u64>(-(v + 1)) + 1 : static_cast<u64>(v);
  int k = 0;
  while (mag % p == 0) {
    mag /= p;
    ++k;
  }
  const u64 mod = pow_p(p, prec);
  u64 unit = mag % mod;
  if (v < 0) unit = unit == 0 ? 0 : mod - unit;
  return PadicNumber(p, Kind::nonzero, k, unit, prec);
}

PadicNumber PadicNumber::from_rational(u64 p, const Rational& q, int prec) {
  if (q.num() == 0) return PadicNumber(p);
  return from_integer(p, q.num(), prec) * from_integer(p, q.den(), prec).inverse();
}

int PadicNumber::absolute_precision() const {
  switch (kind_) {
    case Kind::exact_zero: return kInfinitePrecision;
    case Kind::zero_at_precision: return val_;
    case Kind::nonzero: return val_ + prec_;
  }
  return 0;
}

PadicNumber PadicNumber::operator-() const {
  if (kind_ != Kind::nonzero) return *this;
  const u64 mod = pow_p(p_, prec_);
  return PadicNumber(p_, kind_, val_, mod - unit_, prec_);
}

PadicNumber operator+(const PadicNumber& a, const PadicNumber& b) {
  require_same_prime(a, b);
  if (a.is_exact_zero()) return b;
  if (b.is_exact_zero()) return a;
  const int target = std::min(a.absolute_precision(), b.absolute_precision());
  const PadicNumber* parts[2] = {&a, &b};
  int low = target;
  for (const auto* x : parts) {
    if (x->kind_ == PadicNumber::Kind::nonzero) low = std::min(low, x->val_);
  }
  if (low >= target) return PadicNumber::zero_to(a.p_, target);
  // every nonzero part is expressed as p^low * (p^(val-low) unit) mod p^(target-low)
  const int width = target - low;
  const u64 mod = pow_p(a.p_, width);
  u64 sum = 0;
  for (const auto* x : parts) {
    if (x->kind_ != PadicNumber::Kind::nonzero || x->val_ >= target) continue;
    const u64 shifted = mulmod(x->unit_ % mod, pow_p(a.p_, x->val_ - low), mod);
    sum = (sum + shifted) % mod;
  }
  return PadicNumber::normalized(a.p_, low, sum, width);
}

PadicNumber operator-(const PadicNumber& a, const PadicNumber& b) { return a + (-b); }

PadicNumber operator*(const PadicNumber& a, const PadicNumber& b) {
  require_same_prime(a, b);
  using K = PadicNumber::Kind;
  if (a.is_exact_zero() || b.is_exact_zero()) return PadicNumber(a.p_);
  if (a.kind_ == K::zero_at_precision || b.kind_ == K::zero_at_precision) {
    // a zero known to p^A times p^v u is known to vanish to p^(A+v)
    return PadicNumber::zero_to(a.p_, a.val_ + b.val_);
  }
  const int prec = std::min(a.prec_, b.prec_);
  const u64 mod = pow_p(a.p_, prec);
  return PadicNumber(a.p_, K::nonzero, a.val_ + b.val_, mulmod(a.unit_ % mod, b.unit_ % mod, mod), prec);
}

PadicNumber PadicNumber::inverse() const {
  if (kind_ != Kind::nonzero) throw std::domain_error("inverse of a p-adic zero");
  const u64 mod = pow_p(p_, prec_);
  return PadicNumber(p_, Kind::nonzero, -val_, invmod(unit_, mod), prec_);
}

PadicNumber PadicNumber::pow(std::int64_t e) const {
  if (kind_ != Kind::nonzero) {
    if (e <= 0) throw std::domain_error("p-adic zero raised to a non-positive power");
    if (kind_ == Kind::exact_zero) return *this;
    return zero_to(p_, static_cast<int>(val_ * e));
  }
  if (e < 0) return inverse().pow(-e);
  const u64 mod = pow_p(p_, prec_);
  return PadicNumber(p_, Kind::nonzero, static_cast<int>(val_ * e), powmod(unit_, static_cast<u64>(e), mod), prec_);
}

u64 PadicNumber::residue(int n) const {
  if (absolute_precision() < n) {
    throw std::domain_error("residue mod p^" + std::to_string(n) + " requested beyond known precision " +
                            std::to_string(absolute_precision()));
  }
  if (kind_ != Kind::nonzero) return 0;
  if (val_ < 0) throw std::domain_error("residue of a non-integral p-adic number");
  if (val_ >= n) return 0;
  const u64 mod = pow_p(p_, n);
  return mulmod(pow_p(p_, val_), unit_ % mod, mod);
}

std::string PadicNumber::str() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::exact_zero: os << "0 (exact)"; break;
    case Kind::zero_at_precision: os << "0 + O(" << p_ << "^" << val_ << ")"; break;
    case Kind::nonzero:
      os << unit_ << "*" << p_ << "^" << val_ << " + O(" << p_ << "^" << absolute_precision() << ")";
      break;
  }
  return os.str();
}

int agreement_precision(const PadicNumber& a, const PadicNumber& b) {
  const PadicNumber d = a - b;
  if (d.is_exact_zero()) return PadicNumber::kInfinitePrecision;
  return d.valuation();
}

}  // namespace padic_hg
