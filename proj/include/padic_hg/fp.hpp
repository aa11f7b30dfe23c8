#pragma once

#include <cstdint>
#include <vector>

/// Arithmetic in the prime field F_p for odd primes that fit a machine word.
///
/// Residues are canonical representatives in [0, p-1]. Signed inputs are
/// reduced by FieldCtx::reduce before they reach any operation here.

namespace padic_hg {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

inline u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

u64 powmod(u64 base, u64 exp, u64 m);

/// Inverse of a modulo m; throws std::domain_error when gcd(a, m) != 1.
u64 invmod(u64 a, u64 m);

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(u64 n);

/// Distinct prime divisors of n in increasing order.
std::vector<u64> prime_factors(u64 n);

u64 gcd_u64(u64 a, u64 b);

/// Smallest primitive root of the odd prime p.
u64 primitive_root(u64 p);

/// Immutable context for one odd prime p.
///
/// The primitive root is found at construction and the quadratic-residue
/// table is filled for p up to kSquareTableLimit, so a FieldCtx can be
/// shared read-only between threads.
class FieldCtx {
 public:
  static constexpr u64 kSquareTableLimit = u64(1) << 24;

  explicit FieldCtx(u64 p);

  u64 p() const { return p_; }
  u64 primitive_root() const { return g_; }

  u64 reduce(i64 a) const;
  u64 add(u64 a, u64 b) const { return (a + b) % p_; }
  u64 sub(u64 a, u64 b) const { return (a + p_ - b) % p_; }
  u64 mul(u64 a, u64 b) const { return mulmod(a, b, p_); }
  u64 pow(u64 a, u64 e) const { return powmod(a, e, p_); }
  u64 inv(u64 a) const { return invmod(a, p_); }

  /// The quadratic character: 0 at 0, +1 on nonzero squares, -1 otherwise.
  int legendre(u64 a) const;

 private:
  u64 p_;
  u64 g_;
  std::vector<bool> squares_;
};

int legendre_symbol(const FieldCtx& ctx, u64 a);

/// All y in F_p with y^n = t, ascending. Dispatches to the O(p) scan for
/// small p and to the discrete-log route above kFastRootThreshold.
std::vector<u64> nth_roots(const FieldCtx& ctx, u64 n, u64 t);

inline constexpr u64 kFastRootThreshold = 10'000;

std::vector<u64> nth_roots_scan(const FieldCtx& ctx, u64 n, u64 t);
std::vector<u64> nth_roots_dlog(const FieldCtx& ctx, u64 n, u64 t);

/// Baby-step giant-step logarithm of a nonzero t to the base of the context's
/// primitive root.
u64 discrete_log(const FieldCtx& ctx, u64 t);

/// t^((p-1)/d) == 1 with d = gcd(n, p-1). Requires t != 0.
bool nth_power_residue_test(const FieldCtx& ctx, u64 n, u64 t);

/// Constant term (n-1)^(n-1) t / n^n of f_t(y) = y^n - y^(n-1) + c, mod p.
u64 f_t_constant(const FieldCtx& ctx, u64 n, u64 t);

/// Distinct roots of f_t in F_p, ascending, by full scan of the field.
/// Throws std::domain_error when p | n(n-1) and std::invalid_argument for t = 0.
std::vector<u64> f_t_roots(const FieldCtx& ctx, u64 n, u64 t);

}  // namespace padic_hg
