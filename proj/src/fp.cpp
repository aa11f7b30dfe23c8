#include "padic_hg/fp.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace padic_hg {

u64 powmod(u64 base, u64 exp, u64 m) {
  if (m == 1) return 0;
  u64 result = 1;
  base %= m;
  while (exp) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

u64 invmod(u64 a, u64 m) {
  // extended Euclid on signed 128-bit to stay clear of overflow near 2^63
  __int128 r0 = static_cast<__int128>(m), r1 = static_cast<__int128>(a % m);
  __int128 s0 = 0, s1 = 1;
  while (r1 != 0) {
    __int128 q = r0 / r1;
    __int128 tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = s0 - q * s1;
    s0 = s1;
    s1 = tmp;
  }
  if (r0 != 1) throw std::domain_error("invmod: " + std::to_string(a) + " is not invertible mod " + std::to_string(m));
  if (s0 < 0) s0 += m;
  return static_cast<u64>(s0);
}

u64 gcd_u64(u64 a, u64 b) { return std::gcd(a, b); }

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // these twelve bases are a proven witness set below 3.3e24
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<u64> prime_factors(u64 n) {
  std::vector<u64> out;
  for (u64 q = 2; q * q <= n; q += (q == 2 ? 1 : 2)) {
    if (n % q == 0) {
      out.push_back(q);
      while (n % q == 0) n /= q;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

u64 primitive_root(u64 p) {
  if (p < 3 || !is_prime(p)) throw std::invalid_argument("primitive_root: p must be an odd prime");
  const auto factors = prime_factors(p - 1);
  for (u64 g = 2; g < p; ++g) {
    bool generates = std::all_of(factors.begin(), factors.end(),
                                 [&](u64 q) { return powmod(g, (p - 1) / q, p) != 1; });
    if (generates) return g;
  }
  throw std::logic_error("primitive_root: no generator found");
}

FieldCtx::FieldCtx(u64 p) : p_(p), g_(0) {
  if (p < 3 || (p & 1) == 0 || !is_prime(p)) {
    throw std::invalid_argument("p must be an odd prime (got " + std::to_string(p) + ")");
  }
  g_ = padic_hg::primitive_root(p);
  if (p <= kSquareTableLimit) {
    squares_.assign(p, false);
    for (u64 y = 1; y <= p / 2; ++y) squares_[mulmod(y, y, p)] = true;
  }
}

u64 FieldCtx::reduce(i64 a) const {
  i64 r = a % static_cast<i64>(p_);
  return static_cast<u64>(r < 0 ? r + static_cast<i64>(p_) : r);
}

int FieldCtx::legendre(u64 a) const {
  a %= p_;
  if (a == 0) return 0;
  if (!squares_.empty()) return squares_[a] ? 1 : -1;
  return powmod(a, (p_ - 1) / 2, p_) == 1 ? 1 : -1;
}

int legendre_symbol(const FieldCtx& ctx, u64 a) { return ctx.legendre(a); }

std::vector<u64> nth_roots_scan(const FieldCtx& ctx, u64 n, u64 t) {
  if (n == 0) throw std::invalid_argument("nth_roots: n must be positive");
  t %= ctx.p();
  std::vector<u64> roots;
  for (u64 y = 0; y < ctx.p(); ++y) {
    if (ctx.pow(y, n) == t) roots.push_back(y);
  }
  return roots;
}

u64 discrete_log(const FieldCtx& ctx, u64 t) {
  const u64 p = ctx.p();
  t %= p;
  if (t == 0) throw std::domain_error("discrete_log: zero has no logarithm");
  const u64 order = p - 1;
  const u64 step = static_cast<u64>(std::ceil(std::sqrt(static_cast<double>(order))));
  std::unordered_map<u64, u64> baby;
  baby.reserve(step * 2);
  u64 x = 1;
  for (u64 j = 0; j < step; ++j) {
    baby.emplace(x, j);
    x = ctx.mul(x, ctx.primitive_root());
  }
  const u64 giant = ctx.inv(ctx.pow(ctx.primitive_root(), step));
  u64 y = t;
  for (u64 i = 0; i <= step; ++i) {
    if (auto it = baby.find(y); it != baby.end()) return (i * step + it->second) % order;
    y = ctx.mul(y, giant);
  }
  throw std::logic_error("discrete_log: generator does not reach t");
}

std::vector<u64> nth_roots_dlog(const FieldCtx& ctx, u64 n, u64 t) {
  if (n == 0) throw std::invalid_argument("nth_roots: n must be positive");
  const u64 p = ctx.p();
  t %= p;
  if (t == 0) return {0};
  const u64 order = p - 1;
  const u64 d = std::gcd(n, order);
  const u64 k = discrete_log(ctx, t);
  if (k % d != 0) return {};
  // n y == k (mod order) reduces to (n/d) y == k/d (mod order/d)
  const u64 sub = order / d;
  const u64 base = sub == 1 ? 0 : mulmod(k / d, invmod((n / d) % sub, sub), sub);
  std::vector<u64> roots;
  roots.reserve(d);
  const u64 zeta = ctx.pow(ctx.primitive_root(), sub);
  u64 y = ctx.pow(ctx.primitive_root(), base);
  for (u64 i = 0; i < d; ++i) {
    roots.push_back(y);
    y = ctx.mul(y, zeta);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::vector<u64> nth_roots(const FieldCtx& ctx, u64 n, u64 t) {
  return ctx.p() > kFastRootThreshold ? nth_roots_dlog(ctx, n, t) : nth_roots_scan(ctx, n, t);
}

bool nth_power_residue_test(const FieldCtx& ctx, u64 n, u64 t) {
  if (n == 0) throw std::invalid_argument("nth_power_residue_test: n must be positive");
  t %= ctx.p();
  if (t == 0) throw std::invalid_argument("nth_power_residue_test: t must be a unit");
  const u64 d = std::gcd(n, ctx.p() - 1);
  return ctx.pow(t, (ctx.p() - 1) / d) == 1;
}

u64 f_t_constant(const FieldCtx& ctx, u64 n, u64 t) {
  const u64 p = ctx.p();
  if ((n % p) == 0 || ((n - 1) % p) == 0) {
    throw std::domain_error("p divides n(n-1): nG~n is undefined for p = " + std::to_string(p));
  }
  const u64 top = ctx.pow((n - 1) % p, n - 1);
  const u64 bottom = ctx.pow(n % p, n);
  return ctx.mul(ctx.mul(top, t % p), ctx.inv(bottom));
}

std::vector<u64> f_t_roots(const FieldCtx& ctx, u64 n, u64 t) {
  if (n < 3) throw std::invalid_argument("f_t_roots: n must be at least 3");
  if (t % ctx.p() == 0) throw std::invalid_argument("f_t_roots: t must be nonzero");
  const u64 c = f_t_constant(ctx, n, t);
  std::vector<u64> roots;
  for (u64 y = 0; y < ctx.p(); ++y) {
    // y^(n-1) (y - 1) + c
    const u64 v = ctx.add(ctx.mul(ctx.pow(y, n - 1), ctx.sub(y, 1)), c);
    if (v == 0) roots.push_back(y);
  }
  return roots;
}

}  // namespace padic_hg
