#include "padic_hg/hypergeometric.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace padic_hg {

std::string_view to_string(Family family) {
  switch (family) {
    case Family::G: return "G";
    case Family::Gtilde: return "Gt";
    case Family::custom: return "custom";
  }
  return "?";
}

Family parse_family(std::string_view text) {
  if (text == "G") return Family::G;
  if (text == "Gt" || text == "Gtilde") return Family::Gtilde;
  throw std::invalid_argument("unknown family '" + std::string(text) + "' (expected G or Gt)");
}

std::string_view to_string(Method method) {
  switch (method) {
    case Method::definition: return "definition";
    case Method::closed_form: return "closed";
    case Method::charsum_oracle: return "oracle";
  }
  return "?";
}

HGParams HGParams::normalized() const {
  HGParams out;
  for (const auto& a : upper) out.upper.push_back(frac(a));
  for (const auto& b : lower) out.lower.push_back(frac(b));
  return out;
}

HGParams family_params(Family kind, int n) {
  if (n < 3) throw std::invalid_argument("family parameters need n >= 3");
  HGParams params;
  for (int k = 1; k <= n; ++k) params.lower.emplace_back(k - 1, n);
  switch (kind) {
    case Family::G:
      for (int k = 1; k <= n; ++k) params.upper.emplace_back(2 * k - 1, 2 * n);
      break;
    case Family::Gtilde:
      params.upper.emplace_back(1, 2);
      for (int k = 1; k <= n - 1; ++k) params.upper.emplace_back(2 * k - 1, 2 * (n - 1));
      break;
    case Family::custom: throw std::invalid_argument("family_params: custom has no fixed parameters");
  }
  return params;
}

namespace {

void check_shape(const HGParams& params) {
  if (params.upper.size() != params.lower.size() || params.upper.empty()) {
    throw std::invalid_argument("hypergeometric parameters need two non-empty lists of equal length");
  }
}

void check_integral(const HGParams& params, u64 p) {
  auto bad = [p](const Rational& q) { return static_cast<u64>(q.den()) % p == 0; };
  if (std::any_of(params.upper.begin(), params.upper.end(), bad) ||
      std::any_of(params.lower.begin(), params.lower.end(), bad)) {
    throw std::domain_error("a parameter denominator is divisible by p = " + std::to_string(p));
  }
}

}  // namespace

int term_exponent(const HGParams& params, u64 p, u64 a) {
  check_shape(params);
  const Rational x(static_cast<std::int64_t>(a), static_cast<std::int64_t>(p - 1));
  std::int64_t e = 0;
  for (std::size_t k = 0; k < params.size(); ++k) {
    e -= floor(frac(params.upper[k]) - x);
    e -= floor(frac(-params.lower[k]) + x);
  }
  return static_cast<int>(e);
}

int min_term_exponent(const HGParams& params, u64 p) {
  int lowest = term_exponent(params, p, 0);
  for (u64 a = 1; a + 1 < p; ++a) lowest = std::min(lowest, term_exponent(params, p, a));
  return lowest;
}

PadicNumber mccarthy_term(const PadicCtx& ctx, const HGParams& params, u64 t, u64 a) {
  check_shape(params);
  const u64 p = ctx.p();
  if (t % p == 0) throw std::domain_error("mccarthy_term: t must be nonzero mod p");
  const Rational x(static_cast<std::int64_t>(a), static_cast<std::int64_t>(p - 1));
  const auto n = static_cast<u64>(params.size());

  u64 numer = 1, denom = 1;
  std::int64_t e = 0;
  for (std::size_t k = 0; k < params.size(); ++k) {
    const Rational up = frac(params.upper[k]);
    const Rational down = frac(-params.lower[k]);
    const FracFloor shifted_up = frac_floor(up - x);
    const FracFloor shifted_down = frac_floor(down + x);
    e -= shifted_up.floor + shifted_down.floor;
    numer = ctx.mul(numer, ctx.mul(ctx.gamma_p(shifted_up.frac), ctx.gamma_p(shifted_down.frac)));
    denom = ctx.mul(denom, ctx.mul(ctx.gamma_p(up), ctx.gamma_p(down)));
  }
  u64 unit = ctx.mul(numer, ctx.inv(denom));

  // ω̄^a(t) = ω(t)^((p-1-a) mod (p-1))
  const u64 omega = teichmuller(ctx, t % p);
  unit = ctx.mul(unit, ctx.pow(omega, (p - 1 - a % (p - 1)) % (p - 1)));

  // (-1)^(an) from the sum, (-1)^e from (-p)^e
  const bool negative = (((a % 2) * (n % 2)) + static_cast<u64>(e & 1)) % 2 == 1;
  if (negative) unit = ctx.neg(unit);
  return PadicNumber::normalized(p, static_cast<int>(e), unit, ctx.precision());
}

PadicNumber mccarthy_g(const PadicCtx& ctx, const HGParams& params, u64 t) {
  check_shape(params);
  const u64 p = ctx.p();
  if (p < 5) throw std::domain_error("definition-side evaluation needs p >= 5");
  check_integral(params, p);
  if (t % p == 0) return PadicNumber(p);

  PadicNumber sum(p);
  for (u64 a = 0; a + 1 < p; ++a) sum = sum + mccarthy_term(ctx, params, t, a);
  const auto scale = PadicNumber::from_rational(p, Rational(-1, static_cast<std::int64_t>(p - 1)), ctx.precision());
  return sum * scale;
}

bool EvalRecord::failed() const {
  return (definition_agrees.has_value() && !*definition_agrees) || (oracle_agrees.has_value() && !*oracle_agrees);
}

std::optional<Rational> EvalRecord::value() const {
  if (closed) return closed;
  return reconstructed;
}

int internal_precision(Family family, int m) {
  if (m < 1) throw std::invalid_argument("precision must be at least 1");
  return family == Family::Gtilde ? m + 1 : m;
}

namespace {

int legendre_direct(u64 p, std::int64_t a) {
  const i64 r = ((a % static_cast<i64>(p)) + static_cast<i64>(p)) % static_cast<i64>(p);
  if (r == 0) return 0;
  return powmod(static_cast<u64>(r), (p - 1) / 2, p) == 1 ? 1 : -1;
}

// Symmetric representative of an integer value v with |v| <= bound, if
// the residue mod p^A pins it down uniquely.
std::optional<std::int64_t> recover_bounded_integer(const PadicNumber& x, u64 bound, int cap) {
  if (x.is_exact_zero()) return 0;
  if (!x.is_zero() && x.valuation() < 0) return std::nullopt;
  const int digits = std::min(x.absolute_precision(), cap);
  if (digits < 1) return std::nullopt;
  const u64 mod = checked_prime_power(x.p(), digits);
  if (mod <= 2 * bound) return std::nullopt;
  const u64 r = x.residue(digits);
  const std::int64_t v = r > mod / 2 ? -static_cast<std::int64_t>(mod - r) : static_cast<std::int64_t>(r);
  if (static_cast<u64>(v < 0 ? -v : v) > bound) return std::nullopt;
  return v;
}

void check_family_prime(u64 p, int n, bool tilde) {
  if (n < 3) throw std::invalid_argument("n must be at least 3");
  if (p < 5) throw std::domain_error("definition-side evaluation needs p >= 5");
  if (static_cast<u64>(n) % p == 0) throw std::domain_error("p divides n: nGn is undefined for this prime");
  if (tilde && static_cast<u64>(n - 1) % p == 0) {
    throw std::domain_error("p divides n(n-1): nG~n is undefined for this prime");
  }
}

void check_valuation_floor(const HGParams& params, u64 p, int floor_value, std::string_view name, int n) {
  const int lowest = min_term_exponent(params, p);
  if (lowest < floor_value) {
    throw std::logic_error(std::string(name) + " at p=" + std::to_string(p) + ", n=" + std::to_string(n) +
                           ": term exponent " + std::to_string(lowest) + " below expected floor " +
                           std::to_string(floor_value));
  }
}

}  // namespace

EvalRecord eval_nGn(const PadicCtx& ctx, int n, u64 t) {
  const u64 p = ctx.p();
  check_family_prime(p, n, false);
  if (t >= p) throw std::invalid_argument("t must be a residue in [0, p-1]");
  const HGParams params = family_params(Family::G, n);
  check_valuation_floor(params, p, 0, "nGn", n);

  EvalRecord rec;
  rec.p = p;
  rec.n = n;
  rec.family = Family::G;
  rec.t = t;
  rec.precision = ctx.precision();
  rec.methods.push_back(Method::definition);
  rec.padic = mccarthy_g(ctx, params, t);

  const u64 d = std::gcd(static_cast<u64>(n), p - 1);
  if (auto v = recover_bounded_integer(*rec.padic, d, rec.precision)) rec.reconstructed = Rational(*v);
  return rec;
}

EvalRecord eval_nGn(u64 p, int n, u64 t, int m) {
  return eval_nGn(PadicCtx::with_gamma_table(p, internal_precision(Family::G, m)), n, t);
}

EvalRecord eval_nGtilde(const PadicCtx& ctx, int n, u64 t) {
  const u64 p = ctx.p();
  check_family_prime(p, n, true);
  if (t == 0 || t >= p) throw std::invalid_argument("nG~n needs t in [1, p-1]");
  if (ctx.precision() < 2) throw std::invalid_argument("nG~n needs internal precision >= 2");
  const HGParams params = family_params(Family::Gtilde, n);
  check_valuation_floor(params, p, -1, "nG~n", n);

  EvalRecord rec;
  rec.p = p;
  rec.n = n;
  rec.family = Family::Gtilde;
  rec.t = t;
  rec.precision = ctx.precision() - 1;
  rec.methods.push_back(Method::definition);
  rec.padic = mccarthy_g(ctx, params, t);

  // value = S - (p-1) φ((1-n)t) / p for even n, S for odd n, with S an
  // integer sum of at most n signs
  const auto bound = static_cast<u64>(n);
  if (n % 2 == 1) {
    if (auto s = recover_bounded_integer(*rec.padic, bound, rec.precision)) rec.reconstructed = Rational(*s);
  } else {
    const int phi = legendre_direct(p, (1 - static_cast<std::int64_t>(n)) * static_cast<std::int64_t>(t));
    const Rational correction(static_cast<std::int64_t>(p - 1) * phi, static_cast<std::int64_t>(p));
    const PadicNumber shifted = *rec.padic + PadicNumber::from_rational(p, correction, ctx.precision());
    if (auto s = recover_bounded_integer(shifted, bound, rec.precision)) {
      rec.reconstructed = Rational(*s) - correction;
    }
  }
  return rec;
}

EvalRecord eval_nGtilde(u64 p, int n, u64 t, int m) {
  return eval_nGtilde(PadicCtx::with_gamma_table(p, internal_precision(Family::Gtilde, m)), n, t);
}

}  // namespace padic_hg
