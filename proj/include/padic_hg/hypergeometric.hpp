#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "padic_hg/padic.hpp"
#include "padic_hg/rational.hpp"

namespace padic_hg {

enum class Family { G, Gtilde, custom };

std::string_view to_string(Family family);

/// Accepts "G" and "Gt" (also "Gtilde").
Family parse_family(std::string_view text);

/// Upper parameters a_1..a_n over lower parameters b_1..b_n.
struct HGParams {
  std::vector<Rational> upper;
  std::vector<Rational> lower;

  std::size_t size() const { return upper.size(); }

  /// Every entry replaced by its fractional part.
  HGParams normalized() const;
};

/// Parameter lists for nGn (upper (2k-1)/(2n)) and nG~n (upper 1/2 then
/// (2k-1)/(2(n-1))); both have lower parameters (k-1)/n. Requires n >= 3.
HGParams family_params(Family kind, int n);

/// Power of (-p) carried by term a of the defining sum:
/// sum over k of -floor(<a_k> - a/(p-1)) - floor(<-b_k> + a/(p-1)).
int term_exponent(const HGParams& params, u64 p, u64 a);

/// Smallest term exponent over a = 0 .. p-2.
int min_term_exponent(const HGParams& params, u64 p);

/// Term a of the defining sum, without the leading -1/(p-1):
/// (-1)^(an) ω̄^a(t) (-p)^e_a ∏ Γ_p ratios. Requires t != 0 mod p.
PadicNumber mccarthy_term(const PadicCtx& ctx, const HGParams& params, u64 t, u64 a);

/// McCarthy's nGn[a; b | t] evaluated from its definition as a sum of
/// Γ_p quotients. Needs a context with a gamma table and p >= 5. The value
/// at t = 0 is an exact zero.
PadicNumber mccarthy_g(const PadicCtx& ctx, const HGParams& params, u64 t);

enum class Method { definition, closed_form, charsum_oracle };

std::string_view to_string(Method method);

/// One evaluation of a family member at (p, n, t). Fields are filled by
/// whichever routes were run.
struct EvalRecord {
  u64 p = 0;
  int n = 0;
  Family family = Family::G;
  u64 t = 0;
  int precision = 0;  // digits m certified for the definition-side value

  std::optional<PadicNumber> padic;         // definition side
  std::optional<Rational> reconstructed;    // exact value recovered from padic
  std::optional<Rational> closed;           // closed-form value
  std::optional<double> oracle_error;       // |char-sum quotient - expected|
  double oracle_tolerance = 0.0;

  std::optional<bool> definition_agrees;    // padic ≡ closed (mod p^precision)
  std::optional<bool> oracle_agrees;
  std::vector<Method> methods;

  bool unreconstructed() const { return padic.has_value() && !reconstructed.has_value(); }
  bool failed() const;

  /// Closed form when present, otherwise the reconstructed value.
  std::optional<Rational> value() const;
};

/// Internal p-adic precision needed to certify m digits of a family value.
int internal_precision(Family family, int m);

/// nGn(t) from the definition. Uses m = ctx.precision(); the exact integer is
/// recovered from the bound |nGn(t)| <= gcd(n, p-1) when p^m exceeds twice it.
EvalRecord eval_nGn(const PadicCtx& ctx, int n, u64 t);
EvalRecord eval_nGn(u64 p, int n, u64 t, int m = 2);

/// nG~n(t) from the definition. Uses m = ctx.precision() - 1, since terms
/// reach valuation -1. Requires 1 <= t < p and p ∤ n(n-1).
EvalRecord eval_nGtilde(const PadicCtx& ctx, int n, u64 t);
EvalRecord eval_nGtilde(u64 p, int n, u64 t, int m = 2);

}  // namespace padic_hg
