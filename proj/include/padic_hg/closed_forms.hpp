#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "padic_hg/fp.hpp"
#include "padic_hg/hypergeometric.hpp"
#include "padic_hg/rational.hpp"

/// Exact values of nGn and nG~n from character sums over F_p, and the zero
/// classifications that follow from them. These are the reference values
/// every other evaluation route is checked against.

namespace padic_hg {

/// nGn(t) = sum over a^n = t of φ(a)φ(a-1); 0 when t = 0 or t is not an
/// n-th power. Throws std::domain_error when p | n.
std::int64_t nGn_closed(const FieldCtx& ctx, u64 n, u64 t);

/// nGn(t) for every t in [0, p-1] at once (index t), in O(p log n).
std::vector<std::int64_t> nGn_closed_all(const FieldCtx& ctx, u64 n);

/// 1 for odd n, 1 - (p-1) φ((1-n)t) for even n.
std::int64_t beta_n(const FieldCtx& ctx, u64 n, u64 t);

/// nG~n(t) = (β_n(t) - 1)/p + sum over distinct roots a of f_t of φ(a(a-1)).
Rational nGtilde_closed(const FieldCtx& ctx, u64 n, u64 t);

enum class Verdict { zero, nonzero, value };

enum class ZeroReason {
  not_power_residue,
  character_sum_cancels,
  odd_root_count,
  congruence_class,
  even_n_nonvanishing,
  t_is_zero,
};

std::string_view to_string(Verdict verdict);
std::string_view to_string(ZeroReason reason);

/// Why a family value vanishes (or does not), with the data that shows it.
struct ZeroCertificate {
  Verdict verdict = Verdict::zero;
  ZeroReason reason = ZeroReason::t_is_zero;
  std::optional<Rational> value;
  std::vector<u64> roots;  // n-th roots of t, or roots of f_t
  std::vector<int> terms;  // φ(a(a-1)) for each root
};

/// Zero classification of 3G3(t), p > 3, from the residue class of p and
/// the cube-residue status of t.
ZeroCertificate classify_3G3(const FieldCtx& ctx, u64 t);

/// Certificate for any family member; delegates to classify_3G3 for 3G3.
ZeroCertificate classify(const FieldCtx& ctx, Family family, u64 n, u64 t);

enum class CheckOutcome { pass, fail, skip };

std::string_view to_string(CheckOutcome outcome);

struct CorollaryCheck {
  std::string id;
  std::string expected;
  std::string actual;
  CheckOutcome outcome = CheckOutcome::skip;
};

/// Instantiates every zero/value corollary applicable at (p, n) against the
/// closed forms. With t given, t-specific checks run at that t only; without
/// it, checks that range over t run over all of F_p^x.
std::vector<CorollaryCheck> corollary_predicates(const FieldCtx& ctx, u64 n, std::optional<u64> t = std::nullopt);

}  // namespace padic_hg
