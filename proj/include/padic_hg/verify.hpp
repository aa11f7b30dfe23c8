#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "padic_hg/char_sums.hpp"
#include "padic_hg/closed_forms.hpp"
#include "padic_hg/fp.hpp"
#include "padic_hg/hypergeometric.hpp"
#include "padic_hg/padic.hpp"

namespace padic_hg {

/// Which routes an evaluation runs.
enum class EvalMethod { definition, closed, both, oracle };

std::string_view to_string(EvalMethod method);
EvalMethod parse_eval_method(std::string_view text);

inline constexpr u64 kDefaultOracleCap = 150;

/// Everything needed to evaluate one family at one prime: the field, the
/// Γ_p table (definition routes) and the character table (oracle route).
/// Immutable once built; run() may be called from several threads.
class Evaluator {
 public:
  Evaluator(u64 p, Family family, EvalMethod method, int precision = 2, u64 table_budget = kDefaultTableBudget,
            u64 oracle_cap = kDefaultOracleCap);

  u64 p() const { return field_.p(); }
  Family family() const { return family_; }
  EvalMethod method() const { return method_; }
  int precision() const { return precision_; }
  const FieldCtx& field() const { return field_; }

  /// Throws std::domain_error naming the violated hypothesis when the family
  /// is undefined at (p, n) or t is outside its domain.
  void check_hypotheses(int n, u64 t) const;

  /// Evaluates at (n, t) with t a residue mod p; fills agreement flags for
  /// the routes that were run.
  EvalRecord run(int n, u64 t) const;

 private:
  Family family_;
  EvalMethod method_;
  int precision_;
  FieldCtx field_;
  std::optional<PadicCtx> padic_;
  std::shared_ptr<const CharTable> chars_;
};

/// Residue of a rational t mod p; nullopt when p divides the denominator.
std::optional<u64> reduce_rational(const Rational& t, u64 p);

/// Command line that reproduces one evaluation.
std::string repro_command(const EvalRecord& rec, EvalMethod method, int precision);

struct VerifyReport {
  std::string suite;
  std::size_t checks = 0;
  std::vector<std::string> failures;
  double max_error = 0.0;  // charsum suite only
  std::vector<std::string> notes;

  bool ok() const { return failures.empty(); }
};

/// Suites: thm-G, thm-Gt, cor-all, charsum, gamma, floors, valuation.
std::vector<std::string> verify_suites();

/// Runs one suite over the primes up to pmax. Throws std::invalid_argument
/// on an unknown suite name.
VerifyReport run_verify(std::string_view suite, u64 pmax);

/// Primes in [lo, hi] in increasing order.
std::vector<u64> primes_between(u64 lo, u64 hi);

}  // namespace padic_hg
