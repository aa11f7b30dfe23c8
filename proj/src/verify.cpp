#include "padic_hg/verify.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

namespace padic_hg {

std::string_view to_string(EvalMethod method) {
  switch (method) {
    case EvalMethod::definition: return "definition";
    case EvalMethod::closed: return "closed";
    case EvalMethod::both: return "both";
    case EvalMethod::oracle: return "oracle";
  }
  return "?";
}

EvalMethod parse_eval_method(std::string_view text) {
  if (text == "definition") return EvalMethod::definition;
  if (text == "closed") return EvalMethod::closed;
  if (text == "both") return EvalMethod::both;
  if (text == "oracle") return EvalMethod::oracle;
  throw std::invalid_argument("unknown method '" + std::string(text) + "' (expected definition, closed, both, oracle)");
}

namespace {

bool uses_definition(EvalMethod m) { return m == EvalMethod::definition || m == EvalMethod::both; }

}  // namespace

Evaluator::Evaluator(u64 p, Family family, EvalMethod method, int precision, u64 table_budget, u64 oracle_cap)
    : family_(family), method_(method), precision_(precision), field_(p) {
  if (family != Family::G && family != Family::Gtilde) throw std::invalid_argument("Evaluator: family must be G or Gt");
  if (precision < 1) throw std::invalid_argument("precision must be at least 1");
  if (uses_definition(method)) {
    if (p < 5) throw std::domain_error("definition-side evaluation needs p >= 5 (got p = " + std::to_string(p) + ")");
    padic_ = PadicCtx::with_gamma_table(p, internal_precision(family, precision), table_budget);
  }
  if (method == EvalMethod::oracle) {
    if (p > oracle_cap) {
      throw std::domain_error("oracle method is capped at p <= " + std::to_string(oracle_cap) + " (got p = " +
                              std::to_string(p) + ")");
    }
    chars_ = std::make_shared<const CharTable>(field_);
  }
}

void Evaluator::check_hypotheses(int n, u64 t) const {
  const u64 p = field_.p();
  if (n < 3) throw std::domain_error("n must be at least 3");
  if (t >= p) throw std::domain_error("t must be a residue in [0, p-1]");
  if (static_cast<u64>(n) % p == 0) {
    throw std::domain_error(family_ == Family::G ? "p divides n: nGn is undefined for this prime"
                                                 : "p divides n(n-1): nG~n is undefined for this prime");
  }
  if (family_ == Family::Gtilde) {
    if (static_cast<u64>(n - 1) % p == 0) throw std::domain_error("p divides n(n-1): nG~n is undefined for this prime");
    if (t == 0) throw std::domain_error("nG~n is only defined for t != 0");
  }
}

EvalRecord Evaluator::run(int n, u64 t) const {
  check_hypotheses(n, t);
  const u64 p = field_.p();
  EvalRecord rec;
  if (uses_definition(method_)) {
    rec = family_ == Family::G ? eval_nGn(*padic_, n, t) : eval_nGtilde(*padic_, n, t);
  } else {
    rec.p = p;
    rec.n = n;
    rec.family = family_;
    rec.t = t;
    rec.precision = precision_;
  }
  if (method_ == EvalMethod::definition) return rec;

  rec.closed = family_ == Family::G ? Rational(nGn_closed(field_, static_cast<u64>(n), t))
                                    : nGtilde_closed(field_, static_cast<u64>(n), t);
  rec.methods.push_back(Method::closed_form);

  if (method_ == EvalMethod::both) {
    const auto closed_padic = PadicNumber::from_rational(p, *rec.closed, padic_->precision());
    const bool padic_ok = agreement_precision(*rec.padic, closed_padic) >= rec.precision;
    const bool exact_ok = !rec.reconstructed || *rec.reconstructed == *rec.closed;
    rec.definition_agrees = padic_ok && exact_ok;
  }

  if (method_ == EvalMethod::oracle && t != 0) {
    const OracleComparison cmp = family_ == Family::G
                                     ? compare_B_n(*chars_, static_cast<u64>(n), t, rec.closed->num())
                                     : compare_A_n(*chars_, static_cast<u64>(n), t, *rec.closed);
    rec.oracle_error = cmp.error;
    rec.oracle_tolerance = cmp.tolerance;
    rec.oracle_agrees = cmp.pass;
    rec.methods.push_back(Method::charsum_oracle);
  }
  return rec;
}

std::optional<u64> reduce_rational(const Rational& t, u64 p) {
  const auto den = static_cast<u64>(t.den());
  if (den % p == 0) return std::nullopt;
  const auto pp = static_cast<std::int64_t>(p);
  std::int64_t num = t.num() % pp;
  if (num < 0) num += pp;
  return mulmod(static_cast<u64>(num), invmod(den % p, p), p);
}

std::string repro_command(const EvalRecord& rec, EvalMethod method, int precision) {
  std::ostringstream os;
  os << "padic-hg eval --family " << to_string(rec.family) << " --p " << rec.p << " --n " << rec.n << " --t " << rec.t
     << " --method " << to_string(method) << " --precision " << precision;
  return os.str();
}

std::vector<u64> primes_between(u64 lo, u64 hi) {
  std::vector<u64> out;
  for (u64 q = std::max<u64>(lo, 2); q <= hi; ++q) {
    if (is_prime(q)) out.push_back(q);
  }
  return out;
}

std::vector<std::string> verify_suites() { return {"thm-G", "thm-Gt", "cor-all", "charsum", "gamma", "floors", "valuation"}; }

// --- suites -----------------------------------------------------------------

namespace {

std::string describe(const EvalRecord& rec) {
  std::ostringstream os;
  os << "p=" << rec.p << " n=" << rec.n << " t=" << rec.t << " definition="
     << (rec.padic ? rec.padic->str() : "-") << " reconstructed="
     << (rec.reconstructed ? rec.reconstructed->str() : "-") << " closed=" << (rec.closed ? rec.closed->str() : "-");
  return os.str();
}

VerifyReport theorem_suite(Family family, u64 pmax) {
  VerifyReport rep;
  rep.suite = family == Family::G ? "thm-G" : "thm-Gt";
  constexpr int precision = 2;
  for (u64 p : primes_between(5, pmax)) {
    const Evaluator ev(p, family, EvalMethod::both, precision);
    for (int n = 3; n <= 6; ++n) {
      if (static_cast<u64>(n) % p == 0) continue;
      if (family == Family::Gtilde && static_cast<u64>(n - 1) % p == 0) continue;
      for (u64 t = family == Family::G ? 0 : 1; t < p; ++t) {
        const EvalRecord rec = ev.run(n, t);
        ++rep.checks;
        const bool exact = rec.reconstructed && rec.closed && *rec.reconstructed == *rec.closed;
        if (rec.failed() || !exact) {
          rep.failures.push_back(describe(rec) + "  repro: " + repro_command(rec, EvalMethod::both, precision));
        }
      }
    }
  }
  return rep;
}

VerifyReport corollary_suite(u64 pmax) {
  VerifyReport rep;
  rep.suite = "cor-all";
  for (u64 p : primes_between(5, pmax)) {
    const FieldCtx ctx(p);
    std::vector<u64> ns = {3, 4, 5, 6, 7, 8};
    if (std::find(ns.begin(), ns.end(), p - 1) == ns.end()) ns.push_back(p - 1);
    for (u64 n : ns) {
      for (const auto& check : corollary_predicates(ctx, n)) {
        if (check.outcome == CheckOutcome::skip) continue;
        ++rep.checks;
        if (check.outcome == CheckOutcome::fail) {
          rep.failures.push_back("p=" + std::to_string(p) + " n=" + std::to_string(n) + " " + check.id +
                                 ": expected " + check.expected + ", actual " + check.actual);
        }
      }
    }
  }
  return rep;
}

VerifyReport charsum_suite(u64 pmax) {
  VerifyReport rep;
  rep.suite = "charsum";
  constexpr double identity_tol = 1e-6;
  u64 top = pmax;
  if (top > kDefaultOracleCap) {
    top = kDefaultOracleCap;
    rep.notes.push_back("primes capped at " + std::to_string(kDefaultOracleCap));
  }
  for (u64 p : primes_between(3, top)) {
    const FieldCtx field(p);
    const CharTable table(field);
    std::mt19937_64 rng(p);

    const IdentityErrors ids = check_gauss_identities(table);
    ++rep.checks;
    rep.max_error = std::max(rep.max_error, ids.max());
    if (ids.max() >= identity_tol) {
      rep.failures.push_back("p=" + std::to_string(p) + " identity error " + std::to_string(ids.max()));
    }

    for (u64 m = 1; m <= p - 1; ++m) {
      if ((p - 1) % m != 0) continue;
      std::uniform_int_distribution<std::int64_t> pick(0, static_cast<std::int64_t>(p - 2));
      for (int i = 0; i < 20; ++i) {
        const std::int64_t chi = pick(rng);
        const double err = hasse_davenport_check(table, m, chi);
        ++rep.checks;
        rep.max_error = std::max(rep.max_error, err);
        if (err >= identity_tol) {
          rep.failures.push_back("p=" + std::to_string(p) + " Hasse-Davenport m=" + std::to_string(m) +
                                 " chi=" + std::to_string(chi) + " error " + std::to_string(err));
        }
      }
    }

    for (u64 n : {3u, 4u}) {
      if (n % p == 0) continue;
      for (u64 t = 1; t < p; ++t) {
        const auto b = compare_B_n(table, n, t, nGn_closed(field, n, t));
        ++rep.checks;
        rep.max_error = std::max(rep.max_error, b.error);
        if (!b.pass) {
          rep.failures.push_back("p=" + std::to_string(p) + " n=" + std::to_string(n) + " t=" + std::to_string(t) +
                                 " B_n quotient error " + std::to_string(b.error));
        }
        if ((n - 1) % p == 0) continue;
        const auto a = compare_A_n(table, n, t, nGtilde_closed(field, n, t));
        ++rep.checks;
        rep.max_error = std::max(rep.max_error, a.error);
        if (!a.pass) {
          rep.failures.push_back("p=" + std::to_string(p) + " n=" + std::to_string(n) + " t=" + std::to_string(t) +
                                 " A_n quotient error " + std::to_string(a.error));
        }
      }
    }
  }
  return rep;
}

VerifyReport gamma_suite(u64 pmax) {
  VerifyReport rep;
  rep.suite = "gamma";
  bool reduced = false;
  for (u64 p : primes_between(5, pmax)) {
    // keep the table under 2^24 entries
    const int precision = p * p * p <= (u64(1) << 24) ? 3 : 2;
    reduced = reduced || precision < 3;
    const PadicCtx ctx = PadicCtx::with_gamma_table(p, precision);
    const auto order = static_cast<std::int64_t>(p - 1);
    const std::string tag = "p=" + std::to_string(p) + " M=" + std::to_string(precision);

    for (std::int64_t j = 1; j <= order - 1; ++j) {
      const Rational x(j, order);
      const u64 lhs = ctx.mul(ctx.gamma_p(frac(x)), ctx.gamma_p(frac(Rational(1) - x)));
      const u64 rhs = j % 2 == 0 ? ctx.modulus() - 1 : 1;  // -(-1)^j
      ++rep.checks;
      if (lhs != rhs) rep.failures.push_back(tag + " reflection fails at j=" + std::to_string(j));
    }

    std::mt19937_64 rng(p);
    std::uniform_int_distribution<u64> pick(0, ctx.modulus() - 2);
    for (int i = 0; i < 1000; ++i) {
      const u64 k = pick(rng);
      const u64 factor = k % p == 0 ? ctx.modulus() - 1 : ctx.neg(k % ctx.modulus());
      ++rep.checks;
      if (ctx.gamma_at(k + 1) != ctx.mul(factor, ctx.gamma_at(k))) {
        rep.failures.push_back(tag + " functional equation fails at k=" + std::to_string(k));
      }
    }

    if (p <= 50) {
      const PadicCtx lift(p, precision);
      for (u64 a = 1; a < p; ++a) {
        for (u64 b = 1; b < p; ++b) {
          ++rep.checks;
          if (lift.mul(teichmuller(lift, a), teichmuller(lift, b)) != teichmuller(lift, a * b % p)) {
            rep.failures.push_back(tag + " Teichmuller not multiplicative at " + std::to_string(a) + "," +
                                   std::to_string(b));
          }
        }
      }
    }

    const auto coarse = build_gamma_table(p, precision - 1);
    const u64 coarse_mod = coarse.size();
    bool local = true;
    for (u64 k = 0; k < ctx.modulus(); ++k) {
      if (ctx.gamma_at(k) % coarse_mod != coarse[k % coarse_mod]) {
        local = false;
        break;
      }
    }
    ++rep.checks;
    if (!local) rep.failures.push_back(tag + " table does not reduce to the M-1 table");
  }
  if (reduced) rep.notes.push_back("primes above 256 checked at M=2");
  return rep;
}

VerifyReport floors_suite(u64 pmax) {
  VerifyReport rep;
  rep.suite = "floors";
  for (u64 p : primes_between(3, pmax)) {
    const auto order = static_cast<std::int64_t>(p - 1);
    for (std::int64_t j = 1; j <= order - 1; ++j) {
      const Rational x(j, order);
      for (std::int64_t m = 1; m <= 8; ++m) {
        std::int64_t first = 0, second = 0;
        for (std::int64_t h = 0; h < m; ++h) {
          first += floor(Rational(h, m) + x);
          second += floor(Rational(1 + 2 * h, 2 * m) - x);
        }
        rep.checks += 2;
        if (floor(Rational(m) * x) != first || floor(Rational(1, 2) - Rational(m) * x) != second) {
          rep.failures.push_back("p=" + std::to_string(p) + " j=" + std::to_string(j) + " m=" + std::to_string(m));
        }
      }
      ++rep.checks;
      if (floor(Rational(-2) * x) != -1 + floor(Rational(1, 2) - x)) {
        rep.failures.push_back("p=" + std::to_string(p) + " j=" + std::to_string(j) + " doubling identity");
      }
    }
  }
  return rep;
}

VerifyReport valuation_suite(u64 pmax) {
  VerifyReport rep;
  rep.suite = "valuation";
  std::size_t witnesses = 0;
  for (u64 p : primes_between(3, pmax)) {
    for (int n = 3; n <= 8; ++n) {
      if (static_cast<u64>(n) % p == 0) continue;
      const HGParams g = family_params(Family::G, n);
      for (u64 a = 0; a + 1 < p; ++a) {
        ++rep.checks;
        if (term_exponent(g, p, a) < 0) {
          rep.failures.push_back("G p=" + std::to_string(p) + " n=" + std::to_string(n) + " a=" + std::to_string(a));
        }
      }
      if (static_cast<u64>(n - 1) % p == 0) continue;
      const HGParams gt = family_params(Family::Gtilde, n);
      for (u64 a = 0; a + 1 < p; ++a) {
        const int e = term_exponent(gt, p, a);
        ++rep.checks;
        if (e < -1) {
          rep.failures.push_back("Gt p=" + std::to_string(p) + " n=" + std::to_string(n) + " a=" + std::to_string(a));
        }
        if (e == -1 && n % 2 == 0) ++witnesses;
      }
    }
  }
  rep.notes.push_back(std::to_string(witnesses) + " even-n Gt terms with exponent -1");
  if (witnesses == 0 && pmax >= 5) rep.failures.push_back("no exponent -1 witness for even n");
  return rep;
}

}  // namespace

VerifyReport run_verify(std::string_view suite, u64 pmax) {
  if (suite == "thm-G") return theorem_suite(Family::G, pmax);
  if (suite == "thm-Gt") return theorem_suite(Family::Gtilde, pmax);
  if (suite == "cor-all") return corollary_suite(pmax);
  if (suite == "charsum") return charsum_suite(pmax);
  if (suite == "gamma") return gamma_suite(pmax);
  if (suite == "floors") return floors_suite(pmax);
  if (suite == "valuation") return valuation_suite(pmax);
  throw std::invalid_argument("unknown suite '" + std::string(suite) + "'");
}

}  // namespace padic_hg
