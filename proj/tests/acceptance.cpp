// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include "padic_hg/char_sums.hpp"
#include "padic_hg/closed_forms.hpp"
#include "padic_hg/hypergeometric.hpp"
#include "padic_hg/verify.hpp"

using namespace padic_hg;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;
  std::string first_failure;

  void fail(const std::string& what) {
    if (ok) first_failure = what;
    ok = false;
  }
};

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// 1: nGn definition vs closed form, 5 <= p <= 60
void theorem_G(Outcome& o) {
  std::size_t cells = 0;
  for (u64 p : primes_between(5, 60)) {
    const auto ctx = PadicCtx::with_gamma_table(p, 2);
    const FieldCtx f(p);
    for (int n = 3; n <= 6; ++n) {
      if (u64(n) % p == 0) continue;
      for (u64 t = 0; t < p; ++t) {
        const EvalRecord rec = eval_nGn(ctx, n, t);
        const auto closed = nGn_closed(f, u64(n), t);
        const auto want = PadicNumber::from_integer(p, closed, 2);
        ++cells;
        if (agreement_precision(*rec.padic, want) < 2 || !rec.reconstructed || *rec.reconstructed != Rational(closed)) {
          o.fail("p=" + std::to_string(p) + " n=" + std::to_string(n) + " t=" + std::to_string(t));
        }
      }
    }
  }
  o.detail << cells << " cells";
}

// 2: nG~n definition vs closed form, including every valuation -1 case
void theorem_Gt(Outcome& o) {
  std::size_t cells = 0, negative = 0;
  for (u64 p : primes_between(5, 60)) {
    const auto ctx = PadicCtx::with_gamma_table(p, 3);
    const FieldCtx f(p);
    for (int n = 3; n <= 6; ++n) {
      if (u64(n) % p == 0 || u64(n - 1) % p == 0) continue;
      for (u64 t = 1; t < p; ++t) {
        const EvalRecord rec = eval_nGtilde(ctx, n, t);
        const Rational closed = nGtilde_closed(f, u64(n), t);
        const auto want = PadicNumber::from_rational(p, closed, 3);
        ++cells;
        const std::string tag = "p=" + std::to_string(p) + " n=" + std::to_string(n) + " t=" + std::to_string(t);
        if (agreement_precision(*rec.padic, want) < 2 || !rec.reconstructed || *rec.reconstructed != closed) {
          o.fail(tag);
          continue;
        }
        if (!want.is_zero()) {
          if (rec.padic->is_zero() || rec.padic->valuation() != want.valuation()) o.fail(tag + " valuation");
          const int digits = want.absolute_precision() < 2 ? 0 : 2 - want.valuation();
          const u64 mod = digits > 0 ? u64(std::pow(double(p), digits)) : 1;
          if (rec.padic->unit() % mod != want.unit() % mod) o.fail(tag + " unit");
        }
        if (closed.den() == std::int64_t(p)) {
          ++negative;
          if (n % 2 != 0) o.fail(tag + " odd n with denominator p");
        } else if (n % 2 == 0) {
          o.fail(tag + " even n without denominator p");
        }
      }
    }
  }
  o.detail << cells << " cells, " << negative << " with valuation -1";
}

// 3: corollary grid over p <= 1000
void corollaries(Outcome& o) {
  std::mt19937_64 rng(20261015);
  std::size_t checks = 0;
  for (u64 p : primes_between(5, 1000)) {
    const FieldCtx f(p);
    const std::string tag = "p=" + std::to_string(p);

    const auto g31 = nGn_closed(f, 3, 1);
    ++checks;
    if ((g31 == 0) != (p % 12 != 1)) o.fail(tag + " 3G3(1) zero pattern");
    if (p % 12 == 1 && std::abs(g31) != 2) o.fail(tag + " |3G3(1)| != 2");

    ++checks;
    const Rational gt = nGtilde_closed(f, 3, 1);
    if (gt != Rational(p % 8 == 1 || p % 8 == 3 ? 2 : 0)) o.fail(tag + " 3G~3(1)");

    if (p % 4 == 3) {
      for (u64 n : {4, 6}) {
        ++checks;
        if (nGn_closed(f, n, p - 1) != 0) o.fail(tag + " nGn(-1), n=" + std::to_string(n));
      }
    }

    ++checks;
    if (nGn_closed(f, p - 1, 1) != -1) o.fail(tag + " (p-1)G(p-1)(1)");
    std::uniform_int_distribution<u64> pick(2, p - 1);
    for (int i = 0; i < 3; ++i) {
      const u64 t = pick(rng);
      ++checks;
      if (nGn_closed(f, p - 1, t) != 0) o.fail(tag + " (p-1)G(p-1)(" + std::to_string(t) + ")");
    }

    if (p <= 300) {
      for (u64 n : {4, 6}) {
        if (n % p == 0 || (n - 1) % p == 0) continue;
        for (u64 t = 1; t < p; ++t) {
          ++checks;
          if (nGtilde_closed(f, n, t) == Rational(0)) o.fail(tag + " nG~n(t) = 0 at n=" + std::to_string(n));
        }
      }
    }
  }
  o.detail << checks << " checks";
}

// 4: |nGn| <= gcd(n, p-1) on the grid of 3, and the 3G3 certificates
void bounds(Outcome& o) {
  std::size_t values = 0, certs = 0;
  for (u64 p : primes_between(5, 1000)) {
    const FieldCtx f(p);
    for (u64 n : std::vector<u64>{3, 4, 5, 6, p - 1}) {
      if (n % p == 0) continue;
      const auto all = nGn_closed_all(f, n);
      const auto d = static_cast<std::int64_t>(std::gcd(n, p - 1));
      for (u64 t = 0; t < p; ++t) {
        ++values;
        if (std::abs(all[t]) > d) o.fail("p=" + std::to_string(p) + " n=" + std::to_string(n) + " t=" + std::to_string(t));
      }
    }
    if (p <= 500) {
      for (u64 t = 0; t < p; ++t) {
        ++certs;
        const bool zero = classify_3G3(f, t).verdict == Verdict::zero;
        if (zero != (nGn_closed(f, 3, t) == 0)) o.fail("certificate p=" + std::to_string(p) + " t=" + std::to_string(t));
      }
    }
  }
  o.detail << values << " values, " << certs << " certificates";
}

// 5: reflection and functional equation of Γ_p at M = 3
void gamma_suite(Outcome& o) {
  std::size_t checks = 0;
  for (u64 p : primes_between(5, 100)) {
    const auto ctx = PadicCtx::with_gamma_table(p, 3);
    const u64 mod = ctx.modulus();
    const auto order = static_cast<std::int64_t>(p - 1);
    for (std::int64_t j = 1; j <= order - 1; ++j) {
      const Rational x(j, order);
      const u64 prod = ctx.mul(ctx.gamma_p(frac(x)), ctx.gamma_p(frac(Rational(1) - x)));
      ++checks;
      if (prod != (j % 2 == 0 ? mod - 1 : 1)) o.fail("reflection p=" + std::to_string(p) + " j=" + std::to_string(j));
    }
    std::mt19937_64 rng(p * 7919);
    std::uniform_int_distribution<u64> pick(0, mod - 2);
    for (int i = 0; i < 1000; ++i) {
      const u64 k = pick(rng);
      const u64 factor = k % p == 0 ? mod - 1 : (mod - k) % mod;
      ++checks;
      if (ctx.gamma_at(k + 1) != ctx.mul(factor, ctx.gamma_at(k))) {
        o.fail("functional equation p=" + std::to_string(p) + " k=" + std::to_string(k));
      }
    }
  }
  o.detail << checks << " congruences";
}

// 6: the three floor identities, in integer arithmetic
void floors(Outcome& o) {
  std::size_t checks = 0;
  for (u64 p : primes_between(3, 200)) {
    const auto q = static_cast<std::int64_t>(p - 1);
    for (std::int64_t j = 1; j <= q - 1; ++j) {
      for (std::int64_t m = 1; m <= 8; ++m) {
        std::int64_t s1 = 0, s2 = 0;
        for (std::int64_t h = 0; h < m; ++h) {
          s1 += floor_div(h * q + j * m, m * q);                  // h/m + j/q
          s2 += floor_div((1 + 2 * h) * q - 2 * m * j, 2 * m * q);  // (1+2h)/(2m) - j/q
        }
        checks += 2;
        if (floor_div(m * j, q) != s1) o.fail("first identity p=" + std::to_string(p));
        if (floor_div(q - 2 * m * j, 2 * q) != s2) o.fail("second identity p=" + std::to_string(p));
      }
      ++checks;
      if (floor_div(-2 * j, q) != -1 + floor_div(q - 2 * j, 2 * q)) o.fail("third identity p=" + std::to_string(p));
    }
  }
  o.detail << checks << " identities";
}

// 7: complex character-sum oracle, p <= 100
void charsums(Outcome& o) {
  double identity_max = 0, hd_max = 0, quotient_max = 0;
  std::size_t zero_checks = 0;
  for (u64 p : primes_between(3, 100)) {
    const FieldCtx f(p);
    const CharTable table(f);
    const std::string tag = "p=" + std::to_string(p);
    const double ids = check_gauss_identities(table).max();
    identity_max = std::max(identity_max, ids);
    if (ids >= 1e-6) o.fail(tag + " identities");

    std::mt19937_64 rng(p);
    std::uniform_int_distribution<std::int64_t> pick(0, std::int64_t(p - 2));
    for (u64 m = 1; m <= p - 1; ++m) {
      if ((p - 1) % m) continue;
      for (int i = 0; i < 20; ++i) {
        const double e = hasse_davenport_check(table, m, pick(rng));
        hd_max = std::max(hd_max, e);
        if (e >= 1e-6) o.fail(tag + " Hasse-Davenport m=" + std::to_string(m));
      }
    }

    for (u64 n : {3ULL, 4ULL}) {
      if (n % p == 0) continue;
      for (u64 t = 1; t < p; ++t) {
        const auto expected = nGn_closed(f, n, t);
        const auto b = compare_B_n(table, n, t, expected);
        quotient_max = std::max(quotient_max, b.error);
        if (!b.pass) o.fail(tag + " B_n n=" + std::to_string(n) + " t=" + std::to_string(t));
        if (!nth_power_residue_test(f, n, t)) {
          ++zero_checks;
          if (expected != 0 || std::abs(b.quotient) > b.tolerance) o.fail(tag + " B_n not zero on non-residue");
        }
        if ((n - 1) % p == 0) continue;
        const auto a = compare_A_n(table, n, t, nGtilde_closed(f, n, t));
        quotient_max = std::max(quotient_max, a.error);
        if (!a.pass) o.fail(tag + " A_n n=" + std::to_string(n) + " t=" + std::to_string(t));
      }
    }
  }
  o.detail << "identity error " << identity_max << ", Hasse-Davenport " << hd_max << ", quotients " << quotient_max
           << ", " << zero_checks << " non-residue zeros";
}

// 8: term exponent floors and an even-n witness
void valuation(Outcome& o) {
  std::size_t terms = 0, witnesses = 0;
  for (u64 p : primes_between(3, 200)) {
    for (int n = 3; n <= 8; ++n) {
      if (u64(n) % p == 0) continue;
      const auto g = family_params(Family::G, n);
      for (u64 a = 0; a + 1 < p; ++a) {
        ++terms;
        if (term_exponent(g, p, a) < 0) o.fail("G p=" + std::to_string(p) + " n=" + std::to_string(n));
      }
      if (u64(n - 1) % p == 0) continue;
      const auto gt = family_params(Family::Gtilde, n);
      for (u64 a = 0; a + 1 < p; ++a) {
        ++terms;
        const int e = term_exponent(gt, p, a);
        if (e < -1) o.fail("Gt p=" + std::to_string(p) + " n=" + std::to_string(n));
        if (e == -1 && n % 2 == 0) ++witnesses;
      }
    }
  }
  if (witnesses == 0) o.fail("no exponent -1 witness");
  o.detail << terms << " terms, " << witnesses << " even-n witnesses";
}

// 9: classical 3F2(1) special values
void classical(Outcome& o) {
  const auto e = classical_sanity();
  if (e.dixon >= 1e-3) o.fail("Dixon");
  if (e.whipple >= 1e-3) o.fail("Whipple");
  o.detail << "Dixon error " << e.dixon << ", Whipple error " << e.whipple;
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<void(Outcome&)> run;
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, "nGn definition agrees with closed form mod p^2", 120, theorem_G},
      {2, "nG~n definition agrees with closed form in Q_p", 180, theorem_Gt},
      {3, "corollary grid", 60, corollaries},
      {4, "bound |nGn| <= gcd(n, p-1) and 3G3 certificates", 60, bounds},
      {5, "p-adic gamma reflection and functional equation", 60, gamma_suite},
      {6, "floor identities", 60, floors},
      {7, "Gauss/Jacobi oracle", 120, charsums},
      {8, "valuation floors", 60, valuation},
      {9, "classical 3F2(1) values", 60, classical},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.limit_seconds) o.fail("took " + std::to_string(secs) + "s, limit " + std::to_string(c.limit_seconds));
    std::printf("%s criterion %d: %s [%s; %.2fs]%s%s\n", o.ok ? "PASS" : "FAIL", c.id, c.name, o.detail.str().c_str(),
                secs, o.ok ? "" : " first failure: ", o.first_failure.c_str());
    if (!o.ok) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
