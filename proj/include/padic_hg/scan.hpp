#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "padic_hg/verify.hpp"

namespace padic_hg {

/// Which t to evaluate at each prime: "all", or a comma list of rationals
/// such as "1", "-1", "1/2,3". Entries are reduced mod p; entries whose
/// denominator p divides are skipped at that prime.
struct TSpec {
  bool all = false;
  std::vector<Rational> values;
  std::string text;

  static TSpec parse(const std::string& text);
  /// Sorted, de-duplicated residues for this prime. "all" is 1..p-1 for G~
  /// and 0..p-1 for G; 0 is always dropped for G~.
  std::vector<u64> residues(u64 p, Family family) const;
};

/// "3", "3..6", "3,5,8" or "p-1" (the latter may appear in a list).
struct NSpec {
  std::vector<int> values;
  bool p_minus_1 = false;
  std::string text;

  static NSpec parse(const std::string& text);
  std::vector<int> resolve(u64 p) const;
};

struct ScanConfig {
  Family family = Family::G;
  NSpec n = NSpec::parse("3");
  TSpec t = TSpec::parse("all");
  u64 pmin = 5;
  u64 pmax = 100;
  int precision = 2;
  EvalMethod method = EvalMethod::closed;
  unsigned workers = 1;
  u64 table_budget = kDefaultTableBudget;
  u64 oracle_cap = kDefaultOracleCap;
  /// Called from the worker as each prime starts; an exception thrown here
  /// is reported like any other worker error.
  std::function<void(u64)> on_prime;

  /// Throws std::invalid_argument (or capacity_error for the table budget)
  /// before any work starts.
  void validate() const;
};

struct ScanRow {
  u64 p = 0;
  int n = 0;
  Family family = Family::G;
  u64 t = 0;
  std::optional<Rational> value;
  EvalMethod method = EvalMethod::closed;
  std::optional<bool> agrees;
  bool unreconstructed = false;
  bool failed = false;
  std::string error;
};

struct ScanResult {
  ScanConfig config;
  std::vector<ScanRow> rows;  // sorted by (p, n, t)
  std::vector<u64> primes;    // primes that produced at least one row
  std::vector<std::string> skipped;
};

/// Evaluates the grid on a worker pool; row order does not depend on the
/// worker count. A worker error becomes a FAILED row for that prime and the
/// remaining primes still run.
ScanResult run_scan(const ScanConfig& config);

void write_csv(std::ostream& os, const ScanResult& result);

/// JSON summary text (schema 1), newline-terminated.
std::string summarize(const ScanResult& result);

/// |value| > gcd(n, p-1) for a G row.
bool bound_violation(const ScanRow& row);

}  // namespace padic_hg
