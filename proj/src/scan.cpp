#include "padic_hg/scan.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cctype>
#include <map>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

namespace padic_hg {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    parts.push_back(trim(text.substr(start, comma == std::string::npos ? std::string::npos : comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return parts;
}

int parse_int(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw std::invalid_argument("bad " + what + " '" + s + "'");
  return v;
}

}  // namespace

TSpec TSpec::parse(const std::string& text) {
  TSpec spec;
  spec.text = text;
  std::string lower = trim(text);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  if (lower == "all") {
    spec.all = true;
    return spec;
  }
  for (const auto& part : split_commas(text)) {
    if (part.empty()) throw std::invalid_argument("empty entry in t list '" + text + "'");
    spec.values.push_back(parse_rational(part));
  }
  return spec;
}

std::vector<u64> TSpec::residues(u64 p, Family family) const {
  std::vector<u64> out;
  if (all) {
    for (u64 t = family == Family::G ? 0 : 1; t < p; ++t) out.push_back(t);
    return out;
  }
  for (const auto& v : values) {
    const auto r = reduce_rational(v, p);
    if (!r) continue;
    if (*r == 0 && family != Family::G) continue;
    out.push_back(*r);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

NSpec NSpec::parse(const std::string& text) {
  NSpec spec;
  spec.text = text;
  for (const auto& part : split_commas(text)) {
    if (part == "p-1") {
      spec.p_minus_1 = true;
      continue;
    }
    const auto dots = part.find("..");
    if (dots != std::string::npos) {
      const int lo = parse_int(part.substr(0, dots), "n");
      const int hi = parse_int(part.substr(dots + 2), "n");
      if (lo > hi) throw std::invalid_argument("empty n range '" + part + "'");
      for (int n = lo; n <= hi; ++n) spec.values.push_back(n);
    } else {
      spec.values.push_back(parse_int(part, "n"));
    }
  }
  for (int n : spec.values) {
    if (n < 3) throw std::invalid_argument("n must be at least 3 (got " + std::to_string(n) + ")");
  }
  return spec;
}

std::vector<int> NSpec::resolve(u64 p) const {
  std::vector<int> out = values;
  if (p_minus_1 && p >= 4) out.push_back(static_cast<int>(p - 1));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void ScanConfig::validate() const {
  if (family != Family::G && family != Family::Gtilde) throw std::invalid_argument("family must be G or Gt");
  if (pmin > pmax) throw std::invalid_argument("pmin must not exceed pmax");
  if (pmax < 3) throw std::invalid_argument("pmax must be at least 3");
  if (precision < 1) throw std::invalid_argument("precision must be at least 1");
  if (workers == 0) throw std::invalid_argument("workers must be at least 1");
  if (n.values.empty() && !n.p_minus_1) throw std::invalid_argument("no n values given");
  if (!t.all && t.values.empty()) throw std::invalid_argument("no t values given");
  if (method == EvalMethod::oracle && pmax > oracle_cap) {
    throw std::invalid_argument("oracle method is capped at p <= " + std::to_string(oracle_cap) + " (got pmax = " +
                                std::to_string(pmax) + ")");
  }
  if (method == EvalMethod::definition || method == EvalMethod::both) {
    const auto primes = primes_between(std::max<u64>(pmin, 5), pmax);
    if (!primes.empty()) {
      const u64 required = checked_prime_power(primes.back(), internal_precision(family, precision));
      const u64 budget = std::min<u64>(table_budget, u64(1) << 32);
      if (required > budget) throw capacity_error(required, budget);
    }
  }
}

namespace {

struct PrimeOutcome {
  std::vector<ScanRow> rows;
  std::string skipped;
};

PrimeOutcome scan_prime(const ScanConfig& cfg, u64 p) {
  PrimeOutcome out;
  const bool needs_table = cfg.method == EvalMethod::definition || cfg.method == EvalMethod::both;
  if (needs_table && p < 5) {
    out.skipped = "p=" + std::to_string(p) + ": definition needs p >= 5";
    return out;
  }
  std::vector<int> ns;
  for (int n : cfg.n.resolve(p)) {
    if (static_cast<u64>(n) % p == 0) continue;
    if (cfg.family == Family::Gtilde && static_cast<u64>(n - 1) % p == 0) continue;
    ns.push_back(n);
  }
  if (ns.empty()) {
    out.skipped = "p=" + std::to_string(p) + ": no admissible n";
    return out;
  }
  const auto ts = cfg.t.residues(p, cfg.family);
  if (ts.empty()) {
    out.skipped = "p=" + std::to_string(p) + ": no admissible t";
    return out;
  }

  ScanRow current;
  current.p = p;
  current.family = cfg.family;
  current.method = cfg.method;
  try {
    if (cfg.on_prime) cfg.on_prime(p);
    const Evaluator ev(p, cfg.family, cfg.method, cfg.precision, cfg.table_budget, cfg.oracle_cap);
    for (int n : ns) {
      current.n = n;
      for (u64 t : ts) {
        current.t = t;
        const EvalRecord rec = ev.run(n, t);
        ScanRow row = current;
        row.value = rec.value();
        row.unreconstructed = rec.unreconstructed() && !rec.closed;
        if (rec.definition_agrees) row.agrees = rec.definition_agrees;
        if (rec.oracle_agrees) row.agrees = row.agrees.value_or(true) && *rec.oracle_agrees;
        out.rows.push_back(std::move(row));
      }
    }
  } catch (const std::exception& e) {
    ScanRow fail = current;
    fail.failed = true;
    fail.error = e.what();
    out.rows.push_back(std::move(fail));
  }
  return out;
}

}  // namespace

ScanResult run_scan(const ScanConfig& config) {
  config.validate();
  ScanResult result;
  result.config = config;
  const auto primes = primes_between(std::max<u64>(config.pmin, 3), config.pmax);
  std::vector<PrimeOutcome> outcomes(primes.size());

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < primes.size(); i = next++) outcomes[i] = scan_prime(config, primes[i]);
  };
  const unsigned count = std::min<unsigned>(config.workers, std::max<std::size_t>(primes.size(), 1));
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < count; ++w) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  for (std::size_t i = 0; i < primes.size(); ++i) {
    auto& o = outcomes[i];
    if (!o.skipped.empty()) result.skipped.push_back(o.skipped);
    if (o.rows.empty()) continue;
    result.primes.push_back(primes[i]);
    for (auto& row : o.rows) result.rows.push_back(std::move(row));
  }
  return result;
}

void write_csv(std::ostream& os, const ScanResult& result) {
  os << "p,n,family,t,value_num,value_den,is_zero,method,agrees\n";
  for (const auto& row : result.rows) {
    os << row.p << ',' << row.n << ',' << to_string(row.family) << ',' << row.t << ',';
    if (row.failed) {
      os << "FAILED,,," << to_string(row.method) << ",FAILED\n";
      continue;
    }
    if (row.value) {
      os << row.value->num() << ',' << row.value->den() << ',' << (row.value->num() == 0 ? 1 : 0);
    } else {
      os << ",,";
    }
    os << ',' << to_string(row.method) << ',';
    if (row.agrees) os << (*row.agrees ? "AGREE" : "DISAGREE");
    os << '\n';
  }
}

bool bound_violation(const ScanRow& row) {
  if (row.family != Family::G || !row.value) return false;
  const auto bound = static_cast<std::int64_t>(std::gcd(static_cast<u64>(row.n), row.p - 1));
  return row.value->den() != 1 || std::abs(row.value->num()) > bound;
}

std::string summarize(const ScanResult& result) {
  using nlohmann::ordered_json;
  const auto& cfg = result.config;

  std::size_t zeros = 0, bound_violations = 0, disagreements = 0, unreconstructed = 0, failed = 0;
  std::optional<Rational> lo, hi;
  std::map<u64, std::map<u64, std::array<std::size_t, 3>>> classes;  // modulus -> residue -> {primes, rows, zeros}
  constexpr u64 moduli[] = {3, 4, 8, 12};

  u64 last_p = 0;
  for (const auto& row : result.rows) {
    const bool new_prime = row.p != last_p;
    last_p = row.p;
    if (row.failed) ++failed;
    if (row.unreconstructed) ++unreconstructed;
    if (row.agrees && !*row.agrees) ++disagreements;
    if (bound_violation(row)) ++bound_violations;
    const bool zero = row.value && row.value->num() == 0;
    if (zero) ++zeros;
    if (row.value) {
      if (!lo || *row.value < *lo) lo = row.value;
      if (!hi || *row.value > *hi) hi = row.value;
    }
    for (u64 q : moduli) {
      auto& cell = classes[q][row.p % q];
      if (new_prime) ++cell[0];
      if (!row.failed) ++cell[1];
      if (zero) ++cell[2];
    }
  }

  ordered_json j;
  j["schema"] = 1;
  j["family"] = std::string(to_string(cfg.family));
  j["n"] = cfg.n.text;
  j["t"] = cfg.t.text;
  j["pmin"] = cfg.pmin;
  j["pmax"] = cfg.pmax;
  j["method"] = std::string(to_string(cfg.method));
  j["precision"] = cfg.precision;
  j["primes"] = result.primes.size();
  j["rows"] = result.rows.size() - failed;
  j["zeros"] = zeros;
  j["min"] = lo ? ordered_json(lo->str()) : ordered_json(nullptr);
  j["max"] = hi ? ordered_json(hi->str()) : ordered_json(nullptr);
  j["bound_violations"] = bound_violations;
  j["disagreements"] = disagreements;
  j["unreconstructed"] = unreconstructed;
  j["failed"] = failed;

  ordered_json by_class = ordered_json::object();
  for (u64 q : moduli) {
    ordered_json per = ordered_json::object();
    for (const auto& [r, cell] : classes[q]) {
      per[std::to_string(r)] = {{"primes", cell[0]}, {"rows", cell[1]}, {"zeros", cell[2]}};
    }
    by_class["mod" + std::to_string(q)] = per;
  }
  j["zeros_by_class"] = by_class;

  ordered_json errors = ordered_json::array();
  for (const auto& row : result.rows) {
    if (row.failed) errors.push_back("p=" + std::to_string(row.p) + " n=" + std::to_string(row.n) + ": " + row.error);
  }
  j["errors"] = errors;
  j["skipped"] = result.skipped;
  return j.dump(2) + "\n";
}

}  // namespace padic_hg
