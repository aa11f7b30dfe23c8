#include "padic_hg/cli.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "padic_hg/scan.hpp"

namespace padic_hg {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitFail = 2;

struct Options {
  std::string family = "G";
  std::string n = "3";
  u64 p = 0;
  u64 pmin = 3;
  u64 pmax = 0;
  std::string t;
  int precision = 2;
  std::string method;
  std::string out;
  unsigned workers = 1;
  std::string suite;
};

void add_family(CLI::App* cmd, Options& o) {
  cmd->add_option("--family", o.family, "G or Gt")->check(CLI::IsMember({"G", "Gt", "Gtilde"}));
}

u64 residue_of_t(const std::string& text, u64 p) {
  const auto r = reduce_rational(parse_rational(text), p);
  if (!r) throw std::domain_error("t = " + text + " is not p-integral at p = " + std::to_string(p));
  return *r;
}

void require_odd_prime(u64 p) {
  if (p < 3 || !is_prime(p)) throw std::invalid_argument("p must be an odd prime (got " + std::to_string(p) + ")");
}

int cmd_eval(const Options& o, std::ostream& out) {
  require_odd_prime(o.p);
  const Family family = parse_family(o.family);
  const EvalMethod method = parse_eval_method(o.method.empty() ? "both" : o.method);
  const Evaluator ev(o.p, family, method, o.precision);
  const int n = std::stoi(o.n);
  const u64 t = residue_of_t(o.t, o.p);
  const EvalRecord rec = ev.run(n, t);

  out << "family     " << to_string(family) << "\n"
      << "p          " << rec.p << "\n"
      << "n          " << rec.n << "\n"
      << "t          " << rec.t << "\n"
      << "method     " << to_string(method) << "\n";
  if (const auto v = rec.value()) {
    out << "value      " << v->str() << "\n";
  } else {
    out << "value      unreconstructed\n";
  }
  if (rec.padic) out << "padic      " << rec.padic->str() << "  (precision " << rec.precision << ")\n";
  if (rec.reconstructed) out << "recovered  " << rec.reconstructed->str() << "\n";
  if (rec.closed) out << "closed     " << rec.closed->str() << "\n";

  bool ok = true;
  if (rec.definition_agrees) {
    out << "definition " << (*rec.definition_agrees ? "AGREE" : "DISAGREE") << "\n";
    ok = ok && *rec.definition_agrees;
  }
  if (rec.oracle_agrees) {
    out << "oracle     " << (*rec.oracle_agrees ? "AGREE" : "DISAGREE") << "  error " << std::setprecision(3)
        << *rec.oracle_error << " tolerance " << rec.oracle_tolerance << "\n";
    ok = ok && *rec.oracle_agrees;
  } else if (method == EvalMethod::oracle) {
    out << "oracle     skipped at t = 0\n";
  }
  return ok ? kExitOk : kExitFail;
}

int cmd_scan(const Options& o, std::ostream& out, std::ostream& err) {
  ScanConfig cfg;
  cfg.family = parse_family(o.family);
  cfg.n = NSpec::parse(o.n);
  cfg.t = TSpec::parse(o.t.empty() ? "all" : o.t);
  if (o.p != 0) {
    require_odd_prime(o.p);
    cfg.pmin = cfg.pmax = o.p;
  } else {
    if (o.pmax == 0) throw std::invalid_argument("scan needs --pmax or --p");
    cfg.pmin = o.pmin;
    cfg.pmax = o.pmax;
  }
  cfg.precision = o.precision;
  cfg.method = parse_eval_method(o.method.empty() ? "closed" : o.method);
  cfg.workers = o.workers;

  const ScanResult result = run_scan(cfg);
  const std::string summary = summarize(result);
  if (o.out.empty()) {
    write_csv(out, result);
    err << summary;
  } else {
    std::ofstream csv(o.out, std::ios::binary);
    if (!csv) throw std::invalid_argument("cannot open " + o.out + " for writing");
    write_csv(csv, result);
    std::ofstream js(o.out + ".summary.json", std::ios::binary);
    js << summary;
    out << "wrote " << result.rows.size() << " rows to " << o.out << "\n";
  }

  bool ok = true;
  for (const auto& row : result.rows) {
    if (row.failed || bound_violation(row) || (row.agrees && !*row.agrees)) ok = false;
  }
  return ok ? kExitOk : kExitFail;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const u64 pmax = o.pmax == 0 ? 100 : o.pmax;
  std::vector<std::string> suites;
  if (o.suite == "all") {
    suites = verify_suites();
  } else {
    suites.push_back(o.suite);
  }
  bool ok = true;
  for (const auto& s : suites) {
    const VerifyReport rep = run_verify(s, pmax);
    out << rep.suite << " pmax=" << pmax << ": " << (rep.ok() ? "PASS" : "FAIL") << " (" << rep.checks << " checks, "
        << rep.failures.size() << " failures)";
    if (rep.suite == "charsum") out << " max error " << std::setprecision(3) << rep.max_error;
    out << "\n";
    for (const auto& note : rep.notes) out << "  note: " << note << "\n";
    for (const auto& f : rep.failures) out << "  FAIL " << f << "\n";
    ok = ok && rep.ok();
  }
  return ok ? kExitOk : kExitFail;
}

std::string join(const std::vector<u64>& xs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? " " : "") << xs[i];
  return os.str();
}

int cmd_classify(const Options& o, std::ostream& out) {
  require_odd_prime(o.p);
  const Family family = parse_family(o.family);
  const FieldCtx ctx(o.p);
  const u64 n = static_cast<u64>(std::stoi(o.n));
  if (n < 3) throw std::invalid_argument("n must be at least 3");

  std::optional<u64> only;
  std::vector<u64> ts;
  if (o.t.empty() || o.t == "all") {
    for (u64 t = family == Family::G ? 0 : 1; t < o.p; ++t) ts.push_back(t);
  } else {
    only = residue_of_t(o.t, o.p);
    ts.push_back(*only);
  }

  out << "t,verdict,reason,value,roots\n";
  for (u64 t : ts) {
    const ZeroCertificate cert = classify(ctx, family, n, t);
    out << t << ',' << to_string(cert.verdict) << ',' << to_string(cert.reason) << ','
        << (cert.value ? cert.value->str() : "") << ',' << join(cert.roots) << "\n";
  }

  bool ok = true;
  const auto checks = corollary_predicates(ctx, n, only);
  if (!checks.empty()) out << "\ncheck,outcome,expected,actual\n";
  for (const auto& c : checks) {
    out << c.id << ',' << to_string(c.outcome) << ',' << c.expected << ',' << c.actual << "\n";
    if (c.outcome == CheckOutcome::fail) ok = false;
  }
  return ok ? kExitOk : kExitFail;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"p-adic hypergeometric functions nGn and nG~n over F_p", "padic-hg"};
  app.require_subcommand(1);
  Options o;

  auto* eval = app.add_subcommand("eval", "evaluate one value");
  add_family(eval, o);
  eval->add_option("--p", o.p, "odd prime")->required();
  eval->add_option("--n", o.n, "n >= 3")->required();
  eval->add_option("--t", o.t, "argument, integer or a/b")->required();
  eval->add_option("--precision", o.precision, "p-adic digits m (default 2)");
  eval->add_option("--method", o.method, "definition, closed, both (default) or oracle");

  auto* scan = app.add_subcommand("scan", "evaluate over a range of primes and arguments");
  add_family(scan, o);
  scan->add_option("--n", o.n, "3, 3..6, 3,4 or p-1");
  scan->add_option("--p", o.p, "single prime");
  scan->add_option("--pmin", o.pmin, "smallest prime (default 3)");
  scan->add_option("--pmax", o.pmax, "largest prime");
  scan->add_option("--t", o.t, "all (default) or a comma list such as 1,-1,1/2");
  scan->add_option("--precision", o.precision, "p-adic digits m (default 2)");
  scan->add_option("--method", o.method, "definition, closed (default), both or oracle");
  scan->add_option("--out", o.out, "CSV path; the summary goes to <out>.summary.json");
  scan->add_option("--workers", o.workers, "worker threads (default 1)");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", o.suite, "thm-G, thm-Gt, cor-all, charsum, gamma, floors, valuation or all")
      ->required()
      ->check(CLI::IsMember([] {
        auto s = verify_suites();
        s.push_back("all");
        return s;
      }()));
  verify->add_option("--pmax", o.pmax, "largest prime (default 100)");

  auto* cls = app.add_subcommand("classify", "zero certificates and corollary checks at one prime");
  add_family(cls, o);
  cls->add_option("--p", o.p, "odd prime")->required();
  cls->add_option("--n", o.n, "n >= 3");
  cls->add_option("--t", o.t, "all (default) or one argument");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (eval->parsed()) return cmd_eval(o, out);
    if (scan->parsed()) return cmd_scan(o, out, err);
    if (verify->parsed()) return cmd_verify(o, out);
    return cmd_classify(o, out);
  } catch (const capacity_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace padic_hg
