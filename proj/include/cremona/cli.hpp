#pragma once

// Command dispatch shared by the `cremona` executable and the tests.

#include <fstream>
#include <optional>
#include <stdexcept>
#include <ostream>
#include <string>

#include "cremona/classify.hpp"
#include "cremona/expr.hpp"
#include "cremona/report.hpp"

namespace cremona {

struct CliConfig {
  std::string command;
  int n_max = 200;
  int ineq_max = 100000;
  std::optional<long> a_max;
  unsigned threads = 1;
  bool hc_axiom = true;
  bool json = false;
  std::string report_path;
  // eval
  int n = 0;
  int m = 0;
  std::string deg;
  std::string expr;
};

class UsageError : public std::invalid_argument {
 public:
  explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

enum ExitCode : int { kExitOk = 0, kExitNegative = 1, kExitUsage = 2 };

/// "d1", "d2" or a positive integer.
inline Poly parse_degree(const std::string& s) {
  if (s == "d1" || s == "d2") return Poly::var(s);
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw UsageError("--deg must be a positive integer, d1 or d2; got '" + s + "'");
  const Integer v(s);
  if (v < 1) throw UsageError("--deg must be positive");
  return Poly(Rational(v));
}

inline int run_cli(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.command == "verify") {
      const auto rep = verify_main_theorem(VerifyOptions{cfg.n_max, cfg.ineq_max, cfg.hc_axiom, cfg.threads});
      const std::string body = cfg.json ? to_json(rep).dump(2) + "\n" : to_text(rep);
      if (!cfg.report_path.empty()) {
        std::ofstream f(cfg.report_path);
        if (!f) {
          err << "cannot write report to " << cfg.report_path << "\n";
          return kExitUsage;
        }
        f << body;
        out << "conclusion: " << rep.conclusion << "\n";
      } else {
        out << body;
      }
      if (!rep.verified()) err << "verification negative: " << rep.conclusion << "\n";
      return rep.verified() ? kExitOk : kExitNegative;
    }
    if (cfg.command == "enumerate") {
      const auto scan = enumerate_candidates(ScanOptions{cfg.n_max, cfg.a_max, cfg.threads, cfg.hc_axiom});
      if (cfg.json) {
        out << to_json(scan).dump(2) << "\n";
      } else {
        for (const auto& t : scan.survivors) out << t.str() << "\n";
        if (!cfg.hc_axiom) out << "# without hc gate: " << detail::join(scan.hc_extras) << "\n";
      }
      return kExitOk;
    }
    if (cfg.command == "eval") {
      const Expr ast = parse_expr(cfg.expr);
      out << eval_expr(ast, cfg.n, cfg.m, parse_degree(cfg.deg)).str() << "\n";
      return kExitOk;
    }
    if (cfg.command == "exclude-case2") {
      const auto w = exclude_case2();
      out << (cfg.json ? to_json(w).dump(2) + "\n" : to_text(w));
      return w.ok ? kExitOk : kExitNegative;
    }
    err << "unknown command '" << cfg.command << "'\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitNegative;
  }
}

}  // namespace cremona
