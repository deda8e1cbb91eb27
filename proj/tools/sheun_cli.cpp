#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sheun/families.hpp"
#include "sheun/report.hpp"
#include "sheun/structure.hpp"
#include "sheun/verifier.hpp"

namespace {

constexpr int kUsageError = 2;

std::vector<sheun::Rational> parse_params(const std::string& csv) {
  std::vector<sheun::Rational> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(sheun::rat_parse(item));
  return out;
}

int usage_error(const std::string& message) {
  std::cerr << "error: " << message << "\n";
  return kUsageError;
}

// Ascending coefficient list; a constant prints bare, e.g. "1" or "[50, -10]".
std::string format_poly_text(const sheun::LambdaPoly& q) {
  if (q.degree() <= 0) return sheun::rat_str(q.coeff(0));
  std::string out = "[";
  for (int i = 0; i <= q.degree(); ++i) {
    if (i) out += ", ";
    out += sheun::rat_str(q.coeff(i));
  }
  return out + "]";
}

std::string format_poly_csv(const sheun::LambdaPoly& q) {
  std::string out;
  for (int i = 0; i <= std::max(q.degree(), 0); ++i) {
    if (i) out += ",";
    out += sheun::rat_str(q.coeff(i));
  }
  return out;
}

int cmd_verify(const std::string& suite, int trials, std::uint64_t seed,
               int n_max, std::optional<int> N, const std::string& format) {
  sheun::SuiteOptions opt;
  opt.trials = trials;
  opt.seed = seed;
  opt.n_max = n_max;
  opt.N = N;
  std::vector<sheun::Report> reports;
  try {
    reports = sheun::run_suite(suite, opt);
  } catch (const std::invalid_argument& e) {
    return usage_error(e.what());
  }
  std::cout << sheun::render_reports(reports,
                                     sheun::report_format_from_string(format));
  return sheun::reports_failed(reports) ? 1 : 0;
}

int cmd_eval(const std::string& family, std::optional<int> n,
             std::optional<int> N, const std::string& params_csv,
             const std::string& format) {
  if (!n) return usage_error("missing required flag: --n");
  if (params_csv.empty()) return usage_error("missing required flag: --params");
  std::vector<sheun::Rational> p;
  try {
    p = parse_params(params_csv);
  } catch (const std::exception& e) {
    return usage_error(std::string("bad --params: ") + e.what());
  }

  sheun::LambdaPoly q;
  try {
    if (family == "wilson" || family == "wilson-scaled") {
      if (p.size() != 4)
        return usage_error("--params needs four rationals a,b,c,d");
      sheun::ParamSet P(p[0], p[1], p[2], p[3]);
      q = family == "wilson" ? sheun::wilson(*n, P) : sheun::wilson_scaled(*n, P);
    } else if (family == "cdhahn") {
      if (p.size() != 3)
        return usage_error("--params needs three rationals a,b,c");
      q = sheun::cont_dual_hahn(*n, p[0], p[1], p[2]);
    } else if (family == "pararacah") {
      if (!N) return usage_error("missing required flag: --N");
      if (p.size() != 3)
        return usage_error("--params needs three rationals a,c,w");
      q = sheun::para_racah(*n, *N, p[0], p[1], p[2]);
    } else {
      return usage_error("unknown family: " + family);
    }
  } catch (const sheun::SingularPochhammer& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  if (format == "json")
    std::cout << sheun::lambda_poly_to_json(q) << "\n";
  else if (format == "csv")
    std::cout << format_poly_csv(q) << "\n";
  else
    std::cout << format_poly_text(q) << "\n";
  return 0;
}

int cmd_dump_op(const std::string& name, const std::string& params_csv,
                const std::string& s_str) {
  std::vector<sheun::Rational> p;
  try {
    if (!params_csv.empty()) p = parse_params(params_csv);
  } catch (const std::exception& e) {
    return usage_error(std::string("bad --params: ") + e.what());
  }

  auto need4 = [&](const char* what) -> std::optional<sheun::ParamSet> {
    if (p.size() != 4) {
      usage_error(std::string(what) + " needs --params a,b,c,d");
      return std::nullopt;
    }
    return sheun::ParamSet(p[0], p[1], p[2], p[3]);
  };
  auto need_s = [&]() -> std::optional<sheun::Rational> {
    if (s_str.empty()) {
      usage_error("missing required flag: --s");
      return std::nullopt;
    }
    return sheun::rat_parse(s_str);
  };

  const sheun::SheunBasis b = sheun::sheun_basis();
  std::optional<sheun::DiffOp> op;
  try {
    if (name == "L") op = b.L;
    else if (name == "M1") op = b.M1;
    else if (name == "M2") op = b.M2;
    else if (name == "R1") op = b.R1;
    else if (name == "R2") op = b.R2;
    else if (name == "X") op = sheun::x_op();
    else if (name == "P") {
      if (p.size() != 2) return usage_error("P needs --params s,t");
      op = sheun::p_op(p[0], p[1]);
    } else if (name == "mu") {
      if (auto P = need4("mu")) op = sheun::mu_op(*P); else return kUsageError;
    } else if (name == "mustar") {
      if (auto P = need4("mustar")) op = sheun::mustar_op(*P); else return kUsageError;
    } else if (name == "tau") {
      op = sheun::tau_op();  // parameter independent; --params accepted and ignored
    } else if (name == "taustar") {
      if (auto P = need4("taustar")) op = sheun::taustar_stated(*P); else return kUsageError;
    } else if (name == "taustar-corrected") {
      if (auto P = need4("taustar-corrected")) op = sheun::taustar_corrected(*P);
      else return kUsageError;
    } else if (name == "U" || name == "V" || name == "R") {
      if (p.size() != 1)
        return usage_error(name + " needs --params e1");
      sheun::UniversalSet u = sheun::universal_set(p[0]);
      op = name == "U" ? u.U : name == "V" ? u.V : u.R;
    } else if (name == "Y") {
      op = sheun::tau_op() * sheun::Rational(1, 4);
    } else if (name == "S0" || name == "S3" || name == "S+" ||
               name == "Splus" || name == "S-" || name == "S−" ||
               name == "Sminus") {
      auto s = need_s();
      if (!s) return kUsageError;
      sheun::SklyaninSet k = sheun::sklyanin_set(*s);
      if (name == "S0") op = k.S0;
      else if (name == "S3") op = k.S3;
      else if (name == "S+" || name == "Splus") op = k.Splus;
      else op = k.Sminus;
    } else {
      return usage_error("unknown operator: " + name);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  std::cout << sheun::diffop_to_json(*op) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"S-Heun operator workbench on the quadratic grid"};
  app.require_subcommand(1);

  std::string suite, family, op_name;
  std::string params_csv, s_str;
  std::string format = "text";
  int trials = 5;
  std::uint64_t seed = 0;
  int n_max = 8;
  std::optional<int> N;
  std::optional<int> n;

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", suite, "suite name");
  verify->add_option("--trials", trials, "random parameter tuples per suite");
  verify->add_option("--seed", seed, "sampler seed");
  verify->add_option("--n-max", n_max, "maximum polynomial degree probed");
  verify->add_option("--N", N, "truncation / para-Racah size");
  verify->add_option("--format", format, "text|json|csv");

  CLI::App* eval = app.add_subcommand("eval", "evaluate a polynomial family member");
  eval->add_option("family", family, "wilson|wilson-scaled|cdhahn|pararacah");
  eval->add_option("--n", n, "degree");
  eval->add_option("--N", N, "para-Racah size");
  eval->add_option("--params", params_csv, "comma-separated rationals");
  eval->add_option("--format", format, "text|json|csv");

  CLI::App* dump = app.add_subcommand("dump-op", "emit a named operator as JSON");
  dump->add_option("name", op_name, "operator name");
  dump->add_option("--params", params_csv, "comma-separated rationals");
  dump->add_option("--s", s_str, "spin parameter");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  }

  if (verify->parsed()) {
    if (suite.empty()) return usage_error("missing required flag: --suite");
    return cmd_verify(suite, trials, seed, n_max, N, format);
  }
  if (eval->parsed()) {
    if (family.empty()) return usage_error("missing required argument: family");
    return cmd_eval(family, n, N, params_csv, format);
  }
  if (dump->parsed()) {
    if (op_name.empty()) return usage_error("missing required argument: name");
    return cmd_dump_op(op_name, params_csv, s_str);
  }
  return usage_error("missing command: verify|eval|dump-op");
}
