#include "cli.hpp"

#include <cmath>
#include <iomanip>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "trigonal/errors.hpp"
#include "trigonal/io.hpp"
#include "trigonal/straighten.hpp"
#include "trigonal/theta.hpp"
#include "trigonal/thomae.hpp"
#include "trigonal/young.hpp"

namespace trigonal::cli {

namespace {

using nlohmann::json;

struct GlobalConfig {
  std::string output = "text";
  std::uint64_t seed = 1;
  double tol = 1e-12;
  int limit = kDefaultEnumerationLimit;

  bool json_mode() const { return output == "json"; }
};

// Largest m whose ledger is checked by full expansion rather than random points.
constexpr int kExactVerifyMaxM = 3;
// Brute-force tableau counts are produced up to this many cells.
constexpr int kEnumeratedDimensionMaxN = 12;

std::string format_double(double x) {
  std::ostringstream s;
  s << std::setprecision(17) << x;
  return s.str();
}

std::string format_complex(std::complex<double> z) {
  std::ostringstream s;
  s << std::setprecision(17) << z.real() << (std::signbit(z.imag()) ? " - " : " + ") << std::abs(z.imag()) << "i";
  return s.str();
}

std::string format_expr(const StraightenedExpr& expr) {
  std::string line = expr.source.to_string() + " =";
  for (const auto& [t, c] : expr.terms) {
    line += ' ';
    line += c > 0 ? "+" : "";
    line += std::to_string(c) + "*[" + t.to_string() + "]";
  }
  return line;
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

// ---------------------------------------------------------------------------

struct DimensionRow {
  int m;
  BigInt formula;
  BigInt hook;
  std::optional<std::size_t> enumerated;

  bool agree() const { return formula == hook && (!enumerated || BigInt(static_cast<unsigned long>(*enumerated)) == formula); }
};

DimensionRow dimension_row(int m, int limit) {
  if (m < 1) throw InputError("m must be positive");
  DimensionRow row{m, factorial(3 * m) * 2 / (factorial(m + 2) * factorial(m + 1) * factorial(m)),
                   hook_count(YoungShape::rectangle(m, 3)), std::nullopt};
  if (3 * m <= std::min(kEnumeratedDimensionMaxN, limit)) {
    row.enumerated = enumerate_standard(YoungShape::rectangle(m, 3), limit).size();
  }
  return row;
}

int cmd_dimension(const GlobalConfig& cfg, int m, std::optional<int> to, std::ostream& out) {
  const int last = to.value_or(m);
  if (last < m) throw InputError("--to must not be below --m");
  json rows = json::array();
  bool ok = true;
  for (int k = m; k <= last; ++k) {
    const auto row = dimension_row(k, cfg.limit);
    ok = ok && row.agree();
    if (cfg.json_mode()) {
      rows.push_back({{"m", k},
                      {"formula_value", row.formula.get_str()},
                      {"hook_value", row.hook.get_str()},
                      {"enumerated_value", row.enumerated ? json(*row.enumerated) : json(nullptr)},
                      {"agree", row.agree()}});
    } else {
      out << "m=" << k << "  formula=" << row.formula.get_str() << "  hook=" << row.hook.get_str()
          << "  enumerated=" << (row.enumerated ? std::to_string(*row.enumerated) : "-")
          << "  " << (row.agree() ? "agree" : "MISMATCH") << '\n';
    }
  }
  if (cfg.json_mode()) emit(out, rows);
  return ok ? kExitOk : kExitVerificationFailed;
}

int cmd_tableaux(const GlobalConfig& cfg, const std::string& shape_text, std::optional<int> m, std::ostream& out) {
  if (shape_text.empty() == !m.has_value()) throw InputError("give exactly one of --shape or --m");
  const YoungShape shape = m ? YoungShape::rectangle(*m, 3) : parse_shape(shape_text);
  const auto tableaux = enumerate_standard(shape, cfg.limit);
  if (cfg.json_mode()) {
    json list = json::array();
    for (const auto& t : tableaux) list.push_back(t.to_string());
    emit(out, {{"shape", shape.to_string()}, {"count", tableaux.size()}, {"tableaux", list}});
  } else {
    for (const auto& t : tableaux) out << t.to_string() << '\n';
    out << tableaux.size() << " standard tableaux of shape (" << shape.to_string() << ")\n";
  }
  return kExitOk;
}

int cmd_partitions(const GlobalConfig& cfg, int m, std::ostream& out) {
  const auto parts = enumerate_partitions(m, cfg.limit);
  std::size_t standard = 0;
  json list = json::array();
  for (const auto& p : parts) {
    const bool s = is_standard(p.to_tableau());
    standard += s ? 1 : 0;
    if (cfg.json_mode()) {
      list.push_back({{"partition", p.to_string()}, {"standard", s}});
    } else {
      out << p.to_string() << (s ? "  standard" : "") << '\n';
    }
  }
  if (cfg.json_mode()) {
    emit(out, {{"m", m}, {"count", parts.size()}, {"standard", standard}, {"partitions", list}});
  } else {
    out << parts.size() << " partitions, " << standard << " standard\n";
  }
  return kExitOk;
}

// Exact for small m, otherwise at `trials` random points.
bool verify_identity(const StraightenedExpr& expr, int m, int trials, std::uint64_t seed, Verification& how) {
  if (m <= kExactVerifyMaxM) {
    how = Verification::kExact;
    return verify_exact(expr);
  }
  how = Verification::kRandomized;
  return verify_at_points(expr, random_points(3 * m, trials, seed));
}

int cmd_straighten(const GlobalConfig& cfg, const std::string& text, std::optional<int> m, int trials,
                   std::ostream& out) {
  const TrigonalPartition part = parse_partition(text);
  if (m && *m != part.m()) {
    throw InputError("--m " + std::to_string(*m) + " does not match the partition block size " +
                     std::to_string(part.m()));
  }
  if (part.n() > cfg.limit) throw SizeError("partition exceeds the enumeration limit");
  const auto expr = straighten(part.to_tableau());
  Verification how{};
  const bool ok = verify_identity(expr, part.m(), trials, cfg.seed, how);
  if (cfg.json_mode()) {
    emit(out, identity_to_json(expr, part.m(), how));
  } else {
    out << format_expr(expr) << "  (" << (ok ? "verified " : "FAILED ") << to_string(how) << ")\n";
  }
  return ok ? kExitOk : kExitVerificationFailed;
}

int cmd_identities(const GlobalConfig& cfg, int m, int trials, std::ostream& out) {
  const auto ledger = identity_ledger(m, cfg.limit);
  const auto report = coefficient_report(ledger);
  bool ok = true;
  json list = json::array();
  for (const auto& expr : ledger) {
    Verification how{};
    const bool verified = verify_identity(expr, m, trials, cfg.seed, how);
    ok = ok && verified;
    if (cfg.json_mode()) {
      list.push_back(identity_to_json(expr, m, how));
    } else {
      out << format_expr(expr) << (verified ? "" : "  FAILED") << '\n';
    }
  }
  if (cfg.json_mode()) {
    emit(out, {{"m", m}, {"identities", list}, {"report", report_to_json(report)}});
  } else {
    out << ledger.size() << " identities; coefficients min " << (report.min ? std::to_string(*report.min) : "-")
        << ", max " << (report.max ? std::to_string(*report.max) : "-") << "; all +-1: "
        << (report.all_unit ? "yes" : "no") << '\n';
    for (const auto& [abs_c, count] : report.histogram) out << "  |c| = " << abs_c << ": " << count << '\n';
  }
  return ok ? kExitOk : kExitVerificationFailed;
}

int cmd_verify(const GlobalConfig& cfg, int m, const std::string& mode, int trials, std::ostream& out) {
  if (mode != "exact" && mode != "random") throw InputError("--mode must be 'exact' or 'random'");
  if (trials < 1) throw InputError("--trials must be positive");
  const auto ledger = identity_ledger(m, cfg.limit);
  const auto points = random_points(3 * m, trials, cfg.seed);
  std::size_t passed = 0;
  for (const auto& expr : ledger) {
    const bool ok = mode == "exact" ? verify_exact(expr) : verify_at_points(expr, points);
    passed += ok ? 1 : 0;
  }
  const bool ok = passed == ledger.size();
  const std::string label = mode == "exact" ? "exact-verified" : "randomized-verified";
  if (cfg.json_mode()) {
    emit(out, {{"m", m},
               {"mode", mode},
               {"identities", ledger.size()},
               {"passed", passed},
               {"trials", mode == "exact" ? json(nullptr) : json(trials)},
               {"seed", mode == "exact" ? json(nullptr) : json(cfg.seed)},
               {"ok", ok}});
  } else {
    out << passed << '/' << ledger.size() << " identities " << label;
    if (mode == "random") out << " (" << trials << " points, seed " << cfg.seed << ")";
    out << '\n';
  }
  return ok ? kExitOk : kExitVerificationFailed;
}

struct TauSource {
  std::string file;
  bool random = false;
  int g = 0;
  double im_floor = 1.0;

  SiegelMatrix<double> load(std::uint64_t seed) const {
    if (file.empty() == !random) throw InputError("give exactly one of --tau or --random-tau");
    if (!file.empty()) return read_siegel_file(file);
    if (g < 1) throw InputError("--random-tau needs --g");
    return random_siegel<double>(g, seed, im_floor);
  }
};

int cmd_theta(const GlobalConfig& cfg, const TauSource& source, const std::string& eps, const std::string& epsp,
              std::ostream& out) {
  const auto tau = source.load(cfg.seed);
  const RationalCharacteristic ch(parse_rational_list(eps), parse_rational_list(epsp));
  const auto result = theta_const(ch, tau, cfg.tol);
  if (cfg.json_mode()) {
    emit(out, {{"re", result.value.real()},
               {"im", result.value.imag()},
               {"radius", result.radius},
               {"terms", result.terms},
               {"doubling_delta", result.doubling_delta},
               {"tol", cfg.tol},
               {"tau", siegel_to_json(tau)}});
  } else {
    out << "theta = " << format_complex(result.value) << "\n  radius " << result.radius << ", " << result.terms
        << " terms, doubling delta " << format_double(result.doubling_delta) << '\n';
  }
  return result.doubling_delta < cfg.tol ? kExitOk : kExitVerificationFailed;
}

int cmd_kopeliovich(const GlobalConfig& cfg, TauSource source, const std::string& mu, const std::string& mup,
                    int nu_max, double threshold, std::ostream& out) {
  if (nu_max != 2 && nu_max != 3) throw InputError("--nu-max must be 2 or 3");
  const RationalCharacteristic ch(parse_rational_list(mu), parse_rational_list(mup));
  if (source.random && source.g == 0) source.g = ch.genus();
  const auto tau = source.load(cfg.seed);
  const auto result = kopeliovich_sum(ch, tau, static_cast<NuRange>(nu_max), cfg.tol);
  const double magnitude = std::abs(result.residual);
  const bool ok = magnitude < threshold;
  if (cfg.json_mode()) {
    emit(out, {{"g", ch.genus()},
               {"odd_integral", is_odd_integral(ch)},
               {"nu_range", "0.." + std::to_string(nu_max)},
               {"residual_re", result.residual.real()},
               {"residual_im", result.residual.imag()},
               {"residual_abs", magnitude},
               {"threshold", threshold},
               {"theta_evaluations", result.theta_evaluations},
               {"max_term", result.max_term},
               {"ok", ok}});
  } else {
    out << "residual = " << format_complex(result.residual) << "\n|residual| = " << format_double(magnitude)
        << " (threshold " << threshold << ", nu in 0.." << nu_max << ", " << result.theta_evaluations
        << " theta constants, odd integral: " << (is_odd_integral(ch) ? "yes" : "no") << ")\n"
        << (ok ? "vanishes" : "DOES NOT VANISH") << '\n';
  }
  return ok ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Theta-constant identities for cyclic trigonal covers", "trigonal"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalConfig cfg;
  app.add_option("--output", cfg.output, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", cfg.seed, "Seed for every randomized path");
  app.add_option("--tol", cfg.tol, "Absolute tolerance for theta sums")->check(CLI::Range(1e-15, 0.5));
  app.add_option("--limit", cfg.limit, "Enumeration limit on the number of cells")->check(CLI::PositiveNumber);

  int m = 0;
  std::optional<int> opt_m;
  std::optional<int> to;
  int trials = 5;
  std::string shape, partition, mode = "exact", eps, epsp, mu, mup;
  TauSource tau;
  int nu_max = 2;
  double threshold = 1e-8;

  auto* dimension = app.add_subcommand("dimension", "Dimension of the span of the block polynomials");
  dimension->add_option("--m", m, "Block size")->required()->check(CLI::PositiveNumber);
  dimension->add_option("--to", to, "Produce rows m..to");

  auto* tableaux = app.add_subcommand("tableaux", "List standard tableaux of a shape");
  tableaux->add_option("--shape", shape, "Row lengths, e.g. 3,3");
  tableaux->add_option("--m", opt_m, "Use the m x 3 rectangle")->check(CLI::PositiveNumber);

  auto* partitions = app.add_subcommand("partitions", "List the trigonal partitions of {1..3m}");
  partitions->add_option("--m", m, "Block size")->required()->check(CLI::PositiveNumber);

  auto* straighten_cmd = app.add_subcommand("straighten", "Straighten one partition onto the standard basis");
  straighten_cmd->add_option("--partition", partition, "e.g. 1,2|3,6|4,5")->required();
  straighten_cmd->add_option("--m", opt_m, "Block size (checked against the partition)");
  straighten_cmd->add_option("--trials", trials, "Random points when exact expansion is skipped");

  auto* identities = app.add_subcommand("identities", "Identity ledger with coefficient report");
  identities->add_option("--m", m, "Block size")->required()->check(CLI::PositiveNumber);
  identities->add_option("--trials", trials, "Random points when exact expansion is skipped");

  auto* verify = app.add_subcommand("verify", "Verify every identity of the ledger");
  verify->add_option("--m", m, "Block size")->required()->check(CLI::PositiveNumber);
  verify->add_option("--mode", mode, "exact or random")->check(CLI::IsMember({"exact", "random"}));
  verify->add_option("--trials", trials, "Random points per identity");

  auto add_tau = [&tau](CLI::App* cmd) {
    cmd->add_option("--tau", tau.file, "JSON file with g, re, im");
    cmd->add_flag("--random-tau", tau.random, "Use a seeded random Siegel matrix");
    cmd->add_option("--g", tau.g, "Genus for --random-tau");
    cmd->add_option("--im-floor", tau.im_floor, "Lower bound on the eigenvalues of Im(tau) for --random-tau");
  };

  auto* theta = app.add_subcommand("theta", "Evaluate a theta constant");
  add_tau(theta);
  theta->add_option("--eps", eps, "Comma-separated rationals")->required();
  theta->add_option("--epsp", epsp, "Comma-separated rationals")->required();

  auto* kop = app.add_subcommand("kopeliovich", "Alternating cubic sum over order-3 shifts");
  add_tau(kop);
  kop->add_option("--mu", mu, "Integral characteristic, top row")->required();
  kop->add_option("--mup", mup, "Integral characteristic, bottom row")->required();
  kop->add_option("--nu-max", nu_max, "Shift range 0..2 or 0..3");
  kop->add_option("--threshold", threshold, "Residual magnitude counted as vanishing");

  std::vector<std::string> argv_store{"trigonal"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*dimension) return cmd_dimension(cfg, m, to, out);
    if (*tableaux) return cmd_tableaux(cfg, shape, opt_m, out);
    if (*partitions) return cmd_partitions(cfg, m, out);
    if (*straighten_cmd) return cmd_straighten(cfg, partition, opt_m, trials, out);
    if (*identities) return cmd_identities(cfg, m, trials, out);
    if (*verify) return cmd_verify(cfg, m, mode, trials, out);
    if (*theta) return cmd_theta(cfg, tau, eps, epsp, out);
    if (*kop) return cmd_kopeliovich(cfg, tau, mu, mup, nu_max, threshold, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const SizeError& e) {
    err << "size limit: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ToleranceError& e) {
    err << "tolerance: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace trigonal::cli
