#include "commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <vector>

#include "serialize.hpp"

namespace lcmq::cli {

namespace {

constexpr const char* kVerifyUsage = "usage: lcmq verify --c C --m M --n N [--out PATH]\n";
constexpr const char* kBezoutUsage = "usage: lcmq bezout --c C --k K [--out PATH]\n";
constexpr const char* kTableUsage = "usage: lcmq table --c C --n-max N [--out PATH]\n";
constexpr const char* kSweepUsage =
    "usage: lcmq sweep --n-max N [--n-min N] [--c-min C] [--c-max C]\n"
    "                  [--m-policy all|half_ceil|fixed|frontier] [--m M]\n"
    "                  [--format csv|json] [--parallelism P] [--out PATH]\n";

}  // namespace

int sweep_exit_code(std::span<const SweepRow> rows) {
  const bool bad = std::any_of(rows.begin(), rows.end(), [](const SweepRow& r) { return !r.ok(); });
  return bad ? kExitViolation : kExitOk;
}

int cmd_verify(const Integer& c, long m, long n, std::ostream& out, std::ostream& err) {
  if (c < 1 || m < 1 || m > n) {
    err << "verify: requires c >= 1 and 1 <= m <= n\n" << kVerifyUsage;
    return kExitUsage;
  }
  std::vector<std::string> violations;
  const TripleProducts t = triple_products(c, m, n);

  Json doc;
  doc["c"] = int_json(c);
  doc["m"] = m;
  doc["n"] = n;
  try {
    doc["divisor"] = to_json(assemble_divisor_report(c, m, n, t));
  } catch (const InvariantViolation& e) {
    violations.emplace_back(e.what());
    doc["divisor"] = nullptr;
  }
  const OonChecks oon = oon_checks_against(m, n, t.L);
  if (!oon.binom_ok) violations.emplace_back("L < m C(n,m)");
  if (oon.two_n_ok && !*oon.two_n_ok) violations.emplace_back("L < 2^n");
  doc["oon"] = to_json(oon);
  const BoundReport bounds = evaluate_bounds(c, m, n, t.L, LogFactorials(n));
  for (Bound b : kAllBounds)
    if (bounds[b].applicable && !bounds[b].holds)
      violations.push_back("bound " + std::string(bound_name(b)) + " exceeds log L");
  doc["bounds"] = to_json(bounds);
  doc["ok"] = violations.empty();
  doc["violations"] = violations;
  out << doc.dump(2) << '\n';
  return violations.empty() ? kExitOk : kExitViolation;
}

int cmd_sweep(const SweepConfig& config, std::ostream& out, std::ostream& err) {
  try {
    config.validate();
  } catch (const std::invalid_argument& e) {
    err << "sweep: " << e.what() << '\n' << kSweepUsage;
    return kExitUsage;
  }
  const std::vector<SweepRow> rows = run_sweep(config);
  if (config.output_format == OutputFormat::json)
    write_sweep_json(rows, config, out);
  else
    write_sweep_csv(rows, out);
  return sweep_exit_code(rows);
}

int cmd_bezout(const Integer& c, long k, std::ostream& out, std::ostream& err) {
  if (c < 1 || k < 0) {
    err << "bezout: requires c >= 1 and k >= 0\n" << kBezoutUsage;
    return kExitUsage;
  }
  try {
    const BezoutCertificate cert = bezout_certificate(c, k);
    verify_certificate(cert);
    out << to_json(cert).dump(2) << '\n';
  } catch (const InvariantViolation& e) {
    err << "bezout: " << e.what() << '\n';
    return kExitViolation;
  }
  return kExitOk;
}

int cmd_table(const Integer& c, long n_max, std::ostream& out, std::ostream& err) {
  if (c < 1 || n_max < 1 || !c.fits_slong_p()) {
    err << "table: requires c >= 1 and n-max >= 1\n" << kTableUsage;
    return kExitUsage;
  }
  SweepConfig config;
  config.c_min = config.c_max = c.get_si();
  config.n_min = 1;
  config.n_max = n_max;
  config.m_policy = MPolicy::all;
  const std::vector<SweepRow> rows = run_sweep(config);
  write_table_csv(rows, out);
  return sweep_exit_code(rows);
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of divisors and lower bounds for lcm{m^2+c, ..., n^2+c}", "lcmq"};
  app.require_subcommand(1);
  std::string out_path = "stdout";

  long c = 1, m = 1, n = 1, k = 0;
  auto* verify = app.add_subcommand("verify", "Check one (c, m, n) triple and print a JSON report");
  verify->add_option("--c", c, "ring parameter")->required()->check(CLI::PositiveNumber);
  verify->add_option("--m", m, "first index")->required()->check(CLI::PositiveNumber);
  verify->add_option("--n", n, "last index")->required()->check(CLI::PositiveNumber);
  verify->add_option("--out", out_path, "output file, or stdout");

  SweepConfig config;
  std::string policy = "all", format = "csv";
  std::optional<long> fixed_m;
  auto* sweep = app.add_subcommand("sweep", "Check every triple of a grid; CSV or JSON rows");
  sweep->add_option("--c-min", config.c_min)->check(CLI::PositiveNumber);
  sweep->add_option("--c-max", config.c_max)->check(CLI::PositiveNumber);
  sweep->add_option("--n-min", config.n_min)->check(CLI::PositiveNumber);
  sweep->add_option("--n-max", config.n_max)->required()->check(CLI::PositiveNumber);
  sweep->add_option("--m-policy", policy)->check(CLI::IsMember({"all", "half_ceil", "fixed", "frontier"}));
  sweep->add_option("--m", fixed_m, "m for --m-policy fixed")->check(CLI::PositiveNumber);
  sweep->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
  sweep->add_option("--parallelism", config.parallelism)->check(CLI::Range(1u, 1024u));
  sweep->add_option("--out", out_path, "output file, or stdout");

  auto* bezout = app.add_subcommand("bezout", "Emit the Bezout certificate for P_k as JSON");
  bezout->add_option("--c", c, "ring parameter")->required()->check(CLI::PositiveNumber);
  bezout->add_option("--k", k, "degree parameter")->required()->check(CLI::NonNegativeNumber);
  bezout->add_option("--out", out_path, "output file, or stdout");

  long n_max = 1;
  auto* table = app.add_subcommand("table", "Bound tightness log(bound)/log(L) for all m <= n <= n-max");
  table->add_option("--c", c, "ring parameter")->required()->check(CLI::PositiveNumber);
  table->add_option("--n-max", n_max)->required()->check(CLI::PositiveNumber);
  table->add_option("--out", out_path, "output file, or stdout");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    const auto* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
    err << sub->help();
    return kExitUsage;
  }

  if (sweep->parsed()) {
    config.m_policy = policy == "all"         ? MPolicy::all
                      : policy == "half_ceil" ? MPolicy::half_ceil
                      : policy == "fixed"     ? MPolicy::fixed
                                              : MPolicy::frontier;
    if (config.m_policy == MPolicy::fixed) {
      if (!fixed_m) {
        err << "sweep: --m-policy fixed requires --m\n" << kSweepUsage;
        return kExitUsage;
      }
      config.fixed_m = *fixed_m;
    }
    config.output_format = format == "json" ? OutputFormat::json : OutputFormat::csv;
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (out_path != "stdout" && out_path != "-") {
    file.open(out_path);
    if (!file) {
      err << "cannot open " << out_path << " for writing\n";
      return kExitUsage;
    }
    sink = &file;
  }

  try {
    if (verify->parsed()) return cmd_verify(c, m, n, *sink, err);
    if (sweep->parsed()) return cmd_sweep(config, *sink, err);
    if (bezout->parsed()) return cmd_bezout(c, k, *sink, err);
    if (table->parsed()) return cmd_table(c, n_max, *sink, err);
  } catch (const InvariantViolation& e) {
    err << "invariant violation: " << e.what() << '\n';
    return kExitViolation;
  } catch (const std::invalid_argument& e) {
    err << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace lcmq::cli
