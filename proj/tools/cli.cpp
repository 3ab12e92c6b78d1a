#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "qagent/gadget.hpp"
#include "qagent/json_io.hpp"
#include "qagent/metrics.hpp"
#include "qagent/scenarios.hpp"
#include "qagent/verify.hpp"

namespace qagent::cli {

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailure = 1;
constexpr int kUsageError = 2;

bool check_common(const CliConfig& cfg, std::ostream& err) {
  if (cfg.dim < 2) {
    err << "error: --dim must be >= 2\n";
    return false;
  }
  if (cfg.steps < 2) {
    err << "error: --steps must be >= 2\n";
    return false;
  }
  if (!(cfg.t_min < cfg.t_max)) {
    err << "error: --t-min must be strictly below --t-max\n";
    return false;
  }
  if (cfg.format != "csv" && cfg.format != "json") {
    err << "error: --format must be csv or json\n";
    return false;
  }
  return true;
}

// Route payload either to a file (--out) or to the command's stream.
int emit(const CliConfig& cfg, std::ostream& out, std::ostream& err, const std::string& payload) {
  if (cfg.out_path.empty()) {
    out << payload;
    return kOk;
  }
  std::ofstream file(cfg.out_path, std::ios::binary);
  if (!file) {
    err << "error: cannot open '" << cfg.out_path << "' for writing\n";
    return kUsageError;
  }
  file << payload;
  return kOk;
}

std::vector<Matrix> basis_projectors(int d) {
  std::vector<Matrix> projectors;
  projectors.reserve(d);
  for (int k = 0; k < d; ++k) projectors.push_back(basis_projector(d, k));
  return projectors;
}

MeasurementGadget build_named_gadget(const std::string& name, int dim, double time) {
  if (name == "von-neumann") return make_von_neumann(basis_projectors(dim));
  if (name == "swap") return make_swap(dim);
  if (name == "dephased-swap") return make_dephased_swap(dim);
  if (name == "partial-swap") return make_partial_swap(dim, time);
  throw std::invalid_argument("unknown gadget '" + name + "'");
}

std::string report_csv_row(const std::string& name, const GadgetReport& r) {
  std::string row = name;
  row += ',';
  row += r.is_measurement ? "true" : "false";
  row += ',';
  row += format_sig(r.uncertainty_bits);
  row += ',';
  row += format_sig(r.back_action_bits);
  row += ',';
  row += r.repeatable ? "true" : "false";
  row += '\n';
  return row;
}

constexpr const char* kReportHeader =
    "gadget,is_measurement,uncertainty_bits,back_action_bits,repeatable\n";

}  // namespace

int cmd_report(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  if (!check_common(cfg, err)) return kUsageError;

  const char* names[] = {"von-neumann", "swap", "dephased-swap"};
  std::string csv = kReportHeader;
  nlohmann::json json_out;
  json_out["dim"] = cfg.dim;
  for (const char* name : names) {
    const auto r = report(build_named_gadget(name, cfg.dim, 0.0));
    csv += report_csv_row(name, r);
    json_out["reports"][name] = to_json(r);
  }
  const std::string payload =
      cfg.format == "json" ? json_out.dump(2) + "\n" : csv;
  return emit(cfg, out, err, payload);
}

int cmd_sweep(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  if (!check_common(cfg, err)) return kUsageError;
  if (cfg.dim != 2) {
    err << "error: sweep supports --dim 2 only\n";
    return kUsageError;
  }

  const auto records = simul_sweep(cfg.t_min, cfg.t_max, cfg.steps);
  std::string payload;
  if (cfg.format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : records) arr.push_back(to_json(r));
    payload = arr.dump(2) + "\n";
  } else {
    payload = sweep_to_csv(records);
  }
  const int rc = emit(cfg, out, err, payload);
  if (rc != kOk) return rc;

  const auto min_it =
      std::min_element(records.begin(), records.end(), [](const auto& a, const auto& b) {
        return a.uncertainty_bits < b.uncertainty_bits;
      });
  // The summary goes to whichever stream is not carrying the CSV.
  std::ostream& msg = cfg.out_path.empty() ? err : out;
  msg << "min uncertainty_bits = " << format_sig(min_it->uncertainty_bits)
      << " at t = " << format_sig(min_it->t) << "\n";
  return kOk;
}

int cmd_wigner(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  if (!check_common(cfg, err)) return kUsageError;

  WignerVariant variant;
  try {
    variant = wigner_variant_from_string(cfg.variant);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }

  const auto psi = wigner_run(variant);
  std::string payload;
  if (cfg.format == "json") {
    payload = to_json(psi).dump(2) + "\n";
  } else {
    payload = "basis,re,im\n";
    const auto dims = psi.layout.dims();
    for (Eigen::Index k = 0; k < psi.vec.size(); ++k) {
      Eigen::Index rest = k;
      std::string basis(dims.size(), '0');
      for (int f = static_cast<int>(dims.size()) - 1; f >= 0; --f) {
        basis[f] = static_cast<char>('0' + rest % dims[f]);
        rest /= dims[f];
      }
      payload += basis + ',' + format_sig(psi.vec(k).real()) + ',' +
                 format_sig(psi.vec(k).imag()) + '\n';
    }
  }
  return emit(cfg, out, err, payload);
}

int cmd_verify(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  if (!check_common(cfg, err)) return kUsageError;

  const auto checks = run_all_verifications(cfg.seed);
  for (const auto& c : checks) {
    out << (c.passed ? "[PASS] " : "[FAIL] ") << c.suite << ": " << c.name
        << " (cases=" << c.cases << ", worst=" << format_sig(c.worst) << ")\n";
  }
  if (!all_passed(checks)) {
    out << "verification FAILED\n";
    return kVerifyFailure;
  }
  out << "all verification suites passed\n";
  return kOk;
}

int cmd_info(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  if (!check_common(cfg, err)) return kUsageError;

  MeasurementGadget gadget;
  try {
    gadget = build_named_gadget(cfg.gadget, cfg.dim, cfg.gadget_time);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }

  const auto r = report(gadget);
  std::string payload;
  if (cfg.format == "json") {
    nlohmann::json j = to_json(r);
    j["gadget"] = cfg.gadget;
    j["dim"] = cfg.dim;
    payload = j.dump(2) + "\n";
  } else {
    payload = kReportHeader + report_csv_row(cfg.gadget, r);
  }
  return emit(cfg, out, err, payload);
}

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"quantum measurement gadgets, information metrics and scenario reproductions"};
  app.require_subcommand(1);

  CliConfig cfg;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--dim", cfg.dim, "system dimension");
    sub->add_option("--t-min", cfg.t_min, "sweep start time");
    sub->add_option("--t-max", cfg.t_max, "sweep end time");
    sub->add_option("--steps", cfg.steps, "sweep grid points");
    sub->add_option("--out", cfg.out_path, "write output to this file");
    sub->add_option("--format", cfg.format, "output format: csv or json");
    sub->add_option("--seed", cfg.seed, "random seed");
  };

  auto* report_cmd = app.add_subcommand("report", "tabulate the named measurement types");
  add_common(report_cmd);
  auto* sweep_cmd = app.add_subcommand("sweep", "simultaneous-swap metrics over a time grid");
  add_common(sweep_cmd);
  auto* wigner_cmd = app.add_subcommand("wigner", "final state of a Wigner's-friend variant");
  add_common(wigner_cmd);
  wigner_cmd->add_option("--variant", cfg.variant,
                         "friend-von-neumann | wigner-asks-result | memory-handoff | friend-swaps");
  auto* verify_cmd = app.add_subcommand("verify", "run the randomized verification suites");
  add_common(verify_cmd);
  auto* info_cmd = app.add_subcommand("info", "report for a single gadget");
  add_common(info_cmd);
  info_cmd->add_option("--gadget", cfg.gadget,
                       "von-neumann | swap | dephased-swap | partial-swap");
  info_cmd->add_option("--t", cfg.gadget_time, "interaction time for partial-swap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kUsageError;
  }

  try {
    if (report_cmd->parsed()) return cmd_report(cfg, std::cout, std::cerr);
    if (sweep_cmd->parsed()) return cmd_sweep(cfg, std::cout, std::cerr);
    if (wigner_cmd->parsed()) return cmd_wigner(cfg, std::cout, std::cerr);
    if (verify_cmd->parsed()) return cmd_verify(cfg, std::cout, std::cerr);
    if (info_cmd->parsed()) return cmd_info(cfg, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace qagent::cli
