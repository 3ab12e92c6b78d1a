// cli.hpp
// Command layer for the qagent tool. Each command takes a parsed config and
// writes to the given streams so tests can drive it without a process
// boundary. Exit codes: 0 success, 1 verification failure, 2 usage error.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace qagent::cli {

struct CliConfig {
  int dim = 2;
  double t_min = 0.0;
  double t_max = 2.0943951023931953;  // 2 pi / 3, one period of the sweep
  int steps = 600;
  std::string variant = "wigner-asks-result";
  std::string gadget = "swap";
  double gadget_time = 0.7853981633974483;  // pi / 4, used by info --gadget partial-swap
  std::string out_path;                     // empty: write to `out`
  std::string format = "csv";               // csv | json
  std::uint64_t seed = 42;
};

int cmd_report(const CliConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_sweep(const CliConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_wigner(const CliConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify(const CliConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_info(const CliConfig& cfg, std::ostream& out, std::ostream& err);

// Parse argv and dispatch. Used by main().
int run_cli(int argc, const char* const* argv);

}  // namespace qagent::cli
