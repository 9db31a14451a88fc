#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "eprsim/lhv_models.hpp"

namespace eprsim {

enum class Command { sweep, bell_check, chsh, ks_demo, precession, adjudicate_eq20 };
enum class OutputFormat { csv, json };

std::string to_string(Command c);
std::string to_string(Method m);
std::string to_string(OutputFormat f);
Command command_from_string(const std::string& s);
Method method_from_string(const std::string& s);
OutputFormat format_from_string(const std::string& s);

/// Everything one run needs. Angles and grids are degrees here — the CLI
/// boundary unit — and are converted to radians inside the run functions.
struct RunConfig {
  Command command = Command::sweep;
  std::string model = "qm";
  std::string quantity = "coincidence";  ///< sweep: coincidence | correlation
  double phi_start_deg = 0.0;
  double phi_end_deg = 180.0;
  double phi_step_deg = 5.0;
  std::vector<double> angles_deg;  ///< bell-check: a,b,c    chsh: a,a2,b,b2
  Method method = Method::quadrature;
  std::uint64_t seed = 1;
  std::int64_t samples = 1'000'000;
  int group = 256;  ///< grouped-MC inner batch size
  int scan = 0;     ///< chsh: scan grid density, 0 = single evaluation
  double omega = 1.0;
  double t_start = 0.0;
  double t_end = 0.0;  ///< <= t_start: defaults to two periods
  double t_step = 0.0; ///< <= 0: defaults to period / 24
  OutputFormat format = OutputFormat::csv;
  std::string out_path;  ///< empty: stdout

  /// Deterministic key=value echo of the fields relevant to `command`,
  /// using the CLI option names, so that an output file header doubles as a
  /// replayable config file.
  std::vector<std::pair<std::string, std::string>> echo() const;

  /// Inverse of echo(): rebuild a config for `cmd` from key=value pairs.
  /// Unknown keys or unparsable values throw ConfigError.
  static RunConfig from_key_values(Command cmd,
                                   const std::vector<std::pair<std::string, std::string>>& kv);
};

}  // namespace eprsim
