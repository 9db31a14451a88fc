// eprsim — command-line front end.
//
// Subcommands: sweep, bell-check, chsh, ks-demo, precession, adjudicate-eq20.
// Angles are degrees on the command line and radians inside the library.
// Every subcommand accepts --config FILE with key=value lines — the same
// lines each output file embeds under "# cfg" — and explicitly passed flags
// win over config-file values. Exit status: 0 on success, 2 for config
// errors, 3 for numeric errors, 4 for structural errors, 5 for data errors.
// Inequality violations are results, not errors.

#include <exception>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "eprsim/errors.hpp"
#include "eprsim/report_io.hpp"
#include "eprsim/run_config.hpp"
#include "eprsim/runs.hpp"
#include "eprsim/version.hpp"

namespace {

struct Options {
  std::string config_path;
  std::string model = "qm";
  std::string quantity = "coincidence";
  double phi_start = 0.0, phi_end = 180.0, phi_step = 5.0;
  std::vector<double> angles;
  std::string method = "quadrature";
  std::uint64_t seed = 1;
  std::int64_t samples = 1'000'000;
  int group = 256;
  int scan = 0;
  double omega = 1.0;
  double t_start = 0.0, t_end = 0.0, t_step = 0.0;
  std::string format = "csv";
  std::string out_path;
};

void add_common(CLI::App* cmd, Options& opt) {
  cmd->add_option("--config", opt.config_path,
                  "key=value config file; explicit flags win on conflict");
  cmd->add_option("--format", opt.format, "output format: csv|json")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", opt.out_path, "output path (default: stdout)");
}

void add_numeric(CLI::App* cmd, Options& opt) {
  cmd->add_option("--method", opt.method, "quadrature|monte_carlo")
      ->check(CLI::IsMember({"quadrature", "monte_carlo"}));
  cmd->add_option("--seed", opt.seed, "Monte Carlo seed");
  cmd->add_option("--samples", opt.samples, "Monte Carlo sample count");
  cmd->add_option("--group", opt.group, "grouped-MC inner batch size");
}

std::vector<std::pair<std::string, std::string>> read_kv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw eprsim::ConfigError("cannot open config file '" + path + "'");
  std::vector<std::pair<std::string, std::string>> kv;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line.front() == '#') continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw eprsim::ConfigError("config file '" + path + "': bad line '" + line + "'");
    kv.emplace_back(line.substr(0, eq), line.substr(eq + 1));
  }
  return kv;
}

bool flag_given(const CLI::App* sub, const std::string& name) {
  const CLI::Option* o = sub->get_option_no_throw(name);
  return o != nullptr && o->count() > 0;
}

// Config-file values fill in whatever the command line left unset.
eprsim::RunConfig merge(const CLI::App* sub, eprsim::Command command, const Options& opt) {
  eprsim::RunConfig cfg;
  cfg.command = command;
  if (!opt.config_path.empty())
    cfg = eprsim::RunConfig::from_key_values(command, read_kv_file(opt.config_path));

  if (flag_given(sub, "--model")) cfg.model = opt.model;
  if (flag_given(sub, "--quantity")) cfg.quantity = opt.quantity;
  if (flag_given(sub, "--phi-start")) cfg.phi_start_deg = opt.phi_start;
  if (flag_given(sub, "--phi-end")) cfg.phi_end_deg = opt.phi_end;
  if (flag_given(sub, "--phi-step")) cfg.phi_step_deg = opt.phi_step;
  if (flag_given(sub, "--angles")) cfg.angles_deg = opt.angles;
  if (flag_given(sub, "--method")) cfg.method = eprsim::method_from_string(opt.method);
  if (flag_given(sub, "--seed")) cfg.seed = opt.seed;
  if (flag_given(sub, "--samples")) cfg.samples = opt.samples;
  if (flag_given(sub, "--group")) cfg.group = opt.group;
  if (flag_given(sub, "--scan")) cfg.scan = opt.scan;
  if (flag_given(sub, "--omega")) cfg.omega = opt.omega;
  if (flag_given(sub, "--t-start")) cfg.t_start = opt.t_start;
  if (flag_given(sub, "--t-end")) cfg.t_end = opt.t_end;
  if (flag_given(sub, "--t-step")) cfg.t_step = opt.t_step;
  if (flag_given(sub, "--format")) cfg.format = eprsim::format_from_string(opt.format);
  cfg.out_path = opt.out_path;
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"EPR polarization-correlation simulator and inequality checker"};
  app.set_version_flag("--version", std::string("eprsim ") + eprsim::kVersion);
  app.require_subcommand(1);

  Options opt;

  CLI::App* sweep = app.add_subcommand(
      "sweep", "model curve (coincidence probability or correlation) over a phi grid");
  sweep->add_option("--model", opt.model, "qm|naive|unpolarized|sign");
  sweep->add_option("--quantity", opt.quantity, "coincidence|correlation")
      ->check(CLI::IsMember({"coincidence", "correlation"}));
  sweep->add_option("--phi-start", opt.phi_start, "grid start (degrees)");
  sweep->add_option("--phi-end", opt.phi_end, "grid end (degrees)");
  sweep->add_option("--phi-step", opt.phi_step, "grid step (degrees)");
  add_numeric(sweep, opt);
  add_common(sweep, opt);

  CLI::App* bell = app.add_subcommand(
      "bell-check", "three-setting inequality 1 + E(b,c) >= |E(a,b) - E(a,c)|");
  bell->add_option("--model", opt.model, "qm|naive|unpolarized|sign");
  bell->add_option("--angles", opt.angles, "a,b,c (degrees)")->delimiter(',');
  add_numeric(bell, opt);
  add_common(bell, opt);

  CLI::App* chsh = app.add_subcommand(
      "chsh", "four-setting bound |E(a,b) - E(a,b2) + E(a2,b) + E(a2,b2)| <= 2");
  chsh->add_option("--model", opt.model, "qm|naive|unpolarized|sign");
  chsh->add_option("--angles", opt.angles, "a,a2,b,b2 (degrees)")->delimiter(',');
  chsh->add_option("--scan", opt.scan, "grid density: scan all angle quadruples");
  add_numeric(chsh, opt);
  add_common(chsh, opt);

  CLI::App* ks = app.add_subcommand(
      "ks-demo", "operator-square contexts, parity scalars, and assignment search");
  add_common(ks, opt);

  CLI::App* prec = app.add_subcommand("precession",
                                      "transverse spin expectations over a time grid");
  prec->add_option("--omega", opt.omega, "precession angular frequency");
  prec->add_option("--t-start", opt.t_start, "grid start time");
  prec->add_option("--t-end", opt.t_end, "grid end time (default: two periods)");
  prec->add_option("--t-step", opt.t_step, "grid step (default: period / 24)");
  add_common(prec, opt);

  CLI::App* adj = app.add_subcommand(
      "adjudicate-eq20",
      "fit the unpolarized-model curve against sin^2/2 and cos^2/2 candidates");
  add_numeric(adj, opt);
  add_common(adj, opt);

  CLI11_PARSE(app, argc, argv);

  try {
    const CLI::App* sub = nullptr;
    eprsim::Command command = eprsim::Command::sweep;
    if (sweep->parsed()) { sub = sweep; command = eprsim::Command::sweep; }
    else if (bell->parsed()) { sub = bell; command = eprsim::Command::bell_check; }
    else if (chsh->parsed()) { sub = chsh; command = eprsim::Command::chsh; }
    else if (ks->parsed()) { sub = ks; command = eprsim::Command::ks_demo; }
    else if (prec->parsed()) { sub = prec; command = eprsim::Command::precession; }
    else { sub = adj; command = eprsim::Command::adjudicate_eq20; }

    const eprsim::RunConfig cfg = merge(sub, command, opt);
    const eprsim::Document doc = eprsim::run(cfg);
    eprsim::write_document(doc, cfg.out_path, cfg.format);
    return 0;
  } catch (const eprsim::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const eprsim::NumericError& e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return 3;
  } catch (const eprsim::StructuralError& e) {
    std::cerr << "structural error: " << e.what() << "\n";
    return 4;
  } catch (const eprsim::DataError& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return 5;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
