#include "eprsim/run_config.hpp"

#include <charconv>
#include <sstream>

#include "eprsim/errors.hpp"
#include "eprsim/report_io.hpp"

namespace eprsim {

std::string to_string(Command c) {
  switch (c) {
    case Command::sweep: return "sweep";
    case Command::bell_check: return "bell-check";
    case Command::chsh: return "chsh";
    case Command::ks_demo: return "ks-demo";
    case Command::precession: return "precession";
    case Command::adjudicate_eq20: return "adjudicate-eq20";
  }
  return "unknown";
}

std::string to_string(Method m) {
  return m == Method::quadrature ? "quadrature" : "monte_carlo";
}

std::string to_string(OutputFormat f) { return f == OutputFormat::csv ? "csv" : "json"; }

Command command_from_string(const std::string& s) {
  if (s == "sweep") return Command::sweep;
  if (s == "bell-check") return Command::bell_check;
  if (s == "chsh") return Command::chsh;
  if (s == "ks-demo") return Command::ks_demo;
  if (s == "precession") return Command::precession;
  if (s == "adjudicate-eq20") return Command::adjudicate_eq20;
  throw ConfigError("unknown command '" + s + "'");
}

Method method_from_string(const std::string& s) {
  if (s == "quadrature") return Method::quadrature;
  if (s == "monte_carlo") return Method::monte_carlo;
  throw ConfigError("unknown method '" + s + "' (expected quadrature|monte_carlo)");
}

OutputFormat format_from_string(const std::string& s) {
  if (s == "csv") return OutputFormat::csv;
  if (s == "json") return OutputFormat::json;
  throw ConfigError("unknown format '" + s + "' (expected csv|json)");
}

namespace {

std::string join_angles(const std::vector<double>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += format_double(v[i]);
  }
  return out;
}

std::vector<double> split_angles(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    double v = 0.0;
    const auto res = std::from_chars(item.data(), item.data() + item.size(), v);
    if (res.ec != std::errc{} || res.ptr != item.data() + item.size())
      throw ConfigError("bad angle list element '" + item + "'");
    out.push_back(v);
  }
  return out;
}

double parse_double(const std::string& key, const std::string& s) {
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
    throw ConfigError("bad value '" + s + "' for key '" + key + "'");
  return v;
}

template <typename Int>
Int parse_int(const std::string& key, const std::string& s) {
  Int v{};
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
    throw ConfigError("bad value '" + s + "' for key '" + key + "'");
  return v;
}

}  // namespace

std::vector<std::pair<std::string, std::string>> RunConfig::echo() const {
  std::vector<std::pair<std::string, std::string>> kv;
  const auto add = [&kv](const std::string& k, const std::string& v) {
    kv.emplace_back(k, v);
  };
  switch (command) {
    case Command::sweep:
      add("model", model);
      add("quantity", quantity);
      add("phi-start", format_double(phi_start_deg));
      add("phi-end", format_double(phi_end_deg));
      add("phi-step", format_double(phi_step_deg));
      add("method", to_string(method));
      add("seed", std::to_string(seed));
      add("samples", std::to_string(samples));
      add("group", std::to_string(group));
      break;
    case Command::bell_check:
    case Command::chsh:
      add("model", model);
      add("angles", join_angles(angles_deg));
      add("method", to_string(method));
      add("seed", std::to_string(seed));
      add("samples", std::to_string(samples));
      add("group", std::to_string(group));
      if (command == Command::chsh) add("scan", std::to_string(scan));
      break;
    case Command::ks_demo:
      break;
    case Command::precession:
      add("omega", format_double(omega));
      add("t-start", format_double(t_start));
      add("t-end", format_double(t_end));
      add("t-step", format_double(t_step));
      break;
    case Command::adjudicate_eq20:
      add("method", to_string(method));
      add("seed", std::to_string(seed));
      add("samples", std::to_string(samples));
      add("group", std::to_string(group));
      break;
  }
  add("format", to_string(format));
  return kv;
}

RunConfig RunConfig::from_key_values(
    Command cmd, const std::vector<std::pair<std::string, std::string>>& kv) {
  RunConfig cfg;
  cfg.command = cmd;
  for (const auto& [key, value] : kv) {
    if (key == "model") cfg.model = value;
    else if (key == "quantity") cfg.quantity = value;
    else if (key == "phi-start") cfg.phi_start_deg = parse_double(key, value);
    else if (key == "phi-end") cfg.phi_end_deg = parse_double(key, value);
    else if (key == "phi-step") cfg.phi_step_deg = parse_double(key, value);
    else if (key == "angles") cfg.angles_deg = split_angles(value);
    else if (key == "method") cfg.method = method_from_string(value);
    else if (key == "seed") cfg.seed = parse_int<std::uint64_t>(key, value);
    else if (key == "samples") cfg.samples = parse_int<std::int64_t>(key, value);
    else if (key == "group") cfg.group = parse_int<int>(key, value);
    else if (key == "scan") cfg.scan = parse_int<int>(key, value);
    else if (key == "omega") cfg.omega = parse_double(key, value);
    else if (key == "t-start") cfg.t_start = parse_double(key, value);
    else if (key == "t-end") cfg.t_end = parse_double(key, value);
    else if (key == "t-step") cfg.t_step = parse_double(key, value);
    else if (key == "format") cfg.format = format_from_string(value);
    else throw ConfigError("unknown config key '" + key + "'");
  }
  return cfg;
}

}  // namespace eprsim
