#include "eprsim/report_io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>

#include <json.hpp>

#include "eprsim/errors.hpp"
#include "eprsim/version.hpp"

namespace eprsim {

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

namespace {

std::string cell_to_csv(const Document::Cell& cell) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, double>) return format_double(v);
        else if constexpr (std::is_same_v<T, std::int64_t>) return std::to_string(v);
        else if constexpr (std::is_same_v<T, bool>) return v ? "true" : "false";
        else return v;
      },
      cell);
}

nlohmann::ordered_json cell_to_json(const Document::Cell& cell) {
  return std::visit([](const auto& v) { return nlohmann::ordered_json(v); }, cell);
}

}  // namespace

std::string render_csv(const Document& doc) {
  std::string out;
  out += "# eprsim ";
  out += kVersion;
  out += "\n# command: " + doc.command + "\n";
  for (const auto& [k, v] : doc.config) out += "# cfg " + k + "=" + v + "\n";
  for (const auto& [k, v] : doc.summary) out += "# " + k + ": " + cell_to_csv(v) + "\n";
  for (std::size_t i = 0; i < doc.columns.size(); ++i) {
    if (i) out += ',';
    out += doc.columns[i];
  }
  out += '\n';
  for (const auto& row : doc.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += cell_to_csv(row[i]);
    }
    out += '\n';
  }
  return out;
}

std::string render_json(const Document& doc) {
  nlohmann::ordered_json j;
  j["meta"]["tool"] = "eprsim";
  j["meta"]["version"] = kVersion;
  j["meta"]["command"] = doc.command;
  j["meta"]["config"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : doc.config) j["meta"]["config"][k] = v;
  if (!doc.summary.empty()) {
    j["summary"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : doc.summary) j["summary"][k] = cell_to_json(v);
  }
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : doc.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size() && i < doc.columns.size(); ++i)
      obj[doc.columns[i]] = cell_to_json(row[i]);
    j["rows"].push_back(std::move(obj));
  }
  return j.dump(2) + "\n";
}

std::string render(const Document& doc, OutputFormat format) {
  return format == OutputFormat::csv ? render_csv(doc) : render_json(doc);
}

void write_document(const Document& doc, const std::string& path, OutputFormat format) {
  const std::string body = render(doc, format);
  if (path.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ConfigError("cannot open output path '" + path + "'");
  out << body;
  out.flush();
  if (!out) throw ConfigError("failed writing output path '" + path + "'");
}

std::vector<std::pair<std::string, std::string>> parse_embedded_config(
    const std::string& rendered, OutputFormat format) {
  std::vector<std::pair<std::string, std::string>> kv;
  if (format == OutputFormat::csv) {
    std::size_t pos = 0;
    while (pos < rendered.size()) {
      std::size_t end = rendered.find('\n', pos);
      if (end == std::string::npos) end = rendered.size();
      const std::string line = rendered.substr(pos, end - pos);
      pos = end + 1;
      constexpr std::string_view prefix = "# cfg ";
      if (line.rfind(prefix, 0) != 0) continue;
      const std::string rest = line.substr(prefix.size());
      const std::size_t eq = rest.find('=');
      if (eq == std::string::npos)
        throw DataError("malformed embedded config line: " + line);
      kv.emplace_back(rest.substr(0, eq), rest.substr(eq + 1));
    }
    return kv;
  }
  const auto j = nlohmann::ordered_json::parse(rendered);
  for (const auto& [k, v] : j.at("meta").at("config").items())
    kv.emplace_back(k, v.get<std::string>());
  return kv;
}

}  // namespace eprsim
