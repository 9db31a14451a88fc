#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "eprsim/run_config.hpp"

namespace eprsim {

/// Shortest decimal form of x that round-trips to the same double.
std::string format_double(double x);

/// One emitted result document: a config echo, optional scalar summary
/// entries, and a column-oriented table. Renders to CSV ('#'-prefixed
/// metadata lines, comma delimiter, '.' decimal separator) or to a JSON
/// object with "meta", optional "summary", and "rows". Rendering is fully
/// deterministic: field order is insertion order and numbers use
/// round-trip formatting.
struct Document {
  using Cell = std::variant<double, std::int64_t, std::string, bool>;

  std::string command;
  std::vector<std::pair<std::string, std::string>> config;  ///< echoed key=value
  std::vector<std::pair<std::string, Cell>> summary;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

std::string render_csv(const Document& doc);
std::string render_json(const Document& doc);
std::string render(const Document& doc, OutputFormat format);

/// Write to path, or to stdout when path is empty. Throws ConfigError if
/// the path cannot be opened or fully written.
void write_document(const Document& doc, const std::string& path, OutputFormat format);

/// Extract the `# cfg key=value` lines of a rendered CSV (or the "config"
/// object of a rendered JSON) back into key=value pairs, for replay.
std::vector<std::pair<std::string, std::string>> parse_embedded_config(
    const std::string& rendered, OutputFormat format);

}  // namespace eprsim
