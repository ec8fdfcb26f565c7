#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace slabtrans::cli {

using Cell = std::variant<double, std::int64_t, std::uint64_t, bool, std::string>;

struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

/// Provenance carried by every output: tool version plus the parameters the
/// table was produced with, so a file identifies the run that made it.
struct Meta {
  std::string command;
  std::vector<std::pair<std::string, std::string>> params;

  void add(const std::string& key, const std::string& value);
  void add(const std::string& key, double value);
  void add(const std::string& key, std::int64_t value);
  void add(const std::string& key, std::uint64_t value);
};

/// Locale-independent formatting with 10 significant digits.
std::string format_double(double v);

/// Round to 10 significant digits (for JSON payloads, which otherwise carry
/// shortest-round-trip doubles).
double round10(double v);

void write_csv(std::ostream& os, const Meta& meta, const std::vector<Table>& tables);
void write_json(std::ostream& os, const Meta& meta, const std::vector<Table>& tables);

/// Dispatch on format ("csv" or "json"), writing to path or stdout for "-".
void write_tables(const std::string& path, const std::string& format,
                  const Meta& meta, const std::vector<Table>& tables);

}  // namespace slabtrans::cli
