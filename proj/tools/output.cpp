#include "output.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <ostream>
#include <stdexcept>
#include <system_error>

#include "json.hpp"
#include "slabtrans/version.hpp"

namespace slabtrans::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json cell_to_json(const Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) return round10(*d);
  if (const auto* i = std::get_if<std::int64_t>(&c)) return *i;
  if (const auto* u = std::get_if<std::uint64_t>(&c)) return *u;
  if (const auto* b = std::get_if<bool>(&c)) return *b;
  return std::get<std::string>(c);
}

std::string cell_to_csv(const Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) return format_double(*d);
  if (const auto* i = std::get_if<std::int64_t>(&c)) return std::to_string(*i);
  if (const auto* u = std::get_if<std::uint64_t>(&c)) return std::to_string(*u);
  if (const auto* b = std::get_if<bool>(&c)) return *b ? "true" : "false";
  return std::get<std::string>(c);
}

}  // namespace

void Meta::add(const std::string& key, const std::string& value) {
  params.emplace_back(key, value);
}
void Meta::add(const std::string& key, double value) {
  params.emplace_back(key, format_double(value));
}
void Meta::add(const std::string& key, std::int64_t value) {
  params.emplace_back(key, std::to_string(value));
}
void Meta::add(const std::string& key, std::uint64_t value) {
  params.emplace_back(key, std::to_string(value));
}

std::string format_double(double v) {
  char buf[48];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v,
                                 std::chars_format::general, 10);
  if (ec != std::errc{}) throw std::runtime_error("format_double failed");
  return std::string(buf, ptr);
}

double round10(double v) {
  const std::string s = format_double(v);
  double out = v;
  std::from_chars(s.data(), s.data() + s.size(), out);
  return out;
}

void write_csv(std::ostream& os, const Meta& meta, const std::vector<Table>& tables) {
  os << "# slabtrans " << kVersion << '\n';
  os << "# command=" << meta.command << '\n';
  for (const auto& [k, v] : meta.params) os << "# " << k << '=' << v << '\n';
  bool first = true;
  for (const Table& t : tables) {
    if (!first) os << '\n';
    first = false;
    os << "# table=" << t.name << '\n';
    for (std::size_t i = 0; i < t.columns.size(); ++i)
      os << (i ? "," : "") << t.columns[i];
    os << '\n';
    for (const auto& row : t.rows) {
      for (std::size_t i = 0; i < row.size(); ++i)
        os << (i ? "," : "") << cell_to_csv(row[i]);
      os << '\n';
    }
  }
}

void write_json(std::ostream& os, const Meta& meta, const std::vector<Table>& tables) {
  ordered_json root;
  ordered_json m;
  m["tool"] = "slabtrans";
  m["version"] = kVersion;
  m["command"] = meta.command;
  for (const auto& [k, v] : meta.params) m[k] = v;
  root["meta"] = std::move(m);
  for (const Table& t : tables) {
    ordered_json rows = ordered_json::array();
    for (const auto& row : t.rows) {
      ordered_json r;
      for (std::size_t i = 0; i < row.size(); ++i)
        r[t.columns[i]] = cell_to_json(row[i]);
      rows.push_back(std::move(r));
    }
    root[t.name] = std::move(rows);
  }
  os << root.dump(2) << '\n';
}

void write_tables(const std::string& path, const std::string& format,
                  const Meta& meta, const std::vector<Table>& tables) {
  const bool to_stdout = path.empty() || path == "-";
  std::ofstream file;
  if (!to_stdout) {
    file.open(path);
    if (!file) throw std::runtime_error("cannot open output file: " + path);
  }
  std::ostream& os = to_stdout ? std::cout : file;
  if (format == "csv")
    write_csv(os, meta, tables);
  else if (format == "json")
    write_json(os, meta, tables);
  else
    throw std::invalid_argument("unknown output format: " + format);
}

}  // namespace slabtrans::cli
