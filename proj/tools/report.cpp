#include "report.hpp"

#include <json.hpp>

#include <stdexcept>

namespace spw::cli {

using ordered_json = nlohmann::ordered_json;

void Table::add(std::vector<std::string> row) {
  if (row.size() != columns.size()) throw std::logic_error("row width mismatch in " + name);
  rows.push_back(std::move(row));
}

namespace {

std::string schema(const Table& t) { return "spw." + t.name + ".v" + std::to_string(kSchemaVersion); }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

ordered_json table_json(const Table& t, const Header& h) {
  ordered_json j;
  j["schema"] = schema(t);
  ordered_json head = ordered_json::object();
  for (const auto& [k, v] : h) head[k] = v;
  j["header"] = head;
  j["columns"] = t.columns;
  ordered_json rows = ordered_json::array();
  for (const auto& r : t.rows) {
    ordered_json o = ordered_json::object();
    for (std::size_t i = 0; i < r.size(); ++i) o[t.columns[i]] = r[i];
    rows.push_back(std::move(o));
  }
  j["rows"] = std::move(rows);
  return j;
}

}  // namespace

std::string to_csv(const Table& t, const Header& h) {
  std::string out = "# schema: " + schema(t) + "\n";
  for (const auto& [k, v] : h) out += "# " + k + ": " + v + "\n";
  for (std::size_t i = 0; i < t.columns.size(); ++i) out += (i ? "," : "") + csv_field(t.columns[i]);
  out += "\n";
  for (const auto& r : t.rows) {
    for (std::size_t i = 0; i < r.size(); ++i) out += (i ? "," : "") + csv_field(r[i]);
    out += "\n";
  }
  return out;
}

std::string to_json(const Table& t, const Header& h) { return table_json(t, h).dump(2) + "\n"; }

std::string to_json(const std::vector<Table>& ts, const Header& h) {
  ordered_json j;
  ordered_json arr = ordered_json::array();
  for (const auto& t : ts) arr.push_back(table_json(t, h));
  j["tables"] = std::move(arr);
  return j.dump(2) + "\n";
}

}  // namespace spw::cli
