#pragma once

// Tables of strings and their CSV / JSON renderings. Every rendering starts
// with the run header so a file can be traced back to its configuration.

#include <string>
#include <utility>
#include <vector>

namespace spw::cli {

constexpr int kSchemaVersion = 1;

struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  void add(std::vector<std::string> row);
};

using Header = std::vector<std::pair<std::string, std::string>>;

std::string to_csv(const Table& t, const Header& h);
std::string to_json(const Table& t, const Header& h);
/// One document holding several tables, for stdout.
std::string to_json(const std::vector<Table>& ts, const Header& h);

}  // namespace spw::cli
