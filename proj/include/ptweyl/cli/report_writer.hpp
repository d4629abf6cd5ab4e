#pragma once

#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "ptweyl/cli/config.hpp"
#include "ptweyl/types.hpp"

namespace ptweyl::cli {

using Json = nlohmann::ordered_json;
using Cell = std::variant<double, long long, std::string, bool>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

// %.17g; non-finite values print as nan / inf / -inf.
std::string format_double(double v);

// "# key=value" header lines, a header row, then the rows. LF endings.
void write_csv(std::ostream &os, const Echo &echo, const Table &t);

// Structured text: {"command", "config", <body>}. Numbers use format_double.
void write_report(std::ostream &os, const std::string &command, const Echo &echo, const Json &body);

Json table_to_json(const Table &t);

// Serializes with fixed number formatting.
std::string dump(const Json &j, int indent = 2);

} // namespace ptweyl::cli
