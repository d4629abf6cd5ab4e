#include "ptweyl/cli/report_writer.hpp"

#include <cmath>
#include <cstdio>

namespace ptweyl::cli {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0.0) v = 0.0;  // drop the sign of -0
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

std::string cell_text(const Cell &c) {
  if (auto d = std::get_if<double>(&c)) return format_double(*d);
  if (auto i = std::get_if<long long>(&c)) return std::to_string(*i);
  if (auto b = std::get_if<bool>(&c)) return *b ? "true" : "false";
  return std::get<std::string>(c);
}

Json cell_json(const Cell &c) {
  if (auto d = std::get_if<double>(&c)) return *d;
  if (auto i = std::get_if<long long>(&c)) return *i;
  if (auto b = std::get_if<bool>(&c)) return *b;
  return std::get<std::string>(c);
}

void dump_into(std::string &out, const Json &j, int indent, int depth) {
  const std::string pad(std::size_t(indent * (depth + 1)), ' '), end_pad(std::size_t(indent * depth), ' ');
  switch (j.type()) {
  case Json::value_t::object: {
    if (j.empty()) {
      out += "{}";
      return;
    }
    out += "{\n";
    bool first = true;
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (!first) out += ",\n";
      first = false;
      out += pad + Json(it.key()).dump() + ": ";
      dump_into(out, it.value(), indent, depth + 1);
    }
    out += "\n" + end_pad + "}";
    return;
  }
  case Json::value_t::array: {
    if (j.empty()) {
      out += "[]";
      return;
    }
    out += "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (i) out += ",\n";
      out += pad;
      dump_into(out, j[i], indent, depth + 1);
    }
    out += "\n" + end_pad + "]";
    return;
  }
  case Json::value_t::number_float: {
    const double v = j.get<double>();
    // Non-finite values are not JSON numbers; quote them.
    out += std::isfinite(v) ? format_double(v) : "\"" + format_double(v) + "\"";
    return;
  }
  default: out += j.dump();
  }
}

} // namespace

std::string dump(const Json &j, int indent) {
  std::string s;
  dump_into(s, j, indent, 0);
  return s;
}

void write_csv(std::ostream &os, const Echo &echo, const Table &t) {
  for (const auto &[k, v] : echo) os << "# " << k << "=" << v << "\n";
  for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
  os << "\n";
  for (const auto &row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << cell_text(row[i]);
    os << "\n";
  }
}

Json table_to_json(const Table &t) {
  Json arr = Json::array();
  for (const auto &row : t.rows) {
    Json r = Json::object();
    for (std::size_t i = 0; i < row.size() && i < t.columns.size(); ++i) r[t.columns[i]] = cell_json(row[i]);
    arr.push_back(std::move(r));
  }
  return arr;
}

void write_report(std::ostream &os, const std::string &command, const Echo &echo, const Json &body) {
  Json root = Json::object();
  root["command"] = command;
  Json cfg = Json::object();
  for (const auto &[k, v] : echo) cfg[k] = v;
  root["config"] = cfg;
  for (auto it = body.begin(); it != body.end(); ++it) root[it.key()] = it.value();
  os << dump(root) << "\n";
}

} // namespace ptweyl::cli
