#include "sqw/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "sqw/errors.hpp"

namespace sqw {

namespace {

constexpr std::string_view kOrientation = "column-stochastic";

std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::string format_double(const char* fmt, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, x);
  return buf;
}

double parse_double(std::string_view token, std::size_t line, std::size_t field) {
  token = trim(token);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size() || token.empty()) {
    throw ParseError(line, field, "expected a number, got '" + std::string(token) + "'");
  }
  return value;
}

std::size_t parse_size(std::string_view token, std::size_t line, std::size_t field) {
  token = trim(token);
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size() || token.empty()) {
    throw ParseError(line, field, "expected a non-negative integer, got '" + std::string(token) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

// Validates, then divides each column by its sum to remove formatting drift.
TransitionMatrix renormalized(std::size_t n, std::vector<double> entries) {
  validate(n, entries);
  for (std::size_t from = 0; from < n; ++from) {
    double sum = 0.0;
    for (std::size_t to = 0; to < n; ++to) sum += entries[to * n + from];
    for (std::size_t to = 0; to < n; ++to) entries[to * n + from] /= sum;
  }
  return TransitionMatrix(n, std::move(entries));
}

TransitionMatrix parse_csv(std::string_view text, ReadOptions options) {
  std::vector<std::string_view> lines;
  for (auto line : split(text, '\n')) lines.push_back(trim(line));
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty()) throw ParseError(1, 1, "empty input");

  const auto header = split(lines[0], ';');
  if (header.size() != 2) throw ParseError(1, 1, "header must be 'n=<N>;orientation=column-stochastic'");
  const auto n_field = trim(header[0]);
  if (n_field.substr(0, 2) != "n=") throw ParseError(1, 1, "header must start with 'n='");
  const std::size_t n = parse_size(n_field.substr(2), 1, 1);
  if (n == 0) throw ParseError(1, 1, "node count must be positive");
  const auto orientation = trim(header[1]);
  if (orientation != std::string("orientation=") + std::string(kOrientation)) {
    throw ParseError(1, 2, "unsupported orientation '" + std::string(orientation) + "'");
  }
  if (lines.size() != n + 1) {
    throw ParseError(lines.size() + 1, 1, "expected " + std::to_string(n) + " matrix rows");
  }

  std::vector<double> entries;
  entries.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    const auto fields = split(lines[r + 1], ',');
    if (fields.size() != n) {
      throw ParseError(r + 2, std::min(fields.size(), n) + 1,
                       "expected " + std::to_string(n) + " fields, got " + std::to_string(fields.size()));
    }
    for (std::size_t c = 0; c < n; ++c) entries.push_back(parse_double(fields[c], r + 2, c + 1));
  }
  for (std::size_t from = 0; from < n; ++from) {
    bool empty = true;
    for (std::size_t to = 0; to < n; ++to) empty = empty && entries[to * n + from] == 0.0;
    if (!empty) continue;
    if (!options.patch_dangling) throw DanglingNode(from);
    for (std::size_t to = 0; to < n; ++to) entries[to * n + from] = 1.0 / static_cast<double>(n);
  }
  return renormalized(n, std::move(entries));
}

std::size_t line_of_byte(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  for (std::size_t k = 0; k < std::min(byte, text.size()); ++k) {
    if (text[k] == '\n') ++line;
  }
  return line;
}

TransitionMatrix parse_json(std::string_view text, ReadOptions options) {
  if (trim(text).empty()) throw ParseError(1, 1, "empty input");
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(line_of_byte(text, e.byte), 1, e.what());
  }
  if (!doc.is_object()) throw ParseError(1, 1, "top-level value must be an object");
  if (!doc.contains("n") || !doc["n"].is_number_unsigned()) {
    throw ParseError(1, 1, "missing or invalid field 'n'");
  }
  const auto n = doc["n"].get<std::size_t>();
  if (n == 0) throw ParseError(1, 1, "node count must be positive");
  if (doc.contains("orientation") && doc["orientation"] != kOrientation) {
    throw ParseError(1, 1, "unsupported orientation");
  }
  if (!doc.contains("edges") || !doc["edges"].is_array()) throw ParseError(1, 1, "missing array 'edges'");

  std::vector<double> weights(n * n, 0.0);
  std::vector<bool> seen(n * n, false);
  std::size_t index = 0;
  for (const auto& edge : doc["edges"]) {
    ++index;
    if (!edge.is_object() || !edge.contains("from") || !edge.contains("to") || !edge.contains("w") ||
        !edge["from"].is_number_unsigned() || !edge["to"].is_number_unsigned() || !edge["w"].is_number()) {
      throw ParseError(1, index, "edge needs unsigned 'from', 'to' and numeric 'w'");
    }
    const auto from = edge["from"].get<std::size_t>();
    const auto to = edge["to"].get<std::size_t>();
    if (from >= n || to >= n) throw ParseError(1, index, "edge endpoint out of range");
    if (seen[to * n + from]) throw ParseError(1, index, "duplicate edge");
    seen[to * n + from] = true;
    weights[to * n + from] = edge["w"].get<double>();
  }
  return from_weights(WeightedGraph(n, std::move(weights)), {options.patch_dangling});
}

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "csv" || name == "matrix-csv") return Format::matrix_csv;
  if (name == "json" || name == "edge-list-json") return Format::edge_list_json;
  if (name == "dot") return Format::dot;
  throw InvalidArgument("unknown format '" + std::string(name) + "'");
}

std::string_view format_name(Format f) {
  switch (f) {
    case Format::matrix_csv: return "matrix-csv";
    case Format::edge_list_json: return "edge-list-json";
    case Format::dot: return "dot";
  }
  return "unknown";
}

std::string to_csv(const TransitionMatrix& m) {
  const std::size_t n = m.size();
  std::string out = "n=" + std::to_string(n) + ";orientation=" + std::string(kOrientation) + "\n";
  for (std::size_t to = 0; to < n; ++to) {
    for (std::size_t from = 0; from < n; ++from) {
      if (from) out += ',';
      out += format_double("%.17g", m(to, from));
    }
    out += '\n';
  }
  return out;
}

std::string to_edge_list_json(const TransitionMatrix& m) {
  const std::size_t n = m.size();
  nlohmann::ordered_json doc;
  doc["n"] = n;
  doc["orientation"] = kOrientation;
  doc["edges"] = nlohmann::ordered_json::array();
  for (std::size_t from = 0; from < n; ++from) {
    for (std::size_t to = 0; to < n; ++to) {
      if (m(to, from) == 0.0) continue;
      doc["edges"].push_back({{"from", from}, {"to", to}, {"w", m(to, from)}});
    }
  }
  return doc.dump() + "\n";
}

std::string to_dot(const TransitionMatrix& m, std::string_view name) {
  const std::size_t n = m.size();
  std::ostringstream os;
  os << "digraph " << name << " {\n";
  for (std::size_t i = 0; i < n; ++i) os << "  " << i << ";\n";
  for (std::size_t from = 0; from < n; ++from) {
    for (std::size_t to = 0; to < n; ++to) {
      const double w = m(to, from);
      if (w == 0.0) continue;
      const auto text = format_double("%.6f", w);
      os << "  " << from << " -> " << to << " [label=\"" << text << "\", weight=" << text << "];\n";
    }
  }
  os << "}\n";
  return os.str();
}

std::string serialize(const TransitionMatrix& m, Format format) {
  switch (format) {
    case Format::matrix_csv: return to_csv(m);
    case Format::edge_list_json: return to_edge_list_json(m);
    case Format::dot: return to_dot(m);
  }
  throw InvalidArgument("unknown format");
}

TransitionMatrix deserialize(std::string_view text, Format format, ReadOptions options) {
  switch (format) {
    case Format::matrix_csv: return parse_csv(text, options);
    case Format::edge_list_json: return parse_json(text, options);
    case Format::dot: throw InvalidArgument("DOT is an export-only format");
  }
  throw InvalidArgument("unknown format");
}

}  // namespace sqw
