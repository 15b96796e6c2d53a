#pragma once

#include <string>
#include <string_view>

#include "sqw/graph.hpp"

namespace sqw {

enum class Format {
  matrix_csv,      // "n=<N>;orientation=column-stochastic" header, then N rows
  edge_list_json,  // {"n":N,"orientation":...,"edges":[{"from":i,"to":j,"w":x},...]}
  dot,             // export only
};

/// Accepts "csv", "json", "dot" and the long names.
Format parse_format(std::string_view name);
std::string_view format_name(Format f);

struct ReadOptions {
  bool patch_dangling = false;
};

std::string serialize(const TransitionMatrix& m, Format format);

/// Parses CSV or edge-list JSON. Columns within tolerance of stochastic are
/// renormalized; anything else is rejected. Throws ParseError (with line and
/// field) for malformed text, and the graph errors for invalid content.
TransitionMatrix deserialize(std::string_view text, Format format, ReadOptions options = {});

/// DOT digraph with `label` and `weight` attributes at 6 decimals. Edges with
/// zero probability are omitted.
std::string to_dot(const TransitionMatrix& m, std::string_view name = "G");

std::string to_csv(const TransitionMatrix& m);
std::string to_edge_list_json(const TransitionMatrix& m);

}  // namespace sqw
