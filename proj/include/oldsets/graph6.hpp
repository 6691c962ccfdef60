#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "oldsets/graph.hpp"

namespace oldsets {

/// Decodes one header-less graph6 record. The record must not carry a line
/// terminator. Throws Graph6Error on a malformed size field, a character
/// outside 63..126, a short or overlong body, or nonzero padding bits.
Graph parse_graph6(std::string_view record);

/// Encodes g as graph6 (single-byte size for n <= 62, the '~' form otherwise).
std::string to_graph6(const Graph& g);

struct Graph6Line {
  std::size_t line_number = 0;  ///< 1-based
  std::string record;
};

/// Splits a stream into non-empty records with CR/LF stripped.
std::vector<Graph6Line> read_graph6_lines(std::istream& in);

}  // namespace oldsets
