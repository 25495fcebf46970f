#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "mixspec/mixed_graph.hpp"

namespace mixspec {

class ParseError : public std::runtime_error {
public:
    ParseError(int line, int column, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ": " + message),
          line(line),
          column(column) {}

    int line;
    int column;
};

// Text graph format:
//   # comment
//   mg 1            header with format version
//   n <count>
//   e u v [mult]    edge
//   a u v [mult]    arc u -> v
//   le v [mult]     loops at v
//   la v [mult]     directed loops at v
// Multiplicities default to 1 and accumulate across repeated statements.
MixedGraph parse_graph(const std::string& text);
MixedGraph parse_graph(std::istream& in);

// Canonical document: header, n, then e/a/le/la statements in key order
// with multiplicities written only when greater than one. Serialization and
// parsing are mutually inverse on canonical documents.
std::string serialize_graph(const MixedGraph& g);

}  // namespace mixspec
