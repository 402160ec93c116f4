#pragma once

// The shared vertex-set text format: an optional `# n=<n> r=<r>` header,
// then one vertex per line as an n-character 0-1 string (coordinate 1
// leftmost). Blank lines and # comments are ignored; lines of the wrong
// length or with foreign characters are rejected.

#include <iosfwd>
#include <optional>
#include <string>

#include "cubefree/vertex.hpp"

namespace cubefree {

struct VertexSetFile {
    VertexSet set;
    std::optional<int> header_n;
    std::optional<int> header_r;
};

VertexSetFile read_vertex_set(std::istream& in);
VertexSetFile read_vertex_set_file(const std::string& path);

// Writes a `# n=.. r=..` header (r omitted when not given) and the members
// in canonical ascending order.
void write_vertex_set(std::ostream& out, const VertexSet& set, std::optional<int> r = {});
void write_vertex_set_file(const std::string& path, const VertexSet& set,
                           std::optional<int> r = {});

}  // namespace cubefree
