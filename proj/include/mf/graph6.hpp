#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "mf/graph.hpp"

namespace mf {

/// Parse failure with the byte offset of the offending position.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, size_t offset)
        : std::runtime_error(what + " (byte " + std::to_string(offset) + ")"),
          offset_(offset) {}
    size_t offset() const { return offset_; }

private:
    size_t offset_;
};

/// Decodes one graph6 or sparse6 line (auto-detected: sparse6 starts with
/// ':', optional ">>graph6<<" / ">>sparse6<<" headers are accepted).
/// graph6 describes a simple graph; sparse6 may carry parallel edges.
Multigraph parse_graph6(std::string_view text);

/// Canonical graph6 encoding (no header, no trailing newline). The graph
/// must be simple.
std::string emit_graph6(const Multigraph& g);

/// sparse6 encoding (leading ':', no trailing newline). Handles multigraphs.
std::string emit_sparse6(const Multigraph& g);

/// Plain text edge list: one "u v" pair per line, 0-indexed, '#' comments.
/// An optional first line holding a single integer fixes the vertex count
/// (needed for trailing isolated vertices); otherwise n = 1 + max id.
Multigraph parse_edge_list(std::string_view text);

/// Reads a whole file: one graph6/sparse6 line per graph, or a single
/// edge-list graph if the content doesn't look like graph6. Parse errors
/// carry the 1-based line number.
struct CatalogueEntry {
    Multigraph graph;
    int line;           // 1-based line in the source file
    std::string text;   // the source line (graph6/sparse6) or "edge-list"
};

std::vector<CatalogueEntry> read_catalogue_text(std::string_view content);
std::vector<CatalogueEntry> read_catalogue_file(const std::string& path);

}  // namespace mf
