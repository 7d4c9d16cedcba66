#pragma once

#include "cagex/graph.hpp"

#include <string>
#include <string_view>

namespace cagex {

enum class GraphFormat { adjacency_text, graph6 };

// Plain text: optional '#' comment lines, a header "n m", then m lines "u v".
Graph parse_adjacency_text(std::string_view text);
std::string write_adjacency_text(const Graph& g);

// graph6: one printable line encoding order and the upper triangle of the
// adjacency matrix, 6 bits per byte, offset 63.
Graph graph6_decode(std::string_view line);
std::string graph6_encode(const Graph& g);

Graph parse_graph(std::string_view text, GraphFormat format);
std::string write_graph(const Graph& g, GraphFormat format);

// Reads a file, auto-detecting the format unless one is forced.
Graph load_graph(const std::string& path);
Graph load_graph(const std::string& path, GraphFormat format);

}  // namespace cagex
