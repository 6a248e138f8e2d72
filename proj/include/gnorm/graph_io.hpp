#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "gnorm/graph.hpp"

namespace gnorm {

struct GraphParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class GraphFormat { Graph6, EdgeList };

std::string to_graph6(const Graph& g);
Graph from_graph6(std::string_view line);

// "n m" on the first line, then m lines "u v" (0-based). The writer emits
// edges sorted ascending.
std::string to_edge_list(const Graph& g);
Graph from_edge_list(std::string_view text);

// Format inferred from the extension (.g6 / .el) unless given explicitly.
Graph read_graph_file(const std::string& path, const std::string& format_override = "");
void write_graph_file(const Graph& g, const std::string& path, const std::string& format_override = "");

}  // namespace gnorm
