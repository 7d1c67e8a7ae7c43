#ifndef NETINT_IO_HPP
#define NETINT_IO_HPP

#include <Eigen/Dense>

#include <string>

#include "netint/graph.hpp"
#include "netint/instances.hpp"

namespace netint {

// Graph files are JSON objects
//   {"n": int, "mode": "resistance"|"conductance"|"stochastic",
//    "edges": [[i, j, value], ...], "s": int, "t": int, "diag": [n values]}
// with 0-based node ids; "diag" is optional. All parse failures throw
// Error(ParseError); structurally invalid graphs throw Error(InvalidGraph).

WeightedGraph parse_graph(const std::string& json_text);
WeightedGraph read_graph_file(const std::string& path);
std::string graph_to_json(const WeightedGraph& g, int indent = -1);

/// A vector file is a JSON array of numbers, or an object with an "x0" array.
Eigen::VectorXd parse_vector(const std::string& json_text);
Eigen::VectorXd read_vector_file(const std::string& path);

/// Gadget graph JSON plus "node_map" (source, sink, left, right) and
/// per-edge "edge_class" entries.
std::string gadget_to_json(const GadgetGraph& gg, int indent = -1);

std::string read_text_file(const std::string& path);

}  // namespace netint

#endif  // NETINT_IO_HPP
