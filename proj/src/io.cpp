#include "netint/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace netint {

using nlohmann::json;

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::ParseError, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

namespace {

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, e.what());
  }
}

json graph_object(const WeightedGraph& g) {
  json edges = json::array();
  for (const auto& e : g.edges()) edges.push_back({e.i, e.j, e.value});
  json out = {{"n", g.node_count()},
              {"mode", to_string(g.mode())},
              {"edges", edges},
              {"s", g.source()},
              {"t", g.sink()}};
  if (g.mode() == EdgeMode::Stochastic) out["diag"] = g.diag();
  return out;
}

}  // namespace

WeightedGraph parse_graph(const std::string& json_text) {
  const json doc = parse_json(json_text);
  try {
    if (!doc.is_object()) throw Error(Errc::ParseError, "graph file must hold a JSON object");
    const int n = doc.at("n").get<int>();
    const EdgeMode mode = edge_mode_from_string(doc.value("mode", std::string("resistance")));
    std::vector<Edge> edges;
    for (const auto& item : doc.at("edges")) {
      if (!item.is_array() || item.size() != 3) {
        throw Error(Errc::ParseError, "each edge must be [i, j, value]");
      }
      edges.push_back({item[0].get<int>(), item[1].get<int>(), item[2].get<double>()});
    }
    const int s = doc.value("s", 0);
    const int t = doc.value("t", n - 1);
    std::vector<double> diag;
    if (doc.contains("diag") && !doc.at("diag").is_null()) diag = doc.at("diag").get<std::vector<double>>();
    return WeightedGraph(n, std::move(edges), mode, s, t, std::move(diag));
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, e.what());
  }
}

WeightedGraph read_graph_file(const std::string& path) { return parse_graph(read_text_file(path)); }

std::string graph_to_json(const WeightedGraph& g, int indent) { return graph_object(g).dump(indent); }

Eigen::VectorXd parse_vector(const std::string& json_text) {
  const json doc = parse_json(json_text);
  try {
    const json& arr = doc.is_object() ? doc.at("x0") : doc;
    const auto values = arr.get<std::vector<double>>();
    return Eigen::Map<const Eigen::VectorXd>(values.data(), static_cast<Eigen::Index>(values.size()));
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, e.what());
  }
}

Eigen::VectorXd read_vector_file(const std::string& path) { return parse_vector(read_text_file(path)); }

std::string gadget_to_json(const GadgetGraph& gg, int indent) {
  json out = graph_object(gg.gadget);
  out["node_map"] = {{"source", gg.gadget.source()},
                     {"sink", gg.gadget.sink()},
                     {"left", gg.left_node},
                     {"right", gg.right_node}};
  json classes = json::array();
  for (auto c : gg.edge_class) {
    classes.push_back(c == GadgetEdgeClass::Left ? "left" : c == GadgetEdgeClass::Middle ? "middle" : "right");
  }
  out["edge_class"] = classes;
  out["base"] = graph_object(gg.base);
  return out.dump(indent);
}

}  // namespace netint
