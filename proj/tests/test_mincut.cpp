#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "netint/instances.hpp"
#include "netint/mincut.hpp"
#include "test_support.hpp"

using namespace netint;

namespace {

EdgeList complete(int n) { return gen_complete(n).pairs(); }

EdgeList without(const EdgeList& edges, const std::vector<int>& removed) {
  EdgeList rest;
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    if (std::find(removed.begin(), removed.end(), e) == removed.end()) rest.push_back(edges[static_cast<std::size_t>(e)]);
  }
  return rest;
}

bool reachable(int n, const EdgeList& edges, int s, int t) {
  return support::brute_min_cut(n, edges, s, t) > 0 || s == t;
}

}  // namespace

TEST_CASE("small cuts") {
  CHECK(min_st_cut(3, {{0, 1}, {1, 2}}, 0, 2).cut_value == 1);
  for (int s = 0; s < 4; ++s) {
    for (int t = 0; t < 4; ++t) {
      if (s != t) CHECK(min_st_cut(4, complete(4), s, t).cut_value == 3);
    }
  }
  const auto split = min_st_cut(4, {{0, 1}, {2, 3}}, 0, 3);
  CHECK(split.cut_value == 0);
  CHECK(split.cut_edges.empty());
  CHECK(split.source_side == std::vector<int>{0, 1});
}

TEST_CASE("min cut matches exhaustive search and separates the terminals") {
  Rng rng(41);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 2 + trial % 7;
    EdgeList edges;
    const double density = support::uniform_real(rng, 0.2, 0.9);
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (support::uniform_real(rng, 0, 1) < density) edges.emplace_back(i, j);
      }
    }
    if (edges.size() > 18) edges.resize(18);
    const int s = static_cast<int>(rng() % n);
    int t = static_cast<int>(rng() % n);
    if (t == s) t = (s + 1) % n;
    const auto cut = min_st_cut(n, edges, s, t);
    CHECK(cut.cut_value == support::brute_min_cut(n, edges, s, t));
    CHECK(cut.cut_value == static_cast<int>(cut.cut_edges.size()));
    CHECK_FALSE(reachable(n, without(edges, cut.cut_edges), s, t));
    // Canonical cut: exactly the edges crossing the source side.
    std::vector<bool> side(static_cast<std::size_t>(n), false);
    for (int v : cut.source_side) side[static_cast<std::size_t>(v)] = true;
    CHECK(side[static_cast<std::size_t>(s)]);
    CHECK_FALSE(side[static_cast<std::size_t>(t)]);
    std::vector<int> crossing;
    for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
      if (side[static_cast<std::size_t>(edges[static_cast<std::size_t>(e)].first)] !=
          side[static_cast<std::size_t>(edges[static_cast<std::size_t>(e)].second)]) {
        crossing.push_back(e);
      }
    }
    CHECK(crossing == cut.cut_edges);
  }
}

TEST_CASE("edge connectivity") {
  CHECK(edge_connectivity(5, {{0, 1}, {1, 2}, {1, 3}, {3, 4}}) == 1);
  CHECK(edge_connectivity(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}}) == 2);
  CHECK(edge_connectivity(5, complete(5)) == 4);
  CHECK(edge_connectivity(4, {{0, 1}, {2, 3}}) == 0);
  CHECK(edge_connectivity(gen_ring4(9)) == 4);
  CHECK(edge_connectivity(gen_bipartite(7)) == 3);

  Rng rng(43);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 9;
    const auto g = support::random_graph(rng, n, support::uniform_real(rng, 0.3, 0.9), 1, 1);
    std::vector<int> degree(static_cast<std::size_t>(n), 0);
    for (auto [i, j] : g.pairs()) {
      ++degree[static_cast<std::size_t>(i)];
      ++degree[static_cast<std::size_t>(j)];
    }
    const int lambda = edge_connectivity(g);
    CHECK(lambda <= *std::min_element(degree.begin(), degree.end()));
    CHECK(lambda >= 1);
    int brute = g.edge_count();
    for (int v = 1; v < n && g.edge_count() <= 18; ++v) brute = std::min(brute, support::brute_min_cut(n, g.pairs(), 0, v));
    if (g.edge_count() <= 18) CHECK(lambda == brute);
  }
}
