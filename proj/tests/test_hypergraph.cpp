#include <doctest.h>

#include <random>

#include "treelab/errors.hpp"
#include "treelab/generators.hpp"
#include "treelab/hypergraph.hpp"

using namespace treelab;

namespace {

Hypergraph triangle() { return Hypergraph::of(3, {{0, 1}, {1, 2}, {0, 2}}); }

// Test-only oracle: literal enumeration of all k^N assignments in
// lexicographic order.
HpcResult enumerate_colorings(const Hypergraph& h, std::size_t k) {
  std::vector<std::size_t> a(h.vertex_count, 0);
  while (true) {
    Coloring f{a, k};
    if (is_proper(h, f)) return HpcResult{1, f};
    std::size_t i = h.vertex_count;
    while (i > 0) {
      --i;
      if (++a[i] < k) break;
      a[i] = 0;
      if (i == 0) return HpcResult{0, std::nullopt};
    }
    if (h.vertex_count == 0) return HpcResult{0, std::nullopt};
  }
}

} // namespace

TEST_CASE("is_proper") {
  Coloring f{{0, 1, 0}, 2};
  CHECK_FALSE(is_proper(triangle(), f)); // edge {0,2} is monochromatic

  Hypergraph singleton = Hypergraph::of(2, {{0}});
  CHECK(is_proper(singleton, Coloring{{0, 0}, 2}));

  Hypergraph one_edge = Hypergraph::of(2, {{0, 1}});
  CHECK(is_proper(one_edge, Coloring{{0, 1}, 2}));

  CHECK_THROWS_AS(is_proper(triangle(), Coloring{{0, 1}, 2}), input_error);
}

TEST_CASE("hpc_brute frozen examples") {
  CHECK(hpc_brute(triangle(), 2).bit == 0);
  HpcResult three = hpc_brute(triangle(), 3);
  CHECK(three.bit == 1);
  REQUIRE(three.witness);
  CHECK(three.witness->assignment == std::vector<std::size_t>{0, 1, 2});

  CHECK(hpc_brute(Hypergraph::of(4, {}), 2).bit == 1);
  CHECK(hpc_brute(Hypergraph::of(0, {}), 5).bit == 1);
  CHECK_THROWS_AS(hpc_brute(triangle(), 1), input_error);
  CHECK_THROWS_AS(hpc_brute(triangle(), 2, 3), resource_error);
}

TEST_CASE("hpc_brute equals literal enumeration on small graphs") {
  std::mt19937_64 rng(77);
  for (int i = 0; i < 200; ++i) {
    std::size_t n = rng() % 5;
    std::size_t edge_count = rng() % 4;
    std::vector<std::vector<std::size_t>> edges;
    for (std::size_t e = 0; e < edge_count && n > 0; ++e) {
      std::vector<std::size_t> edge;
      for (std::size_t v = 0; v < n; ++v)
        if (rng() % 2) edge.push_back(v);
      edges.push_back(std::move(edge));
    }
    Hypergraph h = Hypergraph::of(n, std::move(edges));
    for (std::size_t k = 2; k <= 3; ++k) {
      HpcResult fast = hpc_brute(h, k);
      HpcResult slow = enumerate_colorings(h, k);
      CHECK(fast.bit == slow.bit);
      if (fast.bit == 1) {
        REQUIRE(fast.witness);
        CHECK(fast.witness->assignment == slow.witness->assignment);
      }
    }
  }
}

TEST_CASE("coloring gadget tree on frozen shapes") {
  Hypergraph one_edge = Hypergraph::of(2, {{0, 1}});
  GeneratedTree g = hpc_to_wf_tree(one_edge, 2);
  std::size_t target = hpc_window(one_edge); // 2 * (max(2,1)+1)
  CHECK(target == 6);
  auto deep = find_node_at_depth(g, target);
  REQUIRE(deep);
  Coloring f = decode_coloring(*deep, one_edge, 2);
  CHECK(is_proper(one_edge, f));

  GeneratedTree bad = hpc_to_wf_tree(triangle(), 2);
  CHECK_FALSE(find_node_at_depth(bad, hpc_window(triangle())));

  Hypergraph edgeless = Hypergraph::of(3, {});
  GeneratedTree free = hpc_to_wf_tree(edgeless, 2);
  auto node = find_node_at_depth(free, hpc_window(edgeless));
  REQUIRE(node);
  for (std::size_t j = 0; 2 * j < node->size(); ++j) CHECK((*node)[2 * j] == 0);
}

TEST_CASE("decode_coloring validates its node") {
  Hypergraph one_edge = Hypergraph::of(2, {{0, 1}});
  CHECK(decode_coloring(Seq{}, one_edge, 2).assignment.empty());
  CHECK_THROWS_AS(decode_coloring(Seq{0}, one_edge, 2), input_error); // odd length
  // color entry out of palette
  CHECK_THROWS_AS(decode_coloring(Seq{0, 5}, one_edge, 2), input_error);
}

TEST_CASE("depth-4 nodes of the single-edge gadget color the committed pair apart") {
  Hypergraph one_edge = Hypergraph::of(2, {{0, 1}});
  GeneratedTree g = hpc_to_wf_tree(one_edge, 2);
  SeqSet level = nodes_at_depth(g, 4);
  REQUIRE_FALSE(level.empty());
  for (const Seq& node : level) {
    // by depth 4 both edge vertices are visible, so the empty commitment is gone
    CHECK(node[0] != 0);
    Coloring f = decode_coloring(node, one_edge, 2);
    REQUIRE(f.assignment.size() == 2);
    CHECK(f.assignment[0] != f.assignment[1]);
  }
}

TEST_CASE("well-foundedness gadget: frozen small trees") {
  ExplicitTree t = ExplicitTree::from_nodes({Seq{}, Seq{0}});
  TreeWithLeaves genuine = TreeWithLeaves::of(t);
  Hypergraph h = wf_to_hpc(genuine, 2);
  CHECK(h.vertex_count == 9);
  CHECK(hpc_brute(h, 2).bit == 0);

  // same tree, but the deep node is only a window boundary
  TreeWithLeaves frontier;
  frontier.tree = t;
  frontier.frontier = SeqSet{Seq{0}};
  Hypergraph hf = wf_to_hpc(frontier, 2);
  CHECK(hpc_brute(hf, 2).bit == 1);

  TreeWithLeaves empty = TreeWithLeaves::of(ExplicitTree::from_nodes({}));
  CHECK(hpc_brute(wf_to_hpc(empty, 2), 2).bit == 0);
}

TEST_CASE("gadget anchors name the shared vertices") {
  TreeWithLeaves tl = TreeWithLeaves::of(ExplicitTree::from_nodes({Seq{}, Seq{0}}));
  Hypergraph h2 = wf_to_hpc(tl, 2);
  CHECK(h2.anchors.at("a0") == 0);
  CHECK(h2.anchors.at("s") == 4);
  CHECK(h2.anchors.count("[0]_1"));

  Hypergraph h3 = wf_to_hpc(tl, 3);
  CHECK(h3.anchors.at("u0") == 0); // clique vertices take the lowest indices
  CHECK(h3.anchors.at("a0") == 1);
  CHECK(h3.vertex_count == 10);
}

TEST_CASE("clique augmentation burns the extra colors") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    TreeWithLeaves tl = random_tree(seed + 10, 8, 3, 2);
    int two = hpc_brute(wf_to_hpc(tl, 2), 2).bit;
    int three = hpc_brute(wf_to_hpc(tl, 3), 3).bit;
    CHECK(two == three);
  }
}

TEST_CASE("isolated singleton edges never change the bit") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 50; ++i) {
    std::size_t n = 1 + rng() % 4;
    std::vector<std::vector<std::size_t>> edges;
    for (std::size_t e = 0; e < rng() % 3; ++e) {
      std::vector<std::size_t> edge;
      for (std::size_t v = 0; v < n; ++v)
        if (rng() % 2) edge.push_back(v);
      edges.push_back(std::move(edge));
    }
    Hypergraph h = Hypergraph::of(n, edges);
    int before = hpc_brute(h, 2).bit;
    edges.push_back({n}); // fresh vertex, fresh singleton edge
    Hypergraph grown = Hypergraph::of(n + 1, edges);
    CHECK(hpc_brute(grown, 2).bit == before);
  }
}

TEST_CASE("hypergraph validation") {
  CHECK_THROWS_AS(Hypergraph::of(2, {{0, 2}}), input_error);
  Hypergraph h = Hypergraph::of(3, {{2, 0, 2}});
  CHECK(h.edges[0] == std::vector<std::size_t>{0, 2}); // sorted, deduplicated
}
