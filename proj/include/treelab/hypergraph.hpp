#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "treelab/tree.hpp"

namespace treelab {

/// Vertices are indices 0..vertex_count-1; an edge is a vertex set of any
/// cardinality (empty and singleton edges are legal and never constrain a
/// coloring).  `anchors` optionally names distinguished vertices of gadget
/// outputs.
struct Hypergraph {
  std::size_t vertex_count = 0;
  std::vector<std::vector<std::size_t>> edges;
  std::map<std::string, std::size_t> anchors;

  /// Validates vertex references and normalizes edges (sorted, unique).
  static Hypergraph of(std::size_t vertex_count, std::vector<std::vector<std::size_t>> edges);
};

/// Colors for the vertex prefix v_0..v_{assignment.size()-1}; total when it
/// covers every vertex.
struct Coloring {
  std::vector<std::size_t> assignment;
  std::size_t palette = 2;
};

/// True when no edge with at least two vertices is monochromatic.
/// Requires a total coloring.
bool is_proper(const Hypergraph& h, const Coloring& f);

struct HpcResult {
  int bit = 0;
  std::optional<Coloring> witness; // lexicographically least proper coloring
};

inline constexpr std::uint64_t kDefaultColorSteps = std::uint64_t{1} << 20;

/// Decides proper k-colorability by complete lexicographic search.
/// Equivalent to enumerating all k^N assignments in order — partial
/// assignments that already close a monochromatic edge are skipped, which
/// changes nothing about the bit or the least witness.  `step_ceiling` caps
/// the number of search steps.
HpcResult hpc_brute(const Hypergraph& h, std::size_t k,
                    std::uint64_t step_ceiling = kDefaultColorSteps);

/// Colorability as a tree search.  A node lists, alternately, a committed
/// two-vertex subset of edge e_j (or the empty-set code 0 when e_j has no
/// pair among the vertices seen so far) and a color for v_j; entries must
/// keep every committed pair bichromatic.  The tree reaches depth
/// 2(max(V,E)+1) exactly when the hypergraph is properly k-colorable, and
/// the odd entries along such a node decode to a proper coloring.  Pair
/// subsets {u,w} are coded as the sequence code of [u,w], u < w.
GeneratedTree hpc_to_wf_tree(const Hypergraph& h, std::size_t k, std::size_t depth_budget = 0);

/// Window depth at which colorability of h is decided: 2(max(V,E)+1).
std::size_t hpc_window(const Hypergraph& h);

/// Reads the coloring off a gadget-tree node of even length.
Coloring decode_coloring(const Seq& node, const Hypergraph& h, std::size_t k);

/// Well-foundedness as non-colorability.  Builds the anchor triangle-chain
/// gadget over a tree with known leaves: anchor edges force a color onto
/// the chain start, each tree node contributes a bichromatic vertex pair,
/// leaf edges block the chain at genuine leaves, and per-node edges pass it
/// to some child.  Properly k-colorable iff the tree has a branch the
/// window cannot refute (a frontier node absorbs the chain).  For k > 2 a
/// clique of k-2 fresh vertices, joined to everything, burns the extra
/// colors; the clique vertices take the lowest indices.
Hypergraph wf_to_hpc(const TreeWithLeaves& tl, std::size_t k);

} // namespace treelab
