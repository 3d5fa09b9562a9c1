#include "treelab/hypergraph.hpp"

#include <algorithm>
#include <memory>

#include "treelab/errors.hpp"

namespace treelab {

Hypergraph Hypergraph::of(std::size_t vertex_count,
                          std::vector<std::vector<std::size_t>> edges) {
  for (auto& e : edges) {
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
    for (std::size_t v : e)
      if (v >= vertex_count)
        throw input_error("edge references missing vertex " + std::to_string(v));
  }
  Hypergraph h;
  h.vertex_count = vertex_count;
  h.edges = std::move(edges);
  return h;
}

bool is_proper(const Hypergraph& h, const Coloring& f) {
  if (f.assignment.size() != h.vertex_count)
    throw input_error("is_proper: coloring is not total");
  for (std::size_t v = 0; v < h.vertex_count; ++v)
    if (f.assignment[v] >= f.palette) throw input_error("is_proper: color out of palette");
  for (const auto& e : h.edges) {
    if (e.size() < 2) continue;
    bool mono = true;
    for (std::size_t i = 1; i < e.size() && mono; ++i)
      if (f.assignment[e[i]] != f.assignment[e[0]]) mono = false;
    if (mono) return false;
  }
  return true;
}

HpcResult hpc_brute(const Hypergraph& h, std::size_t k, std::uint64_t step_ceiling) {
  if (k < 2) throw input_error("hpc_brute: palette must have at least 2 colors");
  std::size_t n = h.vertex_count;

  // Edges become checkable once their largest vertex is colored.
  std::vector<std::vector<std::size_t>> closing(n);
  for (std::size_t ei = 0; ei < h.edges.size(); ++ei)
    if (h.edges[ei].size() >= 2) closing[h.edges[ei].back()].push_back(ei);

  std::vector<std::size_t> colors(n, 0);
  std::uint64_t steps = 0;

  // Lexicographic descent: identical outcome to trying all k^n assignments
  // in order, so the first full assignment found is the least witness.
  auto ok_at = [&](std::size_t v) {
    for (std::size_t ei : closing[v]) {
      const auto& e = h.edges[ei];
      bool mono = true;
      for (std::size_t i = 1; i < e.size() && mono; ++i)
        if (colors[e[i]] != colors[e[0]]) mono = false;
      if (mono) return false;
    }
    return true;
  };

  std::function<bool(std::size_t)> descend = [&](std::size_t v) -> bool {
    if (v == n) return true;
    for (std::size_t c = 0; c < k; ++c) {
      if (++steps > step_ceiling) throw resource_error("hpc_brute: search ceiling exceeded");
      colors[v] = c;
      if (ok_at(v) && descend(v + 1)) return true;
    }
    colors[v] = 0;
    return false;
  };

  HpcResult out;
  if (descend(0)) {
    out.bit = 1;
    out.witness = Coloring{colors, k};
  }
  return out;
}

std::size_t hpc_window(const Hypergraph& h) {
  return 2 * (std::max(h.vertex_count, h.edges.size()) + 1);
}

namespace {

// Sorted codes of the two-vertex subsets of an edge.
std::vector<Nat> pair_codes(const std::vector<std::size_t>& edge) {
  std::vector<Nat> out;
  for (std::size_t a = 0; a < edge.size(); ++a)
    for (std::size_t b = a + 1; b < edge.size(); ++b)
      out.push_back(encode(Seq{static_cast<unsigned long>(edge[a]),
                               static_cast<unsigned long>(edge[b])}));
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::pair<std::size_t, std::size_t>> decode_pair(const Nat& code) {
  Seq s = decode(code);
  if (s.size() != 2 || !fits_u64(s[0]) || !fits_u64(s[1])) return std::nullopt;
  std::size_t u = to_size(s[0]);
  std::size_t w = to_size(s[1]);
  if (u >= w) return std::nullopt;
  return std::make_pair(u, w);
}

} // namespace

GeneratedTree hpc_to_wf_tree(const Hypergraph& h, std::size_t k, std::size_t depth_budget) {
  if (k < 2) throw input_error("hpc_to_wf_tree: palette must have at least 2 colors");
  auto shared = std::make_shared<Hypergraph>(h);
  auto codes = std::make_shared<std::vector<std::vector<Nat>>>();
  for (const auto& e : h.edges) codes->push_back(pair_codes(e));

  auto member = [shared, codes, k](const Seq& s) {
    if (s.empty()) return true;
    std::size_t m = s.size() - 1;
    std::vector<std::pair<std::size_t, std::size_t>> committed;
    for (std::size_t i = 0; i <= m; ++i) {
      if (i % 2 == 0) {
        std::size_t j = i / 2;
        if (s[i] == 0) {
          // The empty commitment is only available while edge j has at most
          // one vertex among v_0..v_m; it narrows as the node grows.
          if (j < shared->edges.size()) {
            std::size_t seen = 0;
            for (std::size_t v : shared->edges[j])
              if (v <= m) ++seen;
            if (seen >= 2) return false;
          }
        } else {
          if (j >= shared->edges.size()) return false; // padding edges are empty
          auto p = decode_pair(s[i]);
          if (!p) return false;
          const auto& e = shared->edges[j];
          if (!std::binary_search(e.begin(), e.end(), p->first)) return false;
          if (!std::binary_search(e.begin(), e.end(), p->second)) return false;
          committed.push_back(*p);
        }
      } else {
        if (s[i] >= k) return false;
      }
    }
    for (const auto& [u, w] : committed) {
      std::size_t cu = 2 * u + 1, cw = 2 * w + 1;
      if (cu <= m && cw <= m && s[cu] == s[cw]) return false;
    }
    return true;
  };

  GeneratedTree g;
  g.member = member;
  g.children = [shared, codes, k, member](const Seq& s) {
    std::vector<Nat> out;
    std::size_t i = s.size();
    if (i % 2 == 0) {
      std::size_t j = i / 2;
      if (member(s.child(Nat(0)))) out.push_back(Nat(0));
      if (j < codes->size())
        for (const Nat& c : (*codes)[j])
          if (member(s.child(c))) out.push_back(c);
    } else {
      for (std::size_t c = 0; c < k; ++c) {
        Nat label(static_cast<unsigned long>(c));
        if (member(s.child(label))) out.push_back(label);
      }
    }
    return out;
  };
  g.branch_bound = [shared, codes, k](std::size_t i) {
    if (i % 2 == 1) return Nat(static_cast<unsigned long>(k - 1));
    std::size_t j = i / 2;
    if (j < codes->size() && !(*codes)[j].empty()) return (*codes)[j].back();
    return Nat(0);
  };
  g.depth_budget = depth_budget ? depth_budget : hpc_window(h);
  return g;
}

Coloring decode_coloring(const Seq& node, const Hypergraph& h, std::size_t k) {
  if (node.size() % 2 != 0)
    throw input_error("decode_coloring: node must have even length");
  Coloring f;
  f.palette = k;
  std::size_t t = node.size() / 2;
  for (std::size_t j = 0; j < t; ++j) {
    if (node[2 * j] != 0 && !decode_pair(node[2 * j]))
      throw input_error("decode_coloring: malformed pair entry");
    if (node[2 * j + 1] >= k) throw input_error("decode_coloring: color out of palette");
    if (j < h.vertex_count) f.assignment.push_back(to_size(node[2 * j + 1]));
  }
  return f;
}

Hypergraph wf_to_hpc(const TreeWithLeaves& tl, std::size_t k) {
  if (k < 2) throw input_error("wf_to_hpc: palette must have at least 2 colors");
  tl.validate();

  std::size_t clique = k - 2;
  std::size_t a0 = clique, a1 = clique + 1, b0 = clique + 2, b1 = clique + 3, s = clique + 4;
  std::map<std::string, std::size_t> anchors;
  for (std::size_t c = 0; c < clique; ++c) anchors["u" + std::to_string(c)] = c;
  anchors["a0"] = a0;
  anchors["a1"] = a1;
  anchors["b0"] = b0;
  anchors["b1"] = b1;
  anchors["s"] = s;

  std::map<Seq, std::size_t> base; // node -> index of its _0 vertex
  std::size_t next = clique + 5;
  for (const Seq& node : tl.tree.nodes()) {
    base[node] = next;
    anchors[seq_to_text(node) + "_0"] = next;
    anchors[seq_to_text(node) + "_1"] = next + 1;
    next += 2;
  }
  std::size_t n = next;

  std::vector<std::vector<std::size_t>> edges = {{a0, a1}, {a1, s}, {b0, b1}, {b1, s}};
  for (const auto& [node, v0] : base)
    if (!node.empty()) edges.push_back({v0, v0 + 1});
  for (const Seq& leaf : tl.leaves) edges.push_back({base.at(leaf) + 1, s});
  for (const auto& [node, v0] : base) {
    if (tl.leaves.count(node)) continue;
    std::vector<std::size_t> e{v0 + 1};
    for (const Nat& j : tl.tree.child_labels(node)) e.push_back(base.at(node.child(j)));
    edges.push_back(std::move(e));
  }
  std::vector<std::size_t> e0{a0, b0};
  for (const auto& [node, v0] : base)
    if (node.size() == 1) e0.push_back(v0);
  edges.push_back(std::move(e0));

  for (std::size_t c = 0; c < clique; ++c) {
    for (std::size_t d = c + 1; d < clique; ++d) edges.push_back({c, d});
    for (std::size_t v = clique; v < n; ++v) edges.push_back({c, v});
  }

  Hypergraph h = Hypergraph::of(n, std::move(edges));
  h.anchors = std::move(anchors);
  return h;
}

} // namespace treelab
