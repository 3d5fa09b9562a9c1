#include "treelab/generators.hpp"

#include <algorithm>
#include <random>

#include "treelab/errors.hpp"

namespace treelab {

namespace {

constexpr std::size_t kMaxRandomNodes = 4096;
constexpr std::size_t kMaxWindow = 24;

// Bounded draw independent of std::uniform_int_distribution, whose output
// is implementation-defined.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t n) { return n ? rng() % n : 0; }

} // namespace

GeneratedTree full_tree(std::size_t k, std::size_t depth_budget) {
  if (k == 0) throw input_error("full_tree: branching must be positive");
  GeneratedTree g;
  Nat cap(static_cast<unsigned long>(k - 1));
  g.member = [cap](const Seq& s) {
    for (std::size_t i = 0; i < s.size(); ++i)
      if (s[i] > cap) return false;
    return true;
  };
  g.children = [k](const Seq&) {
    std::vector<Nat> out;
    for (std::size_t j = 0; j < k; ++j) out.push_back(Nat(static_cast<unsigned long>(j)));
    return out;
  };
  g.branch_bound = [cap](std::size_t) { return cap; };
  g.depth_budget = depth_budget;
  return g;
}

GeneratedTree path_tree(std::size_t depth_budget) {
  GeneratedTree g;
  g.member = [](const Seq& s) {
    for (std::size_t i = 0; i < s.size(); ++i)
      if (s[i] != 0) return false;
    return true;
  };
  g.children = [](const Seq&) { return std::vector<Nat>{Nat(0)}; };
  g.branch_bound = [](std::size_t) { return Nat(0); };
  g.depth_budget = depth_budget;
  return g;
}

GeneratedTree comb_tree(std::size_t depth_budget) {
  GeneratedTree g;
  // Zeros with at most one trailing 1: the spine plus one tooth per level.
  g.member = [](const Seq& s) {
    for (std::size_t i = 0; i + 1 < s.size(); ++i)
      if (s[i] != 0) return false;
    return s.empty() || s.back() <= 1;
  };
  g.children = [](const Seq& s) {
    if (!s.empty() && s.back() == 1) return std::vector<Nat>{};
    return std::vector<Nat>{Nat(0), Nat(1)};
  };
  g.branch_bound = [](std::size_t) { return Nat(1); };
  g.depth_budget = depth_budget;
  return g;
}

TreeWithLeaves random_tree(std::uint64_t seed, std::size_t max_nodes, std::size_t max_depth,
                           std::size_t max_label) {
  if (max_nodes > kMaxRandomNodes) throw resource_error("random_tree: node budget too large");
  std::mt19937_64 rng(seed);
  std::vector<Seq> pool{Seq()};
  SeqSet nodes{Seq()};
  std::size_t attempts = 0;
  while (nodes.size() < max_nodes && attempts < 8 * max_nodes) {
    ++attempts;
    const Seq& parent = pool[draw(rng, pool.size())];
    if (parent.size() >= max_depth) continue;
    Seq child = parent.child(Nat(static_cast<unsigned long>(draw(rng, max_label + 1))));
    if (nodes.insert(child).second) pool.push_back(std::move(child));
  }
  return TreeWithLeaves::of(ExplicitTree::from_nodes(std::move(nodes)));
}

LpoInstance random_lpo(std::uint64_t seed, std::size_t rows, std::size_t budget) {
  std::mt19937_64 rng(seed);
  std::vector<Seq> out;
  out.reserve(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    std::vector<Nat> row;
    row.reserve(budget);
    for (std::size_t j = 0; j < budget; ++j) {
      // Sparse zeros keep both answers common.
      std::uint64_t v = draw(rng, 5);
      row.push_back(v == 0 ? Nat(0) : Nat(static_cast<unsigned long>(v)));
    }
    out.emplace_back(std::move(row));
  }
  return LpoInstance::of(std::move(out), budget);
}

std::vector<Nat> random_injection(std::uint64_t seed, std::size_t length, std::size_t value_cap) {
  if (length > value_cap) throw input_error("random_injection: not enough distinct values");
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> values(value_cap);
  for (std::size_t i = 0; i < value_cap; ++i) values[i] = i;
  // Partial Fisher-Yates.
  for (std::size_t i = 0; i < length; ++i)
    std::swap(values[i], values[i + draw(rng, value_cap - i)]);
  std::vector<Nat> out;
  out.reserve(length);
  for (std::size_t i = 0; i < length; ++i) out.push_back(Nat(static_cast<unsigned long>(values[i])));
  return out;
}

GeneratorOutput generate(const GeneratorSpec& spec) {
  if (spec.depth > kMaxWindow) throw resource_error("generate: depth beyond window cap");
  if (spec.name == "full") return full_tree(spec.branching, spec.depth);
  if (spec.name == "path") return path_tree(spec.depth);
  if (spec.name == "comb") return comb_tree(spec.depth);
  if (spec.name == "finite-random")
    return random_tree(spec.seed, spec.node_budget, spec.depth, spec.max_label);
  if (spec.name == "lpo") return random_lpo(spec.seed, spec.rows, spec.depth);
  throw input_error("unknown generator: " + spec.name);
}

} // namespace treelab
