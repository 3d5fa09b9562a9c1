#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include "treelab/reductions.hpp"
#include "treelab/tree.hpp"

namespace treelab {

/// Deterministic named inputs: the same spec always produces the same
/// object.
struct GeneratorSpec {
  std::string name;             // full | path | comb | finite-random | lpo
  std::size_t branching = 2;    // k for `full`
  std::size_t depth = 3;        // window budget / random depth cap
  std::uint64_t seed = 1;       // finite-random, lpo
  std::size_t node_budget = 16; // finite-random target size
  std::size_t max_label = 3;    // finite-random entry cap
  std::size_t rows = 4;         // lpo rows
};

using GeneratorOutput = std::variant<GeneratedTree, TreeWithLeaves, LpoInstance>;

GeneratorOutput generate(const GeneratorSpec& spec);

/// Complete k-branching tree, window-limited.
GeneratedTree full_tree(std::size_t k, std::size_t depth_budget);
/// The single spine 0^n, window-limited.
GeneratedTree path_tree(std::size_t depth_budget);
/// Spine 0^n with one extra leaf child (label 1) per spine node.
GeneratedTree comb_tree(std::size_t depth_budget);

/// Random prefix-closed node set with its exact leaf set.
TreeWithLeaves random_tree(std::uint64_t seed, std::size_t max_nodes, std::size_t max_depth,
                           std::size_t max_label);

/// Random zero-search instance: `rows` rows of length `budget`, mostly
/// nonzero entries with occasional zeros.
LpoInstance random_lpo(std::uint64_t seed, std::size_t rows, std::size_t budget);

/// Random injective value list with entries below `value_cap`.
std::vector<Nat> random_injection(std::uint64_t seed, std::size_t length, std::size_t value_cap);

} // namespace treelab
