#pragma once

#include <functional>
#include <optional>
#include <set>
#include <variant>
#include <vector>

#include "treelab/seq.hpp"

namespace treelab {

using SeqSet = std::set<Seq>;

/// Result of the prefix-closure check on a raw node set.
struct TreeCheck {
  bool ok = true;
  /// Offending node paired with its missing immediate prefix.
  std::vector<std::pair<Seq, Seq>> missing;
};

TreeCheck check_tree(const SeqSet& nodes);

/// A finite prefix-closed set of sequences.  The empty tree is legal.
class ExplicitTree {
public:
  ExplicitTree() = default;

  /// Validates prefix-closure; throws input_error with the first violations.
  static ExplicitTree from_nodes(SeqSet nodes);
  /// Adds every missing prefix instead of rejecting.
  static ExplicitTree closure(const SeqSet& nodes);

  const SeqSet& nodes() const { return nodes_; }
  std::size_t size() const { return nodes_.size(); }
  bool contains(const Seq& s) const { return nodes_.count(s) != 0; }
  bool empty() const { return nodes_.empty(); }
  /// Length of the longest node; 0 for the empty tree.
  std::size_t height() const;
  /// Largest entry appearing in any node; 0 when none appear.
  Nat max_entry() const;
  /// Sorted labels j with s^j present.
  std::vector<Nat> child_labels(const Seq& s) const;

  bool operator==(const ExplicitTree& o) const { return nodes_ == o.nodes_; }

private:
  explicit ExplicitTree(SeqSet nodes) : nodes_(std::move(nodes)) {}
  SeqSet nodes_;
};

/// A positionwise bound on entries: b(i) caps entry values at position i.
/// Backed by a vector whose last value repeats beyond the end.
struct Bound {
  std::vector<Nat> values;

  Nat at(std::size_t i) const;
  /// True when every node s of t satisfies s(i) <= at(i) for all i < |s|.
  bool bounds(const ExplicitTree& t) const;
  /// The pointwise-lowest bound for an explicit tree.
  static Bound tight_for(const ExplicitTree& t);
};

/// A tree given by a membership oracle, explored through a finite window.
///
/// `children` enumerates the exact child labels of a node; when absent it is
/// derived by scanning labels up to `branch_bound`.  Operations that must
/// enumerate nodes reject trees that provide neither.
class GeneratedTree {
public:
  std::function<bool(const Seq&)> member;
  std::optional<std::function<std::vector<Nat>(const Seq&)>> children;
  std::optional<std::function<Nat(std::size_t)>> branch_bound;
  std::size_t depth_budget = 0;

  /// Sorted child labels of a node; throws input_error when unenumerable.
  std::vector<Nat> child_labels(const Seq& s) const;
};

using Tree = std::variant<ExplicitTree, GeneratedTree>;

/// Depth to which a tree can be explored: the height of an explicit tree,
/// the window budget of a generated one.
std::size_t avail_depth(const Tree& t);

bool tree_member(const Tree& t, const Seq& s);

/// A tree paired with its exact (or window-adjusted) leaf set.
/// `frontier` holds window-boundary nodes that may have children beyond the
/// explored depth; it is empty for fully known trees.
struct TreeWithLeaves {
  ExplicitTree tree;
  SeqSet leaves;
  SeqSet frontier;

  /// Wraps a fully known tree: leaves are exact, frontier empty.
  static TreeWithLeaves of(ExplicitTree t);
  /// Throws input_error unless leaves/frontier are consistent with the tree.
  void validate() const;
};

/// Leaf set computed with a bounding function: s is a leaf iff no s^j with
/// j <= b(|s|) lies in the tree.  Requires b to bound the tree.
SeqSet bleaf(const ExplicitTree& t, const Bound& b);

/// Definitional leaf set by scanning all node pairs.  This is the
/// independent oracle the faster leaf routines are checked against.
SeqSet leaf_brute(const ExplicitTree& t);

SeqSet nodes_at_depth(const ExplicitTree& t, std::size_t d);
SeqSet nodes_at_depth(const GeneratedTree& t, std::size_t d);
SeqSet nodes_at_depth(const Tree& t, std::size_t d);

/// Depth-d well-foundedness certificate: no node of length d.
bool wf_probe(const Tree& t, std::size_t d);

/// Splitting proxy for perfectness.  d = 0 asks membership; d > 0 asks for
/// two incomparable proper extensions in the tree, each (d-1)-splitting.
/// Witnesses may sit at any length, not only among immediate children.
bool has_splitting(const ExplicitTree& t, const Seq& node, std::size_t d);

/// All nodes with a d-splitting; the finite-depth kernel proxy.
SeqSet kernel_probe(const ExplicitTree& t, std::size_t d);

/// Splitting level sets S_0 = nodes, ..., S_d = kernel_probe(t, d), computed
/// in one pass; levels[i] is S_i.
std::vector<SeqSet> splitting_levels(const ExplicitTree& t, std::size_t max_d);

/// Explores a generated tree to depth d.  Nodes whose child enumeration is
/// empty become leaves; depth-d nodes with children beyond the window go to
/// the frontier.
TreeWithLeaves truncate(const GeneratedTree& t, std::size_t d);
TreeWithLeaves truncate(const Tree& t, std::size_t d);

/// Depth-first search for any node of length d, without materializing the
/// window; returns one such node when it exists.
std::optional<Seq> find_node_at_depth(const GeneratedTree& t, std::size_t d);

/// Wraps an explicit tree as a generated one (exact membership + children).
GeneratedTree as_generated(const ExplicitTree& t);

} // namespace treelab
