#pragma once

#include <map>
#include <string>
#include <type_traits>
#include <vector>

#include "treelab/errors.hpp"
#include "treelab/tree.hpp"

namespace treelab {

/// A finite window onto a sequence of sequences of naturals: one finite
/// prefix per row, plus a common window length ("budget") every row covers.
struct LpoInstance {
  std::vector<Seq> rows;
  std::size_t budget = 0;

  /// Validates that every row has length >= budget.
  static LpoInstance of(std::vector<Seq> rows, std::size_t budget);
};

/// Per-row zero-search answers; bit i is 1 when row i has a zero inside the
/// window.  A 0 bit is only a window certificate.
struct LpoAnswer {
  std::vector<int> bits;
  bool operator==(const LpoAnswer&) const = default;
};

/// The definitional window solver: bit i = 1 iff some n < budget has
/// row_i(n) = 0.
LpoAnswer lpo_solve(const LpoInstance& inst);

/// Zero-search instance as a tree: an all-ones spine; under the spine one
/// marked node per row (n+1 ones then a 0); and below the marked node for
/// row n a single child at the position of the row's first zero, when one
/// exists inside the window.  Row n has a zero iff its marked node is not a
/// leaf.
GeneratedTree lpo_to_tree(const LpoInstance& inst);

/// Reads the answers back off a leaf set of lpo_to_tree(inst).
LpoAnswer lpo_from_leafset(const LpoInstance& inst, const SeqSet& leaves);

/// Leaf computation as a zero-search instance: row i has p_i(j) = 0 iff
/// node_i^j is in the tree.  Solving the instance and collecting the rows
/// with no zero recovers the leaf set.
struct TreeLpo {
  LpoInstance instance;
  std::vector<Seq> order; // row i describes order[i]
};
TreeLpo tree_to_lpo(const ExplicitTree& t);

/// Range-of-an-injection instance: m rows over window |f|, row i holding a
/// zero at n iff f(n) = i.  The induced answer marks exactly range(f).
LpoInstance injection_to_lpo(const std::vector<Nat>& f, std::size_t rows);

struct WfFamily {
  std::vector<Tree> trees;
};

/// Well-foundedness family folded into one kernel instance.  The gadget
/// has a node <i> per family member; below <i>, each level carries one
/// entry of a branch of T_i packed with one free binary bit, coded with the
/// Cantor pair.  The binary bit supplies two incompatible continuations at
/// every level, so a node below <i> admits a depth-d splitting exactly when
/// T_i reaches depth d.
GeneratedTree wf_to_pk(const WfFamily& fam);

/// Reads the well-foundedness bits off a kernel (probe) of wf_to_pk(fam):
/// bit i = 1 (well-founded) iff <i> is outside the kernel.
std::vector<int> wf_from_kernel(const WfFamily& fam, const SeqSet& kernel);

/// One derived tree per node s of the source: a node of T_s is a chain of
/// tuples of source nodes, each tuple refining the previous one by picking
/// an incomparable pair of proper extensions for every coordinate.  Tuples
/// are stored as sequence codes; pairs are ordered by code so the output is
/// reproducible byte for byte.  T_s grows one level past depth d exactly
/// when s admits a depth-d splitting.
struct SigmaTree {
  Seq sigma;
  GeneratedTree tree;
};
std::vector<SigmaTree> pk_to_wf(const ExplicitTree& t, std::size_t window = 4);

/// Collects the kernel from per-node well-foundedness answers:
/// the nodes whose derived tree is not well-founded.
SeqSet kernel_from_wf(const ExplicitTree& t, const std::map<Seq, int>& wf_bits);

/// Parallelization: applies a single-instance problem elementwise, order
/// preserved.  The first per-element failure is rethrown with its index.
template <class Fn, class In>
auto hat(Fn&& problem, const std::vector<In>& instances) {
  using Out = std::decay_t<std::invoke_result_t<Fn&, const In&>>;
  std::vector<Out> out;
  out.reserve(instances.size());
  for (std::size_t i = 0; i < instances.size(); ++i) {
    try {
      out.push_back(problem(instances[i]));
    } catch (const input_error& e) {
      throw input_error("element " + std::to_string(i) + ": " + e.what());
    } catch (const resource_error& e) {
      throw resource_error("element " + std::to_string(i) + ": " + e.what());
    }
  }
  return out;
}

} // namespace treelab
