#pragma once

#include <utility>
#include <vector>

#include "treelab/tree.hpp"

namespace treelab {

/// The shifted tree with a 0-labelled leaf hung under every node: the image
/// of the source under +1, plus a 0-child for each image node.  Star trees
/// carry their leaf set for free: the leaves are exactly the nodes ending
/// in 0.
struct StarTree {
  Tree star;
  Tree origin;
};

/// Pointwise monus image.  Not injective: entries 0 and 1 collide.
ExplicitTree t_minus(const ExplicitTree& t);
GeneratedTree t_minus(const GeneratedTree& t);
Tree t_minus(const Tree& t);

/// Pointwise +1 image; a bijection on nodes.
ExplicitTree t_plus(const ExplicitTree& t);
GeneratedTree t_plus(const GeneratedTree& t);
Tree t_plus(const Tree& t);

StarTree t_star(const ExplicitTree& t);
StarTree t_star(const GeneratedTree& t);
StarTree t_star(const Tree& t);

/// Shape test: star-tree leaves are the nonempty nodes ending in 0.
bool is_star_leaf(const Seq& s);

/// Leaf set of an explicit star tree, read off from the node shapes.
SeqSet star_leaves(const ExplicitTree& star);
SeqSet star_leaves(const StarTree& s);

/// Recovers the source tree from a star-shaped tree.  Rejects inputs that
/// break the star shape: a 0-ending node with children, or a positive node
/// missing its 0-child.
ExplicitTree star_invert(const ExplicitTree& star);

/// Elementwise star transform with leaf sets, order preserved.
std::vector<std::pair<StarTree, SeqSet>> star_sequence(const std::vector<ExplicitTree>& ts);

/// Pointwise +1 on a node set: carries kernels of the source to kernels of
/// the shifted tree.  map_kernel_down is its inverse on positive entries.
SeqSet map_kernel_up(const SeqSet& k);
SeqSet map_kernel_down(const SeqSet& k);

} // namespace treelab
