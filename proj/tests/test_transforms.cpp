#include <doctest.h>

#include "treelab/errors.hpp"
#include "treelab/generators.hpp"
#include "treelab/transforms.hpp"

using namespace treelab;

namespace {
const ExplicitTree& star_of(const StarTree& s) { return std::get<ExplicitTree>(s.star); }
} // namespace

TEST_CASE("t_minus shifts down and may collide") {
  CHECK(t_minus(ExplicitTree::from_nodes({Seq{}, Seq{2}})).nodes() == SeqSet{Seq{}, Seq{1}});
  // entries 0 and 1 both land on 0
  CHECK(t_minus(ExplicitTree::from_nodes({Seq{}, Seq{0}, Seq{1}})).nodes() ==
        SeqSet{Seq{}, Seq{0}});
  CHECK(t_minus(ExplicitTree::from_nodes({})).nodes() == SeqSet{});
}

TEST_CASE("t_plus shifts up") {
  CHECK(t_plus(ExplicitTree::from_nodes({Seq{}, Seq{0}})).nodes() == SeqSet{Seq{}, Seq{1}});
  CHECK(t_plus(ExplicitTree::from_nodes({})).nodes() == SeqSet{});
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    ExplicitTree t = random_tree(seed, 24, 4, 3).tree;
    CHECK(t_minus(t_plus(t)) == t);
  }
}

TEST_CASE("t_star frozen examples") {
  CHECK(star_of(t_star(ExplicitTree::from_nodes({Seq{}, Seq{0}}))).nodes() ==
        SeqSet{Seq{}, Seq{0}, Seq{1}, Seq{1, 0}});
  CHECK(star_of(t_star(ExplicitTree::from_nodes({}))).nodes() == SeqSet{});
  CHECK(star_of(t_star(ExplicitTree::from_nodes({Seq{}}))).nodes() == SeqSet{Seq{}, Seq{0}});
}

TEST_CASE("star structure on random trees") {
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    ExplicitTree t = random_tree(seed + 50, 32, 5, 3).tree;
    StarTree s = t_star(t);
    const ExplicitTree& star = star_of(s);
    CHECK(star.size() == 2 * t.size());
    SeqSet leaves = star_leaves(s);
    CHECK(leaves == leaf_brute(star));
    SeqSet pruned;
    for (const Seq& n : star.nodes())
      if (!leaves.count(n)) pruned.insert(n);
    CHECK(pruned == t_plus(t).nodes());
    CHECK(star_invert(star) == t);
  }
}

TEST_CASE("star_leaves frozen examples") {
  CHECK(star_leaves(t_star(ExplicitTree::from_nodes({Seq{}, Seq{0}}))) ==
        SeqSet{Seq{0}, Seq{1, 0}});
  CHECK(star_leaves(t_star(ExplicitTree::from_nodes({Seq{}}))) == SeqSet{Seq{0}});
  CHECK(star_leaves(t_star(ExplicitTree::from_nodes({}))) == SeqSet{});
}

TEST_CASE("star_invert rejects non-star shapes") {
  CHECK(star_invert(ExplicitTree::from_nodes({Seq{}, Seq{0}, Seq{1}, Seq{1, 0}})).nodes() ==
        SeqSet{Seq{}, Seq{0}});
  // 0-ending node with a child
  CHECK_THROWS_AS(star_invert(ExplicitTree::from_nodes({Seq{}, Seq{0}, Seq{0, 0}})), input_error);
  // positive node missing its 0-child
  CHECK_THROWS_AS(star_invert(ExplicitTree::from_nodes({Seq{}})), input_error);
}

TEST_CASE("star_sequence is elementwise") {
  auto out = star_sequence({ExplicitTree::from_nodes({Seq{}})});
  REQUIRE(out.size() == 1);
  CHECK(star_of(out[0].first).nodes() == SeqSet{Seq{}, Seq{0}});
  CHECK(out[0].second == SeqSet{Seq{0}});

  CHECK(star_sequence({}).empty());

  auto two = star_sequence({ExplicitTree::from_nodes({}), ExplicitTree::from_nodes({Seq{}})});
  REQUIRE(two.size() == 2);
  CHECK(star_of(two[0].first).nodes() == SeqSet{});
  CHECK(two[0].second == SeqSet{});
  CHECK(star_of(two[1].first).nodes() == SeqSet{Seq{}, Seq{0}});
  CHECK(two[1].second == SeqSet{Seq{0}});
}

TEST_CASE("kernel set maps") {
  CHECK(map_kernel_up(SeqSet{Seq{}, Seq{0}}) == SeqSet{Seq{}, Seq{1}});
  CHECK(map_kernel_up(SeqSet{}) == SeqSet{});
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    SeqSet k = random_tree(seed, 16, 4, 3).tree.nodes();
    CHECK(map_kernel_down(map_kernel_up(k)) == k);
  }
}

TEST_CASE("generated-tree transforms agree with the explicit ones on windows") {
  GeneratedTree g = comb_tree(4);
  ExplicitTree window = truncate(g, 4).tree;

  StarTree gs = t_star(g);
  const GeneratedTree& star = std::get<GeneratedTree>(gs.star);
  CHECK(star.member(Seq{1}));
  CHECK(star.member(Seq{0}));
  CHECK(star.member(Seq{1, 0}));
  CHECK_FALSE(star.member(Seq{0, 1})); // 0-ending nodes have no children
  CHECK_FALSE(star.member(Seq{3}));

  ExplicitTree plus_window = truncate(t_plus(g), 4).tree;
  CHECK(plus_window == t_plus(window));

  ExplicitTree minus_window = truncate(t_minus(g), 4).tree;
  CHECK(minus_window == t_minus(window));
}
