#include "treelab/transforms.hpp"

#include <algorithm>
#include <memory>

#include "treelab/errors.hpp"

namespace treelab {

namespace {

constexpr std::size_t kMaxLiftZeros = 20;

bool all_positive(const Seq& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i] == 0) return false;
  return true;
}

// Enumerates the +1-preimages of s under monus: positions holding 0 lift to
// either 0 or 1, positive positions lift uniquely.
std::vector<Seq> monus_lifts(const Seq& s) {
  std::vector<std::size_t> zero_pos;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i] == 0) zero_pos.push_back(i);
  if (zero_pos.size() > kMaxLiftZeros)
    throw resource_error("too many zero entries to enumerate monus preimages");
  std::vector<Seq> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << zero_pos.size()); ++mask) {
    std::vector<Nat> e;
    e.reserve(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) e.push_back(s[i] + 1);
    for (std::size_t z = 0; z < zero_pos.size(); ++z)
      if (!(mask >> z & 1)) e[zero_pos[z]] = 0;
    out.emplace_back(std::move(e));
  }
  return out;
}

} // namespace

ExplicitTree t_minus(const ExplicitTree& t) {
  SeqSet out;
  for (const Seq& s : t.nodes()) out.insert(shift_down(s));
  return ExplicitTree::from_nodes(std::move(out));
}

GeneratedTree t_minus(const GeneratedTree& t) {
  GeneratedTree g;
  auto base = std::make_shared<GeneratedTree>(t);
  g.member = [base](const Seq& s) {
    for (const Seq& lift : monus_lifts(s))
      if (base->member(lift)) return true;
    return false;
  };
  g.children = [base](const Seq& s) {
    std::vector<Nat> labels;
    for (const Seq& lift : monus_lifts(s))
      if (base->member(lift))
        for (const Nat& b : base->child_labels(lift))
          labels.push_back(b > 0 ? Nat(b - 1) : Nat(0));
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    return labels;
  };
  if (t.branch_bound) {
    auto bb = *t.branch_bound;
    g.branch_bound = [bb](std::size_t i) {
      Nat v = bb(i);
      return v > 0 ? Nat(v - 1) : Nat(0);
    };
  }
  g.depth_budget = t.depth_budget;
  return g;
}

ExplicitTree t_plus(const ExplicitTree& t) {
  SeqSet out;
  for (const Seq& s : t.nodes()) out.insert(shift_up(s));
  return ExplicitTree::from_nodes(std::move(out));
}

GeneratedTree t_plus(const GeneratedTree& t) {
  GeneratedTree g;
  auto base = std::make_shared<GeneratedTree>(t);
  g.member = [base](const Seq& s) { return all_positive(s) && base->member(shift_down(s)); };
  g.children = [base](const Seq& s) {
    std::vector<Nat> labels;
    if (!all_positive(s)) return labels;
    for (const Nat& b : base->child_labels(shift_down(s))) labels.push_back(b + 1);
    return labels;
  };
  if (t.branch_bound) {
    auto bb = *t.branch_bound;
    g.branch_bound = [bb](std::size_t i) { return Nat(bb(i) + 1); };
  }
  g.depth_budget = t.depth_budget;
  return g;
}

Tree t_minus(const Tree& t) {
  if (const auto* e = std::get_if<ExplicitTree>(&t)) return t_minus(*e);
  return t_minus(std::get<GeneratedTree>(t));
}

Tree t_plus(const Tree& t) {
  if (const auto* e = std::get_if<ExplicitTree>(&t)) return t_plus(*e);
  return t_plus(std::get<GeneratedTree>(t));
}

StarTree t_star(const ExplicitTree& t) {
  SeqSet out;
  for (const Seq& s : t.nodes()) {
    Seq up = shift_up(s);
    out.insert(up.child(Nat(0)));
    out.insert(std::move(up));
  }
  return StarTree{Tree(ExplicitTree::from_nodes(std::move(out))), Tree(t)};
}

StarTree t_star(const GeneratedTree& t) {
  GeneratedTree g;
  auto base = std::make_shared<GeneratedTree>(t);
  g.member = [base](const Seq& s) {
    if (s.empty()) return base->member(s);
    if (s.back() == 0) {
      Seq head = s.parent();
      return all_positive(head) && base->member(shift_down(head));
    }
    return all_positive(s) && base->member(shift_down(s));
  };
  g.children = [base](const Seq& s) {
    std::vector<Nat> labels;
    if (!s.empty() && s.back() == 0) return labels; // attached leaves stay leaves
    labels.push_back(Nat(0));
    for (const Nat& b : base->child_labels(shift_down(s))) labels.push_back(b + 1);
    return labels;
  };
  if (t.branch_bound) {
    auto bb = *t.branch_bound;
    g.branch_bound = [bb](std::size_t i) { return Nat(bb(i) + 1); };
  }
  g.depth_budget = t.depth_budget + 1;
  return StarTree{Tree(std::move(g)), Tree(t)};
}

StarTree t_star(const Tree& t) {
  if (const auto* e = std::get_if<ExplicitTree>(&t)) return t_star(*e);
  return t_star(std::get<GeneratedTree>(t));
}

bool is_star_leaf(const Seq& s) { return !s.empty() && s.back() == 0; }

SeqSet star_leaves(const ExplicitTree& star) {
  SeqSet out;
  for (const Seq& s : star.nodes())
    if (is_star_leaf(s)) out.insert(s);
  return out;
}

SeqSet star_leaves(const StarTree& s) {
  if (const auto* e = std::get_if<ExplicitTree>(&s.star)) return star_leaves(*e);
  throw input_error("star_leaves: truncate the generated star tree first");
}

ExplicitTree star_invert(const ExplicitTree& star) {
  SeqSet out;
  for (const Seq& s : star.nodes()) {
    if (is_star_leaf(s)) {
      if (!star.child_labels(s).empty())
        throw input_error("not a star tree: 0-ending node has children: " + seq_to_text(s));
      continue;
    }
    if (!star.contains(s.child(Nat(0))))
      throw input_error("not a star tree: node lacks its 0-child: " + seq_to_text(s));
    out.insert(shift_down(s));
  }
  return ExplicitTree::from_nodes(std::move(out));
}

std::vector<std::pair<StarTree, SeqSet>> star_sequence(const std::vector<ExplicitTree>& ts) {
  std::vector<std::pair<StarTree, SeqSet>> out;
  out.reserve(ts.size());
  for (const ExplicitTree& t : ts) {
    StarTree s = t_star(t);
    SeqSet leaves = star_leaves(s);
    out.emplace_back(std::move(s), std::move(leaves));
  }
  return out;
}

SeqSet map_kernel_up(const SeqSet& k) {
  SeqSet out;
  for (const Seq& s : k) out.insert(shift_up(s));
  return out;
}

SeqSet map_kernel_down(const SeqSet& k) {
  SeqSet out;
  for (const Seq& s : k) out.insert(shift_down(s));
  return out;
}

} // namespace treelab
