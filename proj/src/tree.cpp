#include "treelab/tree.hpp"

#include <algorithm>
#include <memory>

#include "treelab/errors.hpp"

namespace treelab {

namespace {
// Exploration guards for generated trees.
constexpr std::size_t kMaxExploredNodes = std::size_t{1} << 21;
constexpr std::uint64_t kMaxLabelScan = std::uint64_t{1} << 16;
} // namespace

TreeCheck check_tree(const SeqSet& nodes) {
  TreeCheck out;
  for (const Seq& s : nodes) {
    if (s.empty()) continue;
    Seq p = s.parent();
    if (!nodes.count(p)) {
      out.ok = false;
      out.missing.emplace_back(s, p);
    }
  }
  return out;
}

ExplicitTree ExplicitTree::from_nodes(SeqSet nodes) {
  TreeCheck chk = check_tree(nodes);
  if (!chk.ok) {
    std::string what = "not prefix-closed:";
    for (std::size_t i = 0; i < chk.missing.size() && i < 4; ++i)
      what += " " + seq_to_text(chk.missing[i].first) + " lacks " +
              seq_to_text(chk.missing[i].second) + ";";
    throw input_error(what);
  }
  return ExplicitTree(std::move(nodes));
}

ExplicitTree ExplicitTree::closure(const SeqSet& nodes) {
  SeqSet out;
  for (const Seq& s : nodes)
    for (std::size_t len = 0; len <= s.size(); ++len) out.insert(s.prefix(len));
  return ExplicitTree(std::move(out));
}

std::size_t ExplicitTree::height() const {
  std::size_t h = 0;
  for (const Seq& s : nodes_) h = std::max(h, s.size());
  return h;
}

Nat ExplicitTree::max_entry() const {
  Nat m = 0;
  for (const Seq& s : nodes_)
    for (std::size_t i = 0; i < s.size(); ++i) m = std::max(m, s[i]);
  return m;
}

std::vector<Nat> ExplicitTree::child_labels(const Seq& s) const {
  // Children share length |s|+1 and prefix s, so they sit in one shortlex run.
  std::vector<Nat> out;
  auto it = nodes_.lower_bound(s.child(Nat(0)));
  for (; it != nodes_.end(); ++it) {
    if (it->size() != s.size() + 1) break;
    if (!is_prefix(s, *it)) break;
    out.push_back(it->back());
  }
  return out;
}

Nat Bound::at(std::size_t i) const {
  if (values.empty()) return 0;
  if (i < values.size()) return values[i];
  return values.back();
}

bool Bound::bounds(const ExplicitTree& t) const {
  for (const Seq& s : t.nodes())
    for (std::size_t i = 0; i < s.size(); ++i)
      if (s[i] > at(i)) return false;
  return true;
}

Bound Bound::tight_for(const ExplicitTree& t) {
  Bound b;
  b.values.assign(t.height(), Nat(0));
  for (const Seq& s : t.nodes())
    for (std::size_t i = 0; i < s.size(); ++i) b.values[i] = std::max(b.values[i], s[i]);
  return b;
}

std::vector<Nat> GeneratedTree::child_labels(const Seq& s) const {
  if (children) return (*children)(s);
  if (!branch_bound)
    throw input_error("generated tree has neither a child enumerator nor a branch bound");
  Nat cap = (*branch_bound)(s.size());
  if (cap > kMaxLabelScan)
    throw resource_error("branch bound too large to scan: " + nat_to_string(cap));
  std::vector<Nat> out;
  std::uint64_t top = to_u64(cap);
  for (std::uint64_t j = 0; j <= top; ++j) {
    Seq c = s.child(Nat(static_cast<unsigned long>(j)));
    if (member(c)) out.push_back(Nat(static_cast<unsigned long>(j)));
  }
  return out;
}

std::size_t avail_depth(const Tree& t) {
  if (const auto* e = std::get_if<ExplicitTree>(&t)) return e->height();
  return std::get<GeneratedTree>(t).depth_budget;
}

bool tree_member(const Tree& t, const Seq& s) {
  if (const auto* e = std::get_if<ExplicitTree>(&t)) return e->contains(s);
  return std::get<GeneratedTree>(t).member(s);
}

TreeWithLeaves TreeWithLeaves::of(ExplicitTree t) {
  TreeWithLeaves out;
  out.leaves = leaf_brute(t);
  out.tree = std::move(t);
  return out;
}

void TreeWithLeaves::validate() const {
  for (const Seq& s : leaves) {
    if (!tree.contains(s)) throw input_error("leaf not in tree: " + seq_to_text(s));
    if (frontier.count(s)) throw input_error("node both leaf and frontier: " + seq_to_text(s));
    if (!tree.child_labels(s).empty())
      throw input_error("declared leaf has children: " + seq_to_text(s));
  }
  for (const Seq& s : frontier) {
    if (!tree.contains(s)) throw input_error("frontier node not in tree: " + seq_to_text(s));
    if (!tree.child_labels(s).empty())
      throw input_error("frontier node has explored children: " + seq_to_text(s));
  }
  for (const Seq& s : tree.nodes())
    if (tree.child_labels(s).empty() && !leaves.count(s) && !frontier.count(s))
      throw input_error("childless node neither leaf nor frontier: " + seq_to_text(s));
}

SeqSet bleaf(const ExplicitTree& t, const Bound& b) {
  if (!b.bounds(t)) throw input_error("bleaf: bound does not bound the tree");
  SeqSet out;
  for (const Seq& s : t.nodes()) {
    Nat cap = b.at(s.size());
    if (cap > kMaxLabelScan)
      throw resource_error("bleaf: bound too large to scan: " + nat_to_string(cap));
    std::uint64_t top = to_u64(cap);
    bool leaf = true;
    for (std::uint64_t j = 0; j <= top && leaf; ++j)
      if (t.contains(s.child(Nat(static_cast<unsigned long>(j))))) leaf = false;
    if (leaf) out.insert(s);
  }
  return out;
}

SeqSet leaf_brute(const ExplicitTree& t) {
  SeqSet out;
  for (const Seq& s : t.nodes()) {
    bool leaf = true;
    for (const Seq& other : t.nodes()) {
      if (other.size() > s.size() && is_prefix(s, other)) {
        leaf = false;
        break;
      }
    }
    if (leaf) out.insert(s);
  }
  return out;
}

SeqSet nodes_at_depth(const ExplicitTree& t, std::size_t d) {
  SeqSet out;
  for (const Seq& s : t.nodes())
    if (s.size() == d) out.insert(s);
  return out;
}

SeqSet nodes_at_depth(const GeneratedTree& t, std::size_t d) {
  if (d > t.depth_budget) throw input_error("nodes_at_depth: depth beyond window budget");
  if (!t.member(Seq())) return {};
  std::vector<Seq> level{Seq()};
  std::size_t explored = 1;
  for (std::size_t l = 0; l < d; ++l) {
    std::vector<Seq> next;
    for (const Seq& s : level)
      for (const Nat& j : t.child_labels(s)) {
        next.push_back(s.child(j));
        if (++explored > kMaxExploredNodes)
          throw resource_error("generated tree exploration exceeded node cap");
      }
    level = std::move(next);
    if (level.empty()) break;
  }
  return SeqSet(level.begin(), level.end());
}

SeqSet nodes_at_depth(const Tree& t, std::size_t d) {
  if (const auto* e = std::get_if<ExplicitTree>(&t)) return nodes_at_depth(*e, d);
  return nodes_at_depth(std::get<GeneratedTree>(t), d);
}

bool wf_probe(const Tree& t, std::size_t d) { return nodes_at_depth(t, d).empty(); }

std::vector<SeqSet> splitting_levels(const ExplicitTree& t, std::size_t max_d) {
  // Lex order puts the proper extensions of v[i] in the contiguous run
  // (i, end[i]).  A set of extensions contains an incomparable pair exactly
  // when some lex-consecutive pair of them fails the prefix test.
  std::vector<Seq> v(t.nodes().begin(), t.nodes().end());
  std::sort(v.begin(), v.end(), lex_less);
  std::size_t n = v.size();

  std::vector<std::size_t> end(n, n);
  std::vector<std::size_t> stack;
  for (std::size_t j = 0; j < n; ++j) {
    while (!stack.empty() && !is_prefix(v[stack.back()], v[j])) {
      end[stack.back()] = j;
      stack.pop_back();
    }
    stack.push_back(j);
  }

  std::vector<SeqSet> levels;
  std::vector<char> cur(n, 1);
  levels.emplace_back(t.nodes());
  for (std::size_t d = 1; d <= max_d; ++d) {
    std::vector<char> next(n, 0);
    bool any = false;
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t prev = n; // last in-level index seen inside the run
      for (std::size_t j = i + 1; j < end[i]; ++j) {
        if (!cur[j]) continue;
        if (prev != n && !is_prefix(v[prev], v[j])) {
          next[i] = 1;
          any = true;
          break;
        }
        prev = j;
      }
    }
    SeqSet s;
    for (std::size_t i = 0; i < n; ++i)
      if (next[i]) s.insert(v[i]);
    levels.push_back(std::move(s));
    cur = std::move(next);
    if (!any) {
      // All deeper levels are empty.
      while (levels.size() <= max_d) levels.emplace_back();
      break;
    }
  }
  return levels;
}

bool has_splitting(const ExplicitTree& t, const Seq& node, std::size_t d) {
  if (!t.contains(node)) return false;
  if (d == 0) return true;
  return splitting_levels(t, d)[d].count(node) != 0;
}

SeqSet kernel_probe(const ExplicitTree& t, std::size_t d) { return splitting_levels(t, d)[d]; }

TreeWithLeaves truncate(const GeneratedTree& t, std::size_t d) {
  if (d > t.depth_budget) throw input_error("truncate: depth beyond window budget");
  TreeWithLeaves out;
  if (!t.member(Seq())) return out;

  SeqSet nodes;
  std::vector<Seq> level{Seq()};
  nodes.insert(Seq());
  std::size_t explored = 1;
  for (std::size_t l = 0; l <= d; ++l) {
    std::vector<Seq> next;
    for (const Seq& s : level) {
      std::vector<Nat> labels = t.child_labels(s);
      if (labels.empty()) {
        out.leaves.insert(s);
        continue;
      }
      if (l == d) {
        out.frontier.insert(s);
        continue;
      }
      for (const Nat& j : labels) {
        Seq c = s.child(j);
        nodes.insert(c);
        next.push_back(std::move(c));
        if (++explored > kMaxExploredNodes)
          throw resource_error("truncate: exploration exceeded node cap");
      }
    }
    level = std::move(next);
  }
  out.tree = ExplicitTree::from_nodes(std::move(nodes));
  return out;
}

TreeWithLeaves truncate(const Tree& t, std::size_t d) {
  if (const auto* e = std::get_if<ExplicitTree>(&t)) {
    // Fully known tree: keep nodes of length <= d, leaves stay exact, and
    // depth-d nodes with deeper children move to the frontier.
    SeqSet nodes;
    for (const Seq& s : e->nodes())
      if (s.size() <= d) nodes.insert(s);
    TreeWithLeaves out;
    out.tree = ExplicitTree::from_nodes(std::move(nodes));
    for (const Seq& s : out.tree.nodes()) {
      if (!out.tree.child_labels(s).empty()) continue;
      if (s.size() == d && !e->child_labels(s).empty())
        out.frontier.insert(s);
      else
        out.leaves.insert(s);
    }
    return out;
  }
  return truncate(std::get<GeneratedTree>(t), d);
}

std::optional<Seq> find_node_at_depth(const GeneratedTree& t, std::size_t d) {
  if (d > t.depth_budget) throw input_error("find_node_at_depth: depth beyond window budget");
  if (!t.member(Seq())) return std::nullopt;
  std::size_t steps = 0;
  std::function<std::optional<Seq>(const Seq&)> dfs =
      [&](const Seq& s) -> std::optional<Seq> {
    if (s.size() == d) return s;
    for (const Nat& j : t.child_labels(s)) {
      if (++steps > kMaxExploredNodes)
        throw resource_error("find_node_at_depth: exploration exceeded node cap");
      if (auto hit = dfs(s.child(j))) return hit;
    }
    return std::nullopt;
  };
  return dfs(Seq());
}

GeneratedTree as_generated(const ExplicitTree& t) {
  auto shared = std::make_shared<ExplicitTree>(t);
  GeneratedTree g;
  g.member = [shared](const Seq& s) { return shared->contains(s); };
  g.children = [shared](const Seq& s) { return shared->child_labels(s); };
  Bound b = Bound::tight_for(*shared);
  g.branch_bound = [b](std::size_t i) { return b.at(i); };
  g.depth_budget = shared->height();
  return g;
}

} // namespace treelab
