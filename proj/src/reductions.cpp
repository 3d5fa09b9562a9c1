#include "treelab/reductions.hpp"

#include <algorithm>
#include <memory>

namespace treelab {

namespace {

constexpr std::size_t kMaxTupleChildren = std::size_t{1} << 20;

std::vector<Nat> tree_child_labels(const Tree& t, const Seq& s) {
  if (const auto* e = std::get_if<ExplicitTree>(&t)) return e->child_labels(s);
  return std::get<GeneratedTree>(t).child_labels(s);
}

} // namespace

LpoInstance LpoInstance::of(std::vector<Seq> rows, std::size_t budget) {
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (rows[i].size() < budget)
      throw input_error("row " + std::to_string(i) + " shorter than the window budget");
  return LpoInstance{std::move(rows), budget};
}

LpoAnswer lpo_solve(const LpoInstance& inst) {
  LpoAnswer out;
  out.bits.reserve(inst.rows.size());
  for (const Seq& row : inst.rows) {
    int bit = 0;
    for (std::size_t n = 0; n < inst.budget; ++n)
      if (row[n] == 0) {
        bit = 1;
        break;
      }
    out.bits.push_back(bit);
  }
  return out;
}

namespace {

// Marked node for row n: n+1 ones followed by a zero.
Seq lpo_marked_node(std::size_t n) {
  std::vector<Nat> e(n + 2, Nat(1));
  e.back() = 0;
  return Seq(std::move(e));
}

// Index of the first zero of a row inside the window, if any.
std::optional<std::size_t> first_zero(const Seq& row, std::size_t budget) {
  for (std::size_t j = 0; j < budget; ++j)
    if (row[j] == 0) return j;
  return std::nullopt;
}

} // namespace

GeneratedTree lpo_to_tree(const LpoInstance& inst) {
  auto shared = std::make_shared<LpoInstance>(inst);
  GeneratedTree g;
  g.member = [shared](const Seq& s) {
    std::size_t q = 0;
    while (q < s.size() && s[q] == 1) ++q;
    if (q == s.size()) return true; // all ones
    if (s[q] != 0 || q == 0 || q - 1 >= shared->rows.size()) return false;
    std::size_t n = q - 1;
    if (s.size() == q + 1) return true; // the marked node itself
    if (s.size() != q + 2) return false;
    auto j = first_zero(shared->rows[n], shared->budget);
    return j && s[q + 1] == Nat(static_cast<unsigned long>(*j));
  };
  g.children = [shared](const Seq& s) {
    std::vector<Nat> out;
    std::size_t q = 0;
    while (q < s.size() && s[q] == 1) ++q;
    if (q == s.size()) { // on the spine
      if (q >= 1 && q - 1 < shared->rows.size()) out.push_back(Nat(0));
      out.push_back(Nat(1));
      return out;
    }
    if (s.size() == q + 1 && q >= 1 && q - 1 < shared->rows.size()) {
      auto j = first_zero(shared->rows[q - 1], shared->budget);
      if (j) out.push_back(Nat(static_cast<unsigned long>(*j)));
    }
    return out;
  };
  Nat label_cap = inst.budget > 0 ? Nat(static_cast<unsigned long>(inst.budget - 1)) : Nat(0);
  if (label_cap < 1) label_cap = 1;
  g.branch_bound = [label_cap](std::size_t) { return label_cap; };
  g.depth_budget = inst.rows.size() + 2;
  return g;
}

LpoAnswer lpo_from_leafset(const LpoInstance& inst, const SeqSet& leaves) {
  LpoAnswer out;
  out.bits.reserve(inst.rows.size());
  for (std::size_t n = 0; n < inst.rows.size(); ++n)
    out.bits.push_back(leaves.count(lpo_marked_node(n)) ? 0 : 1);
  return out;
}

TreeLpo tree_to_lpo(const ExplicitTree& t) {
  TreeLpo out;
  Nat max_entry = t.max_entry();
  if (max_entry > (std::uint64_t{1} << 16))
    throw resource_error("tree entries too large to window");
  std::size_t budget = t.empty() ? 0 : to_size(max_entry) + 2;
  out.order.assign(t.nodes().begin(), t.nodes().end());
  std::vector<Seq> rows;
  rows.reserve(out.order.size());
  for (const Seq& node : out.order) {
    std::vector<Nat> row(budget, Nat(1));
    for (std::size_t j = 0; j < budget; ++j)
      if (t.contains(node.child(Nat(static_cast<unsigned long>(j))))) row[j] = 0;
    rows.emplace_back(std::move(row));
  }
  out.instance = LpoInstance::of(std::move(rows), budget);
  return out;
}

LpoInstance injection_to_lpo(const std::vector<Nat>& f, std::size_t rows) {
  std::set<Nat> seen;
  for (const Nat& v : f)
    if (!seen.insert(v).second) throw input_error("injection_to_lpo: values repeat");
  std::vector<Seq> out;
  out.reserve(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    std::vector<Nat> row(f.size(), Nat(1));
    for (std::size_t n = 0; n < f.size(); ++n)
      if (f[n] == Nat(static_cast<unsigned long>(i))) row[n] = 0;
    out.emplace_back(std::move(row));
  }
  return LpoInstance::of(std::move(out), f.size());
}

GeneratedTree wf_to_pk(const WfFamily& fam) {
  auto shared = std::make_shared<std::vector<Tree>>(fam.trees);

  // A node <i> ^ rho is in the gadget when every entry of rho unpacks to a
  // (tree entry, binary bit) pair and the tree entries form a node of T_i.
  auto unpack = [](const Seq& rho) -> std::optional<Seq> {
    std::vector<Nat> branch;
    branch.reserve(rho.size());
    for (std::size_t m = 0; m < rho.size(); ++m) {
      auto [a, c] = cantor_unpair(rho[m]);
      if (c > 1) return std::nullopt;
      branch.push_back(a);
    }
    return Seq(std::move(branch));
  };

  GeneratedTree g;
  g.member = [shared, unpack](const Seq& s) {
    if (s.empty()) return true;
    if (!fits_u64(s[0])) return false;
    std::uint64_t i = to_u64(s[0]);
    if (i >= shared->size()) return false;
    if (s.size() == 1) return true; // every family tag is a node
    std::vector<Nat> tail(s.entries().begin() + 1, s.entries().end());
    auto branch = unpack(Seq(std::move(tail)));
    return branch && tree_member((*shared)[i], *branch);
  };
  g.children = [shared, unpack](const Seq& s) {
    std::vector<Nat> out;
    if (s.empty()) {
      for (std::size_t i = 0; i < shared->size(); ++i)
        out.push_back(Nat(static_cast<unsigned long>(i)));
      return out;
    }
    if (!fits_u64(s[0])) return out;
    std::uint64_t i = to_u64(s[0]);
    if (i >= shared->size()) return out;
    std::vector<Nat> tail(s.entries().begin() + 1, s.entries().end());
    auto branch = unpack(Seq(std::move(tail)));
    if (!branch) return out;
    for (const Nat& a : tree_child_labels((*shared)[i], *branch))
      for (int c = 0; c <= 1; ++c) out.push_back(cantor_pair(a, Nat(c)));
    std::sort(out.begin(), out.end());
    return out;
  };

  bool all_bounded = true;
  std::vector<std::function<Nat(std::size_t)>> bounds;
  std::size_t max_avail = 0;
  for (const Tree& t : fam.trees) {
    max_avail = std::max(max_avail, avail_depth(t));
    if (const auto* e = std::get_if<ExplicitTree>(&t)) {
      Bound b = Bound::tight_for(*e);
      bounds.emplace_back([b](std::size_t i) { return b.at(i); });
    } else if (const auto& bb = std::get<GeneratedTree>(t).branch_bound) {
      bounds.emplace_back(*bb);
    } else {
      all_bounded = false;
      break;
    }
  }
  if (all_bounded) {
    Nat root_cap = fam.trees.empty() ? Nat(0) : Nat(static_cast<unsigned long>(fam.trees.size() - 1));
    auto shared_bounds = std::make_shared<std::vector<std::function<Nat(std::size_t)>>>(std::move(bounds));
    g.branch_bound = [root_cap, shared_bounds](std::size_t pos) {
      if (pos == 0) return root_cap;
      Nat m = 0;
      for (const auto& b : *shared_bounds) m = std::max(m, cantor_pair(b(pos - 1), Nat(1)));
      return m;
    };
  }
  g.depth_budget = 1 + max_avail;
  return g;
}

std::vector<int> wf_from_kernel(const WfFamily& fam, const SeqSet& kernel) {
  std::vector<int> bits;
  bits.reserve(fam.trees.size());
  for (std::size_t i = 0; i < fam.trees.size(); ++i) {
    Seq tag = Seq().child(Nat(static_cast<unsigned long>(i)));
    bits.push_back(kernel.count(tag) ? 0 : 1);
  }
  return bits;
}

namespace {

// Incomparable pairs of proper extensions, results ordered by code within
// each pair, pairs sorted by (code, code).
struct ExtensionPairs {
  using Pair = std::pair<Seq, Seq>;
  std::map<Seq, std::vector<Pair>> by_node;
  std::map<Seq, Nat> code_of;

  explicit ExtensionPairs(const ExplicitTree& t) {
    for (const Seq& s : t.nodes()) code_of[s] = encode(s);
    for (const Seq& s : t.nodes()) {
      std::vector<Seq> ext;
      for (const Seq& other : t.nodes())
        if (other.size() > s.size() && is_prefix(s, other)) ext.push_back(other);
      std::vector<Pair> pairs;
      for (std::size_t a = 0; a < ext.size(); ++a)
        for (std::size_t b = a + 1; b < ext.size(); ++b) {
          if (is_prefix(ext[a], ext[b]) || is_prefix(ext[b], ext[a])) continue;
          const Seq& lo = code_of[ext[a]] < code_of[ext[b]] ? ext[a] : ext[b];
          const Seq& hi = code_of[ext[a]] < code_of[ext[b]] ? ext[b] : ext[a];
          pairs.emplace_back(lo, hi);
        }
      std::sort(pairs.begin(), pairs.end(), [&](const Pair& x, const Pair& y) {
        int c = cmp(code_of[x.first], code_of[y.first]);
        if (c != 0) return c < 0;
        return code_of[x.second] < code_of[y.second];
      });
      by_node[s] = std::move(pairs);
    }
  }
};

} // namespace

std::vector<SigmaTree> pk_to_wf(const ExplicitTree& t, std::size_t window) {
  auto shared = std::make_shared<const ExplicitTree>(t);
  auto pairs = std::make_shared<const ExtensionPairs>(*shared);

  // Decodes a stored tuple entry back to the tuple of source nodes, checking
  // every coordinate is a tree node.
  auto decode_tuple = [shared](const Nat& entry) -> std::optional<std::vector<Seq>> {
    Seq codes = decode(entry);
    std::vector<Seq> tuple;
    tuple.reserve(codes.size());
    for (std::size_t i = 0; i < codes.size(); ++i) {
      Seq node = decode(codes[i]);
      if (!shared->contains(node)) return std::nullopt;
      tuple.push_back(std::move(node));
    }
    return tuple;
  };

  std::vector<SigmaTree> out;
  for (const Seq& sigma : t.nodes()) {
    Nat root_entry = pairs->code_of.at(sigma);

    // One refinement step is valid when the new tuple doubles the width and
    // every adjacent pair extends its coordinate incomparably, codes
    // ascending inside the pair.
    auto valid_step = [pairs](const std::vector<Seq>& cur, const std::vector<Seq>& next) {
      if (next.size() != 2 * cur.size()) return false;
      for (std::size_t i = 0; i < cur.size(); ++i) {
        const Seq& a = next[2 * i];
        const Seq& b = next[2 * i + 1];
        if (a.size() <= cur[i].size() || !is_prefix(cur[i], a)) return false;
        if (b.size() <= cur[i].size() || !is_prefix(cur[i], b)) return false;
        if (is_prefix(a, b) || is_prefix(b, a)) return false;
        if (pairs->code_of.at(a) >= pairs->code_of.at(b)) return false;
      }
      return true;
    };

    GeneratedTree g;
    Seq sigma_copy = sigma;
    g.member = [root_entry, sigma_copy, decode_tuple, valid_step](const Seq& s) {
      if (s.empty()) return true;
      if (s[0] != root_entry) return false;
      std::vector<Seq> cur{sigma_copy};
      for (std::size_t j = 1; j < s.size(); ++j) {
        auto next = decode_tuple(s[j]);
        if (!next || !valid_step(cur, *next)) return false;
        cur = std::move(*next);
      }
      return true;
    };
    g.children = [root_entry, sigma_copy, pairs, decode_tuple](const Seq& s) {
      std::vector<Nat> labels;
      if (s.empty()) {
        labels.push_back(root_entry);
        return labels;
      }
      if (s[0] != root_entry) return labels;
      std::vector<Seq> cur;
      if (s.size() == 1) {
        cur = {sigma_copy};
      } else if (auto parsed = decode_tuple(s.back())) {
        cur = std::move(*parsed);
      } else {
        return labels;
      }
      std::vector<const std::vector<ExtensionPairs::Pair>*> options;
      std::size_t total = 1;
      for (const Seq& node : cur) {
        const auto& p = pairs->by_node.at(node);
        if (p.empty()) return labels;
        if (total > kMaxTupleChildren / p.size())
          throw resource_error("tuple-tree fanout exceeds the child cap");
        total *= p.size();
        options.push_back(&p);
      }
      // Cartesian product over per-coordinate pair choices.
      std::vector<std::size_t> idx(cur.size(), 0);
      labels.reserve(total);
      while (true) {
        std::vector<Nat> codes;
        codes.reserve(2 * cur.size());
        for (std::size_t i = 0; i < cur.size(); ++i) {
          const auto& pr = (*options[i])[idx[i]];
          codes.push_back(pairs->code_of.at(pr.first));
          codes.push_back(pairs->code_of.at(pr.second));
        }
        labels.push_back(encode(Seq(std::move(codes))));
        std::size_t k = cur.size();
        while (k > 0) {
          --k;
          if (++idx[k] < options[k]->size()) break;
          idx[k] = 0;
          if (k == 0) {
            std::sort(labels.begin(), labels.end());
            return labels;
          }
        }
      }
    };
    g.depth_budget = window;
    out.push_back(SigmaTree{sigma, std::move(g)});
  }
  return out;
}

SeqSet kernel_from_wf(const ExplicitTree& t, const std::map<Seq, int>& wf_bits) {
  SeqSet out;
  for (const Seq& s : t.nodes()) {
    auto it = wf_bits.find(s);
    if (it == wf_bits.end())
      throw input_error("kernel_from_wf: missing answer for " + seq_to_text(s));
    if (it->second == 0) out.insert(s);
  }
  return out;
}

} // namespace treelab
