#include "treelab/suites.hpp"

#include <algorithm>
#include <chrono>
#include <functional>

#include "treelab/errors.hpp"
#include "treelab/generators.hpp"
#include "treelab/hypergraph.hpp"
#include "treelab/json_io.hpp"
#include "treelab/reductions.hpp"
#include "treelab/transforms.hpp"

namespace treelab {

namespace {

// One suite case: every law checked against one input.  The first failing
// law freezes the serialized input for the report.
class Runner {
public:
  explicit Runner(std::string suite) { report_.suite = std::move(suite); }

  void begin_case(const std::function<json()>& describe) {
    describe_ = describe;
    case_failed_ = false;
    ++report_.cases_run;
  }

  void law(const char* name, bool ok) {
    if (ok || case_failed_) return;
    case_failed_ = true;
    if (report_.first_counterexample.empty()) {
      json j{{"suite", report_.suite}, {"law", name}, {"input", describe_()}};
      report_.first_counterexample = j.dump(1);
    }
  }

  void end_case() {
    if (!case_failed_) ++report_.cases_passed;
  }

  SuiteReport finish(std::chrono::steady_clock::time_point start) {
    report_.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report_;
  }

private:
  SuiteReport report_;
  std::function<json()> describe_;
  bool case_failed_ = false;
};

std::size_t scaled(std::size_t n, double scale) {
  double v = static_cast<double>(n) * scale;
  return std::max<std::size_t>(1, static_cast<std::size_t>(v));
}

// Shared random corpus: a few degenerate shapes first, then seeded trees.
std::vector<ExplicitTree> tree_corpus(std::uint64_t seed, std::size_t count,
                                      std::size_t max_nodes, std::size_t max_depth,
                                      std::size_t max_label) {
  std::vector<ExplicitTree> out;
  out.push_back(ExplicitTree::from_nodes({}));
  out.push_back(ExplicitTree::from_nodes({Seq{}}));
  out.push_back(ExplicitTree::from_nodes({Seq{}, Seq{0}}));
  out.push_back(ExplicitTree::from_nodes({Seq{}, Seq{0}, Seq{1}, Seq{0, 2}}));
  while (out.size() < count)
    out.push_back(random_tree(seed + out.size(), max_nodes, max_depth, max_label).tree);
  out.resize(count);
  return out;
}

SeqSet set_minus(const SeqSet& a, const SeqSet& b) {
  SeqSet out;
  for (const Seq& s : a)
    if (!b.count(s)) out.insert(s);
  return out;
}

SuiteReport suite_transforms(const SuiteOptions& opt) {
  auto start = std::chrono::steady_clock::now();
  Runner r("transforms");
  auto corpus = tree_corpus(opt.seed, scaled(500, opt.scale), 64, 6, 3);
  for (const ExplicitTree& t : corpus) {
    r.begin_case([&] { return tree_to_json(t); });
    StarTree star = t_star(t);
    const ExplicitTree& s = std::get<ExplicitTree>(star.star);
    SeqSet leaves = star_leaves(star);
    r.law("star doubles the node count", s.size() == 2 * t.size());
    r.law("star leaf set matches the brute-force scan", leaves == leaf_brute(s));
    r.law("star inversion recovers the source", star_invert(s) == t);
    r.law("star minus its leaves is the shifted tree",
          set_minus(s.nodes(), leaves) == t_plus(t).nodes());
    r.law("monus shift undoes the up shift", t_minus(t_plus(t)) == t);
    r.end_case();
  }
  return r.finish(start);
}

SuiteReport suite_b2(const SuiteOptions& opt) {
  auto start = std::chrono::steady_clock::now();
  Runner r("b2");
  constexpr std::size_t kMaxDepth = 6;
  auto corpus = tree_corpus(opt.seed, scaled(500, opt.scale), 64, 6, 3);
  for (const ExplicitTree& t : corpus) {
    r.begin_case([&] { return tree_to_json(t); });
    StarTree star = t_star(t);
    const ExplicitTree& s = std::get<ExplicitTree>(star.star);
    ExplicitTree shifted = t_plus(t);
    ExplicitTree pruned = ExplicitTree::from_nodes(set_minus(s.nodes(), star_leaves(star)));
    auto levels_t = splitting_levels(t, kMaxDepth);
    auto levels_p = splitting_levels(pruned, kMaxDepth);
    for (std::size_t d = 0; d <= kMaxDepth; ++d) {
      r.law("depth slices correspond under the shift",
            nodes_at_depth(shifted, d) == map_kernel_up(nodes_at_depth(t, d)));
      r.law("emptiness at depth agrees across the shift",
            wf_probe(Tree(t), d) == wf_probe(Tree(shifted), d));
      r.law("kernel probe of the leaf-deleted star is the shifted kernel probe",
            levels_p[d] == map_kernel_up(levels_t[d]));
      r.law("depth-d node count equals depth-d non-leaf count of the star",
            nodes_at_depth(t, d).size() == nodes_at_depth(pruned, d).size());
    }
    r.end_case();
  }
  return r.finish(start);
}

SuiteReport suite_lpo(const SuiteOptions& opt) {
  auto start = std::chrono::steady_clock::now();
  Runner r("lpo");

  auto corpus = tree_corpus(opt.seed, scaled(500, opt.scale), 48, 5, 3);
  for (const ExplicitTree& t : corpus) {
    r.begin_case([&] { return tree_to_json(t); });
    SeqSet expected = leaf_brute(t);

    r.law("bounded leaf computation matches the brute-force scan",
          bleaf(t, Bound::tight_for(t)) == expected);
    Bound padded = Bound::tight_for(t);
    padded.values.push_back(Nat(5)); // harmless slack past the deepest level
    r.law("padding the bound changes nothing", bleaf(t, padded) == expected);

    TreeLpo tl = tree_to_lpo(t);
    LpoAnswer ans = lpo_solve(tl.instance);
    SeqSet recovered;
    for (std::size_t i = 0; i < tl.order.size(); ++i)
      if (ans.bits[i] == 0) recovered.insert(tl.order[i]);
    r.law("zero-search answers recover the leaf set", recovered == expected);
    r.end_case();
  }

  std::size_t instances = scaled(200, opt.scale);
  for (std::size_t i = 0; i < instances; ++i) {
    LpoInstance inst = random_lpo(opt.seed + 7000 + i, 3 + i % 5, 4 + i % 3);
    r.begin_case([&] { return lpo_to_json(inst); });
    GeneratedTree tree = lpo_to_tree(inst);
    TreeWithLeaves window = truncate(tree, tree.depth_budget);
    r.law("leaves of the zero-search tree answer the instance",
          lpo_from_leafset(inst, window.leaves) == lpo_solve(inst));
    r.end_case();
  }

  std::size_t injections = scaled(200, opt.scale);
  for (std::size_t i = 0; i < injections; ++i) {
    std::size_t len = i % 7;
    std::size_t m = 2 + i % 6;
    std::vector<Nat> f = random_injection(opt.seed + 9000 + i, len, len + 4);
    r.begin_case([&] {
      json vals = json::array();
      for (const Nat& v : f) vals.push_back(nat_to_json(v));
      return json{{"injection", vals}, {"rows", m}};
    });
    LpoAnswer ans = lpo_solve(injection_to_lpo(f, m));
    bool ok = true;
    for (std::size_t row = 0; row < m; ++row) {
      bool in_range = std::find(f.begin(), f.end(), Nat(static_cast<unsigned long>(row))) != f.end();
      if ((ans.bits[row] == 1) != in_range) ok = false;
    }
    r.law("answer bits mark exactly the range of the injection", ok);
    r.end_case();
  }
  return r.finish(start);
}

SuiteReport suite_b7_forward(const SuiteOptions& opt) {
  auto start = std::chrono::steady_clock::now();
  Runner r("b7-forward");
  constexpr std::size_t kMaxD = 5;
  constexpr std::size_t kWindow = kMaxD + 1;

  std::size_t families = scaled(30, opt.scale);
  for (std::size_t c = 0; c < families; ++c) {
    WfFamily fam;
    fam.trees.emplace_back(path_tree(kWindow));
    fam.trees.emplace_back(full_tree(2, kWindow));
    fam.trees.emplace_back(random_tree(opt.seed + 100 * c, 12, 5, 2).tree);
    fam.trees.emplace_back(random_tree(opt.seed + 100 * c + 1, 16, 5, 3).tree);
    // shallow members keep the right-hand side of the law false somewhere
    fam.trees.emplace_back(random_tree(opt.seed + 100 * c + 2, 8, 2, 3).tree);
    fam.trees.emplace_back(ExplicitTree::from_nodes({Seq{}, Seq{0}, Seq{1}}));

    r.begin_case([&] {
      json members = json::array();
      members.push_back("path");
      members.push_back("full(2)");
      for (std::size_t i = 2; i < fam.trees.size(); ++i)
        members.push_back(tree_to_json(std::get<ExplicitTree>(fam.trees[i])));
      return json{{"family", members}};
    });

    GeneratedTree gadget = wf_to_pk(fam);
    TreeWithLeaves window = truncate(gadget, std::min(kWindow, gadget.depth_budget));
    auto levels = splitting_levels(window.tree, kMaxD);
    bool ok = true;
    for (std::size_t i = 0; i < fam.trees.size() && ok; ++i) {
      Seq tag = Seq().child(Nat(static_cast<unsigned long>(i)));
      for (std::size_t d = 0; d <= kMaxD && ok; ++d) {
        bool splits = levels[d].count(tag) != 0;
        bool deep = !nodes_at_depth(fam.trees[i], d).empty();
        if (splits != deep) ok = false;
      }
    }
    r.law("tag splitting depth equals source tree depth", ok);
    r.end_case();
  }
  return r.finish(start);
}

SuiteReport suite_b7_backward(const SuiteOptions& opt) {
  auto start = std::chrono::steady_clock::now();
  Runner r("b7-backward");
  constexpr std::size_t kMaxD = 3;

  auto corpus = tree_corpus(opt.seed + 500, scaled(200, opt.scale), 12, 5, 3);
  for (const ExplicitTree& t : corpus) {
    r.begin_case([&] { return tree_to_json(t); });
    auto fam = pk_to_wf(t, kMaxD + 1);
    auto levels = splitting_levels(t, kMaxD);

    bool depth_law = true;
    for (const SigmaTree& st : fam) {
      for (std::size_t d = 0; d <= kMaxD && depth_law; ++d) {
        bool grows = !nodes_at_depth(st.tree, d + 1).empty();
        bool splits = levels[d].count(st.sigma) != 0;
        if (grows != splits) depth_law = false;
      }
      if (!depth_law) break;
    }
    r.law("tuple tree growth equals source splitting depth", depth_law);

    bool composed = true;
    for (std::size_t probe = 1; probe <= kMaxD + 1 && composed; ++probe) {
      std::map<Seq, int> bits;
      for (const SigmaTree& st : fam) bits[st.sigma] = wf_probe(Tree(st.tree), probe) ? 1 : 0;
      if (kernel_from_wf(t, bits) != levels[probe - 1]) composed = false;
    }
    r.law("kernel recovered from probes equals the direct kernel probe", composed);
    r.end_case();
  }
  return r.finish(start);
}

// Every vertex subset of cardinality <= 3, then every way to pick at most
// three of them as the edge list.
std::vector<Hypergraph> exhaustive_hypergraphs(std::size_t max_vertices) {
  std::vector<Hypergraph> out;
  for (std::size_t n = 0; n <= max_vertices; ++n) {
    std::vector<std::vector<std::size_t>> subsets{{}};
    for (std::size_t card = 1; card <= std::min<std::size_t>(3, n); ++card) {
      std::vector<std::size_t> pick(card);
      std::function<void(std::size_t, std::size_t)> choose = [&](std::size_t from,
                                                                 std::size_t at) {
        if (at == card) {
          subsets.push_back(pick);
          return;
        }
        for (std::size_t v = from; v < n; ++v) {
          pick[at] = v;
          choose(v + 1, at + 1);
        }
      };
      choose(0, 0);
    }
    std::vector<std::size_t> idx(3);
    std::function<void(std::size_t, std::size_t, std::vector<std::vector<std::size_t>>&)> pickEdges =
        [&](std::size_t from, std::size_t count, std::vector<std::vector<std::size_t>>& edges) {
          out.push_back(Hypergraph::of(n, edges));
          if (count == 3) return;
          for (std::size_t e = from; e < subsets.size(); ++e) {
            edges.push_back(subsets[e]);
            pickEdges(e + 1, count + 1, edges);
            edges.pop_back();
          }
        };
    std::vector<std::vector<std::size_t>> edges;
    pickEdges(0, 0, edges);
  }
  return out;
}

SuiteReport suite_c1_forward(const SuiteOptions&) {
  auto start = std::chrono::steady_clock::now();
  Runner r("c1-forward");
  auto graphs = exhaustive_hypergraphs(4);
  for (const Hypergraph& h : graphs) {
    for (std::size_t k = 2; k <= 3; ++k) {
      r.begin_case([&] {
        json j = hypergraph_to_json(h);
        j["k"] = k;
        return j;
      });
      HpcResult brute = hpc_brute(h, k);
      GeneratedTree gadget = hpc_to_wf_tree(h, k);
      std::size_t target = hpc_window(h);
      auto deep_node = find_node_at_depth(gadget, target);
      r.law("gadget tree reaches the window depth exactly when colorable",
            deep_node.has_value() == (brute.bit == 1));
      if (deep_node) {
        Coloring f = decode_coloring(*deep_node, h, k);
        r.law("decoded coloring is proper", is_proper(h, f));
      }
      r.end_case();
    }
  }
  return r.finish(start);
}

SuiteReport suite_c1_backward(const SuiteOptions& opt) {
  auto start = std::chrono::steady_clock::now();
  Runner r("c1-backward");

  auto corpus = tree_corpus(opt.seed + 900, scaled(200, opt.scale), 12, 5, 3);
  for (const ExplicitTree& t : corpus) {
    for (std::size_t k = 2; k <= 3; ++k) {
      r.begin_case([&] {
        json j = twl_to_json(TreeWithLeaves::of(t));
        j["k"] = k;
        return j;
      });
      Hypergraph h = wf_to_hpc(TreeWithLeaves::of(t), k);
      r.law("a fully known finite tree yields an uncolorable gadget",
            hpc_brute(h, k).bit == 0);
      r.end_case();
    }
  }

  for (int shape = 0; shape < 3; ++shape) {
    for (std::size_t d = 1; d <= 5; ++d) {
      GeneratedTree gen = shape == 0   ? full_tree(2, d)
                          : shape == 1 ? path_tree(d)
                                       : comb_tree(d);
      TreeWithLeaves window = truncate(gen, d);
      for (std::size_t k = 2; k <= 3; ++k) {
        r.begin_case([&] {
          json j = twl_to_json(window);
          j["k"] = k;
          return j;
        });
        bool deep = !nodes_at_depth(window.tree, d).empty();
        Hypergraph h = wf_to_hpc(window, k);
        r.law("window gadget is colorable exactly when the window depth is reached",
              (hpc_brute(h, k).bit == 1) == deep);
        r.end_case();
      }
    }
  }
  return r.finish(start);
}

SuiteReport suite_hat(const SuiteOptions& opt) {
  auto start = std::chrono::steady_clock::now();
  Runner r("hat");

  std::vector<Tree> family;
  family.emplace_back(full_tree(2, 4));
  family.emplace_back(path_tree(4));
  family.emplace_back(comb_tree(4));
  family.emplace_back(ExplicitTree::from_nodes({Seq{}}));
  family.emplace_back(ExplicitTree::from_nodes({}));
  for (std::size_t i = 0; family.size() < 10; ++i)
    family.emplace_back(random_tree(opt.seed + 40 + i, 16, 3, 2).tree);

  r.begin_case([&] { return json{{"family", "10 mixed trees"}, {"probe", 3}}; });
  auto parallel = hat([](const Tree& t) { return wf_probe(t, 3); }, family);
  bool ok = parallel.size() == family.size();
  for (std::size_t i = 0; i < family.size() && ok; ++i)
    if (parallel[i] != wf_probe(family[i], 3)) ok = false;
  r.law("parallelized probe equals elementwise probes", ok);
  r.end_case();

  std::vector<Hypergraph> graphs;
  graphs.push_back(Hypergraph::of(3, {{0, 1}, {1, 2}, {0, 2}})); // triangle
  graphs.push_back(Hypergraph::of(2, {{0, 1}}));
  graphs.push_back(Hypergraph::of(4, {}));
  graphs.push_back(Hypergraph::of(4, {{0, 1, 2, 3}}));
  r.begin_case([&] { return json{{"graphs", graphs.size()}, {"k", 2}}; });
  auto bits = hat([](const Hypergraph& h) { return hpc_brute(h, 2).bit; }, graphs);
  bool ok2 = bits.size() == graphs.size();
  for (std::size_t i = 0; i < graphs.size() && ok2; ++i)
    if (bits[i] != hpc_brute(graphs[i], 2).bit) ok2 = false;
  r.law("parallelized coloring bits equal elementwise bits", ok2);
  r.end_case();

  return r.finish(start);
}

} // namespace

std::vector<std::string> suite_names() {
  return {"transforms", "b2",         "lpo",         "b7-forward",
          "b7-backward", "c1-forward", "c1-backward", "hat"};
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& opt) {
  if (name == "transforms") return suite_transforms(opt);
  if (name == "b2") return suite_b2(opt);
  if (name == "lpo") return suite_lpo(opt);
  if (name == "b7-forward") return suite_b7_forward(opt);
  if (name == "b7-backward") return suite_b7_backward(opt);
  if (name == "c1-forward") return suite_c1_forward(opt);
  if (name == "c1-backward") return suite_c1_backward(opt);
  if (name == "hat") return suite_hat(opt);
  if (name == "all") {
    SuiteReport total;
    total.suite = "all";
    for (const SuiteReport& r : run_all(opt)) {
      total.cases_run += r.cases_run;
      total.cases_passed += r.cases_passed;
      total.wall_seconds += r.wall_seconds;
      if (total.first_counterexample.empty()) total.first_counterexample = r.first_counterexample;
    }
    return total;
  }
  throw input_error("unknown suite: " + name);
}

std::vector<SuiteReport> run_all(const SuiteOptions& opt) {
  std::vector<SuiteReport> out;
  for (const std::string& name : suite_names()) out.push_back(run_suite(name, opt));
  return out;
}

nlohmann::json report_to_json(const SuiteReport& r) {
  nlohmann::json j{{"suite", r.suite},
                   {"cases_run", r.cases_run},
                   {"cases_passed", r.cases_passed},
                   {"wall_seconds", r.wall_seconds}};
  if (!r.first_counterexample.empty())
    j["counterexample"] = nlohmann::json::parse(r.first_counterexample);
  return j;
}

} // namespace treelab
