// treelab: tree transforms, leaf-set computation, reduction gadgets between
// well-foundedness / kernel / coloring problems, and the verification
// suites that check the gadget laws at finite scale.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error,
// 3 resource cap exceeded.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "treelab/errors.hpp"
#include "treelab/generators.hpp"
#include "treelab/hypergraph.hpp"
#include "treelab/json_io.hpp"
#include "treelab/reductions.hpp"
#include "treelab/suites.hpp"
#include "treelab/transforms.hpp"

namespace {

using namespace treelab;

ExplicitTree load_tree(const std::string& path, bool close) {
  json j = load_json_file(path);
  if (j.is_object() && j.contains("nodes")) return tree_from_json(j.at("nodes"), close);
  return tree_from_json(j, close);
}

TreeWithLeaves load_twl(const std::string& path, bool close) {
  json j = load_json_file(path);
  if (j.is_object() && j.contains("nodes")) return twl_from_json(j, close);
  // A plain node array is taken as a fully known tree.
  return TreeWithLeaves::of(tree_from_json(j, close));
}

void emit(const std::string& out_path, const json& j) {
  if (out_path.empty())
    std::cout << j.dump(1) << "\n";
  else
    save_json_file(out_path, j);
}

int cmd_transform(const std::string& op, const std::string& in, const std::string& out,
                  bool close) {
  ExplicitTree t = load_tree(in, close);
  if (op == "minus") {
    emit(out, tree_to_json(t_minus(t)));
  } else if (op == "plus") {
    emit(out, tree_to_json(t_plus(t)));
  } else if (op == "star") {
    StarTree s = t_star(t);
    TreeWithLeaves twl;
    twl.tree = std::get<ExplicitTree>(s.star);
    twl.leaves = star_leaves(s);
    emit(out, twl_to_json(twl));
  } else if (op == "star-invert") {
    emit(out, tree_to_json(star_invert(t)));
  } else {
    throw input_error("unknown transform op: " + op);
  }
  return 0;
}

int cmd_leaves(const std::string& in, const std::string& out, bool brute,
               const std::string& bound_text, bool close) {
  ExplicitTree t = load_tree(in, close);
  SeqSet leaves;
  if (brute) {
    leaves = leaf_brute(t);
  } else if (!bound_text.empty()) {
    Bound b;
    b.values = seq_from_text("[" + bound_text + "]").entries();
    leaves = bleaf(t, b);
  } else {
    throw input_error("leaves: pass --brute or --bleaf <v0,v1,...>");
  }
  emit(out, seqset_to_json(leaves));
  return 0;
}

int cmd_gadget(const std::string& kind, const std::string& in, const std::string& out,
               std::size_t k, std::size_t depth, bool close) {
  if (kind == "lpo2tree") {
    LpoInstance inst = lpo_from_json(load_json_file(in));
    GeneratedTree g = lpo_to_tree(inst);
    emit(out, twl_to_json(truncate(g, depth ? std::min(depth, g.depth_budget) : g.depth_budget)));
  } else if (kind == "tree2lpo") {
    TreeLpo tl = tree_to_lpo(load_tree(in, close));
    json order = json::array();
    for (const Seq& s : tl.order) order.push_back(seq_to_json(s));
    json j{{"instance", lpo_to_json(tl.instance)},
           {"budget", tl.instance.budget},
           {"nodes", order}};
    emit(out, j);
  } else if (kind == "inj2lpo") {
    json j = load_json_file(in);
    if (!j.is_object() || !j.contains("injection") || !j.contains("rows"))
      throw input_error("expected {\"injection\": [...], \"rows\": m}");
    std::vector<Nat> f;
    for (const auto& v : j.at("injection")) f.push_back(nat_from_json(v));
    emit(out, lpo_to_json(injection_to_lpo(f, j.at("rows").get<std::size_t>())));
  } else if (kind == "wf2pk") {
    WfFamily fam;
    for (Tree& t : family_from_json(load_json_file(in), close)) fam.trees.push_back(std::move(t));
    GeneratedTree g = wf_to_pk(fam);
    std::size_t window = depth ? std::min(depth, g.depth_budget) : std::min<std::size_t>(6, g.depth_budget);
    emit(out, twl_to_json(truncate(g, window)));
  } else if (kind == "pk2wf") {
    ExplicitTree t = load_tree(in, close);
    std::size_t window = depth ? depth : 4;
    json members = json::array();
    for (const SigmaTree& st : pk_to_wf(t, window)) {
      json j = twl_to_json(truncate(st.tree, window));
      j["sigma"] = seq_to_json(st.sigma);
      members.push_back(std::move(j));
    }
    emit(out, members);
  } else if (kind == "hpc2wf") {
    Hypergraph h = hypergraph_from_json(load_json_file(in));
    GeneratedTree g = hpc_to_wf_tree(h, k);
    emit(out, twl_to_json(truncate(g, depth ? std::min(depth, g.depth_budget) : g.depth_budget)));
  } else if (kind == "wf2hpc") {
    emit(out, hypergraph_to_json(wf_to_hpc(load_twl(in, close), k)));
  } else {
    throw input_error("unknown gadget: " + kind);
  }
  return 0;
}

int cmd_color(const std::string& in, std::size_t k, std::uint64_t ceiling) {
  Hypergraph h = hypergraph_from_json(load_json_file(in));
  HpcResult res = hpc_brute(h, k, ceiling);
  std::cout << "bit: " << res.bit << "\n";
  if (res.witness) {
    std::cout << "witness: [";
    for (std::size_t v = 0; v < res.witness->assignment.size(); ++v)
      std::cout << (v ? "," : "") << res.witness->assignment[v];
    std::cout << "]\n";
  }
  return 0;
}

int cmd_generate(const GeneratorSpec& spec, const std::string& out) {
  GeneratorOutput g = generate(spec);
  if (const auto* gen = std::get_if<GeneratedTree>(&g)) {
    emit(out, twl_to_json(truncate(*gen, gen->depth_budget)));
  } else if (const auto* twl = std::get_if<TreeWithLeaves>(&g)) {
    emit(out, twl_to_json(*twl));
  } else {
    emit(out, lpo_to_json(std::get<LpoInstance>(g)));
  }
  return 0;
}

int cmd_verify(const std::string& suite, const SuiteOptions& opt, bool as_json,
               const std::string& emit_dir) {
  std::vector<SuiteReport> reports =
      suite == "all" ? run_all(opt) : std::vector<SuiteReport>{run_suite(suite, opt)};
  bool ok = true;
  json out = json::array();
  for (const SuiteReport& r : reports) {
    ok = ok && r.ok();
    if (as_json) {
      out.push_back(report_to_json(r));
      continue;
    }
    char line[256];
    std::snprintf(line, sizeof(line), "%-12s %s  %zu/%zu cases  (%.2f s)", r.suite.c_str(),
                  r.ok() ? "PASS" : "FAIL", r.cases_passed, r.cases_run, r.wall_seconds);
    std::cout << line << "\n";
    if (!r.ok() && !r.first_counterexample.empty()) {
      std::string path = (emit_dir.empty() ? std::string(".") : emit_dir) +
                         "/counterexample-" + r.suite + ".json";
      save_json_file(path, json::parse(r.first_counterexample));
      std::cout << "  first counterexample written to " << path << "\n";
    }
  }
  if (as_json) std::cout << out.dump(1) << "\n";
  return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"tree transforms, leaf sets, reduction gadgets, and finite-scale verification"};
  app.require_subcommand(1);

  // transform
  std::string op, in_path, out_path;
  bool close = false;
  auto* transform = app.add_subcommand("transform", "apply a tree transform");
  transform->add_option("--op", op, "minus | plus | star | star-invert")->required();
  transform->add_option("--in", in_path, "input tree file")->required();
  transform->add_option("--out", out_path, "output file (stdout when omitted)");
  transform->add_flag("--close", close, "complete missing prefixes instead of rejecting");

  // leaves
  bool brute = false;
  std::string bound_text;
  auto* leaves = app.add_subcommand("leaves", "compute a leaf set");
  leaves->add_option("--in", in_path, "input tree file")->required();
  leaves->add_option("--out", out_path, "output file (stdout when omitted)");
  leaves->add_flag("--brute", brute, "definitional pairwise scan");
  leaves->add_option("--bleaf", bound_text, "bound vector v0,v1,... (last value repeats)");
  leaves->add_flag("--close", close, "complete missing prefixes instead of rejecting");

  // gadget
  std::string kind;
  std::size_t k = 2, depth = 0;
  auto* gadget = app.add_subcommand("gadget", "build a reduction gadget");
  gadget->add_option("kind", kind,
                     "lpo2tree | tree2lpo | inj2lpo | wf2pk | pk2wf | hpc2wf | wf2hpc")
      ->required();
  gadget->add_option("--in", in_path, "input file")->required();
  gadget->add_option("--out", out_path, "output file (stdout when omitted)");
  gadget->add_option("--k", k, "palette size for coloring gadgets");
  gadget->add_option("--depth", depth, "window depth for generated outputs");
  gadget->add_flag("--close", close, "complete missing prefixes instead of rejecting");

  // color
  std::uint64_t ceiling = kDefaultColorSteps;
  auto* color = app.add_subcommand("color", "decide proper k-colorability");
  color->add_option("--in", in_path, "hypergraph file")->required();
  color->add_option("--k", k, "palette size")->required();
  color->add_option("--ceiling", ceiling, "search step ceiling");

  // generate
  GeneratorSpec spec;
  auto* gen = app.add_subcommand("generate", "emit a named deterministic input");
  gen->add_option("--name", spec.name, "full | path | comb | finite-random | lpo")->required();
  gen->add_option("--k", spec.branching, "branching for full");
  gen->add_option("--depth", spec.depth, "window depth / depth cap");
  gen->add_option("--seed", spec.seed, "random seed");
  gen->add_option("--nodes", spec.node_budget, "node target for finite-random");
  gen->add_option("--max-label", spec.max_label, "entry cap for finite-random");
  gen->add_option("--rows", spec.rows, "row count for lpo");
  gen->add_option("--out", out_path, "output file (stdout when omitted)");

  // verify
  std::string suite;
  SuiteOptions opt;
  bool as_json = false;
  std::string emit_dir;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite, "transforms | b2 | lpo | b7-forward | b7-backward "
                                     "| c1-forward | c1-backward | hat | all")
      ->required();
  verify->add_option("--seed", opt.seed, "corpus seed");
  verify->add_option("--scale", opt.scale, "case-count multiplier");
  verify->add_flag("--json", as_json, "machine-readable report");
  verify->add_option("--emit-dir", emit_dir, "directory for counterexample files");

  try {
    app.parse(argc, argv);
    if (transform->parsed()) return cmd_transform(op, in_path, out_path, close);
    if (leaves->parsed()) return cmd_leaves(in_path, out_path, brute, bound_text, close);
    if (gadget->parsed()) return cmd_gadget(kind, in_path, out_path, k, depth, close);
    if (color->parsed()) return cmd_color(in_path, k, ceiling);
    if (gen->parsed()) return cmd_generate(spec, out_path);
    if (verify->parsed()) return cmd_verify(suite, opt, as_json, emit_dir);
    return 2;
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const resource_error& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return 3;
  } catch (const input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
