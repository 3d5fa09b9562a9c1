#include "treelab/json_io.hpp"

#include <fstream>

#include "treelab/errors.hpp"

namespace treelab {

json nat_to_json(const Nat& n) {
  if (fits_u64(n)) return json(to_u64(n));
  return json(nat_to_string(n));
}

Nat nat_from_json(const json& j) {
  if (j.is_number_unsigned()) return Nat(static_cast<unsigned long>(j.get<std::uint64_t>()));
  if (j.is_number_integer()) {
    auto v = j.get<std::int64_t>();
    if (v < 0) throw input_error("negative value is not a natural: " + j.dump());
    return Nat(static_cast<unsigned long>(v));
  }
  if (j.is_string()) return nat_from_string(j.get<std::string>());
  throw input_error("expected a natural number, got " + j.dump());
}

json seq_to_json(const Seq& s) {
  json out = json::array();
  for (std::size_t i = 0; i < s.size(); ++i) out.push_back(nat_to_json(s[i]));
  return out;
}

Seq seq_from_json(const json& j) {
  if (!j.is_array()) throw input_error("expected a sequence array, got " + j.dump());
  std::vector<Nat> entries;
  entries.reserve(j.size());
  for (const auto& item : j) entries.push_back(nat_from_json(item));
  return Seq(std::move(entries));
}

json seqset_to_json(const SeqSet& s) {
  json out = json::array();
  for (const Seq& node : s) out.push_back(seq_to_json(node));
  return out;
}

SeqSet seqset_from_json(const json& j) {
  if (!j.is_array()) throw input_error("expected an array of sequences");
  SeqSet out;
  for (const auto& item : j) out.insert(seq_from_json(item));
  return out;
}

json tree_to_json(const ExplicitTree& t) { return seqset_to_json(t.nodes()); }

ExplicitTree tree_from_json(const json& j, bool close) {
  SeqSet nodes = seqset_from_json(j);
  return close ? ExplicitTree::closure(nodes) : ExplicitTree::from_nodes(std::move(nodes));
}

json twl_to_json(const TreeWithLeaves& t) {
  return json{{"nodes", tree_to_json(t.tree)},
              {"leaves", seqset_to_json(t.leaves)},
              {"frontier", seqset_to_json(t.frontier)}};
}

TreeWithLeaves twl_from_json(const json& j, bool close) {
  if (!j.is_object() || !j.contains("nodes"))
    throw input_error("expected {\"nodes\": ..., \"leaves\": ..., \"frontier\": ...}");
  TreeWithLeaves out;
  out.tree = tree_from_json(j.at("nodes"), close);
  if (j.contains("leaves")) out.leaves = seqset_from_json(j.at("leaves"));
  if (j.contains("frontier")) out.frontier = seqset_from_json(j.at("frontier"));
  out.validate();
  return out;
}

json hypergraph_to_json(const Hypergraph& h) {
  json edges = json::array();
  for (const auto& e : h.edges) edges.push_back(e);
  json out{{"vertices", h.vertex_count}, {"edges", edges}};
  if (!h.anchors.empty()) out["anchors"] = h.anchors;
  return out;
}

Hypergraph hypergraph_from_json(const json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
    throw input_error("expected {\"vertices\": N, \"edges\": [...]}");
  if (!j.at("vertices").is_number_unsigned()) throw input_error("vertices must be a count");
  std::vector<std::vector<std::size_t>> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array()) throw input_error("each edge must be an array of vertex indices");
    std::vector<std::size_t> edge;
    for (const auto& v : e) {
      if (!v.is_number_unsigned()) throw input_error("vertex indices must be naturals");
      edge.push_back(v.get<std::size_t>());
    }
    edges.push_back(std::move(edge));
  }
  Hypergraph h = Hypergraph::of(j.at("vertices").get<std::size_t>(), std::move(edges));
  if (j.contains("anchors")) {
    for (const auto& [name, idx] : j.at("anchors").items()) {
      if (!idx.is_number_unsigned() || idx.get<std::size_t>() >= h.vertex_count)
        throw input_error("anchor " + name + " references a missing vertex");
      h.anchors[name] = idx.get<std::size_t>();
    }
  }
  return h;
}

// Emits the plain row-array form when the budget is implied by the rows
// (every row as long as the shortest), the explicit object form otherwise.
json lpo_to_json(const LpoInstance& inst) {
  json rows = json::array();
  std::size_t min_len = std::string::npos;
  for (const Seq& row : inst.rows) {
    rows.push_back(seq_to_json(row));
    min_len = std::min(min_len, row.size());
  }
  if (inst.rows.empty()) min_len = 0;
  if (min_len == inst.budget) return rows;
  return json{{"rows", rows}, {"budget", inst.budget}};
}

LpoInstance lpo_from_json(const json& j) {
  if (j.is_object() && j.contains("instance")) {
    LpoInstance inner = lpo_from_json(j.at("instance"));
    if (j.contains("budget") && j.at("budget").is_number_unsigned())
      return LpoInstance::of(std::move(inner.rows), j.at("budget").get<std::size_t>());
    return inner;
  }
  if (j.is_array()) {
    std::vector<Seq> rows;
    std::size_t budget = std::string::npos;
    for (const auto& r : j) {
      rows.push_back(seq_from_json(r));
      budget = std::min(budget, rows.back().size());
    }
    if (rows.empty()) budget = 0;
    return LpoInstance::of(std::move(rows), budget);
  }
  if (j.is_object() && j.contains("rows") && j.contains("budget")) {
    std::vector<Seq> rows;
    for (const auto& r : j.at("rows")) rows.push_back(seq_from_json(r));
    if (!j.at("budget").is_number_unsigned()) throw input_error("budget must be a natural");
    return LpoInstance::of(std::move(rows), j.at("budget").get<std::size_t>());
  }
  throw input_error("expected an array of rows or {\"rows\": ..., \"budget\": ...}");
}

std::vector<Tree> family_from_json(const json& j, bool close) {
  if (!j.is_array()) throw input_error("family file must be a JSON array of trees");
  std::vector<Tree> out;
  for (const auto& item : j) {
    if (item.is_array())
      out.emplace_back(tree_from_json(item, close));
    else
      out.emplace_back(twl_from_json(item, close).tree);
  }
  return out;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw input_error(path + ": " + e.what());
  }
  return j;
}

void save_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw input_error("cannot write " + path);
  out << j.dump(1) << "\n";
}

} // namespace treelab
