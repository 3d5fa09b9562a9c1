#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "treelab/hypergraph.hpp"
#include "treelab/reductions.hpp"
#include "treelab/tree.hpp"

namespace treelab {

using nlohmann::json;

/// Naturals are emitted as JSON numbers while they fit in uint64 and as
/// decimal strings beyond that; both forms are accepted on input.
json nat_to_json(const Nat& n);
Nat nat_from_json(const json& j);

json seq_to_json(const Seq& s);
Seq seq_from_json(const json& j);

json seqset_to_json(const SeqSet& s);
SeqSet seqset_from_json(const json& j);

/// Tree file: a JSON array of sequences.  `close` completes missing
/// prefixes instead of rejecting unclosed input.
json tree_to_json(const ExplicitTree& t);
ExplicitTree tree_from_json(const json& j, bool close = false);

/// {"nodes": [...], "leaves": [...], "frontier": [...]}
json twl_to_json(const TreeWithLeaves& t);
TreeWithLeaves twl_from_json(const json& j, bool close = false);

/// {"vertices": N, "edges": [[...], ...], "anchors": {...}?}
json hypergraph_to_json(const Hypergraph& h);
Hypergraph hypergraph_from_json(const json& j);

/// Either a plain array of rows (budget = shortest row) or
/// {"rows": [...], "budget": B}.
json lpo_to_json(const LpoInstance& inst);
LpoInstance lpo_from_json(const json& j);

/// Family file: a JSON array whose items are tree arrays or
/// tree-with-leaves objects.
std::vector<Tree> family_from_json(const json& j, bool close = false);

json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const json& j);

} // namespace treelab
