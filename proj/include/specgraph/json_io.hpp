#pragma once

#include <json.hpp>

#include "specgraph/poset.hpp"
#include "specgraph/sequence.hpp"

namespace specgraph {

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Schemas: graph {"vertices":[...], "edges":[[u,v],...]} with loops omitted;
// morphism {"dom":G, "cod":G, "pairs":[[cod,dom],...]}; sequence
// {"graphs":[...], "steps":[...], "provenance":..., "guarantees":[...]}.
nlohmann::ordered_json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

nlohmann::ordered_json morphism_to_json(const Morphism& m);
Morphism morphism_from_json(const nlohmann::json& j);

nlohmann::ordered_json sequence_to_json(const Sequence& s);
Sequence sequence_from_json(const nlohmann::json& j);

std::string graph_to_dot(const Graph& g, const std::string& name);

// Hasse diagram of the induced poset prefix (levels as ranks, one-step
// relations as covers).
std::string poset_to_dot(const Sequence& s);

} // namespace specgraph
