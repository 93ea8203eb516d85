#pragma once

#include "specgraph/morphism.hpp"

namespace specgraph {

class CliqueError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// All non-empty complete subgraphs, in the canonical order used for clique
// graphs (lexicographic by sorted member-label list). Throws CliqueError
// once more than `limit` cliques exist.
std::vector<Bitset> all_cliques(const Graph& g, int limit = 4096);

// The clique graph 𝖷G: vertices are cliques, edges are comparability under
// inclusion. Vertex labels are "{a,b}"-style sorted member lists.
Graph clique_graph(const Graph& g, int limit = 4096);

// For co-surjective m the induced function 𝖷(dom) → 𝖷(cod), C ↦ C^⊏.
Morphism clique_map(const Morphism& m, int limit = 4096);

// Membership morphism from 𝖷G to G relating each vertex to the cliques
// containing it.
Morphism membership(const Graph& g, int limit = 4096);

} // namespace specgraph
