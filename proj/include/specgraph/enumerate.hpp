#pragma once

#include <functional>
#include <limits>
#include <optional>

#include "specgraph/morphism.hpp"

namespace specgraph {

// Constrains the search to factors X with outer ∘ X = target (or ⊆ target
// when lax). outer: P → R, target: Q → R; candidates run from Q to P.
struct CompositionTarget {
    Morphism outer;
    Morphism target;
    bool lax = false;
};

struct EnumerateOptions {
    std::vector<MorphProperty> required;
    // Extra per-column admissibility for candidate image sets (e.g.
    // root/end preservation); checked before search starts.
    std::function<bool(int dom_vertex, const Bitset& image)> column_filter;
    // Extra predicate applied to complete candidates.
    std::function<bool(const Morphism&)> leaf_filter;
    std::optional<CompositionTarget> composition;
    int max_results = std::numeric_limits<int>::max();
    long long node_budget = 1'000'000;
    int clique_limit = 1 << 16;
};

struct EnumerateResult {
    std::vector<Morphism> morphisms; // canonically ordered
    bool exhausted = false;          // node budget hit; list may be incomplete
    long long nodes = 0;
};

// Backtracking search over edge-preserving relations ⊆ cod × dom. Candidate
// image sets per dom vertex are cliques of cod (plus the empty set when
// co-surjectivity is not required); branching picks the most constrained
// column first, with deterministic index/value order.
EnumerateResult enumerate_morphisms(std::shared_ptr<const Graph> dom,
                                    std::shared_ptr<const Graph> cod,
                                    const EnumerateOptions& opt = {});

} // namespace specgraph
