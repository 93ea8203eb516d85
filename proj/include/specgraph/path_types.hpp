#pragma once

#include <optional>

#include "specgraph/morphism.hpp"

namespace specgraph {

// Type of a path morphism: sizes of the strict preimages of the cod path's
// singleton and edge cliques, indexed along the cod path from its
// lexicographically least end.
struct TypeFunction {
    std::vector<int> vertex; // t({q_i}), all ≥ 1 for a valid type
    std::vector<int> edge;   // t({q_i, q_{i+1}})

    bool valid() const {
        if (vertex.empty() || edge.size() + 1 != vertex.size()) return false;
        for (int v : vertex)
            if (v < 1) return false;
        for (int e : edge)
            if (e < 0) return false;
        return true;
    }
    bool operator==(const TypeFunction& o) const = default;
};

bool pointwise_leq(const TypeFunction& a, const TypeFunction& b);
TypeFunction pointwise_max(const TypeFunction& a, const TypeFunction& b);

// Interval profile of a monotone co-bijective path morphism: positions are
// along aligned path orders (dom order flipped when needed so that strict
// blocks ascend with the cod order).
struct PathAlignment {
    std::vector<int> cod_order;  // cod vertices in path order
    std::vector<int> dom_order;  // dom vertices, aligned
    std::vector<int> block_lo;   // per cod position: dom position range of the
    std::vector<int> block_hi;   // strict singleton preimage (inclusive)
};

PathAlignment align_path_morphism(const Morphism& m);

// t_⊐ of a morphism between paths.
TypeFunction type_of(const Morphism& m);

// Path P and monotone co-bijective morphism P → Q with the given type:
// blocks of size t({q}) joined by connector runs of size t({q,r}).
std::pair<Graph, Morphism> realize_type(const Graph& q, const TypeFunction& t);

// Factor ⊣ with big ∘ ⊣ = small, which exists iff type_of(big) ≤
// type_of(small) pointwise. big: P→R, small: Q→R, result: Q→P.
std::optional<Morphism> factor_by_type(const Morphism& big, const Morphism& small);

// Monotone surjective function φ: Q→P with big ∘ φ ⊆ small, under
// |P| ≤ |Q| and |P| ≤ |{r,s}_small| for all adjacent r,s in R.
Morphism subfactor(const Morphism& big, const Morphism& small);

} // namespace specgraph
