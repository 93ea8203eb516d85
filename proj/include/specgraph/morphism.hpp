#pragma once

#include <array>
#include <atomic>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "specgraph/graph.hpp"

namespace specgraph {

class MorphismError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Witness for a failed edge-preservation check: h ⊐ g ⊓ g' ⊏ h' but not h ⊓ h'.
struct EdgePreservationViolation {
    int h, g, g2, h2;
};

enum class MorphProperty {
    Function,
    Surjective,
    Injective,
    CoSurjective,
    CoInjective,
    CoBijective,
    EdgeSurjective,
    EdgeWitnessing,
    AntiInjective,
    StrictlyAntiInjective,
    StarRefining,
    CoEdgeWitnessing,
    Monotone,
    EdgeReflective,
};
constexpr int kMorphPropertyCount = 14;

const char* to_string(MorphProperty p);
std::optional<MorphProperty> morph_property_from_string(std::string_view name);

enum class FiberKind { Preimage, Image, Strict, Sub, Edge };

// Relational morphism from dom to cod: a relation ⊐ ⊆ cod × dom, stored as
// rows over cod (row h = h^⊐ ⊆ dom) with cached columns (column g = g^⊏).
// Always edge-preserving; construction fails otherwise. Immutable; property
// flags are computed lazily into write-once cells.
class Morphism {
public:
    static Morphism make(const Graph& dom, const Graph& cod,
                         const std::vector<std::pair<std::string, std::string>>& cod_dom_pairs);
    static Morphism make_indexed(std::shared_ptr<const Graph> dom,
                                 std::shared_ptr<const Graph> cod,
                                 const std::vector<std::pair<int, int>>& cod_dom_pairs);
    // rows[h] over dom vertices; throws unless edge-preserving.
    static Morphism from_rows(std::shared_ptr<const Graph> dom,
                              std::shared_ptr<const Graph> cod,
                              std::vector<Bitset> rows);
    static Morphism identity(std::shared_ptr<const Graph> g);
    static Morphism identity(const Graph& g);

    const Graph& dom() const { return *dom_; }
    const Graph& cod() const { return *cod_; }
    std::shared_ptr<const Graph> dom_ptr() const { return dom_; }
    std::shared_ptr<const Graph> cod_ptr() const { return cod_; }

    bool rel(int h, int g) const { return rows_[h].test(g); }   // h ⊐ g
    const Bitset& row(int h) const { return rows_[h]; }         // h^⊐
    const Bitset& col(int g) const { return cols_[g]; }         // g^⊏

    Bitset preimage(const Bitset& cod_set) const;  // S^⊐ ⊆ dom
    Bitset image(const Bitset& dom_set) const;     // T^⊏ ⊆ cod
    Bitset strict_preimage(const Bitset& cod_set) const; // C_⊐ = {g : g^⊏ = C}
    Bitset sub_preimage(const Bitset& cod_set) const;    // {g : g^⊏ ⊆ C}
    Bitset edge_preimage(const Bitset& cod_set) const;   // C^•_⊐
    Bitset fibers(const Bitset& s, FiberKind kind) const;

    bool check(MorphProperty p) const;
    bool in(const std::vector<MorphProperty>& props) const;

    // Number of relation pairs.
    int pair_count() const;
    std::vector<std::pair<int, int>> pairs() const; // (cod, dom) in index order

    bool same_shape(const Morphism& o) const; // equal dom, cod graphs
    bool operator==(const Morphism& o) const;
    bool operator!=(const Morphism& o) const { return !(*this == o); }
    // Relation containment for morphisms with equal dom/cod.
    bool subrelation_of(const Morphism& o) const;

private:
    Morphism() = default;
    void build_cols();
    bool compute(MorphProperty p) const;

    std::shared_ptr<const Graph> dom_, cod_;
    std::vector<Bitset> rows_; // indexed by cod
    std::vector<Bitset> cols_; // indexed by dom
    using Cache = std::array<std::atomic<signed char>, kMorphPropertyCount>;
    std::shared_ptr<Cache> cache_;
};

// outer ∘ inner, with outer.dom == inner.cod.
Morphism compose(const Morphism& outer, const Morphism& inner);

// Relation restricted to induced subgraphs on the given non-empty subsets.
Morphism restrict(const Morphism& m, const Bitset& dom_sub, const Bitset& cod_sub);

// Union of relations over equal dom/cod (used by lax-closedness tests).
Morphism relation_union(const Morphism& a, const Morphism& b);

struct EdgeSplit {
    Graph graph;       // H = G plus two vertices per non-loop edge
    Morphism morphism; // from H to G; co-bijective, monotone, edge-witnessing, star-refining
};
EdgeSplit edge_split(const Graph& g);

// Consolidation realisation of a co-surjective edge-surjective morphism:
// dom realisation s_g plus cod families t_h = union of s_g over g ⊏ h.
struct ConsolidationRealisation {
    Realisation dom_realisation;
    std::vector<std::vector<RealisationElem>> cod_realisation;
};
ConsolidationRealisation consolidation_realisation(const Morphism& m);

// g ⊏ h ⇔ s_g ⊆ t_h, both families realise their graphs' overlaps, and the
// cod family consolidates the dom family.
bool is_consolidation_realisation(const Morphism& m, const ConsolidationRealisation& r);

} // namespace specgraph
