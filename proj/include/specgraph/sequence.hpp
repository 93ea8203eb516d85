#pragma once

#include <map>
#include <mutex>
#include <variant>

#include "specgraph/morphism.hpp"
#include "specgraph/verdict.hpp"

namespace specgraph {

class SequenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class GuaranteeKind {
    StepProperty,   // every one-step morphism, at all levels, has `prop`
    StrideProperty, // every composite over `stride` consecutive steps has `prop`
    NoCompositeHas, // no composite ⊐ᵐ_n (m < n) ever has `prop`
    Shape,          // every level graph satisfies the named shape predicate
    DensityStable,  // subsets dense at the prefix horizon are dense outright
};

// Generator-certified facts that extend beyond the stored prefix; the
// certificate text records why the construction guarantees them.
struct Guarantee {
    GuaranteeKind kind;
    std::string prop;
    int stride = 0;
    std::string note;
};

// One vertex per level, descending: chain[m] ⊐ᵐ_n chain[n].
using Thread = std::vector<int>;

// Finite prefix G_0..G_N of a graph sequence with one-step co-surjective
// morphisms; composites are derived, so coherence holds by construction.
class Sequence {
public:
    static Sequence make(std::vector<std::shared_ptr<const Graph>> graphs,
                         std::vector<Morphism> steps);
    static Sequence make(const std::vector<Graph>& graphs, std::vector<Morphism> steps);

    int levels() const { return int(graphs_.size()); }
    int last_level() const { return int(graphs_.size()) - 1; }
    const Graph& graph(int n) const { return *graphs_[n]; }
    std::shared_ptr<const Graph> graph_ptr(int n) const { return graphs_[n]; }
    const Morphism& step(int n) const { return steps_[n]; } // G_{n+1} → G_n
    const std::vector<Morphism>& steps() const { return steps_; }

    // ⊐ᵐ_n as a cached step composition; identity when m == n.
    const Morphism& composite(int m, int n) const;

    bool surjective_prefix() const; // every step surjective
    bool has_guarantee(GuaranteeKind kind, std::string_view prop, int stride = 0) const;

    std::string provenance;
    std::vector<Guarantee> guarantees;
    bool horizon_approximate = false;

private:
    std::vector<std::shared_ptr<const Graph>> graphs_;
    std::vector<Morphism> steps_;
    struct Cache {
        std::mutex mu;
        std::map<std::pair<int, int>, Morphism> comp;
    };
    std::shared_ptr<Cache> cache_;
};

// Triangular family with lax coherence ⊐ˡ_m ∘ ⊐ᵐ_n ⊆ ⊐ˡ_n, produced when a
// restriction fails to be a true sequence.
struct LaxSequence {
    std::vector<std::shared_ptr<const Graph>> graphs;
    std::map<std::pair<int, int>, Morphism> rels;
    nlohmann::json coherence_witness; // pair breaking exact coherence
};

Sequence subsequence(const Sequence& s, const std::vector<int>& phi);

// Ideal properties admissible for subsequence search.
enum class IdealProperty {
    AntiInjective,
    StrictlyAntiInjective,
    StarRefining,
    EdgeWitnessing,
    EndDense,
    EndSplitting,
};
const char* to_string(IdealProperty p);
std::optional<IdealProperty> ideal_property_from_string(std::string_view name);
bool check_ideal_property(const Morphism& m, IdealProperty p);

// Lemma-style check: "for every m there is n ≥ m with ⊐ᵐ_n in the ideal".
// Holds carries the witness map m ↦ n over the prefix; FailsOnPrefix only
// when a declared guarantee excludes later witnesses.
Verdict has_subsequence_in(const Sequence& s, IdealProperty p, int horizon);

// Edge-preserving (by construction) + edge-surjective + edge-witnessing
// subsequence, combined pessimistically. Requires a surjective prefix.
Verdict is_edge_faithful(const Sequence& s, int horizon);

// Restriction to per-level subsets; a true Sequence when the upper condition
// H_{n+1}^⊏ ⊆ H_n holds at every step, otherwise a LaxSequence with witness.
std::variant<Sequence, LaxSequence> upper_restriction(const Sequence& s,
                                                      const std::vector<Bitset>& subsets);

// Largest surjective upper restriction, computed at the prefix end; flagged
// horizon-approximate unless nothing was removed.
Sequence surjective_core(const Sequence& s);

// H ⊆ G_m is dense at horizon when its image at the prefix end is all of G_N.
bool dense_at_horizon(const Sequence& s, int m, const Bitset& subset);

// Minimum-cardinality dense subset of `within` at level m, lexicographically
// least by vertex index; nullopt when no subset of `within` is dense or the
// free-choice part is too large to search exhaustively.
std::optional<Bitset> minimal_dense_subset(const Sequence& s, int m, const Bitset& within);

struct ModificationResult {
    enum class Status { Success, NoModification, Unknown };
    Status status = Status::Unknown;
    std::optional<Sequence> sequence;
    nlohmann::json witness;
};

// Greedy minimal dense co-surjective lax-restriction; succeeds when the
// restriction is a true sequence (then it is co-bijective with the same
// spectrum), otherwise reports the coherence failure.
ModificationResult cobijective_modification(const Sequence& s);

// Level-n trace of the union of the threads' points.
Bitset trace(const Sequence& s, const std::vector<Thread>& threads, int n);

} // namespace specgraph
