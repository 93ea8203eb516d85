#pragma once

#include "specgraph/sequence.hpp"

namespace specgraph {

// Element (vertex at a level) of the poset induced by a sequence: the
// disjoint union of the level graphs ordered by the composite relations.
struct PosetElement {
    int level = 0;
    int vertex = 0;
    bool operator==(const PosetElement& o) const {
        return level == o.level && vertex == o.vertex;
    }
    bool operator<(const PosetElement& o) const {
        return level != o.level ? level < o.level : vertex < o.vertex;
    }
};

// p ≤ q in the induced poset.
bool leq(const Sequence& s, PosetElement p, PosetElement q);

// Common-lower-bound query within the prefix.
bool wedge_exists(const Sequence& s, PosetElement p, PosetElement q);

// Verdict version: Holds with the bound found at some level ≤ horizon;
// FailsOnPrefix when no ancestor of the deeper element at the shallower
// level is edge-related to the other (edge-preservation then rules a bound
// out at every future level); Unknown otherwise.
Verdict wedge(const Sequence& s, PosetElement p, PosetElement q, int horizon);

// All descending chains over levels 0..depth, lexicographic order.
std::vector<Thread> enumerate_threads(const Sequence& s, int depth);

// (t_n)^≤ within the prefix, sorted.
std::vector<PosetElement> thread_upset(const Sequence& s, const Thread& t);

// Threads whose upsets are ⊆-minimal among all depth-d thread upsets;
// threads with equal upsets are collapsed to the lexicographically first.
std::vector<Thread> minimal_selectors(const Sequence& s, int depth);

// Holds when some level ≤ horizon refines C; FailsOnPrefix only with an
// explicit avoiding thread whose tail has singleton strict preimages.
Verdict is_cap(const Sequence& s, const std::vector<PosetElement>& cap, int horizon);

// p ◁_{level k} q: every level-k element wedge-related to p lies below q.
bool star_below(const Sequence& s, PosetElement p, PosetElement q, int via_level);

struct SpectrumReport {
    Verdict connected;
    Verdict hausdorff;
    Verdict perfect;
    Verdict tree_like;
    Verdict hereditarily_unicoherent;
    bool co_bijective_prefix = false; // biconditional readings valid
    int horizon = 0;
    nlohmann::json to_json() const;
};

SpectrumReport spectrum_report(const Sequence& s, int horizon);

} // namespace specgraph
