#pragma once

#include "specgraph/sequence.hpp"

namespace specgraph {

class FanError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Root plus spokes (root-to-end vertex lists, root included), sorted by end
// label. Spokes pairwise meet exactly in the root and cover the fan.
struct FanStructure {
    int root = -1;
    std::vector<std::vector<int>> spokes;
};

FanStructure fan_structure(const Graph& g);

enum class FanProperty { SpokeMonotone, EndPreserving, EndDense, EndSplitting };
const char* to_string(FanProperty p);
std::optional<FanProperty> fan_property_from_string(std::string_view name);

bool fan_check(const Morphism& m, FanProperty p);

// Tree of spokes: per level the fan's spokes; spoke S at level n+1 succeeds
// spoke T at level n when {root} ⊊ S^⊏ ⊆ T. Nodes with S^⊏ = {root} are
// orphans (parent -1).
struct SpokeTree {
    std::vector<FanStructure> levels;
    std::vector<std::vector<int>> parent; // [level][spoke] -> spoke at level-1, or -1
};

SpokeTree tree_of_spokes(const Sequence& s);

struct BranchOfSpokes {
    int start_level = 0;          // n₀: degenerate (root-only) below
    std::vector<int> spoke_index; // spoke per level start_level..depth
};

std::vector<BranchOfSpokes> branches(const Sequence& s, int depth);

struct BranchAnalysis {
    Sequence core;                        // surjective core of the branch restriction
    std::optional<Sequence> modification; // its co-bijective modification
    std::optional<Thread> endpoint_thread;
    bool nondegenerate = false;
};

BranchAnalysis branch_analysis(const Sequence& s, const BranchOfSpokes& b, int horizon);

struct FanClassification {
    enum class Kind { CantorFanEvidence, LelekEvidence, Negative, Unknown };
    Kind kind = Kind::Unknown;
    nlohmann::json conditions;
};

// Cantor-fan route for end-preserving sequences (star-refining and
// end-splitting subsequence verdicts), Lelek route otherwise (star-refining,
// end-dense and end-splitting).
FanClassification classify_fan_limit(const Sequence& s, int horizon);

} // namespace specgraph
