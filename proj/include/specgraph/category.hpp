#pragma once

#include <random>

#include "specgraph/enumerate.hpp"
#include "specgraph/fan.hpp"
#include "specgraph/sequence.hpp"

namespace specgraph {

class CategoryError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class CategoryName { D, A, P, X, L, C };
const char* to_string(CategoryName c);
std::optional<CategoryName> category_from_string(std::string_view name);

// Descriptor of one of the concrete categories: object and morphism
// predicates, oracle configuration, a weakly terminal object, and a
// generator of canonical small objects.
struct CategorySpec {
    CategoryName name;

    static const CategorySpec& get(CategoryName name);

    bool object_ok(const Graph& g) const;
    bool morphism_ok(const Morphism& m) const;

    bool has_amalgamation() const;
    Graph weakly_terminal() const;
    std::vector<Graph> small_objects(int size_bound) const;

    // Oracle setup for searching morphisms of this category between the
    // given graphs; object membership of dom/cod is enforced at the leaves.
    EnumerateOptions oracle_options(const Graph& dom, const Graph& cod) const;
};

// Exact amalgamation of the cospan f: H→G ← I :g (common codomain G):
// apex J with legs u: J→H, v: J→I, f∘u == g∘v verified bit-exactly.
struct AmalgamationResult {
    Graph apex;
    Morphism left;
    Morphism right;
};
AmalgamationResult amalgamate(const CategorySpec& cat, const Morphism& f, const Morphism& g);

struct AbsorptionRecord {
    int request_level;  // m
    Morphism request;   // ⊣ : T → G_m
    int resolved_level; // n
    Morphism embedding; // ⊨ : G_n → T with ⊣ ∘ ⊨ == ⊐ᵐ_n
};

struct FraissePrefix {
    Sequence sequence;
    std::vector<AbsorptionRecord> log;
};

// Dovetailed absorption: a queue of (level, incoming morphism) requests is
// resolved via amalgamation, appending one level per request.
FraissePrefix fraisse_prefix(const CategorySpec& cat, int steps, uint64_t seed, int size_bound);

// Finite-horizon certification per the per-category characterizations.
Verdict lax_fraisse_check(const CategorySpec& cat, const Sequence& s, int horizon);
Verdict fraisse_check(const CategorySpec& cat, const Sequence& s, int horizon);

// Search for a category morphism from some G_n (n ≤ horizon) onto target.
Verdict cofinality_probe(const CategorySpec& cat, const Sequence& s, const Graph& target,
                         int horizon, long long budget);

struct IntertwineRung {
    int left_level;   // m_k in s1
    int right_level;  // n_k in s2
    Morphism down;    // ⊣_k : H_{n_k} → G_{m_k}
    int next_level;   // m_{k+1} in s1
    Morphism back;    // ⊨_k : G_{m_{k+1}} → H_{n_k}
};

struct IntertwineResult {
    bool success = false;
    std::vector<IntertwineRung> rungs;
    nlohmann::json detail;
};

// Back-and-forth ladder of the given depth between two (lax-)Fraïssé
// prefixes; each rung satisfies ⊣∘⊨ == ⊐ᵐ_n (⊆ when lax).
IntertwineResult intertwine(const CategorySpec& cat, const Sequence& s1, const Sequence& s2,
                            int depth, bool lax);

} // namespace specgraph
