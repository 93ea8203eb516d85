#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "specgraph/bitset.hpp"

namespace specgraph {

class GraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Finite non-empty graph: ordered vertex labels plus a symmetric reflexive
// edge relation. Algorithms run on dense integer indices; labels are kept
// for serialization and for stable cross-graph identity.
class Graph {
public:
    static Graph make(const std::vector<std::string>& labels,
                      const std::vector<std::pair<std::string, std::string>>& adjacent_pairs);

    // Index-based variant, pairs may include loops (ignored).
    static Graph make_indexed(std::vector<std::string> labels,
                              const std::vector<std::pair<int, int>>& adjacent_pairs);

    int size() const { return int(labels_.size()); }
    const std::string& label(int v) const { return labels_[v]; }
    const std::vector<std::string>& labels() const { return labels_; }

    // -1 when absent.
    int index(std::string_view label) const;
    int index_or_throw(std::string_view label) const;

    bool edge(int u, int v) const { return rows_[u].test(v); }      // u ⊓ v
    bool adjacent(int u, int v) const { return u != v && edge(u, v); } // u ~ v

    const Bitset& closed_nbhd(int v) const { return rows_[v]; }      // v^⊓
    Bitset nbhd(int v) const;                                        // v^~
    int degree(int v) const { return rows_[v].count() - 1; }

    // Non-loop edges as ordered pairs (u,v), u < v, in index order.
    std::vector<std::pair<int, int>> edge_list() const;

    Graph induced(const Bitset& verts) const;

    bool operator==(const Graph& o) const {
        return labels_ == o.labels_ && rows_ == o.rows_;
    }
    bool operator!=(const Graph& o) const { return !(*this == o); }

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, int> index_;
    std::vector<Bitset> rows_; // closed neighbourhoods; diagonal always set
};

struct GraphClass {
    bool discrete = false;
    bool connected = false;
    bool triangle_free = false;
    bool acyclic = false;
    bool path = false;
    bool tree = false;
    bool cycle = false;
    bool fan = false;
    int fan_root = -1; // valid when fan
};

GraphClass classify(const Graph& g);

// Partition into maximal connected subsets, blocks and members in index order.
std::vector<std::vector<int>> components(const Graph& g);

// Vertices of degree at most 1.
Bitset ends(const Graph& g);

// Is the induced subgraph on `verts` connected? The empty set counts as
// connected.
bool connected_within(const Graph& g, const Bitset& verts);

bool is_clique(const Graph& g, const Bitset& verts);

// Vertex order of a path graph from its lexicographically least end.
std::vector<int> path_order(const Graph& g);

// Closed subpath [q,r] of a path graph; open variant drops both endpoints.
Bitset subpath(const Graph& g, int q, int r);
Bitset open_subpath(const Graph& g, int q, int r);

// Stock shapes.
Graph make_path_graph(int n, const std::string& prefix = "p");
Graph make_discrete_graph(int n, const std::string& prefix = "v");
Graph make_cycle_graph(int n, const std::string& prefix = "c");
// Spoke sizes include the shared root; each must be ≥ 2, and at least
// three spokes are required.
Graph make_fan_graph(const std::vector<int>& spoke_sizes);

// One element of an overlap realisation: an unordered vertex pair {u,v}
// (u == v encodes the singleton {u}).
using RealisationElem = std::pair<int, int>;
using Realisation = std::vector<std::vector<RealisationElem>>;

// s_g = {{g,h} : g ⊓ h}; overlaps coincide with edges and every family
// member keeps a private element.
Realisation overlap_realisation(const Graph& g);

// Check the two defining properties of a non-degenerate overlap realisation.
bool realisation_is_overlap(const Graph& g, const Realisation& r);
bool realisation_is_nondegenerate(const Realisation& r);

} // namespace specgraph
