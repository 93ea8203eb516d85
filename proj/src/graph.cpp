#include "specgraph/graph.hpp"

#include <algorithm>
#include <set>

namespace specgraph {

Graph Graph::make(const std::vector<std::string>& labels,
                  const std::vector<std::pair<std::string, std::string>>& adjacent_pairs) {
    if (labels.empty()) throw GraphError("graph must have at least one vertex");
    Graph g;
    g.labels_ = labels;
    for (int i = 0; i < int(labels.size()); ++i) {
        auto [it, fresh] = g.index_.emplace(labels[i], i);
        (void)it;
        if (!fresh) throw GraphError("duplicate vertex label: " + labels[i]);
    }
    g.rows_.assign(labels.size(), Bitset(int(labels.size())));
    for (int i = 0; i < g.size(); ++i) g.rows_[i].set(i);
    for (const auto& [a, b] : adjacent_pairs) {
        int u = g.index(a), v = g.index(b);
        if (u < 0) throw GraphError("edge references unknown vertex: " + a);
        if (v < 0) throw GraphError("edge references unknown vertex: " + b);
        g.rows_[u].set(v);
        g.rows_[v].set(u);
    }
    return g;
}

Graph Graph::make_indexed(std::vector<std::string> labels,
                          const std::vector<std::pair<int, int>>& adjacent_pairs) {
    if (labels.empty()) throw GraphError("graph must have at least one vertex");
    Graph g;
    g.labels_ = std::move(labels);
    for (int i = 0; i < int(g.labels_.size()); ++i) {
        auto [it, fresh] = g.index_.emplace(g.labels_[i], i);
        (void)it;
        if (!fresh) throw GraphError("duplicate vertex label: " + g.labels_[i]);
    }
    const int n = g.size();
    g.rows_.assign(n, Bitset(n));
    for (int i = 0; i < n; ++i) g.rows_[i].set(i);
    for (auto [u, v] : adjacent_pairs) {
        if (u < 0 || v < 0 || u >= n || v >= n) throw GraphError("edge index out of range");
        g.rows_[u].set(v);
        g.rows_[v].set(u);
    }
    return g;
}

int Graph::index(std::string_view label) const {
    auto it = index_.find(std::string(label));
    return it == index_.end() ? -1 : it->second;
}

int Graph::index_or_throw(std::string_view label) const {
    int i = index(label);
    if (i < 0) throw GraphError("unknown vertex label: " + std::string(label));
    return i;
}

Bitset Graph::nbhd(int v) const {
    Bitset b = rows_[v];
    b.reset(v);
    return b;
}

std::vector<std::pair<int, int>> Graph::edge_list() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < size(); ++u)
        for (int v = rows_[u].next(u); v >= 0; v = rows_[u].next(v))
            out.emplace_back(u, v);
    return out;
}

Graph Graph::induced(const Bitset& verts) const {
    std::vector<int> keep = verts.to_vector();
    if (keep.empty()) throw GraphError("induced subgraph must be non-empty");
    std::vector<std::string> labs;
    labs.reserve(keep.size());
    for (int v : keep) labs.push_back(labels_[v]);
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < int(keep.size()); ++i)
        for (int j = i + 1; j < int(keep.size()); ++j)
            if (edge(keep[i], keep[j])) pairs.emplace_back(i, j);
    return make_indexed(std::move(labs), pairs);
}

std::vector<std::vector<int>> components(const Graph& g) {
    const int n = g.size();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        int id = int(out.size());
        out.emplace_back();
        std::vector<int> stack{s};
        comp[s] = id;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            out[id].push_back(u);
            const Bitset& row = g.closed_nbhd(u);
            for (int v = row.first(); v >= 0; v = row.next(v))
                if (comp[v] < 0) {
                    comp[v] = id;
                    stack.push_back(v);
                }
        }
        std::sort(out[id].begin(), out[id].end());
    }
    return out;
}

bool connected_within(const Graph& g, const Bitset& verts) {
    int start = verts.first();
    if (start < 0) return true;
    Bitset seen(g.size());
    seen.set(start);
    std::vector<int> stack{start};
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        Bitset nb = g.closed_nbhd(u) & verts;
        nb -= seen;
        for (int v = nb.first(); v >= 0; v = nb.next(v)) {
            seen.set(v);
            stack.push_back(v);
        }
    }
    return seen == verts;
}

bool is_clique(const Graph& g, const Bitset& verts) {
    for (int u = verts.first(); u >= 0; u = verts.next(u))
        if (!verts.is_subset_of(g.closed_nbhd(u))) return false;
    return true;
}

Bitset ends(const Graph& g) {
    Bitset e(g.size());
    for (int v = 0; v < g.size(); ++v)
        if (g.degree(v) <= 1) e.set(v);
    return e;
}

namespace {

bool has_triangle(const Graph& g) {
    for (int u = 0; u < g.size(); ++u)
        for (int v = u + 1; v < g.size(); ++v) {
            if (!g.edge(u, v)) continue;
            Bitset common = g.nbhd(u) & g.nbhd(v);
            common.reset(u);
            common.reset(v);
            if (common.any()) return true;
        }
    return false;
}

int nonloop_edge_count(const Graph& g) {
    int c = 0;
    for (int u = 0; u < g.size(); ++u) c += g.degree(u);
    return c / 2;
}

} // namespace

GraphClass classify(const Graph& g) {
    GraphClass c;
    const int n = g.size();
    auto comps = components(g);
    c.connected = comps.size() == 1;
    c.triangle_free = !has_triangle(g);
    c.discrete = nonloop_edge_count(g) == 0;
    // A graph is acyclic iff every component is a tree, i.e. #edges = n - #components.
    c.acyclic = nonloop_edge_count(g) == n - int(comps.size());
    c.tree = c.connected && c.acyclic;

    int max_deg = 0, deg_ge3 = 0, root = -1, end_count = 0;
    bool all_deg2 = true;
    for (int v = 0; v < n; ++v) {
        int d = g.degree(v);
        max_deg = std::max(max_deg, d);
        if (d >= 3) {
            ++deg_ge3;
            root = v;
        }
        if (d <= 1) ++end_count;
        if (d != 2) all_deg2 = false;
    }
    c.path = c.connected && max_deg <= 2 && end_count >= 1;
    c.cycle = c.connected && all_deg2 && n >= 3;
    c.fan = c.tree && deg_ge3 == 1;
    if (c.fan) c.fan_root = root;
    return c;
}

std::vector<int> path_order(const Graph& g) {
    GraphClass c = classify(g);
    if (!c.path) throw GraphError("graph is not a path");
    const int n = g.size();
    if (n == 1) return {0};
    int start = -1;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) == 1 && (start < 0 || g.label(v) < g.label(start))) start = v;
    std::vector<int> order{start};
    Bitset seen(n);
    seen.set(start);
    int cur = start;
    while (int(order.size()) < n) {
        Bitset nb = g.nbhd(cur);
        nb -= seen;
        int nxt = nb.first();
        order.push_back(nxt);
        seen.set(nxt);
        cur = nxt;
    }
    return order;
}

Bitset subpath(const Graph& g, int q, int r) {
    std::vector<int> order = path_order(g);
    std::vector<int> pos(g.size());
    for (int i = 0; i < int(order.size()); ++i) pos[order[i]] = i;
    int a = std::min(pos[q], pos[r]), b = std::max(pos[q], pos[r]);
    Bitset out(g.size());
    for (int i = a; i <= b; ++i) out.set(order[i]);
    return out;
}

Bitset open_subpath(const Graph& g, int q, int r) {
    Bitset out = subpath(g, q, r);
    out.reset(q);
    out.reset(r);
    return out;
}

Graph make_path_graph(int n, const std::string& prefix) {
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back(prefix + std::to_string(i));
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph::make_indexed(std::move(labels), edges);
}

Graph make_discrete_graph(int n, const std::string& prefix) {
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back(prefix + std::to_string(i));
    return Graph::make_indexed(std::move(labels), {});
}

Graph make_cycle_graph(int n, const std::string& prefix) {
    if (n < 3) throw GraphError("cycle needs at least three vertices");
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back(prefix + std::to_string(i));
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph::make_indexed(std::move(labels), edges);
}

Graph make_fan_graph(const std::vector<int>& spoke_sizes) {
    if (spoke_sizes.size() < 3) throw GraphError("fan needs at least three spokes");
    std::vector<std::string> labels{"0"};
    std::vector<std::pair<int, int>> edges;
    for (size_t i = 0; i < spoke_sizes.size(); ++i) {
        if (spoke_sizes[i] < 2) throw GraphError("spoke size must be at least 2 including the root");
        int prev = 0;
        for (int j = 1; j < spoke_sizes[i]; ++j) {
            int v = int(labels.size());
            labels.push_back("s" + std::to_string(i) + "." + std::to_string(j));
            edges.emplace_back(prev, v);
            prev = v;
        }
    }
    return Graph::make_indexed(std::move(labels), edges);
}

Realisation overlap_realisation(const Graph& g) {
    Realisation r(g.size());
    for (int u = 0; u < g.size(); ++u) {
        const Bitset& row = g.closed_nbhd(u);
        for (int v = row.first(); v >= 0; v = row.next(v))
            r[u].emplace_back(std::min(u, v), std::max(u, v));
        std::sort(r[u].begin(), r[u].end());
    }
    return r;
}

bool realisation_is_overlap(const Graph& g, const Realisation& r) {
    for (int u = 0; u < g.size(); ++u)
        for (int v = 0; v < g.size(); ++v) {
            std::vector<RealisationElem> common;
            std::set_intersection(r[u].begin(), r[u].end(), r[v].begin(), r[v].end(),
                                  std::back_inserter(common));
            if (g.edge(u, v) != !common.empty()) return false;
        }
    return true;
}

bool realisation_is_nondegenerate(const Realisation& r) {
    for (size_t u = 0; u < r.size(); ++u) {
        std::set<RealisationElem> others;
        for (size_t v = 0; v < r.size(); ++v)
            if (v != u) others.insert(r[v].begin(), r[v].end());
        bool has_private = false;
        for (const auto& e : r[u])
            if (!others.count(e)) {
                has_private = true;
                break;
            }
        if (!has_private) return false;
    }
    return true;
}

} // namespace specgraph
