#include "specgraph/clique.hpp"

#include <algorithm>
#include <map>

namespace specgraph {

namespace {

std::vector<std::string> member_labels(const Graph& g, const Bitset& c) {
    std::vector<std::string> out;
    for (int v = c.first(); v >= 0; v = c.next(v)) out.push_back(g.label(v));
    std::sort(out.begin(), out.end());
    return out;
}

std::string clique_label(const std::vector<std::string>& members) {
    std::string s = "{";
    for (size_t i = 0; i < members.size(); ++i) {
        if (i) s += ",";
        s += members[i];
    }
    return s + "}";
}

} // namespace

std::vector<Bitset> all_cliques(const Graph& g, int limit) {
    std::vector<Bitset> out;
    // Grow cliques by extending with higher-indexed common neighbours.
    std::vector<std::pair<Bitset, Bitset>> stack; // (clique, extension candidates)
    for (int v = g.size() - 1; v >= 0; --v) {
        Bitset c(g.size());
        c.set(v);
        Bitset ext = g.nbhd(v);
        for (int u = 0; u <= v; ++u) ext.reset(u);
        stack.emplace_back(c, ext);
    }
    while (!stack.empty()) {
        auto [c, ext] = stack.back();
        stack.pop_back();
        out.push_back(c);
        if (int(out.size()) > limit)
            throw CliqueError("clique count exceeds limit of " + std::to_string(limit));
        for (int u = ext.first(); u >= 0; u = ext.next(u)) {
            Bitset c2 = c;
            c2.set(u);
            Bitset ext2 = ext & g.nbhd(u);
            for (int w = ext2.first(); w >= 0 && w <= u; w = ext2.next(w)) ext2.reset(w);
            stack.emplace_back(c2, ext2);
        }
    }
    // Canonical order: lexicographic by sorted member-label lists.
    std::vector<std::pair<std::vector<std::string>, Bitset>> keyed;
    keyed.reserve(out.size());
    for (auto& c : out) keyed.emplace_back(member_labels(g, c), c);
    std::sort(keyed.begin(), keyed.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    out.clear();
    for (auto& [k, c] : keyed) out.push_back(c);
    return out;
}

Graph clique_graph(const Graph& g, int limit) {
    std::vector<Bitset> cliques = all_cliques(g, limit);
    std::vector<std::string> labels;
    labels.reserve(cliques.size());
    for (const auto& c : cliques) labels.push_back(clique_label(member_labels(g, c)));
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < int(cliques.size()); ++i)
        for (int j = i + 1; j < int(cliques.size()); ++j)
            if (cliques[i].is_subset_of(cliques[j]) || cliques[j].is_subset_of(cliques[i]))
                edges.emplace_back(i, j);
    return Graph::make_indexed(std::move(labels), edges);
}

Morphism clique_map(const Morphism& m, int limit) {
    if (!m.check(MorphProperty::CoSurjective))
        throw CliqueError("clique map requires a co-surjective morphism");
    std::vector<Bitset> dom_cliques = all_cliques(m.dom(), limit);
    std::vector<Bitset> cod_cliques = all_cliques(m.cod(), limit);
    auto xdom = std::make_shared<const Graph>(clique_graph(m.dom(), limit));
    auto xcod = std::make_shared<const Graph>(clique_graph(m.cod(), limit));
    std::map<Bitset, int> cod_index;
    for (int i = 0; i < int(cod_cliques.size()); ++i) cod_index.emplace(cod_cliques[i], i);
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < int(dom_cliques.size()); ++i) {
        Bitset img = m.image(dom_cliques[i]);
        auto it = cod_index.find(img);
        if (it == cod_index.end())
            throw CliqueError("image of a clique is not a clique; morphism not edge-preserving?");
        pairs.emplace_back(it->second, i);
    }
    return Morphism::make_indexed(xdom, xcod, pairs);
}

Morphism membership(const Graph& g, int limit) {
    std::vector<Bitset> cliques = all_cliques(g, limit);
    auto xg = std::make_shared<const Graph>(clique_graph(g, limit));
    auto gp = std::make_shared<const Graph>(g);
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < int(cliques.size()); ++i)
        for (int v = cliques[i].first(); v >= 0; v = cliques[i].next(v))
            pairs.emplace_back(v, i);
    return Morphism::make_indexed(xg, gp, pairs);
}

} // namespace specgraph
