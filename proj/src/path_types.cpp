#include "specgraph/path_types.hpp"

#include <algorithm>

namespace specgraph {

bool pointwise_leq(const TypeFunction& a, const TypeFunction& b) {
    if (a.vertex.size() != b.vertex.size()) throw MorphismError("type shape mismatch");
    for (size_t i = 0; i < a.vertex.size(); ++i)
        if (a.vertex[i] > b.vertex[i]) return false;
    for (size_t i = 0; i < a.edge.size(); ++i)
        if (a.edge[i] > b.edge[i]) return false;
    return true;
}

TypeFunction pointwise_max(const TypeFunction& a, const TypeFunction& b) {
    if (a.vertex.size() != b.vertex.size()) throw MorphismError("type shape mismatch");
    TypeFunction t = a;
    for (size_t i = 0; i < t.vertex.size(); ++i) t.vertex[i] = std::max(t.vertex[i], b.vertex[i]);
    for (size_t i = 0; i < t.edge.size(); ++i) t.edge[i] = std::max(t.edge[i], b.edge[i]);
    return t;
}

namespace {

// Valid profile: walking dom positions, images follow
// block_0, connector_0, block_1, ..., block_{k-1} with non-empty blocks.
bool read_profile(const Morphism& m, const std::vector<int>& cod_pos,
                  const std::vector<int>& dom_order, int k,
                  std::vector<int>& block_lo, std::vector<int>& block_hi) {
    block_lo.assign(k, -1);
    block_hi.assign(k, -1);
    int expect = 0;
    for (int pos = 0; pos < int(dom_order.size()); ++pos) {
        const Bitset& img = m.col(dom_order[pos]);
        std::vector<int> ps;
        for (int h = img.first(); h >= 0; h = img.next(h)) ps.push_back(cod_pos[h]);
        std::sort(ps.begin(), ps.end());
        if (ps.size() == 1) {
            int i = ps[0];
            if (i == expect - 1 && block_hi[i] == pos - 1) {
                block_hi[i] = pos;
            } else if (i == expect) {
                block_lo[i] = block_hi[i] = pos;
                ++expect;
            } else {
                return false;
            }
        } else if (ps.size() == 2 && ps[1] == ps[0] + 1 && ps[0] == expect - 1 &&
                   block_hi[ps[0]] < pos) {
            // connector vertex between block expect-1 and block expect
        } else {
            return false;
        }
    }
    // connectors may not dangle past the final block
    return expect == k && block_hi[k - 1] == int(dom_order.size()) - 1;
}

} // namespace

PathAlignment align_path_morphism(const Morphism& m) {
    if (!classify(m.dom()).path || !classify(m.cod()).path)
        throw MorphismError("path alignment requires path dom and cod");
    if (!m.check(MorphProperty::CoBijective) || !m.check(MorphProperty::Monotone))
        throw MorphismError("path alignment requires a monotone co-bijective morphism");

    PathAlignment a;
    a.cod_order = path_order(m.cod());
    a.dom_order = path_order(m.dom());
    const int k = int(a.cod_order.size());
    std::vector<int> cod_pos(m.cod().size());
    for (int i = 0; i < k; ++i) cod_pos[a.cod_order[i]] = i;

    if (!read_profile(m, cod_pos, a.dom_order, k, a.block_lo, a.block_hi)) {
        std::reverse(a.dom_order.begin(), a.dom_order.end());
        if (!read_profile(m, cod_pos, a.dom_order, k, a.block_lo, a.block_hi))
            throw MorphismError("morphism lacks the path block profile");
    }
    return a;
}

TypeFunction type_of(const Morphism& m) {
    PathAlignment a = align_path_morphism(m);
    const int k = int(a.cod_order.size());
    TypeFunction t;
    t.vertex.resize(k);
    t.edge.assign(std::max(0, k - 1), 0);
    for (int i = 0; i < k; ++i) t.vertex[i] = a.block_hi[i] - a.block_lo[i] + 1;
    for (int i = 0; i + 1 < k; ++i) t.edge[i] = a.block_lo[i + 1] - a.block_hi[i] - 1;
    return t;
}

std::pair<Graph, Morphism> realize_type(const Graph& q, const TypeFunction& t) {
    if (!classify(q).path) throw MorphismError("type realization requires a path cod");
    std::vector<int> order = path_order(q);
    const int k = int(order.size());
    if (int(t.vertex.size()) != k || !t.valid())
        throw MorphismError("invalid type for this path");

    std::vector<std::string> labels;
    std::vector<std::pair<int, int>> rel; // (cod index, dom index)
    for (int i = 0; i < k; ++i) {
        const std::string& ql = q.label(order[i]);
        for (int j = 0; j < t.vertex[i]; ++j) {
            rel.emplace_back(order[i], int(labels.size()));
            labels.push_back(ql + "#" + std::to_string(j));
        }
        if (i + 1 < k) {
            const std::string& rl = q.label(order[i + 1]);
            for (int j = 0; j < t.edge[i]; ++j) {
                rel.emplace_back(order[i], int(labels.size()));
                rel.emplace_back(order[i + 1], int(labels.size()));
                labels.push_back(ql + "|" + rl + "#" + std::to_string(j));
            }
        }
    }
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < int(labels.size()); ++v) edges.emplace_back(v, v + 1);
    Graph p = Graph::make_indexed(std::move(labels), edges);
    auto pp = std::make_shared<const Graph>(p);
    auto qp = std::make_shared<const Graph>(q);
    Morphism m = Morphism::make_indexed(pp, qp, rel);
    if (!(type_of(m) == t)) throw MorphismError("type realization self-check failed");
    return {std::move(p), std::move(m)};
}

namespace {

// Monotone surjection from dom positions [dlo,dhi] onto cod positions
// [clo,chi], pinning dlo ↦ clo and dhi ↦ chi; requires len(dom) ≥ len(cod).
int stretch(int x, int dlo, int dhi, int clo, int chi) {
    int slack = (dhi - dlo) - (chi - clo);
    return clo + std::max(0, (x - dlo) - slack);
}

} // namespace

std::optional<Morphism> factor_by_type(const Morphism& big, const Morphism& small) {
    if (big.cod() != small.cod()) throw MorphismError("factorization needs a common codomain");
    PathAlignment fa = align_path_morphism(big);
    PathAlignment ga = align_path_morphism(small);
    TypeFunction tf = type_of(big), tg = type_of(small);
    if (!pointwise_leq(tf, tg)) return std::nullopt;

    const int k = int(fa.cod_order.size());
    const Graph& P = big.dom();
    const Graph& Q = small.dom();
    // Columns of the factor: Q vertex ↦ set of P vertices, in position space.
    std::vector<Bitset> cols(Q.size(), Bitset(P.size()));
    auto pvert = [&](int pos) { return fa.dom_order[pos]; };
    for (int i = 0; i < k; ++i) {
        for (int x = ga.block_lo[i]; x <= ga.block_hi[i]; ++x) {
            int y = stretch(x, ga.block_lo[i], ga.block_hi[i], fa.block_lo[i], fa.block_hi[i]);
            cols[ga.dom_order[x]].set(pvert(y));
        }
        if (i + 1 == k) break;
        int gclo = ga.block_hi[i] + 1, gchi = ga.block_lo[i + 1] - 1; // connector in Q
        int fclo = fa.block_hi[i] + 1, fchi = fa.block_lo[i + 1] - 1; // connector in P
        for (int x = gclo; x <= gchi; ++x) {
            if (fclo > fchi) {
                // empty target connector: relate to both flanking block ends
                cols[ga.dom_order[x]].set(pvert(fa.block_hi[i]));
                cols[ga.dom_order[x]].set(pvert(fa.block_lo[i + 1]));
            } else {
                int y = stretch(x, gclo, gchi, fclo, fchi);
                cols[ga.dom_order[x]].set(pvert(y));
            }
        }
    }

    std::vector<Bitset> rows(P.size(), Bitset(Q.size()));
    for (int g = 0; g < Q.size(); ++g)
        for (int h = cols[g].first(); h >= 0; h = cols[g].next(h)) rows[h].set(g);
    Morphism factor = Morphism::from_rows(small.dom_ptr(), big.dom_ptr(), std::move(rows));
    if (!(compose(big, factor) == small))
        throw MorphismError("type factorization self-check failed");
    if (!factor.check(MorphProperty::CoBijective) || !factor.check(MorphProperty::Monotone))
        throw MorphismError("type factorization produced a morphism outside the path category");
    return factor;
}

Morphism subfactor(const Morphism& big, const Morphism& small) {
    if (big.cod() != small.cod()) throw MorphismError("subfactor needs a common codomain");
    PathAlignment fa = align_path_morphism(big);
    PathAlignment ga = align_path_morphism(small);
    const Graph& P = big.dom();
    const Graph& Q = small.dom();
    const int k = int(fa.cod_order.size());
    if (P.size() > Q.size()) throw MorphismError("subfactor requires |P| ≤ |Q|");
    if (k > 1) {
        TypeFunction tg = type_of(small);
        for (int e : tg.edge)
            if (P.size() > e) throw MorphismError("subfactor requires |P| ≤ |{r,s}| for every edge");
    }

    std::vector<Bitset> cols(Q.size(), Bitset(P.size()));
    if (k == 1) {
        for (int x = 0; x < Q.size(); ++x) {
            int y = stretch(x, 0, Q.size() - 1, 0, P.size() - 1);
            cols[ga.dom_order[x]].set(fa.dom_order[y]);
        }
    } else {
        // Anchor each cod vertex at a strict-preimage representative in P;
        // path ends anchor at P's ends.
        std::vector<int> anchor(k);
        for (int i = 0; i < k; ++i) anchor[i] = (i == k - 1) ? fa.block_hi[i] : fa.block_lo[i];
        for (int i = 0; i < k; ++i)
            for (int x = ga.block_lo[i]; x <= ga.block_hi[i]; ++x)
                cols[ga.dom_order[x]].set(fa.dom_order[anchor[i]]);
        for (int i = 0; i + 1 < k; ++i) {
            int gclo = ga.block_hi[i], gchi = ga.block_lo[i + 1]; // closed connector span
            for (int x = gclo + 1; x < gchi; ++x) {
                int y = stretch(x, gclo, gchi, anchor[i], anchor[i + 1]);
                cols[ga.dom_order[x]].set(fa.dom_order[y]);
            }
        }
    }

    std::vector<Bitset> rows(P.size(), Bitset(Q.size()));
    for (int g = 0; g < Q.size(); ++g)
        for (int h = cols[g].first(); h >= 0; h = cols[g].next(h)) rows[h].set(g);
    Morphism phi = Morphism::from_rows(small.dom_ptr(), big.dom_ptr(), std::move(rows));
    if (!compose(big, phi).subrelation_of(small))
        throw MorphismError("subfactor self-check failed");
    if (!phi.check(MorphProperty::Function) || !phi.check(MorphProperty::Surjective) ||
        !phi.check(MorphProperty::Monotone))
        throw MorphismError("subfactor produced a morphism outside A ∩ F");
    return phi;
}

} // namespace specgraph
