#include "specgraph/enumerate.hpp"

#include <algorithm>

#include "specgraph/clique.hpp"

namespace specgraph {

EnumerateResult enumerate_morphisms(std::shared_ptr<const Graph> dom,
                                    std::shared_ptr<const Graph> cod,
                                    const EnumerateOptions& opt) {
    const Graph& D = *dom;
    const Graph& C = *cod;
    EnumerateResult res;

    bool needs_cosurjective = false, needs_function = false, needs_coinjective = false;
    for (auto p : opt.required) {
        if (p == MorphProperty::CoSurjective || p == MorphProperty::CoBijective ||
            p == MorphProperty::StarRefining || p == MorphProperty::CoEdgeWitnessing)
            needs_cosurjective = true;
        if (p == MorphProperty::Function) needs_function = true;
        if (p == MorphProperty::CoInjective || p == MorphProperty::CoBijective)
            needs_coinjective = true;
    }

    // Candidate image sets: cliques of cod, optionally the empty set.
    std::vector<Bitset> values;
    if (!needs_cosurjective) values.emplace_back(C.size());
    for (auto& c : all_cliques(C, opt.clique_limit)) values.push_back(std::move(c));
    std::sort(values.begin(), values.end());
    if (needs_function) {
        std::erase_if(values, [](const Bitset& b) { return b.count() != 1; });
    }

    // Pairwise compatibility masks: image B may sit on a neighbour of a
    // vertex with image A only when A × B ⊆ ⊓.
    std::vector<Bitset> compat;
    compat.reserve(values.size());
    for (const auto& v : values) {
        Bitset mask(C.size());
        mask.set_all();
        for (int h = v.first(); h >= 0; h = v.next(h)) mask &= C.closed_nbhd(h);
        compat.push_back(mask);
    }

    // Per-column candidate lists.
    std::vector<std::vector<int>> cand(D.size());
    for (int g = 0; g < D.size(); ++g) {
        for (int vi = 0; vi < int(values.size()); ++vi) {
            const Bitset& img = values[vi];
            if (opt.column_filter && !opt.column_filter(g, img)) continue;
            if (opt.composition) {
                const auto& ct = *opt.composition;
                Bitset through(ct.outer.cod().size());
                for (int p = img.first(); p >= 0; p = img.next(p)) through |= ct.outer.col(p);
                const Bitset& want = ct.target.col(g);
                if (ct.lax ? !through.is_subset_of(want) : through != want) continue;
            }
            cand[g].push_back(vi);
        }
        if (cand[g].empty()) return res; // no morphism possible
    }

    std::vector<int> assigned(D.size(), -1);
    long long nodes = 0;

    // Strict-witness feasibility: with co-injectivity required, every cod
    // vertex must keep a column able to carry its singleton image.
    auto coinjective_feasible = [&](const std::vector<std::vector<int>>& live) {
        if (!needs_coinjective) return true;
        Bitset possible(C.size());
        for (int g = 0; g < D.size(); ++g) {
            if (assigned[g] >= 0) {
                const Bitset& img = values[assigned[g]];
                if (img.count() == 1) possible.set(img.first());
            } else {
                for (int vi : live[g])
                    if (values[vi].count() == 1) possible.set(values[vi].first());
            }
        }
        return possible.count() == C.size();
    };

    std::function<bool(const std::vector<std::vector<int>>&)> rec =
        [&](const std::vector<std::vector<int>>& live) -> bool {
        if (++nodes > opt.node_budget) {
            res.exhausted = true;
            return false;
        }
        if (!coinjective_feasible(live)) return true;
        // Most constrained unassigned column, ties by index.
        int col = -1;
        for (int g = 0; g < D.size(); ++g) {
            if (assigned[g] >= 0) continue;
            if (col < 0 || live[g].size() < live[col].size()) col = g;
        }
        if (col < 0) {
            std::vector<Bitset> rows(C.size(), Bitset(D.size()));
            for (int g = 0; g < D.size(); ++g)
                for (int h = values[assigned[g]].first(); h >= 0; h = values[assigned[g]].next(h))
                    rows[h].set(g);
            Morphism m = Morphism::from_rows(dom, cod, std::move(rows));
            if (!m.in(opt.required)) return true;
            if (opt.leaf_filter && !opt.leaf_filter(m)) return true;
            res.morphisms.push_back(std::move(m));
            return int(res.morphisms.size()) < opt.max_results;
        }
        for (int vi : live[col]) {
            assigned[col] = vi;
            std::vector<std::vector<int>> next = live;
            next[col] = {vi};
            bool feasible = true;
            const Bitset& nb = D.closed_nbhd(col);
            for (int g2 = nb.first(); g2 >= 0 && feasible; g2 = nb.next(g2)) {
                if (g2 == col || assigned[g2] >= 0) {
                    // already-assigned neighbours were filtered when assigned
                    continue;
                }
                auto& lst = next[g2];
                std::erase_if(lst, [&](int wi) {
                    return !values[wi].is_subset_of(compat[vi]);
                });
                feasible = !lst.empty();
            }
            if (feasible && !rec(next)) {
                assigned[col] = -1;
                return false;
            }
            assigned[col] = -1;
        }
        return true;
    };

    rec(cand);
    res.nodes = nodes;

    std::sort(res.morphisms.begin(), res.morphisms.end(),
              [](const Morphism& a, const Morphism& b) { return a.pairs() < b.pairs(); });
    return res;
}

} // namespace specgraph
