#include "specgraph/morphism.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace specgraph {

namespace {

const char* kPropNames[kMorphPropertyCount] = {
    "function",        "surjective",      "injective",
    "co-surjective",   "co-injective",    "co-bijective",
    "edge-surjective", "edge-witnessing", "anti-injective",
    "strictly-anti-injective", "star-refining", "co-edge-witnessing",
    "monotone",        "edge-reflective",
};

std::string violation_message(const Graph& dom, const Graph& cod,
                              const EdgePreservationViolation& w) {
    return "not edge-preserving: " + cod.label(w.h) + " ⊐ " + dom.label(w.g) + " ⊓ " +
           dom.label(w.g2) + " ⊏ " + cod.label(w.h2) + " but images are not adjacent";
}

} // namespace

const char* to_string(MorphProperty p) { return kPropNames[int(p)]; }

std::optional<MorphProperty> morph_property_from_string(std::string_view name) {
    for (int i = 0; i < kMorphPropertyCount; ++i)
        if (name == kPropNames[i]) return MorphProperty(i);
    return std::nullopt;
}

void Morphism::build_cols() {
    cols_.assign(dom_->size(), Bitset(cod_->size()));
    for (int h = 0; h < cod_->size(); ++h)
        for (int g = rows_[h].first(); g >= 0; g = rows_[h].next(g))
            cols_[g].set(h);
    cache_ = std::make_shared<Cache>();
    for (auto& c : *cache_) c.store(-1, std::memory_order_relaxed);
}

Morphism Morphism::from_rows(std::shared_ptr<const Graph> dom,
                             std::shared_ptr<const Graph> cod,
                             std::vector<Bitset> rows) {
    Morphism m;
    m.dom_ = std::move(dom);
    m.cod_ = std::move(cod);
    m.rows_ = std::move(rows);
    m.build_cols();
    // Edge preservation: for every dom edge g ⊓ g' the image sets must be
    // pairwise related in cod (loops g = g' force each image to be a clique).
    for (int g = 0; g < m.dom_->size(); ++g) {
        const Bitset& nb = m.dom_->closed_nbhd(g);
        for (int g2 = nb.first(); g2 >= 0; g2 = nb.next(g2)) {
            if (g2 < g) continue;
            for (int h = m.cols_[g].first(); h >= 0; h = m.cols_[g].next(h)) {
                Bitset bad = m.cols_[g2] - m.cod_->closed_nbhd(h);
                if (bad.any()) {
                    EdgePreservationViolation w{h, g, g2, bad.first()};
                    throw MorphismError(violation_message(*m.dom_, *m.cod_, w));
                }
            }
        }
    }
    return m;
}

Morphism Morphism::make_indexed(std::shared_ptr<const Graph> dom,
                                std::shared_ptr<const Graph> cod,
                                const std::vector<std::pair<int, int>>& cod_dom_pairs) {
    std::vector<Bitset> rows(cod->size(), Bitset(dom->size()));
    for (auto [h, g] : cod_dom_pairs) {
        if (h < 0 || h >= cod->size() || g < 0 || g >= dom->size())
            throw MorphismError("relation pair index out of range");
        rows[h].set(g);
    }
    return from_rows(std::move(dom), std::move(cod), std::move(rows));
}

Morphism Morphism::make(const Graph& dom, const Graph& cod,
                        const std::vector<std::pair<std::string, std::string>>& cod_dom_pairs) {
    auto dp = std::make_shared<const Graph>(dom);
    auto cp = std::make_shared<const Graph>(cod);
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(cod_dom_pairs.size());
    for (const auto& [h, g] : cod_dom_pairs)
        pairs.emplace_back(cp->index_or_throw(h), dp->index_or_throw(g));
    return make_indexed(dp, cp, pairs);
}

Morphism Morphism::identity(std::shared_ptr<const Graph> g) {
    std::vector<Bitset> rows(g->size(), Bitset(g->size()));
    for (int i = 0; i < g->size(); ++i) rows[i].set(i);
    return from_rows(g, g, std::move(rows));
}

Morphism Morphism::identity(const Graph& g) {
    return identity(std::make_shared<const Graph>(g));
}

Bitset Morphism::preimage(const Bitset& cod_set) const {
    Bitset out(dom_->size());
    for (int h = cod_set.first(); h >= 0; h = cod_set.next(h)) out |= rows_[h];
    return out;
}

Bitset Morphism::image(const Bitset& dom_set) const {
    Bitset out(cod_->size());
    for (int g = dom_set.first(); g >= 0; g = dom_set.next(g)) out |= cols_[g];
    return out;
}

Bitset Morphism::strict_preimage(const Bitset& cod_set) const {
    Bitset out(dom_->size());
    for (int g = 0; g < dom_->size(); ++g)
        if (cols_[g] == cod_set) out.set(g);
    return out;
}

Bitset Morphism::sub_preimage(const Bitset& cod_set) const {
    Bitset out(dom_->size());
    for (int g = 0; g < dom_->size(); ++g)
        if (cols_[g].is_subset_of(cod_set)) out.set(g);
    return out;
}

Bitset Morphism::edge_preimage(const Bitset& cod_set) const {
    Bitset out(dom_->size());
    for (int f = 0; f < dom_->size(); ++f) {
        const Bitset& nb = dom_->closed_nbhd(f);
        for (int g = nb.first(); g >= 0; g = nb.next(g)) {
            if (g < f) continue;
            if ((cols_[f] | cols_[g]) == cod_set) {
                out.set(f);
                out.set(g);
            }
        }
    }
    return out;
}

Bitset Morphism::fibers(const Bitset& s, FiberKind kind) const {
    switch (kind) {
        case FiberKind::Preimage: return preimage(s);
        case FiberKind::Image: return image(s);
        case FiberKind::Strict: return strict_preimage(s);
        case FiberKind::Sub: return sub_preimage(s);
        case FiberKind::Edge: return edge_preimage(s);
    }
    throw MorphismError("bad fiber kind");
}

int Morphism::pair_count() const {
    int c = 0;
    for (const auto& r : rows_) c += r.count();
    return c;
}

std::vector<std::pair<int, int>> Morphism::pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int h = 0; h < cod_->size(); ++h)
        for (int g = rows_[h].first(); g >= 0; g = rows_[h].next(g))
            out.emplace_back(h, g);
    return out;
}

bool Morphism::same_shape(const Morphism& o) const {
    return *dom_ == *o.dom_ && *cod_ == *o.cod_;
}

bool Morphism::operator==(const Morphism& o) const {
    return same_shape(o) && rows_ == o.rows_;
}

bool Morphism::subrelation_of(const Morphism& o) const {
    if (!same_shape(o)) return false;
    for (int h = 0; h < cod_->size(); ++h)
        if (!rows_[h].is_subset_of(o.rows_[h])) return false;
    return true;
}

namespace {

// Enumerates connected non-empty subsets of g; stops early once visit
// returns false. Each subset is produced exactly once.
bool scan_connected_subsets(const Graph& g, const std::function<bool(const Bitset&)>& visit) {
    const int n = g.size();
    std::function<bool(Bitset&, Bitset&)> rec = [&](Bitset& s, Bitset& excluded) -> bool {
        if (!visit(s)) return false;
        Bitset border(n);
        for (int v = s.first(); v >= 0; v = s.next(v)) border |= g.closed_nbhd(v);
        border -= s;
        border -= excluded;
        std::vector<int> cand = border.to_vector();
        Bitset local_excluded = excluded;
        for (int u : cand) {
            s.set(u);
            if (!rec(s, local_excluded)) return false;
            s.reset(u);
            local_excluded.set(u);
        }
        return true;
    };
    Bitset excluded(n);
    for (int v = 0; v < n; ++v) {
        Bitset s(n);
        s.set(v);
        if (!rec(s, excluded)) return false;
        excluded.set(v);
    }
    return true;
}

} // namespace

bool Morphism::compute(MorphProperty p) const {
    const Graph& D = *dom_;
    const Graph& C = *cod_;
    switch (p) {
        case MorphProperty::Function: {
            for (int g = 0; g < D.size(); ++g)
                if (cols_[g].count() != 1) return false;
            return true;
        }
        case MorphProperty::Surjective: {
            for (int h = 0; h < C.size(); ++h)
                if (rows_[h].none()) return false;
            return true;
        }
        case MorphProperty::Injective: {
            Bitset witnessed(D.size());
            for (int h = 0; h < C.size(); ++h)
                if (rows_[h].count() == 1) witnessed.set(rows_[h].first());
            return witnessed.count() == D.size();
        }
        case MorphProperty::CoSurjective: {
            for (int g = 0; g < D.size(); ++g)
                if (cols_[g].none()) return false;
            return true;
        }
        case MorphProperty::CoInjective: {
            Bitset witnessed(C.size());
            for (int g = 0; g < D.size(); ++g)
                if (cols_[g].count() == 1) witnessed.set(cols_[g].first());
            return witnessed.count() == C.size();
        }
        case MorphProperty::CoBijective:
            return check(MorphProperty::CoSurjective) && check(MorphProperty::CoInjective);
        case MorphProperty::EdgeSurjective: {
            // h ⊓ h' needs related preimages; loops h = h' included.
            for (int h = 0; h < C.size(); ++h) {
                const Bitset& hp = rows_[h];
                const Bitset& nb = C.closed_nbhd(h);
                for (int h2 = nb.first(); h2 >= 0; h2 = nb.next(h2)) {
                    bool found = false;
                    for (int g = hp.first(); g >= 0 && !found; g = hp.next(g))
                        found = D.closed_nbhd(g).intersects(rows_[h2]);
                    if (!found) return false;
                }
            }
            return true;
        }
        case MorphProperty::EdgeWitnessing: {
            for (int h = 0; h < C.size(); ++h) {
                const Bitset& nb = C.closed_nbhd(h);
                for (int h2 = nb.first(); h2 >= 0; h2 = nb.next(h2))
                    if (!rows_[h].intersects(rows_[h2])) return false;
            }
            return true;
        }
        case MorphProperty::AntiInjective: {
            for (int h = 0; h < C.size(); ++h)
                if (rows_[h].count() < 2) return false;
            return true;
        }
        case MorphProperty::StrictlyAntiInjective: {
            std::vector<int> strict(C.size(), 0);
            for (int g = 0; g < D.size(); ++g)
                if (cols_[g].count() == 1) ++strict[cols_[g].first()];
            for (int h = 0; h < C.size(); ++h)
                if (strict[h] < 2) return false;
            return true;
        }
        case MorphProperty::StarRefining: {
            for (int g = 0; g < D.size(); ++g) {
                const Bitset& star = D.closed_nbhd(g);
                bool ok = false;
                for (int h = 0; h < C.size() && !ok; ++h)
                    ok = star.is_subset_of(rows_[h]);
                if (!ok) return false;
            }
            return true;
        }
        case MorphProperty::CoEdgeWitnessing: {
            for (int f = 0; f < D.size(); ++f) {
                const Bitset& nb = D.closed_nbhd(f);
                for (int g = nb.first(); g >= 0; g = nb.next(g))
                    if (!cols_[f].intersects(cols_[g])) return false;
            }
            return true;
        }
        case MorphProperty::Monotone: {
            if (check(MorphProperty::EdgeSurjective)) {
                // Vertex preimages connected suffice under edge-surjectivity.
                for (int h = 0; h < C.size(); ++h)
                    if (!connected_within(D, rows_[h])) return false;
                return true;
            }
            return scan_connected_subsets(C, [&](const Bitset& s) {
                return connected_within(D, preimage(s));
            });
        }
        case MorphProperty::EdgeReflective: {
            for (int h = 0; h < C.size(); ++h) {
                const Bitset& nb = C.closed_nbhd(h);
                for (int h2 = nb.first(); h2 >= 0; h2 = nb.next(h2)) {
                    if (h2 == h) continue;
                    Bitset single(C.size());
                    single.set(h);
                    Bitset strict = strict_preimage(single);
                    int count = 0;
                    for (int g = strict.first(); g >= 0; g = strict.next(g))
                        count += (D.closed_nbhd(g) & rows_[h2]).count();
                    if (count != 1) return false;
                }
            }
            return true;
        }
    }
    throw MorphismError("bad property");
}

bool Morphism::check(MorphProperty p) const {
    auto& cell = (*cache_)[int(p)];
    signed char v = cell.load(std::memory_order_relaxed);
    if (v < 0) {
        v = compute(p) ? 1 : 0;
        cell.store(v, std::memory_order_relaxed);
    }
    return v == 1;
}

bool Morphism::in(const std::vector<MorphProperty>& props) const {
    for (auto p : props)
        if (!check(p)) return false;
    return true;
}

Morphism compose(const Morphism& outer, const Morphism& inner) {
    if (outer.dom() != inner.cod()) throw MorphismError("composition domain mismatch");
    std::vector<Bitset> rows(outer.cod().size(), Bitset(inner.dom().size()));
    for (int a = 0; a < outer.cod().size(); ++a) {
        const Bitset& mid = outer.row(a);
        for (int b = mid.first(); b >= 0; b = mid.next(b)) rows[a] |= inner.row(b);
    }
    return Morphism::from_rows(inner.dom_ptr(), outer.cod_ptr(), std::move(rows));
}

Morphism restrict(const Morphism& m, const Bitset& dom_sub, const Bitset& cod_sub) {
    if (dom_sub.none() || cod_sub.none())
        throw MorphismError("restriction subsets must be non-empty");
    auto dom = std::make_shared<const Graph>(m.dom().induced(dom_sub));
    auto cod = std::make_shared<const Graph>(m.cod().induced(cod_sub));
    std::vector<int> dkeep = dom_sub.to_vector(), ckeep = cod_sub.to_vector();
    std::vector<Bitset> rows(ckeep.size(), Bitset(int(dkeep.size())));
    for (int hi = 0; hi < int(ckeep.size()); ++hi)
        for (int gi = 0; gi < int(dkeep.size()); ++gi)
            if (m.rel(ckeep[hi], dkeep[gi])) rows[hi].set(gi);
    return Morphism::from_rows(dom, cod, std::move(rows));
}

Morphism relation_union(const Morphism& a, const Morphism& b) {
    if (!a.same_shape(b)) throw MorphismError("relation union shape mismatch");
    std::vector<Bitset> rows;
    rows.reserve(a.cod().size());
    for (int h = 0; h < a.cod().size(); ++h) rows.push_back(a.row(h) | b.row(h));
    return Morphism::from_rows(a.dom_ptr(), a.cod_ptr(), std::move(rows));
}

EdgeSplit edge_split(const Graph& g) {
    std::vector<std::string> labels = g.labels();
    std::vector<std::pair<int, int>> edges;
    // Per non-loop edge u ~ v two fresh vertices s(u,v), s(v,u) forming the
    // 3-edge path u - s(u,v) - s(v,u) - v; original edges are dropped.
    std::vector<std::pair<int, int>> rel;
    for (int v = 0; v < g.size(); ++v) rel.emplace_back(v, v);
    for (auto [u, v] : g.edge_list()) {
        int suv = int(labels.size());
        labels.push_back("s(" + g.label(u) + "," + g.label(v) + ")");
        int svu = int(labels.size());
        labels.push_back("s(" + g.label(v) + "," + g.label(u) + ")");
        edges.emplace_back(u, suv);
        edges.emplace_back(suv, svu);
        edges.emplace_back(svu, v);
        rel.emplace_back(u, suv);
        rel.emplace_back(v, suv);
        rel.emplace_back(u, svu);
        rel.emplace_back(v, svu);
    }
    Graph h = Graph::make_indexed(std::move(labels), edges);
    auto hp = std::make_shared<const Graph>(h);
    auto gp = std::make_shared<const Graph>(g);
    Morphism m = Morphism::make_indexed(hp, gp, rel);
    return EdgeSplit{std::move(h), std::move(m)};
}

ConsolidationRealisation consolidation_realisation(const Morphism& m) {
    if (!m.check(MorphProperty::CoSurjective))
        throw MorphismError("consolidation realisation requires a co-surjective morphism");
    if (!m.check(MorphProperty::EdgeSurjective))
        throw MorphismError("consolidation realisation requires an edge-surjective morphism");
    ConsolidationRealisation out;
    out.dom_realisation = overlap_realisation(m.dom());
    out.cod_realisation.resize(m.cod().size());
    for (int h = 0; h < m.cod().size(); ++h) {
        std::set<RealisationElem> acc;
        const Bitset& below = m.row(h);
        for (int g = below.first(); g >= 0; g = below.next(g))
            acc.insert(out.dom_realisation[g].begin(), out.dom_realisation[g].end());
        out.cod_realisation[h].assign(acc.begin(), acc.end());
    }
    return out;
}

bool is_consolidation_realisation(const Morphism& m, const ConsolidationRealisation& r) {
    const auto& s = r.dom_realisation;
    const auto& t = r.cod_realisation;
    if (!realisation_is_overlap(m.dom(), s)) return false;
    if (!realisation_is_overlap(m.cod(), t)) return false;
    auto subset = [](const std::vector<RealisationElem>& a, const std::vector<RealisationElem>& b) {
        return std::includes(b.begin(), b.end(), a.begin(), a.end());
    };
    for (int g = 0; g < m.dom().size(); ++g) {
        bool refined = false;
        for (int h = 0; h < m.cod().size(); ++h) {
            if (m.rel(h, g) != subset(s[g], t[h])) return false;
            refined |= subset(s[g], t[h]);
        }
        if (!refined) return false;
    }
    // Every cod family member must be the union of the dom members below it.
    for (int h = 0; h < m.cod().size(); ++h) {
        std::set<RealisationElem> uni;
        for (int g = 0; g < m.dom().size(); ++g)
            if (subset(s[g], t[h])) uni.insert(s[g].begin(), s[g].end());
        if (!std::equal(uni.begin(), uni.end(), t[h].begin(), t[h].end()) ||
            uni.size() != t[h].size())
            return false;
    }
    return true;
}

} // namespace specgraph
