#include "specgraph/sequence.hpp"

#include <algorithm>

namespace specgraph {

Sequence Sequence::make(std::vector<std::shared_ptr<const Graph>> graphs,
                        std::vector<Morphism> steps) {
    if (graphs.empty()) throw SequenceError("sequence needs at least one graph");
    if (steps.size() + 1 != graphs.size())
        throw SequenceError("sequence needs exactly one step per consecutive level pair");
    for (size_t n = 0; n < steps.size(); ++n) {
        if (steps[n].cod() != *graphs[n] || steps[n].dom() != *graphs[n + 1])
            throw SequenceError("step " + std::to_string(n) + " does not match the level chain");
        if (!steps[n].check(MorphProperty::CoSurjective))
            throw SequenceError("step " + std::to_string(n) + " is not co-surjective");
    }
    Sequence s;
    s.graphs_ = std::move(graphs);
    s.steps_ = std::move(steps);
    s.cache_ = std::make_shared<Cache>();
    return s;
}

Sequence Sequence::make(const std::vector<Graph>& graphs, std::vector<Morphism> steps) {
    std::vector<std::shared_ptr<const Graph>> ptrs;
    ptrs.reserve(graphs.size());
    for (const auto& g : graphs) ptrs.push_back(std::make_shared<const Graph>(g));
    return make(std::move(ptrs), std::move(steps));
}

const Morphism& Sequence::composite(int m, int n) const {
    if (m < 0 || n < m || n > last_level()) throw SequenceError("composite levels out of range");
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto key = std::make_pair(m, n);
    auto it = cache_->comp.find(key);
    if (it != cache_->comp.end()) return it->second;
    Morphism c = Morphism::identity(graphs_[m]);
    for (int k = m; k < n; ++k) c = compose(c, steps_[k]);
    return cache_->comp.emplace(key, std::move(c)).first->second;
}

bool Sequence::surjective_prefix() const {
    for (const auto& st : steps_)
        if (!st.check(MorphProperty::Surjective)) return false;
    return true;
}

bool Sequence::has_guarantee(GuaranteeKind kind, std::string_view prop, int stride) const {
    for (const auto& g : guarantees)
        if (g.kind == kind && g.prop == prop && (kind != GuaranteeKind::StrideProperty || g.stride == stride))
            return true;
    return false;
}

Sequence subsequence(const Sequence& s, const std::vector<int>& phi) {
    if (phi.empty()) throw SequenceError("subsequence index list must be non-empty");
    for (size_t i = 0; i < phi.size(); ++i) {
        if (phi[i] < 0 || phi[i] > s.last_level()) throw SequenceError("subsequence index out of range");
        if (i > 0 && phi[i] <= phi[i - 1]) throw SequenceError("subsequence indices must be strictly increasing");
    }
    std::vector<std::shared_ptr<const Graph>> graphs;
    std::vector<Morphism> steps;
    for (size_t i = 0; i < phi.size(); ++i) {
        graphs.push_back(s.graph_ptr(phi[i]));
        if (i > 0) steps.push_back(s.composite(phi[i - 1], phi[i]));
    }
    Sequence out = Sequence::make(std::move(graphs), std::move(steps));
    out.provenance = s.provenance + "/subsequence";
    for (const auto& g : s.guarantees)
        if (g.kind == GuaranteeKind::Shape || g.kind == GuaranteeKind::NoCompositeHas)
            out.guarantees.push_back(g);
    return out;
}

namespace {

const char* kIdealNames[] = {
    "anti-injective", "strictly-anti-injective", "star-refining",
    "edge-witnessing", "end-dense", "end-splitting",
};

bool end_dense(const Morphism& m) {
    Bitset dom_ends = ends(m.dom());
    for (int h = 0; h < m.cod().size(); ++h)
        if (!m.row(h).intersects(dom_ends)) return false;
    return true;
}

bool end_splitting(const Morphism& m) {
    Bitset dom_ends = ends(m.dom());
    Bitset cod_ends = ends(m.cod());
    for (int e = cod_ends.first(); e >= 0; e = cod_ends.next(e))
        if ((m.row(e) & dom_ends).count() < 2) return false;
    return true;
}

} // namespace

const char* to_string(IdealProperty p) { return kIdealNames[int(p)]; }

std::optional<IdealProperty> ideal_property_from_string(std::string_view name) {
    for (int i = 0; i < 6; ++i)
        if (name == kIdealNames[i]) return IdealProperty(i);
    return std::nullopt;
}

bool check_ideal_property(const Morphism& m, IdealProperty p) {
    switch (p) {
        case IdealProperty::AntiInjective: return m.check(MorphProperty::AntiInjective);
        case IdealProperty::StrictlyAntiInjective:
            return m.check(MorphProperty::StrictlyAntiInjective);
        case IdealProperty::StarRefining: return m.check(MorphProperty::StarRefining);
        case IdealProperty::EdgeWitnessing: return m.check(MorphProperty::EdgeWitnessing);
        case IdealProperty::EndDense: return end_dense(m);
        case IdealProperty::EndSplitting: return end_splitting(m);
    }
    throw SequenceError("bad ideal property");
}

Verdict has_subsequence_in(const Sequence& s, IdealProperty p, int horizon) {
    horizon = std::min(horizon, s.last_level());
    nlohmann::json witness_map = nlohmann::json::object();
    for (int m = 0; m < horizon; ++m) {
        int found = -1;
        for (int n = m; n <= horizon && found < 0; ++n)
            if (check_ideal_property(s.composite(m, n), p)) found = n;
        if (found < 0) {
            nlohmann::json w{{"level_without_witness", m}};
            if (s.has_guarantee(GuaranteeKind::NoCompositeHas, to_string(p))) {
                for (const auto& g : s.guarantees)
                    if (g.kind == GuaranteeKind::NoCompositeHas && g.prop == to_string(p))
                        w["guarantee"] = g.note;
                return Verdict::fails(std::move(w), horizon);
            }
            return Verdict::unknown(horizon, std::move(w));
        }
        witness_map[std::to_string(m)] = found;
    }
    return Verdict::holds({{"witness_map", witness_map}}, horizon);
}

namespace {

// Does a guarantee certify `prop` for all one-step morphisms beyond the prefix?
bool guarantee_implies_step(const Sequence& s, MorphProperty prop) {
    auto has = [&](const char* name) {
        return s.has_guarantee(GuaranteeKind::StepProperty, name);
    };
    switch (prop) {
        case MorphProperty::EdgeSurjective:
            return has("edge-surjective") || has("edge-witnessing") ||
                   (has("monotone") && (has("co-bijective") || has("co-injective")));
        case MorphProperty::CoSurjective:
            return has("co-surjective") || has("co-bijective") || has("star-refining");
        case MorphProperty::CoInjective:
        case MorphProperty::Surjective:
            return has("co-injective") || has("co-bijective");
        case MorphProperty::CoBijective:
            return has("co-bijective");
        default:
            return has(to_string(prop));
    }
}

} // namespace

Verdict is_edge_faithful(const Sequence& s, int horizon) {
    if (!s.surjective_prefix()) throw SequenceError("edge-faithfulness requires a surjective sequence");
    horizon = std::min(horizon, s.last_level());

    Verdict preserving = Verdict::holds({{"note", "edge-preservation is enforced at construction"}}, horizon);

    Verdict surj = Verdict::unknown(horizon);
    {
        int bad = -1;
        for (int n = 0; n < horizon && bad < 0; ++n)
            if (!s.step(n).check(MorphProperty::EdgeSurjective)) bad = n;
        if (bad >= 0)
            surj = Verdict::fails({{"step", bad}}, horizon);
        else if (guarantee_implies_step(s, MorphProperty::EdgeSurjective))
            surj = Verdict::holds({{"note", "all prefix steps edge-surjective; guaranteed beyond"}}, horizon);
        else
            surj = Verdict::unknown(horizon, {{"note", "prefix steps edge-surjective; no tail guarantee"}});
    }

    Verdict witnessing = has_subsequence_in(s, IdealProperty::EdgeWitnessing, horizon);

    return combine_pessimistic(
        {{"edge_preserving", preserving}, {"edge_surjective", surj}, {"edge_witnessing_subsequence", witnessing}},
        horizon);
}

namespace {

// Exact coherence of the restricted family: the restriction of every
// composite must equal the composition of the restricted steps. Returns a
// witness pair on failure.
std::optional<nlohmann::json> coherence_witness(const Sequence& s,
                                                const std::vector<Bitset>& subsets,
                                                const std::vector<Morphism>& restricted_steps) {
    const int N = s.last_level();
    for (int m = 0; m + 2 <= N; ++m) {
        Morphism chain = restricted_steps[m];
        for (int n = m + 2; n <= N; ++n) {
            chain = compose(chain, restricted_steps[n - 1]);
            Morphism direct = restrict(s.composite(m, n), subsets[n], subsets[m]);
            if (!(direct == chain)) {
                for (int h = 0; h < direct.cod().size(); ++h) {
                    Bitset diff = direct.row(h) - chain.row(h);
                    if (diff.any()) {
                        int g = diff.first();
                        return nlohmann::json{
                            {"upper_level", m},
                            {"lower_level", n},
                            {"upper_vertex", direct.cod().label(h)},
                            {"lower_vertex", direct.dom().label(g)},
                            {"note", "related through the full sequence but not through the restricted levels"}};
                    }
                }
            }
        }
    }
    return std::nullopt;
}

} // namespace

std::variant<Sequence, LaxSequence> upper_restriction(const Sequence& s,
                                                      const std::vector<Bitset>& subsets) {
    if (int(subsets.size()) != s.levels())
        throw SequenceError("need one subset per level");
    for (int n = 0; n < s.levels(); ++n)
        if (subsets[n].none()) throw SequenceError("restriction subsets must be non-empty");

    std::vector<Morphism> rsteps;
    bool cosurjective = true;
    for (int n = 0; n + 1 < s.levels(); ++n) {
        rsteps.push_back(restrict(s.step(n), subsets[n + 1], subsets[n]));
        cosurjective &= rsteps.back().check(MorphProperty::CoSurjective);
    }

    std::optional<nlohmann::json> bad;
    if (cosurjective) bad = coherence_witness(s, subsets, rsteps);

    if (cosurjective && !bad) {
        std::vector<std::shared_ptr<const Graph>> graphs;
        if (rsteps.empty()) {
            graphs.push_back(std::make_shared<const Graph>(s.graph(0).induced(subsets[0])));
        } else {
            graphs.push_back(rsteps[0].cod_ptr());
            for (const auto& st : rsteps) graphs.push_back(st.dom_ptr());
        }
        Sequence out = Sequence::make(std::move(graphs), std::move(rsteps));
        out.provenance = s.provenance + "/restriction";
        return out;
    }

    LaxSequence lax;
    if (rsteps.empty()) {
        lax.graphs.push_back(std::make_shared<const Graph>(s.graph(0).induced(subsets[0])));
    } else {
        lax.graphs.push_back(rsteps[0].cod_ptr());
        for (const auto& st : rsteps) lax.graphs.push_back(st.dom_ptr());
    }
    for (int m = 0; m < s.levels(); ++m)
        for (int n = m; n < s.levels(); ++n)
            lax.rels.emplace(std::make_pair(m, n), restrict(s.composite(m, n), subsets[n], subsets[m]));
    lax.coherence_witness = bad ? *bad
                                : nlohmann::json{{"note", "a restricted step is not co-surjective"}};
    return lax;
}

Sequence surjective_core(const Sequence& s) {
    const int N = s.last_level();
    std::vector<Bitset> cores;
    bool full = true;
    for (int n = 0; n <= N; ++n) {
        Bitset all(s.graph(N).size());
        all.set_all();
        Bitset core = s.composite(n, N).image(all);
        full &= core.count() == s.graph(n).size();
        cores.push_back(std::move(core));
    }
    if (full) return s;
    auto restricted = upper_restriction(s, cores);
    Sequence out = std::get<Sequence>(std::move(restricted));
    out.provenance = s.provenance + "/surjective-core";
    out.horizon_approximate = true;
    return out;
}

bool dense_at_horizon(const Sequence& s, int m, const Bitset& subset) {
    const int N = s.last_level();
    const Morphism& c = s.composite(m, N);
    Bitset covered(s.graph(N).size());
    for (int v = subset.first(); v >= 0; v = subset.next(v)) covered |= c.row(v);
    return covered.count() == s.graph(N).size();
}

std::optional<Bitset> minimal_dense_subset(const Sequence& s, int m, const Bitset& within) {
    const int N = s.last_level();
    const Morphism& c = s.composite(m, N);
    const int target = s.graph(N).size();

    Bitset all_cov(target);
    for (int v = within.first(); v >= 0; v = within.next(v)) all_cov |= c.row(v);
    if (all_cov.count() != target) return std::nullopt;

    // Vertices covering some point no other candidate covers are forced.
    Bitset forced(s.graph(m).size());
    for (int x = 0; x < target; ++x) {
        int only = -1, cnt = 0;
        for (int v = within.first(); v >= 0 && cnt < 2; v = within.next(v))
            if (c.row(v).test(x)) {
                ++cnt;
                only = v;
            }
        if (cnt == 1) forced.set(only);
    }
    Bitset base_cov(target);
    for (int v = forced.first(); v >= 0; v = forced.next(v)) base_cov |= c.row(v);
    std::vector<int> free;
    for (int v = within.first(); v >= 0; v = within.next(v))
        if (!forced.test(v) && (c.row(v) - base_cov).any()) free.push_back(v);

    if (base_cov.count() == target) return forced;
    if (int(free.size()) > 24) return std::nullopt; // exhaustive search would be too large

    // Smallest k first; combinations in lexicographic index order, so the
    // first hit is the lexicographically least among minimum-cardinality ones.
    for (int k = 1; k <= int(free.size()); ++k) {
        std::vector<int> idx(k);
        for (int i = 0; i < k; ++i) idx[i] = i;
        while (true) {
            Bitset cov = base_cov;
            for (int i : idx) cov |= c.row(free[i]);
            if (cov.count() == target) {
                Bitset out = forced;
                for (int i : idx) out.set(free[i]);
                return out;
            }
            int i = k - 1;
            while (i >= 0 && idx[i] == int(free.size()) - k + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return std::nullopt; // unreachable: full free set covers
}

ModificationResult cobijective_modification(const Sequence& s) {
    if (!s.surjective_prefix())
        throw SequenceError("co-bijective modification requires a surjective sequence");
    const int N = s.last_level();

    std::vector<Bitset> chosen;
    for (int n = 0; n <= N; ++n) {
        Bitset within(s.graph(n).size());
        if (n == 0) {
            within.set_all();
        } else {
            within = s.step(n - 1).preimage(chosen[n - 1]);
        }
        auto sub = minimal_dense_subset(s, n, within);
        if (!sub) {
            ModificationResult r;
            r.status = ModificationResult::Status::Unknown;
            r.witness = {{"level", n}, {"note", "minimal dense subset undecidable at horizon"}};
            return r;
        }
        chosen.push_back(std::move(*sub));
    }

    std::vector<Morphism> rsteps;
    for (int n = 0; n < N; ++n) rsteps.push_back(restrict(s.step(n), chosen[n + 1], chosen[n]));
    if (auto bad = coherence_witness(s, chosen, rsteps)) {
        ModificationResult r;
        r.status = ModificationResult::Status::NoModification;
        r.witness = *bad;
        return r;
    }
    for (int n = 0; n < N; ++n)
        if (!rsteps[n].check(MorphProperty::CoBijective)) {
            ModificationResult r;
            r.status = ModificationResult::Status::Unknown;
            r.witness = {{"level", n}, {"note", "restricted step not co-bijective at horizon"}};
            return r;
        }

    std::vector<std::shared_ptr<const Graph>> graphs;
    if (rsteps.empty()) {
        graphs.push_back(std::make_shared<const Graph>(s.graph(0).induced(chosen[0])));
    } else {
        graphs.push_back(rsteps[0].cod_ptr());
        for (const auto& st : rsteps) graphs.push_back(st.dom_ptr());
    }
    ModificationResult r;
    r.status = ModificationResult::Status::Success;
    r.sequence = Sequence::make(std::move(graphs), std::move(rsteps));
    r.sequence->provenance = s.provenance + "/cobijective-modification";
    bool removed = false;
    for (int n = 0; n <= N; ++n) removed |= chosen[n].count() != s.graph(n).size();
    r.sequence->horizon_approximate = removed && !s.has_guarantee(GuaranteeKind::DensityStable, "");
    nlohmann::json kept = nlohmann::json::array();
    for (int n = 0; n <= N; ++n) {
        nlohmann::json level = nlohmann::json::array();
        for (int v = chosen[n].first(); v >= 0; v = chosen[n].next(v))
            level.push_back(s.graph(n).label(v));
        kept.push_back(level);
    }
    r.witness = {{"kept", kept}};
    return r;
}

Bitset trace(const Sequence& s, const std::vector<Thread>& threads, int n) {
    if (n < 0 || n > s.last_level()) throw SequenceError("trace level out of range");
    Bitset out(s.graph(n).size());
    for (const auto& t : threads) {
        if (t.empty() || int(t.size()) > s.levels())
            throw SequenceError("thread does not fit the prefix");
        int d = int(t.size()) - 1;
        if (d < n) throw SequenceError("thread shorter than the trace level");
        out |= s.composite(n, d).col(t[d]);
    }
    return out;
}

} // namespace specgraph
