#include "specgraph/poset.hpp"

#include <algorithm>
#include <functional>

namespace specgraph {

bool leq(const Sequence& s, PosetElement p, PosetElement q) {
    if (q.level > p.level) return false;
    return s.composite(q.level, p.level).rel(q.vertex, p.vertex);
}

bool wedge_exists(const Sequence& s, PosetElement p, PosetElement q) {
    const int N = s.last_level();
    for (int n = std::max(p.level, q.level); n <= N; ++n) {
        Bitset below = s.composite(p.level, n).row(p.vertex);
        below &= s.composite(q.level, n).row(q.vertex);
        if (below.any()) return true;
    }
    return false;
}

Verdict wedge(const Sequence& s, PosetElement p, PosetElement q, int horizon) {
    horizon = std::min(horizon, s.last_level());
    for (int n = std::max(p.level, q.level); n <= horizon; ++n) {
        Bitset below = s.composite(p.level, n).row(p.vertex);
        below &= s.composite(q.level, n).row(q.vertex);
        if (below.any()) {
            int r = below.first();
            return Verdict::holds({{"level", n}, {"vertex", s.graph(n).label(r)}}, horizon);
        }
    }
    // Any bound r ≤ p,q would lift to an ancestor of the deeper element at
    // the shallower level that is edge-related to the other element.
    PosetElement deep = p.level >= q.level ? p : q;
    PosetElement shallow = p.level >= q.level ? q : p;
    Bitset anc = s.composite(shallow.level, deep.level).col(deep.vertex);
    if (!anc.intersects(s.graph(shallow.level).closed_nbhd(shallow.vertex))) {
        return Verdict::fails({{"note", "no ancestor of the deeper element is adjacent to the other"},
                               {"level", shallow.level}},
                              horizon);
    }
    return Verdict::unknown(horizon);
}

std::vector<Thread> enumerate_threads(const Sequence& s, int depth) {
    if (depth < 0 || depth > s.last_level()) throw SequenceError("thread depth out of range");
    std::vector<Thread> out;
    Thread cur;
    std::function<void()> rec = [&] {
        int k = int(cur.size()) - 1;
        if (k == depth) {
            out.push_back(cur);
            return;
        }
        const Bitset& children = s.step(k).row(cur.back());
        for (int c = children.first(); c >= 0; c = children.next(c)) {
            cur.push_back(c);
            rec();
            cur.pop_back();
        }
    };
    for (int v = 0; v < s.graph(0).size(); ++v) {
        cur.assign(1, v);
        rec();
    }
    return out;
}

std::vector<PosetElement> thread_upset(const Sequence& s, const Thread& t) {
    if (t.empty() || int(t.size()) > s.levels()) throw SequenceError("thread does not fit the prefix");
    const int d = int(t.size()) - 1;
    std::vector<PosetElement> out;
    for (int k = 0; k <= d; ++k) {
        Bitset anc = s.composite(k, d).col(t[d]);
        for (int g = anc.first(); g >= 0; g = anc.next(g)) out.push_back({k, g});
    }
    return out;
}

std::vector<Thread> minimal_selectors(const Sequence& s, int depth) {
    if (!s.surjective_prefix())
        throw SequenceError("minimal selectors require a surjective sequence");
    std::vector<Thread> threads = enumerate_threads(s, depth);
    // Upsets as one bitset per level for fast inclusion tests.
    std::vector<std::vector<Bitset>> upsets;
    upsets.reserve(threads.size());
    for (const auto& t : threads) {
        std::vector<Bitset> u;
        for (int k = 0; k <= depth; ++k) u.push_back(s.composite(k, depth).col(t[depth]));
        upsets.push_back(std::move(u));
    }
    auto subset = [&](int a, int b) {
        for (int k = 0; k <= depth; ++k)
            if (!upsets[a][k].is_subset_of(upsets[b][k])) return false;
        return true;
    };
    std::vector<Thread> out;
    for (size_t i = 0; i < threads.size(); ++i) {
        bool minimal = true, duplicate = false;
        for (size_t j = 0; j < threads.size() && minimal; ++j) {
            if (i == j) continue;
            if (subset(int(j), int(i))) {
                if (subset(int(i), int(j))) {
                    if (j < i) duplicate = true; // equal upsets: keep first
                } else {
                    minimal = false;
                }
            }
        }
        if (minimal && !duplicate) out.push_back(threads[i]);
    }
    return out;
}

Verdict is_cap(const Sequence& s, const std::vector<PosetElement>& cap, int horizon) {
    horizon = std::min(horizon, s.last_level());
    for (const auto& e : cap)
        if (e.level < 0 || e.level > s.last_level() || e.vertex < 0 ||
            e.vertex >= s.graph(e.level).size())
            throw SequenceError("cap element out of range");

    for (int n = 0; n <= horizon; ++n) {
        bool refines = true;
        for (int g = 0; g < s.graph(n).size() && refines; ++g) {
            bool below = false;
            for (const auto& e : cap) {
                if (e.level > n) continue;
                if (s.composite(e.level, n).rel(e.vertex, g)) {
                    below = true;
                    break;
                }
            }
            refines = below;
        }
        if (refines) return Verdict::holds({{"refining_level", n}}, horizon);
    }

    // Avoiding thread: upset disjoint from the cap, strict-singleton steps
    // after the cap's deepest level.
    int cap_depth = 0;
    for (const auto& e : cap) cap_depth = std::max(cap_depth, e.level);
    std::vector<Bitset> cap_mask;
    for (int n = 0; n <= s.last_level(); ++n) {
        Bitset m(s.graph(n).size());
        cap_mask.push_back(m);
    }
    for (const auto& e : cap) cap_mask[e.level].set(e.vertex);

    for (const auto& t : enumerate_threads(s, s.last_level())) {
        const int d = s.last_level();
        bool avoids = true;
        for (int k = 0; k <= d && avoids; ++k)
            avoids = !s.composite(k, d).col(t[d]).intersects(cap_mask[k]);
        if (!avoids) continue;
        bool strict_tail = true;
        for (int k = cap_depth; k < d && strict_tail; ++k) {
            Bitset single(s.graph(k).size());
            single.set(t[k]);
            strict_tail = s.step(k).strict_preimage(single).test(t[k + 1]);
        }
        if (strict_tail) {
            nlohmann::json tj = nlohmann::json::array();
            for (int k = 0; k <= d; ++k) tj.push_back(s.graph(k).label(t[k]));
            return Verdict::fails({{"avoiding_thread", tj}}, horizon);
        }
    }
    return Verdict::unknown(horizon);
}

bool star_below(const Sequence& s, PosetElement p, PosetElement q, int via_level) {
    if (via_level < p.level || via_level > s.last_level())
        throw SequenceError("star level out of range");
    for (int r = 0; r < s.graph(via_level).size(); ++r) {
        if (!wedge_exists(s, {via_level, r}, p)) continue;
        if (!leq(s, {via_level, r}, q)) return false;
    }
    return true;
}

namespace {

Verdict connectedness_verdict(const Sequence& s, int horizon) {
    for (int n = 0; n <= horizon; ++n)
        if (components(s.graph(n)).size() != 1)
            return Verdict::fails({{"disconnected_level", n}}, horizon);
    for (const char* shape : {"path", "tree", "fan", "cycle", "connected"})
        if (s.has_guarantee(GuaranteeKind::Shape, shape))
            return Verdict::holds({{"note", std::string("prefix connected; shape guarantee: ") + shape}},
                                  horizon);
    return Verdict::unknown(horizon, {{"note", "prefix connected; no shape guarantee"}});
}

} // namespace

nlohmann::json SpectrumReport::to_json() const {
    return {{"connected", connected.to_json()},
            {"hausdorff", hausdorff.to_json()},
            {"perfect", perfect.to_json()},
            {"treeLike", tree_like.to_json()},
            {"hereditarilyUnicoherent", hereditarily_unicoherent.to_json()},
            {"coBijectivePrefix", co_bijective_prefix},
            {"horizon", horizon}};
}

SpectrumReport spectrum_report(const Sequence& s, int horizon) {
    horizon = std::min(horizon, s.last_level());
    SpectrumReport r;
    r.horizon = horizon;
    r.co_bijective_prefix = true;
    for (const auto& st : s.steps())
        r.co_bijective_prefix &= st.check(MorphProperty::CoBijective);

    r.connected = connectedness_verdict(s, horizon);
    r.hausdorff = has_subsequence_in(s, IdealProperty::StarRefining, horizon);
    r.perfect = has_subsequence_in(s, IdealProperty::AntiInjective, horizon);

    bool trees_prefix = true;
    for (int n = 0; n <= horizon && trees_prefix; ++n) trees_prefix = classify(s.graph(n)).tree;
    Verdict shape = Verdict::unknown(horizon, {{"note", "prefix graphs are not all trees"}});
    if (trees_prefix) {
        bool tail = s.has_guarantee(GuaranteeKind::Shape, "tree") ||
                    s.has_guarantee(GuaranteeKind::Shape, "path") ||
                    s.has_guarantee(GuaranteeKind::Shape, "fan");
        shape = tail ? Verdict::holds({{"note", "all levels are trees"}}, horizon)
                     : Verdict::unknown(horizon, {{"note", "prefix graphs are trees; no tail guarantee"}});
    }
    Verdict witnessing = has_subsequence_in(s, IdealProperty::EdgeWitnessing, horizon);
    r.tree_like = combine_pessimistic({{"trees", shape},
                                       {"connected", r.connected},
                                       {"edge_witnessing_subsequence", witnessing},
                                       {"star_refining_subsequence", r.hausdorff}},
                                      horizon);
    r.hereditarily_unicoherent = r.tree_like;
    return r;
}

} // namespace specgraph
