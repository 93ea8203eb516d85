#include "specgraph/fan.hpp"

#include <algorithm>
#include <functional>

namespace specgraph {

FanStructure fan_structure(const Graph& g) {
    GraphClass c = classify(g);
    if (!c.fan) throw FanError("graph is not a fan");
    FanStructure f;
    f.root = c.fan_root;
    Bitset leaf = ends(g);
    std::vector<int> leaves = leaf.to_vector();
    std::sort(leaves.begin(), leaves.end(),
              [&](int a, int b) { return g.label(a) < g.label(b); });
    for (int e : leaves) {
        // walk from the end towards the root
        std::vector<int> walk{e};
        Bitset seen(g.size());
        seen.set(e);
        int cur = e;
        while (cur != f.root) {
            Bitset nb = g.nbhd(cur);
            nb -= seen;
            int nxt = nb.first();
            if (nxt < 0) throw FanError("fan walk failed");
            walk.push_back(nxt);
            seen.set(nxt);
            cur = nxt;
        }
        std::reverse(walk.begin(), walk.end());
        f.spokes.push_back(std::move(walk));
    }
    return f;
}

namespace {

const char* kFanPropNames[] = {"spoke-monotone", "end-preserving", "end-dense", "end-splitting"};

Bitset spoke_set(const Graph& g, const std::vector<int>& spoke) {
    Bitset b(g.size());
    for (int v : spoke) b.set(v);
    return b;
}

} // namespace

const char* to_string(FanProperty p) { return kFanPropNames[int(p)]; }

std::optional<FanProperty> fan_property_from_string(std::string_view name) {
    for (int i = 0; i < 4; ++i)
        if (name == kFanPropNames[i]) return FanProperty(i);
    return std::nullopt;
}

bool fan_check(const Morphism& m, FanProperty p) {
    FanStructure fd = fan_structure(m.dom());
    FanStructure fc = fan_structure(m.cod());
    switch (p) {
        case FanProperty::SpokeMonotone: {
            Bitset root_only(m.cod().size());
            root_only.set(fc.root);
            if (m.col(fd.root) != root_only) return false;
            for (const auto& spoke : fd.spokes) {
                Bitset sset = spoke_set(m.dom(), spoke);
                Bitset img = m.image(sset);
                bool ok = false;
                for (const auto& tspoke : fc.spokes) {
                    Bitset tset = spoke_set(m.cod(), tspoke);
                    if (!img.is_subset_of(tset)) continue;
                    Morphism r = restrict(m, sset, tset);
                    if (r.check(MorphProperty::Monotone)) {
                        ok = true;
                        break;
                    }
                }
                if (!ok) return false;
            }
            return true;
        }
        case FanProperty::EndPreserving: {
            Bitset cod_ends = ends(m.cod());
            Bitset dom_ends = ends(m.dom());
            for (int e = dom_ends.first(); e >= 0; e = dom_ends.next(e))
                if (!m.col(e).is_subset_of(cod_ends)) return false;
            return true;
        }
        case FanProperty::EndDense: {
            Bitset dom_ends = ends(m.dom());
            for (int h = 0; h < m.cod().size(); ++h)
                if (!m.row(h).intersects(dom_ends)) return false;
            return true;
        }
        case FanProperty::EndSplitting: {
            Bitset dom_ends = ends(m.dom());
            Bitset cod_ends = ends(m.cod());
            for (int e = cod_ends.first(); e >= 0; e = cod_ends.next(e))
                if ((m.row(e) & dom_ends).count() < 2) return false;
            return true;
        }
    }
    throw FanError("bad fan property");
}

SpokeTree tree_of_spokes(const Sequence& s) {
    SpokeTree t;
    for (int n = 0; n < s.levels(); ++n) t.levels.push_back(fan_structure(s.graph(n)));
    t.parent.resize(s.levels());
    if (s.levels() > 0) t.parent[0].assign(t.levels[0].spokes.size(), -1);
    for (int n = 1; n < s.levels(); ++n) {
        const auto& fs = t.levels[n];
        const auto& ps = t.levels[n - 1];
        t.parent[n].assign(fs.spokes.size(), -1);
        for (int i = 0; i < int(fs.spokes.size()); ++i) {
            Bitset img = s.step(n - 1).image(spoke_set(s.graph(n), fs.spokes[i]));
            Bitset root_only(s.graph(n - 1).size());
            root_only.set(ps.root);
            if (img == root_only) continue; // collapsed to the root: orphan
            for (int j = 0; j < int(ps.spokes.size()); ++j) {
                if (img.is_subset_of(spoke_set(s.graph(n - 1), ps.spokes[j]))) {
                    t.parent[n][i] = j;
                    break;
                }
            }
            if (t.parent[n][i] < 0) throw FanError("spoke image not within a spoke");
        }
    }
    return t;
}

std::vector<BranchOfSpokes> branches(const Sequence& s, int depth) {
    if (depth < 0 || depth > s.last_level()) throw FanError("branch depth out of range");
    SpokeTree t = tree_of_spokes(s);
    std::vector<BranchOfSpokes> out;
    // Chains in the spoke tree from any root (level-0 spoke or orphan) to depth.
    std::function<void(int, BranchOfSpokes&)> extend = [&](int level, BranchOfSpokes& b) {
        if (level == depth) {
            out.push_back(b);
            return;
        }
        int cur = b.spoke_index.back();
        for (int i = 0; i < int(t.levels[level + 1].spokes.size()); ++i) {
            if (t.parent[level + 1][i] != cur) continue;
            b.spoke_index.push_back(i);
            extend(level + 1, b);
            b.spoke_index.pop_back();
        }
    };
    for (int n0 = 0; n0 <= depth; ++n0) {
        for (int i = 0; i < int(t.levels[n0].spokes.size()); ++i) {
            if (n0 > 0 && t.parent[n0][i] >= 0) continue; // not a branch start
            if (n0 > 0) {
                // orphan: spokes below must collapse to the root, which the
                // parent computation already established
            }
            BranchOfSpokes b;
            b.start_level = n0;
            b.spoke_index.push_back(i);
            extend(n0, b);
        }
    }
    return out;
}

BranchAnalysis branch_analysis(const Sequence& s, const BranchOfSpokes& b, int horizon) {
    horizon = std::min(horizon, s.last_level());
    int depth = b.start_level + int(b.spoke_index.size()) - 1;
    if (depth > s.last_level()) throw FanError("branch does not fit the prefix");

    std::vector<int> phi;
    for (int n = 0; n <= depth; ++n) phi.push_back(n);
    std::vector<Bitset> subsets;
    SpokeTree t = tree_of_spokes(s);
    for (int n = 0; n <= depth; ++n) {
        if (n < b.start_level) {
            Bitset r(s.graph(n).size());
            r.set(t.levels[n].root);
            subsets.push_back(r);
        } else {
            subsets.push_back(spoke_set(s.graph(n),
                                        t.levels[n].spokes[b.spoke_index[n - b.start_level]]));
        }
    }
    Sequence prefix = depth == s.last_level() ? s : subsequence(s, phi);
    auto restricted = upper_restriction(prefix, subsets);
    if (!std::holds_alternative<Sequence>(restricted))
        throw FanError("branch restriction is not a sequence");

    BranchAnalysis out{surjective_core(std::get<Sequence>(restricted)), std::nullopt, std::nullopt,
                       false};
    auto mod = cobijective_modification(out.core);
    if (mod.status == ModificationResult::Status::Success) {
        out.modification = std::move(mod.sequence);
        const Sequence& m = *out.modification;
        int last = m.last_level();
        out.nondegenerate = m.graph(last).size() >= 2;
        if (out.nondegenerate) {
            // Endpoint thread: per level the end of the modification path
            // other than the root (the vertex farthest from it).
            Thread e;
            bool ok = true;
            for (int n = 0; n <= last && ok; ++n) {
                const Graph& g = m.graph(n);
                GraphClass c = classify(g);
                if (!c.path) {
                    ok = false;
                    break;
                }
                int root_of_level = -1;
                // the root of G_n need not be vertex 0 of the restricted graph;
                // find it by label
                root_of_level = g.index(s.graph(n).label(t.levels[n].root));
                if (root_of_level < 0) {
                    ok = false;
                    break;
                }
                std::vector<int> order = path_order(g);
                int endpoint = order.front() == root_of_level ? order.back() : order.front();
                if (g.size() > 1 && endpoint == root_of_level) ok = false;
                e.push_back(endpoint);
            }
            // validate the endpoint chain is a thread
            for (int n = 0; ok && n + 1 <= last; ++n)
                ok = m.step(n).rel(e[n], e[n + 1]);
            if (ok) out.endpoint_thread = std::move(e);
        }
    }
    return out;
}

FanClassification classify_fan_limit(const Sequence& s, int horizon) {
    horizon = std::min(horizon, s.last_level());
    for (int n = 0; n <= horizon; ++n)
        if (!classify(s.graph(n)).fan) throw FanError("classification requires fan levels");
    bool end_preserving = true;
    for (int n = 0; n < horizon; ++n) {
        const Morphism& st = s.step(n);
        if (!st.check(MorphProperty::CoBijective) || !fan_check(st, FanProperty::SpokeMonotone))
            throw FanError("steps are not spoke-monotone co-bijective fan morphisms");
        end_preserving &= fan_check(st, FanProperty::EndPreserving);
    }

    FanClassification out;
    Verdict star = has_subsequence_in(s, IdealProperty::StarRefining, horizon);
    Verdict split = has_subsequence_in(s, IdealProperty::EndSplitting, horizon);
    std::vector<std::pair<std::string, Verdict>> parts{{"star_refining_subsequence", star},
                                                       {"end_splitting_subsequence", split}};
    if (!end_preserving) parts.push_back({"end_dense_subsequence",
                                          has_subsequence_in(s, IdealProperty::EndDense, horizon)});
    Verdict all = combine_pessimistic(parts, horizon);
    out.conditions = all.witness;
    out.conditions["route"] = end_preserving ? "cantor" : "lelek";

    if (all.is_holds()) {
        out.kind = end_preserving ? FanClassification::Kind::CantorFanEvidence
                                  : FanClassification::Kind::LelekEvidence;
        return out;
    }
    if (all.is_fails()) {
        out.kind = FanClassification::Kind::Negative;
        // Branch diagnosis: a spoke whose overlying restrictions are never
        // edge-witnessing within the horizon.
        SpokeTree t = tree_of_spokes(s);
        for (int m = 0; m <= horizon && out.conditions.find("branch_witness") == out.conditions.end();
             ++m) {
            for (int si = 0; si < int(t.levels[m].spokes.size()); ++si) {
                Bitset sset = spoke_set(s.graph(m), t.levels[m].spokes[si]);
                bool some_level_all_witnessing = false;
                for (int n = m + 1; n <= horizon && !some_level_all_witnessing; ++n) {
                    bool all_ok = true;
                    bool any = false;
                    for (int ti = 0; ti < int(t.levels[n].spokes.size()); ++ti) {
                        Bitset tset = spoke_set(s.graph(n), t.levels[n].spokes[ti]);
                        if (s.composite(m, n).image(tset) != sset) continue;
                        any = true;
                        Morphism r = restrict(s.composite(m, n), tset, sset);
                        all_ok &= r.check(MorphProperty::EdgeWitnessing);
                    }
                    some_level_all_witnessing = any && all_ok;
                }
                if (!some_level_all_witnessing) {
                    out.conditions["branch_witness"] = {
                        {"level", m},
                        {"spoke_end", s.graph(m).label(t.levels[m].spokes[si].back())}};
                    break;
                }
            }
        }
        return out;
    }
    out.kind = FanClassification::Kind::Unknown;
    return out;
}

} // namespace specgraph
