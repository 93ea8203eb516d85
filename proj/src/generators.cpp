#include "specgraph/generators.hpp"

#include <algorithm>

#include "specgraph/clique.hpp"
#include "specgraph/fan.hpp"

namespace specgraph {

namespace {

int param_int(const std::map<std::string, std::string>& params, const std::string& key,
              int fallback) {
    auto it = params.find(key);
    if (it == params.end()) return fallback;
    try {
        return std::stoi(it->second);
    } catch (...) {
        throw GeneratorError("parameter " + key + " must be an integer");
    }
}

std::string param_str(const std::map<std::string, std::string>& params, const std::string& key,
                      const std::string& fallback) {
    auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
}

Guarantee step_guarantee(const char* prop, const char* note) {
    return {GuaranteeKind::StepProperty, prop, 0, note};
}
Guarantee stride_guarantee(const char* prop, int stride, const char* note) {
    return {GuaranteeKind::StrideProperty, prop, stride, note};
}
Guarantee shape_guarantee(const char* shape, const char* note) {
    return {GuaranteeKind::Shape, shape, 0, note};
}
Guarantee exclusion_guarantee(const char* prop, const char* note) {
    return {GuaranteeKind::NoCompositeHas, prop, 0, note};
}

// --- cantor_doubling: discrete levels of binary words with the parent map.
Sequence gen_cantor_doubling(int levels) {
    std::vector<Graph> graphs;
    std::vector<Morphism> steps;
    std::vector<std::vector<std::string>> words{{"e"}};
    graphs.push_back(Graph::make_indexed({"e"}, {}));
    for (int n = 1; n <= levels; ++n) {
        std::vector<std::string> prev = words.back(), cur;
        std::vector<std::pair<int, int>> rel;
        for (int i = 0; i < int(prev.size()); ++i)
            for (int b = 0; b < 2; ++b) {
                rel.emplace_back(i, int(cur.size()));
                cur.push_back((n == 1 ? std::string() : prev[i]) + char('0' + b));
            }
        words.push_back(cur);
        graphs.push_back(Graph::make_indexed(std::vector<std::string>(cur), {}));
        auto dp = std::make_shared<const Graph>(graphs.back());
        auto cp = std::make_shared<const Graph>(graphs[n - 1]);
        steps.push_back(Morphism::make_indexed(dp, cp, rel));
    }
    Sequence s = Sequence::make(graphs, std::move(steps));
    s.provenance = "cantor_doubling";
    s.guarantees = {
        shape_guarantee("discrete", "levels are discrete graphs of binary words"),
        step_guarantee("co-bijective", "binary parent maps are surjective functions"),
        step_guarantee("anti-injective", "each word has two one-bit extensions"),
        step_guarantee("edge-witnessing", "surjective functions witness loops"),
        step_guarantee("star-refining", "closed stars in discrete graphs are singletons"),
    };
    return s;
}

// --- arc_dyadic: paths of 2^n − 1 dyadic overlap intervals.
Sequence gen_arc_dyadic(int levels) {
    std::vector<Graph> graphs;
    std::vector<Morphism> steps;
    auto level_graph = [](int n) {
        if (n == 0) return Graph::make_indexed({"1"}, {});
        int count = (1 << n) - 1;
        std::vector<std::string> labels;
        for (int k = 1; k <= count; ++k) labels.push_back(std::to_string(k));
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i + 1 < count; ++i) edges.emplace_back(i, i + 1);
        return Graph::make_indexed(std::move(labels), edges);
    };
    graphs.push_back(level_graph(0));
    for (int n = 1; n <= levels; ++n) {
        graphs.push_back(level_graph(n));
        auto dp = std::make_shared<const Graph>(graphs[n]);
        auto cp = std::make_shared<const Graph>(graphs[n - 1]);
        std::vector<std::pair<int, int>> rel;
        if (n == 1) {
            rel.emplace_back(0, 0);
        } else {
            int prev_count = (1 << (n - 1)) - 1;
            for (int k = 1; k <= prev_count; ++k)
                for (int j = 2 * k - 1; j <= 2 * k + 1; ++j)
                    rel.emplace_back(k - 1, j - 1);
        }
        steps.push_back(Morphism::make_indexed(dp, cp, rel));
    }
    Sequence s = Sequence::make(graphs, std::move(steps));
    s.provenance = "arc_dyadic";
    s.guarantees = {
        shape_guarantee("path", "levels are overlap paths of dyadic intervals"),
        step_guarantee("co-bijective", "interval (2k-1,2k+1)/2^{n+1} refines only (k-1,k+1)/2^n"),
        step_guarantee("monotone", "preimages are index intervals"),
        step_guarantee("edge-witnessing", "odd intervals witness consecutive overlaps"),
        stride_guarantee("star-refining", 2, "two edge-witnessing path morphisms compose star-refining"),
    };
    return s;
}

// --- clique_iteration: G_{n+1} = 𝖷G_n with the membership map.
Sequence gen_clique_iteration(int levels) {
    std::vector<Graph> graphs{make_path_graph(2, "v")};
    std::vector<Morphism> steps;
    for (int n = 1; n <= levels; ++n) {
        Morphism mem = membership(graphs[n - 1]);
        graphs.push_back(mem.dom());
        steps.push_back(mem);
    }
    Sequence s = Sequence::make(graphs, std::move(steps));
    s.provenance = "clique_iteration";
    s.guarantees = {
        shape_guarantee("path", "clique graphs of paths are paths"),
        step_guarantee("co-bijective", "singleton cliques witness every vertex"),
        step_guarantee("monotone", "clique preimages are connected"),
        step_guarantee("edge-witnessing", "the pair clique witnesses each edge"),
        exclusion_guarantee("strictly-anti-injective",
                            "strict vertex preimages of membership composites are the "
                            "singleton-clique towers, hence singletons"),
    };
    return s;
}

// --- edge_splitting_seq: iterated edge splitting from a seed graph.
Sequence gen_edge_splitting(int levels, const std::string& seed) {
    Graph g = [&]() -> Graph {
        if (seed == "claw") return make_fan_graph({2, 2, 2});
        auto colon = seed.find(':');
        std::string kind = seed.substr(0, colon);
        int n = colon == std::string::npos ? -1 : std::stoi(seed.substr(colon + 1));
        if (kind == "path" && n >= 1) return make_path_graph(n);
        if (kind == "cycle" && n >= 3) return make_cycle_graph(n);
        if (kind == "discrete" && n >= 1) return make_discrete_graph(n);
        throw GeneratorError("bad seed spec: " + seed);
    }();
    std::vector<Graph> graphs{g};
    std::vector<Morphism> steps;
    for (int n = 1; n <= levels; ++n) {
        EdgeSplit sp = edge_split(graphs.back());
        graphs.push_back(sp.graph);
        steps.push_back(sp.morphism);
    }
    Sequence s = Sequence::make(graphs, std::move(steps));
    s.provenance = "edge_splitting_seq(" + seed + ")";
    s.guarantees = {
        step_guarantee("co-bijective", "split morphisms fix old vertices"),
        step_guarantee("monotone", "split preimages are stars"),
        step_guarantee("edge-witnessing", "subdividing vertices witness edges"),
        step_guarantee("star-refining", "closed stars sit inside old vertex preimages"),
    };
    GraphClass c = classify(g);
    if (c.path) s.guarantees.push_back(shape_guarantee("path", "splitting preserves paths"));
    if (c.cycle) s.guarantees.push_back(shape_guarantee("cycle", "splitting preserves cycles"));
    if (c.fan) s.guarantees.push_back(shape_guarantee("fan", "splitting preserves fans"));
    else if (c.tree) s.guarantees.push_back(shape_guarantee("tree", "splitting preserves trees"));
    return s;
}

// --- cycle_roots: cycles of length 2^{n+2} with dyadic doubling.
Sequence gen_cycle_roots(int levels) {
    std::vector<Graph> graphs;
    std::vector<Morphism> steps;
    for (int n = 0; n <= levels; ++n) {
        int len = 1 << (n + 2);
        graphs.push_back(make_cycle_graph(len, "a"));
        if (n == 0) continue;
        int prev = len / 2;
        std::vector<std::pair<int, int>> rel;
        for (int k = 0; k < prev; ++k)
            for (int dj = -1; dj <= 1; ++dj)
                rel.emplace_back(k, ((2 * k + dj) % len + len) % len);
        auto dp = std::make_shared<const Graph>(graphs[n]);
        auto cp = std::make_shared<const Graph>(graphs[n - 1]);
        steps.push_back(Morphism::make_indexed(dp, cp, rel));
    }
    Sequence s = Sequence::make(graphs, std::move(steps));
    s.provenance = "cycle_roots";
    s.guarantees = {
        shape_guarantee("cycle", "levels are dyadic root-of-unity cycles"),
        step_guarantee("co-bijective", "even arcs refine a single arc"),
        step_guarantee("monotone", "preimages are arcs"),
        step_guarantee("edge-witnessing", "odd arcs witness consecutive overlaps"),
        stride_guarantee("star-refining", 2, "two edge-witnessing monotone cycle morphisms compose star-refining"),
    };
    return s;
}

// --- cantor_fan: fans from products of dyadic interval covers with Cantor
// basic sets (paper-level n ≥ 2; the two initial levels repeat level 2).
struct CantorFanLevel {
    Graph graph;
    int alpha, beta;
};

CantorFanLevel cantor_fan_level(int alpha, int beta) {
    std::vector<int> sizes(size_t(1) << beta, (1 << alpha) + 1);
    return {make_fan_graph(sizes), alpha, beta};
}

Morphism cantor_fan_step(const CantorFanLevel& fine, const CantorFanLevel& coarse,
                         std::shared_ptr<const Graph> dp, std::shared_ptr<const Graph> cp) {
    // vertex ids: root = 0; spoke s vertex k (1-based) = 1 + s*(2^alpha) + (k-1)
    auto vid = [](int alpha, int s, int k) { return 1 + s * (1 << alpha) + (k - 1); };
    std::vector<std::pair<int, int>> rel{{0, 0}};
    int spokes_fine = 1 << fine.beta;
    int shift = fine.beta - coarse.beta;
    // ball (k-1,k+1)/2^fine.alpha sits inside (j-1,j+1)/2^coarse.alpha iff
    // k-1 ≥ f(j-1) and k+1 ≤ f(j+1) where f = 2^(alpha difference)
    int f = 1 << (fine.alpha - coarse.alpha);
    for (int s = 0; s < spokes_fine; ++s) {
        int cs = s >> shift; // restriction of the binary word
        for (int k = 1; k <= (1 << fine.alpha); ++k) {
            if (k + 1 <= f) rel.emplace_back(0, vid(fine.alpha, s, k)); // inside the root ball
            for (int j = 1; j <= (1 << coarse.alpha); ++j)
                if (k - 1 >= f * (j - 1) && k + 1 <= f * (j + 1))
                    rel.emplace_back(vid(coarse.alpha, cs, j), vid(fine.alpha, s, k));
        }
    }
    return Morphism::make_indexed(dp, cp, rel);
}

Sequence gen_cantor_fan(int levels, int alpha_step, int beta_step) {
    if (alpha_step < 1 || beta_step < 1)
        throw GeneratorError("alpha_step and beta_step must be at least 1");
    auto level_params = [&](int n) {
        int p = std::max(n, 2);
        return std::pair<int, int>{alpha_step * p, beta_step * p};
    };
    std::vector<CantorFanLevel> lv;
    std::vector<Graph> graphs;
    std::vector<Morphism> steps;
    for (int n = 0; n <= levels; ++n) {
        auto [a, b] = level_params(n);
        lv.push_back(cantor_fan_level(a, b));
        graphs.push_back(lv.back().graph);
        if (n == 0) continue;
        auto dp = std::make_shared<const Graph>(graphs[n]);
        auto cp = std::make_shared<const Graph>(graphs[n - 1]);
        if (lv[n].alpha == lv[n - 1].alpha && lv[n].beta == lv[n - 1].beta)
            steps.push_back(Morphism::identity(dp));
        else
            steps.push_back(cantor_fan_step(lv[n], lv[n - 1], dp, cp));
    }
    Sequence s = Sequence::make(graphs, std::move(steps));
    s.provenance = "cantor_fan(alpha_step=" + std::to_string(alpha_step) +
                   ",beta_step=" + std::to_string(beta_step) + ")";
    s.guarantees = {
        shape_guarantee("fan", "levels are product-cover fans"),
        step_guarantee("co-bijective", "centered product sets refine uniquely"),
        step_guarantee("spoke-monotone", "spokes refine spokes by interval doubling"),
        step_guarantee("end-preserving", "outermost intervals share their center"),
        step_guarantee("edge-witnessing", "odd intervals witness overlaps"),
        stride_guarantee("star-refining", 2, "interval doubling twice star-refines"),
        stride_guarantee("end-splitting", 1, "each end splits into the two Cantor halves"),
    };
    return s;
}

// --- nasty_fan: 2^n spokes, all long but one of length 2 (paper-level
// n ≥ 2; the two initial levels repeat level 2).
Sequence gen_nasty_fan(int levels) {
    auto level_graph = [](int p) {
        std::vector<int> sizes(size_t(1) << p, 1 << p);
        sizes.back() = 2;
        return make_fan_graph(sizes);
    };
    // spoke i vertex j (1-based within spoke, root excluded): contiguous ids
    auto vid = [](int p, int i, int j) {
        int long_len = (1 << p) - 1; // non-root vertices per long spoke
        int longs = (1 << p) - 1;
        if (i < longs) return 1 + i * long_len + (j - 1);
        return 1 + longs * long_len + (j - 1); // short spoke
    };
    std::vector<Graph> graphs;
    std::vector<Morphism> steps;
    for (int n = 0; n <= levels; ++n) {
        int p = std::max(n, 2);
        graphs.push_back(level_graph(p));
        if (n == 0) continue;
        auto dp = std::make_shared<const Graph>(graphs[n]);
        auto cp = std::make_shared<const Graph>(graphs[n - 1]);
        if (n <= 2) {
            steps.push_back(Morphism::identity(dp));
            continue;
        }
        int q = p - 1;
        int longs_q = (1 << q) - 1;
        std::vector<std::pair<int, int>> rel{{0, 0}};
        // two long child spokes 2i, 2i+1 over each long parent spoke i
        for (int i = 0; i < longs_q; ++i)
            for (int c = 0; c < 2; ++c) {
                int child = 2 * i + c;
                for (int j = 1; j <= (1 << p) - 1; ++j) {
                    if (j == 1) rel.emplace_back(0, vid(p, child, j));
                    for (int t = std::max(1, (j - 1) / 2); t <= (j + 1) / 2; ++t)
                        if (2 * t - 1 <= j && j <= 2 * t + 1 && t <= (1 << q) - 1)
                            rel.emplace_back(vid(q, i, t), vid(p, child, j));
                }
            }
        // one long child spoke stretched onto the short parent spoke
        {
            int child = (1 << p) - 2;
            int parent_top = vid(q, longs_q, 1);
            for (int j = 1; j <= (1 << p) - 1; ++j) {
                if (j == 1) {
                    rel.emplace_back(0, vid(p, child, j));
                    rel.emplace_back(parent_top, vid(p, child, j));
                } else {
                    rel.emplace_back(parent_top, vid(p, child, j));
                }
            }
        }
        // short child spoke to short parent spoke via identity
        rel.emplace_back(vid(q, longs_q, 1), vid(p, (1 << p) - 1, 1));
        steps.push_back(Morphism::make_indexed(dp, cp, rel));
    }
    Sequence s = Sequence::make(graphs, std::move(steps));
    s.provenance = "nasty_fan";
    s.guarantees = {
        shape_guarantee("fan", "levels are fans with one short spoke"),
        step_guarantee("co-bijective", "even positions refine uniquely"),
        step_guarantee("spoke-monotone", "children map into single spokes"),
        step_guarantee("end-preserving", "spoke tops map to spoke tops"),
        step_guarantee("edge-witnessing", "odd positions witness overlaps"),
        exclusion_guarantee("star-refining",
                            "the short spoke maps by identity at every level, so its end's "
                            "closed star {root, end} never fits one vertex preimage"),
    };
    return s;
}

// --- lelek: recursive clique-path prefixes of the spokes.
Sequence gen_lelek(int levels) {
    // per level: spokes described by (m = kept prefix size, l = ambient size)
    struct SpokeState {
        int m, l;
    };
    std::vector<Graph> graphs;
    std::vector<Morphism> steps;
    std::vector<SpokeState> cur{{2, 2}, {2, 2}, {2, 2}};
    graphs.push_back(make_fan_graph({2, 2, 2}));
    for (int n = 1; n <= levels; ++n) {
        std::vector<SpokeState> nxt;
        std::vector<int> sizes;
        std::vector<std::pair<int, int>> rel{{0, 0}};
        // parent vertex id of spoke i position a ≥ 1
        std::vector<int> parent_base(cur.size());
        {
            int acc = 1;
            for (size_t i = 0; i < cur.size(); ++i) {
                parent_base[i] = acc;
                acc += cur[i].m - 1;
            }
        }
        int child_base = 1;
        for (size_t i = 0; i < cur.size(); ++i) {
            int m = cur[i].m, l = cur[i].l;
            for (int j = 2; j <= l; ++j) {
                int cut = std::min(j, m);
                int wlen = 2 * cut - 1; // vertices incl. root
                nxt.push_back({wlen, 2 * l - 1});
                sizes.push_back(wlen);
                for (int x = 1; x <= wlen - 1; ++x) {
                    int v = child_base + x - 1;
                    int a = x / 2; // even x ↦ position a, odd x ↦ {a, a+1}
                    if (x % 2 == 0) {
                        rel.emplace_back(a == 0 ? 0 : parent_base[i] + a - 1, v);
                    } else {
                        rel.emplace_back(a == 0 ? 0 : parent_base[i] + a - 1, v);
                        rel.emplace_back(parent_base[i] + a, v);
                    }
                }
                child_base += wlen - 1;
            }
        }
        graphs.push_back(make_fan_graph(sizes));
        auto dp = std::make_shared<const Graph>(graphs[n]);
        auto cp = std::make_shared<const Graph>(graphs[n - 1]);
        steps.push_back(Morphism::make_indexed(dp, cp, rel));
        cur = std::move(nxt);
    }
    Sequence s = Sequence::make(graphs, std::move(steps));
    s.provenance = "lelek";
    s.guarantees = {
        shape_guarantee("fan", "levels are fans of clique-path prefixes"),
        step_guarantee("co-bijective", "even positions refine uniquely"),
        step_guarantee("spoke-monotone", "prefixes map into their spokes"),
        step_guarantee("edge-witnessing", "odd positions witness overlaps"),
        stride_guarantee("star-refining", 2, "two edge-witnessing steps compose star-refining"),
        stride_guarantee("end-dense", 2, "cut tops reach every vertex within two steps"),
        stride_guarantee("end-splitting", 2, "cut multiplicity splits ends within two steps"),
    };
    return s;
}

// --- modification_patterns: the two-track two-point path sequences.
Sequence gen_modification_patterns(int levels, const std::string& variant) {
    bool crossed = variant == "crossed";
    if (!crossed && variant != "plain")
        throw GeneratorError("variant must be plain or crossed");
    std::vector<Graph> graphs;
    std::vector<Morphism> steps;
    Graph g = Graph::make({"a", "b"}, {{"a", "b"}});
    for (int n = 0; n <= levels; ++n) {
        graphs.push_back(g);
        if (n == 0) continue;
        auto dp = std::make_shared<const Graph>(g);
        auto cp = std::make_shared<const Graph>(g);
        std::vector<std::pair<int, int>> rel{{0, 0}, {0, 1}};       // a ⊐ a', a ⊐ b'
        rel.emplace_back(1, crossed ? 0 : 1);                       // b ⊐ a' or b ⊐ b'
        steps.push_back(Morphism::make_indexed(dp, cp, rel));
    }
    Sequence s = Sequence::make(graphs, std::move(steps));
    s.provenance = "modification_patterns(" + variant + ")";
    s.guarantees = {
        shape_guarantee("path", "all levels are the two-point path"),
        step_guarantee("monotone", "preimages are connected"),
        step_guarantee("star-refining", "both closed stars sit inside a's preimage"),
        {GuaranteeKind::DensityStable, "", 0, "the step pattern repeats at every level"},
    };
    return s;
}

// --- modification_fail: the convergent-sequence poset without a
// co-bijective modification. Edges are derived common-lower-bound relations;
// built with lookahead so the truncated prefix is exact.
Sequence gen_modification_fail(int levels) {
    const int internal = levels + 6;
    // vertex sets per level, by label
    std::vector<std::vector<std::string>> labs(internal + 1);
    for (int n = 0; n <= internal; ++n) {
        if (n % 2 == 0) {
            labs[n] = {"a", "b"};
            for (int m = 0; 2 * m < n; ++m) labs[n].push_back("c" + std::to_string(2 * m));
        } else {
            labs[n] = {"a", "d", "b"};
            for (int m = 0; 2 * m <= n; ++m) labs[n].push_back("c" + std::to_string(2 * m));
        }
    }
    // one-step order relations by label
    auto related = [&](int n, const std::string& up, const std::string& dn) {
        // up at level n, dn at level n+1
        if (up[0] == 'c') return dn == up;
        if (n % 2 == 0) {
            if (up == "a") return dn == "a" || dn == "c" + std::to_string(n);
            return dn == "b" || dn == "d"; // up == "b"
        }
        if (up == "a" || up == "d") return dn == "a";
        return dn == "b"; // up == "b"
    };
    // order matrices for wedge computation
    std::vector<std::vector<std::vector<bool>>> step_rel(internal);
    for (int n = 0; n < internal; ++n) {
        step_rel[n].assign(labs[n].size(), std::vector<bool>(labs[n + 1].size(), false));
        for (size_t i = 0; i < labs[n].size(); ++i)
            for (size_t j = 0; j < labs[n + 1].size(); ++j)
                step_rel[n][i][j] = related(n, labs[n][i], labs[n + 1][j]);
    }
    // descendants of each vertex at each deeper level
    auto descendants = [&](int n, int i, int k) {
        std::vector<bool> cur(labs[n].size(), false);
        cur[i] = true;
        for (int t = n; t < k; ++t) {
            std::vector<bool> nxt(labs[t + 1].size(), false);
            for (size_t u = 0; u < cur.size(); ++u)
                if (cur[u])
                    for (size_t v = 0; v < nxt.size(); ++v)
                        if (step_rel[t][u][v]) nxt[v] = true;
            cur = std::move(nxt);
        }
        return cur;
    };
    std::vector<Graph> graphs;
    std::vector<Morphism> steps;
    for (int n = 0; n <= levels; ++n) {
        std::vector<std::pair<std::string, std::string>> edges;
        for (size_t i = 0; i < labs[n].size(); ++i)
            for (size_t j = i + 1; j < labs[n].size(); ++j) {
                bool wedge = false;
                for (int k = n; k <= internal && !wedge; ++k) {
                    auto di = descendants(n, int(i), k);
                    auto dj = descendants(n, int(j), k);
                    for (size_t v = 0; v < di.size() && !wedge; ++v) wedge = di[v] && dj[v];
                }
                if (wedge) edges.emplace_back(labs[n][i], labs[n][j]);
            }
        graphs.push_back(Graph::make(labs[n], edges));
        if (n == 0) continue;
        auto dp = std::make_shared<const Graph>(graphs[n]);
        auto cp = std::make_shared<const Graph>(graphs[n - 1]);
        std::vector<std::pair<int, int>> rel;
        for (size_t i = 0; i < labs[n - 1].size(); ++i)
            for (size_t j = 0; j < labs[n].size(); ++j)
                if (step_rel[n - 1][i][j]) rel.emplace_back(int(i), int(j));
        steps.push_back(Morphism::make_indexed(dp, cp, rel));
    }
    Sequence s = Sequence::make(graphs, std::move(steps));
    s.provenance = "modification_fail";
    s.guarantees = {
        {GuaranteeKind::DensityStable, "", 0, "the period-two pattern repeats at every level"},
    };
    return s;
}

} // namespace

std::vector<std::string> generator_names() {
    return {"cantor_doubling", "arc_dyadic",  "clique_iteration", "edge_splitting_seq",
            "cycle_roots",     "cantor_fan",  "lelek",            "nasty_fan",
            "modification_patterns", "modification_fail"};
}

Sequence generate(const std::string& name, const std::map<std::string, std::string>& params) {
    int levels = param_int(params, "levels", 4);
    if (levels < 0) throw GeneratorError("levels must be non-negative");
    if (name == "cantor_doubling") return gen_cantor_doubling(levels);
    if (name == "arc_dyadic") return gen_arc_dyadic(levels);
    if (name == "clique_iteration") return gen_clique_iteration(levels);
    if (name == "edge_splitting_seq")
        return gen_edge_splitting(levels, param_str(params, "seed", "claw"));
    if (name == "cycle_roots") return gen_cycle_roots(levels);
    if (name == "cantor_fan")
        return gen_cantor_fan(levels, param_int(params, "alpha_step", 1),
                              param_int(params, "beta_step", 1));
    if (name == "lelek") return gen_lelek(levels);
    if (name == "nasty_fan") return gen_nasty_fan(levels);
    if (name == "modification_patterns")
        return gen_modification_patterns(levels, param_str(params, "variant", "plain"));
    if (name == "modification_fail") return gen_modification_fail(levels);
    throw GeneratorError("unknown generator: " + name);
}

} // namespace specgraph
