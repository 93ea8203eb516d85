#include "specgraph/json_io.hpp"

#include <sstream>

namespace specgraph {

namespace {

const char* guarantee_kind_name(GuaranteeKind k) {
    switch (k) {
        case GuaranteeKind::StepProperty: return "step-property";
        case GuaranteeKind::StrideProperty: return "stride-property";
        case GuaranteeKind::NoCompositeHas: return "no-composite-has";
        case GuaranteeKind::Shape: return "shape";
        case GuaranteeKind::DensityStable: return "density-stable";
    }
    return "?";
}

std::optional<GuaranteeKind> guarantee_kind_from(const std::string& s) {
    for (auto k : {GuaranteeKind::StepProperty, GuaranteeKind::StrideProperty,
                   GuaranteeKind::NoCompositeHas, GuaranteeKind::Shape,
                   GuaranteeKind::DensityStable})
        if (s == guarantee_kind_name(k)) return k;
    return std::nullopt;
}

} // namespace

nlohmann::ordered_json graph_to_json(const Graph& g) {
    nlohmann::ordered_json j;
    j["vertices"] = nlohmann::ordered_json::array();
    for (const auto& l : g.labels()) j["vertices"].push_back(l);
    j["edges"] = nlohmann::ordered_json::array();
    for (auto [u, v] : g.edge_list())
        j["edges"].push_back(nlohmann::ordered_json::array({g.label(u), g.label(v)}));
    return j;
}

Graph graph_from_json(const nlohmann::json& j) {
    if (!j.contains("vertices") || !j["vertices"].is_array())
        throw IoError("graph JSON needs a vertices array");
    std::vector<std::string> labels;
    for (const auto& v : j["vertices"]) labels.push_back(v.get<std::string>());
    std::vector<std::pair<std::string, std::string>> pairs;
    if (j.contains("edges"))
        for (const auto& e : j["edges"]) {
            if (!e.is_array() || e.size() != 2) throw IoError("graph edge must be a label pair");
            pairs.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
        }
    try {
        return Graph::make(labels, pairs);
    } catch (const GraphError& err) {
        throw IoError(std::string("bad graph JSON: ") + err.what());
    }
}

nlohmann::ordered_json morphism_to_json(const Morphism& m) {
    nlohmann::ordered_json j;
    j["dom"] = graph_to_json(m.dom());
    j["cod"] = graph_to_json(m.cod());
    j["pairs"] = nlohmann::ordered_json::array();
    for (auto [h, g] : m.pairs())
        j["pairs"].push_back(nlohmann::ordered_json::array({m.cod().label(h), m.dom().label(g)}));
    return j;
}

Morphism morphism_from_json(const nlohmann::json& j) {
    if (!j.contains("dom") || !j.contains("cod")) throw IoError("morphism JSON needs dom and cod");
    Graph dom = graph_from_json(j["dom"]);
    Graph cod = graph_from_json(j["cod"]);
    std::vector<std::pair<std::string, std::string>> pairs;
    if (j.contains("pairs"))
        for (const auto& p : j["pairs"]) {
            if (!p.is_array() || p.size() != 2) throw IoError("morphism pair must be [cod,dom]");
            pairs.emplace_back(p[0].get<std::string>(), p[1].get<std::string>());
        }
    try {
        return Morphism::make(dom, cod, pairs);
    } catch (const std::runtime_error& err) {
        throw IoError(std::string("bad morphism JSON: ") + err.what());
    }
}

nlohmann::ordered_json sequence_to_json(const Sequence& s) {
    nlohmann::ordered_json j;
    j["graphs"] = nlohmann::ordered_json::array();
    for (int n = 0; n < s.levels(); ++n) j["graphs"].push_back(graph_to_json(s.graph(n)));
    j["steps"] = nlohmann::ordered_json::array();
    for (int n = 0; n + 1 < s.levels(); ++n) j["steps"].push_back(morphism_to_json(s.step(n)));
    j["provenance"] = s.provenance;
    j["guarantees"] = nlohmann::ordered_json::array();
    for (const auto& g : s.guarantees) {
        nlohmann::ordered_json gj;
        gj["kind"] = guarantee_kind_name(g.kind);
        gj["prop"] = g.prop;
        gj["stride"] = g.stride;
        gj["note"] = g.note;
        j["guarantees"].push_back(std::move(gj));
    }
    j["horizonApproximate"] = s.horizon_approximate;
    return j;
}

Sequence sequence_from_json(const nlohmann::json& j) {
    if (!j.contains("graphs") || !j["graphs"].is_array() || j["graphs"].empty())
        throw IoError("sequence JSON needs a non-empty graphs array");
    std::vector<std::shared_ptr<const Graph>> graphs;
    for (const auto& gj : j["graphs"])
        graphs.push_back(std::make_shared<const Graph>(graph_from_json(gj)));
    std::vector<Morphism> steps;
    if (j.contains("steps")) {
        if (j["steps"].size() + 1 != graphs.size())
            throw IoError("sequence JSON needs one step per consecutive level pair");
        for (size_t n = 0; n < j["steps"].size(); ++n) steps.push_back(morphism_from_json(j["steps"][n]));
    }
    Sequence s = [&] {
        try {
            return Sequence::make(std::move(graphs), std::move(steps));
        } catch (const SequenceError& err) {
            throw IoError(std::string("bad sequence JSON: ") + err.what());
        }
    }();
    if (j.contains("provenance")) s.provenance = j["provenance"].get<std::string>();
    if (j.contains("guarantees"))
        for (const auto& gj : j["guarantees"]) {
            auto kind = guarantee_kind_from(gj.value("kind", ""));
            if (!kind) throw IoError("unknown guarantee kind");
            s.guarantees.push_back(
                {*kind, gj.value("prop", ""), gj.value("stride", 0), gj.value("note", "")});
        }
    s.horizon_approximate = j.value("horizonApproximate", false);
    return s;
}

std::string graph_to_dot(const Graph& g, const std::string& name) {
    std::ostringstream os;
    os << "graph \"" << name << "\" {\n";
    for (int v = 0; v < g.size(); ++v) os << "  \"" << g.label(v) << "\";\n";
    for (auto [u, v] : g.edge_list())
        os << "  \"" << g.label(u) << "\" -- \"" << g.label(v) << "\";\n";
    os << "}\n";
    return os.str();
}

std::string poset_to_dot(const Sequence& s) {
    std::ostringstream os;
    os << "digraph poset {\n  rankdir=TB;\n";
    for (int n = 0; n < s.levels(); ++n) {
        os << "  { rank=same;";
        for (int v = 0; v < s.graph(n).size(); ++v)
            os << " \"" << n << ":" << s.graph(n).label(v) << "\";";
        os << " }\n";
    }
    for (int n = 0; n + 1 < s.levels(); ++n) {
        const Morphism& m = s.step(n);
        for (auto [h, g] : m.pairs())
            os << "  \"" << n << ":" << m.cod().label(h) << "\" -> \"" << n + 1 << ":"
               << m.dom().label(g) << "\";\n";
    }
    os << "}\n";
    return os.str();
}

} // namespace specgraph
