#pragma once

#include <string>

#include <json.hpp>

namespace specgraph {

// Tri-state result for claims quantified over all levels of an infinite
// sequence, evaluated against a finite prefix. Holds and FailsOnPrefix carry
// machine-checkable witness payloads.
struct Verdict {
    enum class Kind { Holds, FailsOnPrefix, Unknown };

    Kind kind = Kind::Unknown;
    nlohmann::json witness;
    int horizon = -1;

    static Verdict holds(nlohmann::json w, int horizon) {
        return {Kind::Holds, std::move(w), horizon};
    }
    static Verdict fails(nlohmann::json w, int horizon) {
        return {Kind::FailsOnPrefix, std::move(w), horizon};
    }
    static Verdict unknown(int horizon, nlohmann::json w = nlohmann::json::object()) {
        return {Kind::Unknown, std::move(w), horizon};
    }

    bool is_holds() const { return kind == Kind::Holds; }
    bool is_fails() const { return kind == Kind::FailsOnPrefix; }
    bool is_unknown() const { return kind == Kind::Unknown; }

    const char* kind_name() const {
        switch (kind) {
            case Kind::Holds: return "Holds";
            case Kind::FailsOnPrefix: return "FailsOnPrefix";
            case Kind::Unknown: return "Unknown";
        }
        return "?";
    }

    nlohmann::json to_json() const {
        return {{"kind", kind_name()}, {"witness", witness}, {"horizon", horizon}};
    }
};

// Pessimistic conjunction: FailsOnPrefix < Unknown < Holds.
inline Verdict combine_pessimistic(const std::vector<std::pair<std::string, Verdict>>& parts,
                                   int horizon) {
    nlohmann::json w = nlohmann::json::object();
    Verdict::Kind k = Verdict::Kind::Holds;
    for (const auto& [name, v] : parts) {
        w[name] = v.to_json();
        if (v.is_fails()) k = Verdict::Kind::FailsOnPrefix;
        else if (v.is_unknown() && k == Verdict::Kind::Holds) k = Verdict::Kind::Unknown;
    }
    return {k, std::move(w), horizon};
}

} // namespace specgraph
