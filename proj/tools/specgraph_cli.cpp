#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "specgraph/category.hpp"
#include "specgraph/generators.hpp"
#include "specgraph/json_io.hpp"

namespace {

using namespace specgraph;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitVerificationFailed = 2;
constexpr int kExitUnknown = 3;

nlohmann::json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    nlohmann::json j;
    in >> j;
    return j;
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path);
    out << text;
}

void write_json_file(const std::string& path, const nlohmann::ordered_json& j) {
    write_text_file(path, j.dump(2) + "\n");
}

int verdict_exit(const Verdict& v) {
    if (v.is_holds()) return kExitOk;
    if (v.is_fails()) return kExitVerificationFailed;
    return kExitUnknown;
}

int run(int argc, char** argv) {
    CLI::App app{"finite-graph sequence engine"};
    app.require_subcommand(1);

    // generate
    auto* gen = app.add_subcommand("generate", "build a named sequence prefix");
    std::string gen_name, gen_out = "seq.json";
    int gen_levels = 4;
    std::vector<std::string> gen_params;
    gen->add_option("name", gen_name, "generator name")->required();
    gen->add_option("--levels", gen_levels, "prefix length N (levels 0..N)");
    gen->add_option("--param", gen_params, "extra key=value parameters");
    gen->add_option("--out", gen_out, "output file");

    // check
    auto* chk = app.add_subcommand("check", "evaluate a property verdict on a sequence");
    std::string chk_file, chk_prop;
    int chk_horizon = 1 << 20;
    chk->add_option("sequence", chk_file)->required();
    chk->add_option("--property", chk_prop,
                    "edge-faithful or an ideal name (anti-injective, strictly-anti-injective, "
                    "star-refining, edge-witnessing, end-dense, end-splitting)")
        ->required();
    chk->add_option("--horizon", chk_horizon);

    // classify
    auto* cls = app.add_subcommand("classify", "(lax-)Fraïssé certification");
    std::string cls_file, cls_cat;
    int cls_horizon = 1 << 20;
    bool cls_strict = false;
    cls->add_option("sequence", cls_file)->required();
    cls->add_option("--category", cls_cat, "one of D,A,C,X,L")->required();
    cls->add_option("--horizon", cls_horizon);
    cls->add_flag("--fraisse", cls_strict, "check the strict Fraïssé conditions");

    // amalgamate
    auto* ama = app.add_subcommand("amalgamate", "amalgamate a cospan of morphisms");
    std::string ama_cat, ama_f, ama_g, ama_out = "square.json";
    ama->add_option("--category", ama_cat)->required();
    ama->add_option("f", ama_f, "morphism JSON file")->required();
    ama->add_option("g", ama_g, "morphism JSON file")->required();
    ama->add_option("--out", ama_out);

    // fraisse
    auto* fra = app.add_subcommand("fraisse", "build a Fraïssé prefix by absorption");
    std::string fra_cat, fra_out = "seq.json", fra_log;
    int fra_steps = 5, fra_bound = 6;
    uint64_t fra_seed = 0;
    fra->add_option("--category", fra_cat)->required();
    fra->add_option("--steps", fra_steps);
    fra->add_option("--seed", fra_seed);
    fra->add_option("--size-bound", fra_bound, "small-object size bound");
    fra->add_option("--out", fra_out);
    fra->add_option("--witness-log", fra_log, "absorption log output");

    // spectrum
    auto* spc = app.add_subcommand("spectrum", "topological verdict report");
    std::string spc_file, spc_report;
    int spc_horizon = 1 << 20;
    spc->add_option("sequence", spc_file)->required();
    spc->add_option("--horizon", spc_horizon);
    spc->add_option("--report", spc_report, "report output file");

    // export
    auto* exp = app.add_subcommand("export", "DOT export of levels (and poset)");
    std::string exp_file, exp_dir = ".";
    bool exp_poset = false;
    exp->add_option("sequence", exp_file)->required();
    exp->add_option("--dot", exp_dir, "output directory");
    exp->add_flag("--poset", exp_poset, "also export the poset Hasse diagram");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInvalid;
    }

    if (gen->parsed()) {
        std::map<std::string, std::string> params{{"levels", std::to_string(gen_levels)}};
        for (const auto& kv : gen_params) {
            auto eq = kv.find('=');
            if (eq == std::string::npos) throw GeneratorError("--param expects key=value");
            params[kv.substr(0, eq)] = kv.substr(eq + 1);
        }
        Sequence s = generate(gen_name, params);
        write_json_file(gen_out, sequence_to_json(s));
        std::cout << "wrote " << gen_out << " (" << s.levels() << " levels)\n";
        return kExitOk;
    }

    if (chk->parsed()) {
        Sequence s = sequence_from_json(read_json_file(chk_file));
        Verdict v = [&] {
            if (chk_prop == "edge-faithful") return is_edge_faithful(s, chk_horizon);
            auto p = ideal_property_from_string(chk_prop);
            if (!p) throw IoError("unknown property: " + chk_prop);
            return has_subsequence_in(s, *p, chk_horizon);
        }();
        std::cout << nlohmann::ordered_json(v.to_json()).dump(2) << "\n";
        return verdict_exit(v);
    }

    if (cls->parsed()) {
        auto cat = category_from_string(cls_cat);
        if (!cat) throw IoError("unknown category: " + cls_cat);
        Sequence s = sequence_from_json(read_json_file(cls_file));
        int horizon = std::min<int>(cls_horizon, s.last_level());
        Verdict v = cls_strict ? fraisse_check(CategorySpec::get(*cat), s, horizon)
                               : lax_fraisse_check(CategorySpec::get(*cat), s, horizon);
        std::cout << (cls_strict ? "Fraïssé" : "lax-Fraïssé") << " in " << cls_cat
                  << " at horizon " << horizon << ": " << v.kind_name() << "\n";
        std::cout << nlohmann::ordered_json(v.to_json()).dump(2) << "\n";
        return verdict_exit(v);
    }

    if (ama->parsed()) {
        auto cat = category_from_string(ama_cat);
        if (!cat) throw IoError("unknown category: " + ama_cat);
        Morphism f = morphism_from_json(read_json_file(ama_f));
        Morphism g = morphism_from_json(read_json_file(ama_g));
        AmalgamationResult r = amalgamate(CategorySpec::get(*cat), f, g);
        nlohmann::ordered_json out;
        out["apex"] = graph_to_json(r.apex);
        out["left"] = morphism_to_json(r.left);
        out["right"] = morphism_to_json(r.right);
        write_json_file(ama_out, out);
        std::cout << "wrote " << ama_out << " (apex size " << r.apex.size() << ")\n";
        return kExitOk;
    }

    if (fra->parsed()) {
        auto cat = category_from_string(fra_cat);
        if (!cat) throw IoError("unknown category: " + fra_cat);
        FraissePrefix p = fraisse_prefix(CategorySpec::get(*cat), fra_steps, fra_seed, fra_bound);
        write_json_file(fra_out, sequence_to_json(p.sequence));
        if (!fra_log.empty()) {
            nlohmann::ordered_json log = nlohmann::ordered_json::array();
            for (const auto& rec : p.log) {
                nlohmann::ordered_json r;
                r["requestLevel"] = rec.request_level;
                r["request"] = morphism_to_json(rec.request);
                r["resolvedLevel"] = rec.resolved_level;
                r["embedding"] = morphism_to_json(rec.embedding);
                log.push_back(std::move(r));
            }
            write_json_file(fra_log, log);
        }
        std::cout << "wrote " << fra_out << " (" << p.sequence.levels() << " levels)\n";
        return kExitOk;
    }

    if (spc->parsed()) {
        Sequence s = sequence_from_json(read_json_file(spc_file));
        SpectrumReport r = spectrum_report(s, spc_horizon);
        nlohmann::ordered_json out(r.to_json());
        std::cout << out.dump(2) << "\n";
        if (!spc_report.empty()) write_json_file(spc_report, out);
        bool any_fails = r.connected.is_fails() || r.hausdorff.is_fails() || r.perfect.is_fails();
        bool all_known = !r.connected.is_unknown() && !r.hausdorff.is_unknown() &&
                         !r.perfect.is_unknown();
        return any_fails || all_known ? kExitOk : kExitUnknown;
    }

    if (exp->parsed()) {
        Sequence s = sequence_from_json(read_json_file(exp_file));
        std::filesystem::create_directories(exp_dir);
        for (int n = 0; n < s.levels(); ++n)
            write_text_file(exp_dir + "/level" + std::to_string(n) + ".dot",
                            graph_to_dot(s.graph(n), "level" + std::to_string(n)));
        if (exp_poset) write_text_file(exp_dir + "/poset.dot", poset_to_dot(s));
        std::cout << "wrote DOT files to " << exp_dir << "\n";
        return kExitOk;
    }

    return kExitInvalid;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const specgraph::CategoryError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerificationFailed;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
}
