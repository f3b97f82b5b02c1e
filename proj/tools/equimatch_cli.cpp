// Command-line front end: recognition, generation, enumeration, oracle
// verification, and DOT export with machine-readable JSON output.
//
// Exit codes: 0 positive verdict, 1 negative verdict, 2 usage/input error,
// 3 internal cross-check failure.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "equimatch/families.hpp"
#include "equimatch/io.hpp"
#include "equimatch/matching.hpp"
#include "equimatch/oracle.hpp"
#include "equimatch/recognition.hpp"

using json = nlohmann::ordered_json;
using namespace equimatch;

namespace {

struct CliConfig {
    std::string format = "auto";   // graph6 | edgelist | auto
    std::string output = "json";   // json | text
    int oracle_ceiling = kDefaultOracleCeiling;
    long long seed = 0;            // reserved for sampling subcommands
};

struct InputGraph {
    size_t line;  // 1-based line of the input stream
    Graph graph;
};

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// graph6 streams carry one graph per line; an edge list is one graph.
std::vector<InputGraph> parse_graphs(const std::string& text, const std::string& format) {
    GraphFormat fmt;
    if (format == "graph6") fmt = GraphFormat::Graph6;
    else if (format == "edgelist") fmt = GraphFormat::EdgeList;
    else fmt = detect_format(text);

    std::vector<InputGraph> graphs;
    if (fmt == GraphFormat::EdgeList) {
        graphs.push_back({1, parse_edge_list(text)});
        return graphs;
    }
    std::istringstream in(text);
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
        if (line.empty()) continue;
        graphs.push_back({line_no, parse_graph6(line)});
    }
    if (graphs.empty()) throw std::runtime_error("no graphs in input");
    return graphs;
}

json family_json(const FamilyParams& p) {
    json params = json::object();
    uint8_t mask = 0;
    for (const auto* row : patterns_for(p.family)) mask |= row->param_mask;
    for (int q = 0; q < kParamCount; ++q)
        if ((mask >> q) & 1) params[std::string(1, param_name(q))] = p.values[q];
    return json{{"id", family_token(p.family)}, {"params", params}};
}

json classification_json(const Classification& c, const Graph& g) {
    json out;
    out["verdict"] = c.verdict;
    out["branch"] = branch_token(c.branch);
    out["family"] = c.family ? family_json(*c.family) : json(nullptr);
    out["reject_reason"] = c.reject_reason ? json(reject_reason_token(*c.reject_reason))
                                           : json(nullptr);
    out["n"] = g.n;
    out["m"] = g.edge_count();
    return out;
}

std::string classification_text(const Classification& c) {
    std::string s = c.verdict ? "triangle-free equimatchable: yes"
                              : "triangle-free equimatchable: no";
    s += " [" + branch_token(c.branch) + "]";
    if (c.family) {
        s += " family=" + family_token(c.family->family);
        json fam = family_json(*c.family);  // keep alive across the loop
        for (auto& [key, value] : fam["params"].items())
            s += " " + key + "=" + std::to_string(int(value));
    }
    if (c.reject_reason) s += " reason=" + reject_reason_token(*c.reject_reason);
    return s;
}

int cmd_recognize(const std::string& input, const CliConfig& config) {
    auto graphs = parse_graphs(slurp(input), config.format);
    bool all_true = true;
    for (const auto& [line, g] : graphs) {
        Classification c = classify(g);
        all_true = all_true && c.verdict;
        if (config.output == "json") {
            json record = classification_json(c, g);
            if (graphs.size() > 1) {
                json with_line;
                with_line["line"] = line;
                with_line.update(record);
                record = std::move(with_line);
            }
            std::cout << record.dump() << "\n";
        } else {
            std::cout << classification_text(c) << "\n";
        }
    }
    return all_true ? 0 : 1;
}

int cmd_generate(const std::string& family_arg, const std::vector<std::string>& assignments) {
    auto id = family_from_token(family_arg);
    if (!id) throw std::runtime_error("unknown family token: " + family_arg);
    FamilyParams params{*id, {}};
    for (const std::string& kv : assignments) {
        if (kv.size() < 3 || kv[1] != '=')
            throw std::runtime_error("parameters are key=value tokens (like n=2), got: " + kv);
        int slot = -1;
        for (int q = 0; q < kParamCount; ++q)
            if (param_name(q) == kv[0]) slot = q;
        if (slot < 0) throw std::runtime_error("unknown parameter name: " + kv);
        params.values[slot] = std::stoi(kv.substr(2));
    }
    if (auto violated = check_params(params))
        throw std::runtime_error("constraint violated: " + *violated);
    std::cout << to_graph6(instantiate(params)) << "\n";
    return 0;
}

int cmd_enumerate(int max_vertices, bool cross_check, const CliConfig& config) {
    if (cross_check && max_vertices > config.oracle_ceiling)
        throw std::runtime_error("--cross-check requires max-vertices <= oracle ceiling " +
                                 std::to_string(config.oracle_ceiling));
    bool all_good = true;
    for (int fi = 0; fi < kFamilyCount; ++fi) {
        for (auto& [params, g] : enumerate_members(static_cast<FamilyId>(fi), max_vertices)) {
            json record;
            record["family"] = family_token(params.family);
            record["params"] = family_json(params)["params"];
            record["graph6"] = to_graph6(g);
            if (cross_check) {
                bool equim = is_equimatchable_oracle(g, config.oracle_ceiling).verdict;
                bool fc = is_factor_critical(g);
                bool tf = is_triangle_free(g);
                record["oracle_equimatchable"] = equim;
                record["factor_critical"] = fc;
                record["triangle_free"] = tf;
                all_good = all_good && equim && fc && tf;
            }
            std::cout << record.dump() << "\n";
        }
    }
    return all_good ? 0 : 3;
}

int cmd_verify(const std::string& input, const CliConfig& config) {
    auto graphs = parse_graphs(slurp(input), config.format);
    bool all_true = true;
    for (const auto& [line, g] : graphs) {
        auto report = is_equimatchable_oracle(g, config.oracle_ceiling);
        all_true = all_true && report.verdict;
        json record;
        record["equimatchable"] = report.verdict;
        record["max_matching"] = report.max_size;
        record["min_maximal_matching"] = report.min_maximal_size;
        record["factor_critical"] = is_factor_critical(g);
        record["triangle_free"] = is_triangle_free(g);
        record["bipartite"] = is_bipartite(g).has_value();
        if (report.witness_small) {
            json witness = json::array();
            for (auto [u, v] : *report.witness_small) witness.push_back(json::array({u, v}));
            record["witness"] = witness;
        } else {
            record["witness"] = nullptr;
        }
        if (graphs.size() > 1) {
            json with_line;
            with_line["line"] = line;
            with_line.update(record);
            record = std::move(with_line);
        }
        if (config.output == "json") {
            std::cout << record.dump() << "\n";
        } else {
            std::cout << (report.verdict ? "equimatchable" : "not equimatchable") << " (max "
                      << report.max_size << ", min maximal " << report.min_maximal_size << ")\n";
        }
    }
    return all_true ? 0 : 1;
}

int cmd_export_dot(const std::string& input, const CliConfig& config) {
    for (const auto& [line, g] : parse_graphs(slurp(input), config.format)) std::cout << to_dot(g);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"triangle-free equimatchable graph toolkit"};
    app.require_subcommand(1);

    CliConfig config;
    app.add_option("--format", config.format, "input format")
        ->check(CLI::IsMember({"graph6", "edgelist", "auto"}))
        ->capture_default_str();
    app.add_option("--output", config.output, "output mode")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    app.add_option("--oracle-ceiling", config.oracle_ceiling,
                   "vertex ceiling for the exact matching oracles")
        ->envname("EQUIMATCH_ORACLE_CEILING")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--seed", config.seed, "seed for randomized sampling")->capture_default_str();

    std::string input = "-";
    auto* recognize = app.add_subcommand("recognize", "classify triangle-free equimatchability");
    recognize->add_option("input", input, "graph file or - for stdin");

    std::string family_arg;
    std::vector<std::string> param_args;
    auto* generate = app.add_subcommand("generate", "emit one family member as graph6");
    generate->add_option("family", family_arg, "family token (c5, c7, f11, ..., g32)")
        ->required();
    generate->add_option("params", param_args, "parameters as key=value tokens");

    int max_vertices = 14;
    bool cross_check = false;
    auto* enumerate = app.add_subcommand("enumerate", "stream all family members as JSON");
    enumerate->add_option("--max-vertices", max_vertices, "largest member size")
        ->required()
        ->check(CLI::Range(1, kEnumerationVertexCeiling));
    enumerate->add_flag("--cross-check", cross_check, "verify each member with the oracle");

    auto* verify = app.add_subcommand("verify", "run the exact matching oracle");
    verify->add_option("input", input, "graph file or - for stdin");

    auto* export_dot = app.add_subcommand("export-dot", "emit DOT for visualization");
    export_dot->add_option("input", input, "graph file or - for stdin");

    CLI11_PARSE(app, argc, argv);

    try {
        if (recognize->parsed()) return cmd_recognize(input, config);
        if (generate->parsed()) return cmd_generate(family_arg, param_args);
        if (enumerate->parsed()) return cmd_enumerate(max_vertices, cross_check, config);
        if (verify->parsed()) return cmd_verify(input, config);
        if (export_dot->parsed()) return cmd_export_dot(input, config);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
