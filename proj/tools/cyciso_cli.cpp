#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cyciso/census.hpp"
#include "cyciso/constructive.hpp"
#include "cyciso/detect.hpp"
#include "cyciso/enumerate.hpp"
#include "cyciso/exact.hpp"
#include "cyciso/gen.hpp"
#include "cyciso/io.hpp"
#include "cyciso/special.hpp"

using nlohmann::json;
using namespace cyciso;

namespace {

CycleFamily parse_family(const std::string& name) {
    if (name == "c") return CycleFamily::all();
    if (name == "cprime") return CycleFamily::non_triangle();
    if (name == "c4") return CycleFamily::fixed(4);
    throw std::invalid_argument("--family: expected one of c, cprime, c4, got '" + name + "'");
}

bool thm3_extremal(const std::string& cls) {
    return cls == "pure-special-c4" || cls == "diamond" || cls == "c5";
}

int run_exact(const std::string& input, const std::string& family, bool naive, std::optional<int> budget) {
    CycleFamily fam = parse_family(family);
    for (const Graph& g : load_graphs(input)) {
        json rec;
        rec["id"] = encode_graph6(g);
        rec["n"] = g.vertex_count();
        rec["m"] = g.edge_count();
        rec["family"] = fam.name();
        if (naive) {
            IsolationResult r = isolation_number_naive(g, fam);
            rec["iota"] = r.size;
            rec["witness"] = r.witness.ids();
            rec["optimal"] = true;
        } else {
            auto r = isolation_number(g, fam, budget);
            if (!r) {
                rec["status"] = "exceeds-budget";
                rec["budget"] = *budget;
            } else {
                rec["iota"] = r->size;
                rec["witness"] = r->witness.ids();
                rec["optimal"] = true;
            }
        }
        std::cout << rec.dump() << '\n';
    }
    return 0;
}

int run_construct(const std::string& input) {
    for (const Graph& g : load_graphs(input)) {
        ConstructionResult r = construct_isolating_set(g);
        json rec;
        rec["id"] = encode_graph6(g);
        rec["n"] = g.vertex_count();
        rec["m"] = g.edge_count();
        rec["size"] = r.set.size();
        rec["set"] = r.set.ids();
        rec["cases"] = r.trace.labels();
        rec["class"] = equality_class(g);
        rec["tight"] = 6 * r.set.size() == g.edge_count() + 1;
        std::cout << rec.dump() << '\n';
    }
    return 0;
}

int run_census_cmd(int max_n, const std::string& input, const std::string& families,
                   const std::string& checks, bool no_timings) {
    std::vector<Graph> graphs;
    if (!input.empty()) {
        graphs = read_graph6_file(input);
    } else {
        graphs = enumerate_connected(max_n);
    }
    CensusOptions opts;
    if (!families.empty()) {
        opts.families.clear();
        std::istringstream fs(families);
        std::string tok;
        while (std::getline(fs, tok, ',')) opts.families.push_back(parse_family(tok));
    }
    if (!checks.empty()) {
        opts.check_thm1 = checks.find("thm1") != std::string::npos;
        opts.check_thm2 = checks.find("thm2") != std::string::npos;
        opts.check_thm3 = checks.find("thm3") != std::string::npos;
        opts.check_c4cor = checks.find("c4cor") != std::string::npos;
    }
    opts.with_timings = !no_timings;
    CensusSummary s = run_census(graphs, opts, std::cout);
    return s.exit_code();
}

int run_gen_special(const std::string& base, int m, bool pure, std::uint64_t seed, const std::string& out) {
    Graph base_graph = Graph::cycle(base == "c3" ? 3 : 4);
    auto [spec, g] = random_special(base_graph, m, pure, seed);
    std::string g6 = encode_graph6(g);
    json rec;
    rec["g6"] = g6;
    rec["n"] = g.vertex_count();
    rec["m"] = g.edge_count();
    rec["q"] = spec.q;
    rec["r"] = spec.r;
    rec["pure"] = spec.pure();
    rec["seed"] = seed;
    std::cout << rec.dump() << '\n';
    if (!out.empty()) {
        std::ofstream f(out);
        if (!f) throw format_error("cannot open " + out + " for writing");
        f << g6 << '\n';
    }
    return 0;
}

int run_recognize(const std::string& input) {
    for (const Graph& g : load_graphs(input)) {
        json rec;
        rec["id"] = encode_graph6(g);
        rec["n"] = g.vertex_count();
        rec["m"] = g.edge_count();
        std::string cls = equality_class(g);
        rec["class"] = cls;
        if (cls == "pure-special-c4")
            rec["q"] = recognize_pure_special(g, Graph::cycle(4))->q;
        else if (cls == "pure-special-c3")
            rec["q"] = recognize_pure_special(g, Graph::cycle(3))->q;
        std::cout << rec.dump() << '\n';
    }
    return 0;
}

int run_verify_constructive(const std::string& input, int random_count, int max_n, std::uint64_t seed) {
    std::vector<Graph> graphs;
    if (!input.empty()) {
        graphs = read_graph6_file(input);
    } else {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<int> pick_n(2, max_n);
        const double densities[] = {0.05, 0.1, 0.2, 0.4};
        for (int i = 0; i < random_count; ++i)
            graphs.push_back(random_connected_graph(pick_n(rng), densities[i % 4], rng));
    }
    long long violations = 0, checked = 0, skipped = 0;
    for (const Graph& input_graph : graphs) {
        for (const Subgraph& comp : components(input_graph)) {
            const Graph& g = comp.graph;
            json rec;
            rec["id"] = encode_graph6(g);
            rec["n"] = g.vertex_count();
            rec["m"] = g.edge_count();
            std::string cls = equality_class(g);
            if (cls == "c4") {
                rec["skipped"] = "c4";
                ++skipped;
                std::cout << rec.dump() << '\n';
                continue;
            }
            ++checked;
            try {
                ConstructionResult r = construct_isolating_set(g);
                int m = g.edge_count();
                bool p1 = is_isolating(g, CycleFamily::non_triangle(), r.set);
                bool p2 = 6 * r.set.size() <= m + 1;
                bool extremal = thm3_extremal(cls);
                bool p3 = extremal || 6 * r.set.size() <= m;
                rec["size"] = r.set.size();
                rec["set"] = r.set.ids();
                rec["cases"] = r.trace.labels();
                rec["p1"] = p1;
                rec["p2"] = p2;
                if (extremal)
                    rec["p3"] = "na";
                else
                    rec["p3"] = p3;
                if (!p1 || !p2 || !p3) ++violations;
            } catch (const internal_error& e) {
                rec["error"] = e.what();
                ++violations;
            }
            std::cout << rec.dump() << '\n';
        }
    }
    json foot;
    foot["summary"] = true;
    foot["checked"] = checked;
    foot["skipped"] = skipped;
    foot["violations"] = violations;
    std::cout << foot.dump() << '\n';
    return violations == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact and constructive cycle-isolation toolkit"};
    app.require_subcommand(1);

    auto* exact_cmd = app.add_subcommand("exact", "exact isolation number of each input graph");
    std::string exact_family = "cprime", exact_input;
    bool exact_naive = false;
    int exact_budget = -1;
    exact_cmd->add_option("--family", exact_family, "cycle family: c, cprime, or c4");
    exact_cmd->add_flag("--naive", exact_naive, "use the subset-enumeration oracle");
    exact_cmd->add_option("--budget", exact_budget, "cap on the set size");
    exact_cmd->add_option("input", exact_input, "edge-list file or .g6 file")->required();

    auto* construct_cmd = app.add_subcommand("construct", "bounded isolating set with case trace");
    std::string construct_input;
    construct_cmd->add_option("input", construct_input, "edge-list file or .g6 file")->required();

    auto* census_cmd = app.add_subcommand("census", "verify the bounds over many graphs");
    int census_max_n = 6;
    std::string census_input, census_families, census_checks;
    bool census_no_timings = false;
    census_cmd->add_option("--max-n", census_max_n, "enumerate all connected graphs up to this size");
    census_cmd->add_option("--input", census_input, "graph6 file instead of built-in enumeration");
    census_cmd->add_option("--families", census_families, "comma list of c,cprime,c4");
    census_cmd->add_option("--checks", census_checks, "comma list of thm1,thm2,thm3,c4cor");
    census_cmd->add_flag("--no-timings", census_no_timings, "omit the ms field for diffable output");

    auto* gen_cmd = app.add_subcommand("gen-special", "seeded random special graph");
    std::string gen_base = "c4", gen_out;
    int gen_m = 11;
    bool gen_pure = false;
    std::uint64_t gen_seed = 0;
    gen_cmd->add_option("--base", gen_base, "base cycle: c3 or c4")
        ->check(CLI::IsMember({"c3", "c4"}));
    gen_cmd->add_option("--m", gen_m, "edge count")->required();
    gen_cmd->add_flag("--pure", gen_pure, "require an edgeless remainder");
    gen_cmd->add_option("--seed", gen_seed, "rng seed");
    gen_cmd->add_option("--out", gen_out, "also write a .g6 file");

    auto* rec_cmd = app.add_subcommand("recognize", "structure classification of each input graph");
    std::string rec_input;
    rec_cmd->add_option("input", rec_input, "edge-list file or .g6 file")->required();

    auto* verify_cmd = app.add_subcommand("verify-constructive", "check the constructive contract");
    std::string verify_input;
    int verify_count = 100, verify_max_n = 20;
    std::uint64_t verify_seed = 0;
    verify_cmd->add_option("--input", verify_input, "graph6 file");
    verify_cmd->add_option("--random", verify_count, "number of random connected graphs");
    verify_cmd->add_option("--max-n", verify_max_n, "largest random graph");
    verify_cmd->add_option("--seed", verify_seed, "rng seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(exact_cmd))
            return run_exact(exact_input, exact_family, exact_naive,
                             exact_budget >= 0 ? std::optional<int>(exact_budget) : std::nullopt);
        if (app.got_subcommand(construct_cmd)) return run_construct(construct_input);
        if (app.got_subcommand(census_cmd))
            return run_census_cmd(census_max_n, census_input, census_families, census_checks,
                                  census_no_timings);
        if (app.got_subcommand(gen_cmd)) return run_gen_special(gen_base, gen_m, gen_pure, gen_seed, gen_out);
        if (app.got_subcommand(rec_cmd)) return run_recognize(rec_input);
        if (app.got_subcommand(verify_cmd))
            return run_verify_constructive(verify_input, verify_count, verify_max_n, verify_seed);
    } catch (const format_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const internal_error& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
