// jc: exact J-colouring toolkit.
//
//   jc compute  --family cycle --n 6
//   jc derive   --kind central --family path --n 4
//   jc combine  --op corona --family complete --n 3 --family2 path --n2 2
//   jc extremal --family complete --n 4 --k 3
//   jc verify   [--config cfg.json] [--out report.json]
//   jc table    --family cycle --n-from 3 --n-to 12
//
// Exit codes: 0 success, 1 hard-assert failure, 2 usage error, 3 scale refusal.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "jc/coloring.hpp"
#include "jc/extremal.hpp"
#include "jc/graph.hpp"
#include "jc/graph_io.hpp"
#include "jc/graph_ops.hpp"
#include "jc/rainbow.hpp"
#include "jc/verify.hpp"

namespace {

using nlohmann::ordered_json;

struct GraphSpec {
    std::string family;
    int n = 0;
    int m = 0;
    double prob = 0.5;
    std::uint32_t seed = 1;
    std::string input_path;
    std::string graph6;
};

void add_graph_options(CLI::App* cmd, GraphSpec& spec, const std::string& suffix = "") {
    auto opt = [&](std::string name) { return "--" + name + suffix; };
    cmd->add_option(opt("family"), spec.family,
                    "family: path | cycle | complete | star | complete_bipartite | null | random_tree");
    cmd->add_option(opt("n"), spec.n, "family order parameter");
    cmd->add_option(opt("m"), spec.m, "second parameter (complete_bipartite)");
    cmd->add_option(opt("p"), spec.prob, "edge probability (random family)");
    cmd->add_option(opt("seed"), spec.seed, "seed (tree/random family)");
    cmd->add_option(opt("input"), spec.input_path, "read an edge-list file (first line: order)");
    cmd->add_option(opt("graph6"), spec.graph6, "graph6 string");
}

jc::Graph build_graph(const GraphSpec& spec) {
    int sources = !spec.family.empty() + !spec.input_path.empty() + !spec.graph6.empty();
    if (sources != 1)
        throw jc::error("give exactly one of --family, --input, --graph6");
    if (!spec.input_path.empty()) {
        std::ifstream in(spec.input_path);
        if (!in)
            throw jc::error("cannot open " + spec.input_path);
        std::ostringstream text;
        text << in.rdbuf();
        return jc::parse_graph(text.str(), jc::GraphFormat::edge_list);
    }
    if (!spec.graph6.empty())
        return jc::parse_graph(spec.graph6, jc::GraphFormat::graph6);
    auto fam = jc::family_from_string(spec.family);
    if (!fam)
        throw jc::error("unknown family: " + spec.family);
    switch (*fam) {
    case jc::Family::path: return jc::path_graph(spec.n);
    case jc::Family::cycle: return jc::cycle_graph(spec.n);
    case jc::Family::complete: return jc::complete_graph(spec.n);
    case jc::Family::star: return jc::star_graph(spec.n);
    case jc::Family::complete_bipartite: return jc::complete_bipartite_graph(spec.n, spec.m);
    case jc::Family::null_family: return jc::null_graph(spec.n);
    case jc::Family::random_tree: return jc::random_tree(spec.n, spec.seed);
    }
    throw jc::error("unknown family: " + spec.family);
}

std::string family_label(const GraphSpec& spec) {
    if (!spec.family.empty())
        return spec.family + "(" + std::to_string(spec.n) + ")";
    if (!spec.input_path.empty())
        return spec.input_path;
    return spec.graph6;
}

std::string witness_line(const jc::Colouring& c) {
    std::ostringstream out;
    for (std::size_t v = 0; v < c.colour_of.size(); ++v)
        out << (v ? " " : "") << c.colour_of[v];
    return out.str();
}

ordered_json witness_json(const jc::Colouring& c) {
    return ordered_json{{"k", c.k}, {"colours", c.colour_of}};
}

int run_compute(const GraphSpec& spec, const std::string& mode, const std::string& format, int cap) {
    jc::Graph g = build_graph(spec);
    auto all = jc::j_profile(g, jc::Mode::all_vertices, cap);
    auto internal = jc::j_profile(g, jc::Mode::internal_only, cap);
    auto chi = jc::chromatic_number(g);
    std::optional<jc::RainbowCount> rcount;
    if (g.order() <= cap)
        rcount = jc::rainbow_neighbourhood_number(g, cap);

    const bool want_all = mode != "internal";
    const bool want_internal = mode != "all";
    if (format == "json") {
        ordered_json out;
        out["graph"] = {{"order", g.order()}, {"size", g.size()}};
        out["chi"] = chi.chi;
        if (rcount)
            out["r_chi"] = rcount->canonical;
        if (want_all) {
            out["J"] = all.j_value ? ordered_json(*all.j_value) : ordered_json(nullptr);
            out["feasible_k"] = all.feasible_k;
            if (all.j_value)
                out["J_witness"] = witness_json(all.witnesses.at(*all.j_value));
        }
        if (want_internal) {
            out["J_star"] = internal.j_value ? ordered_json(*internal.j_value) : ordered_json(nullptr);
            if (internal.j_value)
                out["J_star_witness"] = witness_json(internal.witnesses.at(*internal.j_value));
        }
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::cout << "graph: " << family_label(spec) << "  order=" << g.order() << " size=" << g.size()
              << "\n";
    std::cout << "chi = " << chi.chi << "\n";
    if (rcount)
        std::cout << "r_chi = " << rcount->canonical << "\n";
    if (want_all) {
        if (all.j_value) {
            std::cout << "J = " << *all.j_value << "\n";
            std::cout << "J witness: " << witness_line(all.witnesses.at(*all.j_value)) << "\n";
        } else {
            std::cout << "J: no J-colouring\n";
        }
    }
    if (want_internal) {
        if (internal.j_value) {
            std::cout << "J* = " << *internal.j_value << "\n";
            std::cout << "J* witness: " << witness_line(internal.witnesses.at(*internal.j_value))
                      << "\n";
        } else {
            std::cout << "J*: no J*-colouring\n";
        }
    }
    return 0;
}

int emit_graph(const jc::Graph& g, const std::string& format) {
    if (format == "json") {
        ordered_json edges = ordered_json::array();
        for (auto [a, b] : g.edges())
            edges.push_back({a, b});
        ordered_json out{{"order", g.order()}, {"size", g.size()}, {"edges", edges},
                         {"graph6", jc::serialize_graph(g, jc::GraphFormat::graph6)}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << jc::serialize_graph(g, jc::GraphFormat::edge_list);
    }
    return 0;
}

int run_extremal(const GraphSpec& spec, std::optional<int> k, const std::string& semantics_name,
                 int edge_cap, const std::string& format) {
    jc::Graph g = build_graph(spec);
    auto semantics = semantics_name == "plain" ? jc::RemovalSemantics::plain
                                               : jc::RemovalSemantics::connected_for_k_ge_2;
    auto j = jc::j_number(g);
    if (!j) {
        auto repair = jc::minimal_repair(g, edge_cap);
        if (format == "json") {
            ordered_json removed = ordered_json::array();
            for (auto [a, b] : repair.removed)
                removed.push_back({a, b});
            std::cout << ordered_json{{"admits_J", false},
                                      {"repair_size", repair.removed.size()},
                                      {"repair", removed},
                                      {"repaired_J", repair.repaired_j}}
                             .dump(2)
                      << "\n";
        } else {
            std::cout << "no J-colouring; minimal repair removes " << repair.removed.size()
                      << " edge(s) reaching J = " << repair.repaired_j << "\n";
        }
        return 0;
    }
    auto row_json = [&](int kk, const std::optional<jc::ExtremalResult>& lo,
                        const std::optional<jc::ExtremalResult>& hi) {
        ordered_json row{{"k", kk}};
        row["r_minus"] = lo ? ordered_json(lo->count) : ordered_json(nullptr);
        row["r_plus"] = hi ? ordered_json(hi->count) : ordered_json(nullptr);
        return row;
    };
    if (k) {
        auto lo = jc::r_minus(g, *k, semantics, edge_cap);
        auto hi = jc::r_plus(g, *k, semantics, edge_cap);
        if (format == "json") {
            std::cout << row_json(*k, lo, hi).dump(2) << "\n";
        } else if (format == "csv") {
            std::cout << "k,r_minus,r_plus\n" << *k << "," << (lo ? std::to_string(lo->count) : "")
                      << "," << (hi ? std::to_string(hi->count) : "") << "\n";
        } else {
            std::cout << "k = " << *k << ": r- = " << (lo ? std::to_string(lo->count) : "undefined")
                      << ", r+ = " << (hi ? std::to_string(hi->count) : "undefined") << "\n";
            if (lo) {
                std::cout << "r- witness:";
                for (auto [a, b] : lo->witness)
                    std::cout << " (" << a << "," << b << ")";
                std::cout << "\n";
            }
        }
        return 0;
    }
    auto profile = jc::bonding_profile(g, semantics, edge_cap);
    if (format == "json") {
        ordered_json rows = ordered_json::array();
        for (const auto& row : profile.rows) {
            auto rj = row_json(row.k, row.minus, row.plus);
            rj["stage_minus"] = row.stage_minus ? ordered_json(*row.stage_minus) : ordered_json(nullptr);
            rj["cumulative_minus"] =
                row.cumulative_minus ? ordered_json(*row.cumulative_minus) : ordered_json(nullptr);
            rows.push_back(rj);
        }
        std::cout << ordered_json{{"J", *j}, {"rows", rows}}.dump(2) << "\n";
    } else {
        const char* sep = format == "csv" ? "," : "  ";
        std::cout << "k" << sep << "r_minus" << sep << "r_plus" << sep << "stage" << sep
                  << "cumulative\n";
        auto cell = [](const std::optional<int>& v) { return v ? std::to_string(*v) : ""; };
        for (const auto& row : profile.rows) {
            std::cout << row.k << sep
                      << (row.minus ? std::to_string(row.minus->count) : "") << sep
                      << (row.plus ? std::to_string(row.plus->count) : "") << sep
                      << cell(row.stage_minus) << sep << cell(row.cumulative_minus) << "\n";
        }
    }
    return 0;
}

int run_verify(const std::string& config_path, const std::string& out_path,
               const std::string& format) {
    jc::CorpusConfig cfg;
    if (!config_path.empty()) {
        std::ifstream in(config_path);
        if (!in)
            throw jc::error("cannot open " + config_path);
        std::ostringstream text;
        text << in.rdbuf();
        cfg = jc::CorpusConfig::from_json_text(text.str());
    }
    auto report = jc::run_verification(cfg);
    std::string rendered = format == "json" ? report.to_json() : report.to_text();
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        out << rendered;
        std::cerr << "report written to " << out_path << "\n";
    } else {
        std::cout << rendered;
    }
    std::cerr << "summary: " << report.confirmed << " confirmed, " << report.refuted
              << " refuted, " << report.report_only << " report-only\n";
    return report.hard_failure() ? 1 : 0;
}

int run_table(const std::string& family, int n_from, int n_to, const std::string& format, int cap) {
    auto fam = jc::family_from_string(family);
    if (!fam)
        throw jc::error("unknown family: " + family);
    ordered_json rows = ordered_json::array();
    if (format != "json")
        std::cout << "family,n,chi,J,J_star\n";
    for (int n = n_from; n <= n_to; ++n) {
        GraphSpec spec;
        spec.family = family;
        spec.n = n;
        jc::Graph g = build_graph(spec);
        int chi = jc::chromatic_number(g).chi;
        auto j = jc::j_number(g, cap);
        auto js = jc::j_star_number(g, cap);
        if (format == "json") {
            rows.push_back({{"family", family},
                            {"n", n},
                            {"chi", chi},
                            {"J", j ? ordered_json(*j) : ordered_json(nullptr)},
                            {"J_star", js ? ordered_json(*js) : ordered_json(nullptr)}});
        } else {
            std::cout << family << "," << n << "," << chi << "," << (j ? std::to_string(*j) : "")
                      << "," << (js ? std::to_string(*js) : "") << "\n";
        }
    }
    if (format == "json")
        std::cout << rows.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact J-colouring toolkit"};
    app.require_subcommand(1);

    std::string format = "text";
    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "json", "csv"}));
    };

    GraphSpec spec, spec2;
    std::string mode = "both";
    int cap = jc::default_profile_cap;
    auto* compute = app.add_subcommand("compute", "chi, r_chi, J, J* and witnesses");
    add_format(compute);
    add_graph_options(compute, spec);
    compute->add_option("--mode", mode, "all | internal | both")
        ->check(CLI::IsMember({"all", "internal", "both"}));
    compute->add_option("--cap", cap, "order cap for the profile sweep");

    std::string kind;
    auto* derive = app.add_subcommand("derive", "derived graph of an input graph");
    add_format(derive);
    add_graph_options(derive, spec);
    derive->add_option("--kind", kind,
                       "complement | line | jump | middle | total | central | subdivision")
        ->required();

    std::string op;
    auto* combine = app.add_subcommand("combine", "binary operation on two graphs");
    add_format(combine);
    add_graph_options(combine, spec);
    add_graph_options(combine, spec2, "2");
    combine->add_option("--op", op, "disjoint_union | join | corona | cartesian")->required();

    std::optional<int> k;
    std::string semantics = "connected";
    int edge_cap = jc::default_edge_cap;
    auto* extremal = app.add_subcommand("extremal", "edge-removal bonding numbers");
    add_format(extremal);
    add_graph_options(extremal, spec);
    extremal->add_option("--k", k, "target J value (omit for the full table)");
    extremal->add_option("--semantics", semantics, "plain | connected")
        ->check(CLI::IsMember({"plain", "connected"}));
    extremal->add_option("--edge-cap", edge_cap, "edge cap for subset search");

    std::string config_path, out_path;
    auto* verify = app.add_subcommand("verify", "run the claim-verification harness");
    add_format(verify);
    verify->add_option("--config", config_path, "corpus config (json)");
    verify->add_option("--out", out_path, "write the report to a file");

    std::string family;
    int n_from = 0, n_to = 0;
    auto* table = app.add_subcommand("table", "J/J* across a family range");
    add_format(table);
    table->add_option("--family", family, "graph family")->required();
    table->add_option("--n-from", n_from, "first order")->required();
    table->add_option("--n-to", n_to, "last order")->required();
    table->add_option("--cap", cap, "order cap for the profile sweep");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (compute->parsed())
            return run_compute(spec, mode, format, cap);
        if (derive->parsed()) {
            auto dk = jc::derivative_kind_from_string(kind);
            if (!dk)
                throw jc::error("unknown derivative kind: " + kind);
            return emit_graph(jc::derive(build_graph(spec), *dk), format);
        }
        if (combine->parsed()) {
            auto ck = jc::combine_kind_from_string(op);
            if (!ck)
                throw jc::error("unknown operation: " + op);
            return emit_graph(jc::combine(build_graph(spec), build_graph(spec2), *ck), format);
        }
        if (extremal->parsed())
            return run_extremal(spec, k, semantics, edge_cap, format);
        if (verify->parsed())
            return run_verify(config_path, out_path, format);
        if (table->parsed())
            return run_table(family, n_from, n_to, format, cap);
    } catch (const jc::scale_error& e) {
        std::cerr << "scale refusal: " << e.what() << "\n";
        return 3;
    } catch (const jc::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
