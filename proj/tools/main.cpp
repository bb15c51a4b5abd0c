#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "stressfree/catalog.hpp"
#include "stressfree/certify.hpp"
#include "stressfree/generic.hpp"
#include "stressfree/graph.hpp"
#include "stressfree/minors.hpp"
#include "stressfree/rigidity.hpp"
#include "stressfree/shifting.hpp"

using json = nlohmann::ordered_json;
using namespace sf;

namespace {

struct CommonOpts {
    uint64_t seed = kDefaultSeed;
    int trials = kDefaultTrials;
    bool as_json = false;
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool randomized = true) {
    if (randomized) {
        cmd->add_option("--seed", opts.seed, "Base seed (default " +
                                                 std::to_string(kDefaultSeed) + ")");
        cmd->add_option("--trials", opts.trials, "Independent trials (default 3)")
            ->check(CLI::PositiveNumber);
    }
    cmd->add_flag("--json", opts.as_json, "Machine-readable JSON output");
}

// A graph argument is a path when such a file exists, otherwise a catalog name.
Graph load_graph(const std::string& src) {
    if (std::filesystem::exists(src)) return read_edge_list_file(src);
    if (catalog_has(src)) return catalog_get(src);
    throw std::invalid_argument("no such file or catalog graph: " + src);
}

json input_block(const std::string& src, const Graph& g) {
    return json{{"source", src},
                {"n", g.vertex_count()},
                {"e", g.edge_count()},
                {"digest", graph_digest(g)}};
}

void print_input(const std::string& src, const Graph& g) {
    std::cout << "input: " << src << " (n=" << g.vertex_count()
              << ", e=" << g.edge_count() << ", digest=" << graph_digest(g) << ")\n";
}

json branch_sets_json(const MinorWitness& w) {
    json sets = json::array();
    for (const auto& s : w.branch_sets) sets.push_back(s);
    return sets;
}

std::string branch_sets_text(const MinorWitness& w) {
    std::string out = "[";
    for (size_t i = 0; i < w.branch_sets.size(); ++i) {
        if (i) out += ",";
        out += "[";
        for (size_t j = 0; j < w.branch_sets[i].size(); ++j) {
            if (j) out += ",";
            out += std::to_string(w.branch_sets[i][j]);
        }
        out += "]";
    }
    return out + "]";
}

bool parse_genus(const std::string& text, long long& num, long long& den) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            num = std::stoll(text);
            den = 1;
        } else {
            num = std::stoll(text.substr(0, slash));
            den = std::stoll(text.substr(slash + 1));
        }
    } catch (const std::exception&) {
        return false;
    }
    return den != 0;
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    long long ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start)
            .count();
    }
};

void emit(const CommonOpts& opts, const json& report, const std::string& human) {
    if (opts.as_json)
        std::cout << report.dump(2) << '\n';
    else
        std::cout << human;
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

}  // namespace

namespace {

int run_app(int argc, char** argv) {
    CLI::App app{"Generic graph rigidity, algebraic shifting, minors and certificates"};
    app.require_subcommand(1);

    // ---- rigidity ----
    std::string rig_file;
    int rig_d = 0;
    CommonOpts rig_opts;
    auto* rig = app.add_subcommand("rigidity", "Generic d-rigidity and d-stress report");
    rig->add_option("file", rig_file, "Edge-list file or catalog name")->required();
    rig->add_option("-d", rig_d, "Ambient dimension")->required()->check(CLI::PositiveNumber);
    add_common(rig, rig_opts);
    rig->callback([&] {
        Timer t;
        Graph g = load_graph(rig_file);
        auto rep = analyze_rigidity(g, rig_d, rig_opts.trials, rig_opts.seed);
        json out{{"command", "rigidity"},
                 {"input", input_block(rig_file, g)},
                 {"params", {{"d", rig_d}, {"trials", rig_opts.trials}, {"seed", rig_opts.seed}}},
                 {"seeds", rep.seeds},
                 {"results",
                  {{"rank", rep.rank},
                   {"target_rank", rep.target_rank},
                   {"stress_dim", rep.stress_dim},
                   {"stress_free", rep.is_stress_free},
                   {"rigid", rep.is_rigid}}},
                 {"time_ms", t.ms()}};
        std::string human;
        if (!rig_opts.as_json) {
            print_input(rig_file, g);
            std::cout << "d: " << rig_d << "  trials: " << rep.trials << "  seeds:";
            for (auto s : rep.seeds) std::cout << ' ' << s;
            std::cout << "\nrank: " << rep.rank << "  target: " << rep.target_rank
                      << "  stress_dim: " << rep.stress_dim << '\n'
                      << "stress_free: " << yesno(rep.is_stress_free)
                      << "  rigid: " << yesno(rep.is_rigid) << '\n'
                      << "time_ms: " << t.ms() << '\n';
        }
        emit(rig_opts, out, human);
    });

    // ---- shift ----
    std::string sh_file, sh_kind = "exterior";
    CommonOpts sh_opts;
    auto* sh = app.add_subcommand("shift", "Exterior or symmetric algebraic shifting");
    sh->add_option("file", sh_file, "Edge-list file or catalog name")->required();
    sh->add_option("--kind", sh_kind, "exterior|symmetric")
        ->check(CLI::IsMember({"exterior", "symmetric"}));
    add_common(sh, sh_opts);
    sh->callback([&] {
        Timer t;
        Graph g = load_graph(sh_file);
        ShiftKind kind = sh_kind == "exterior" ? ShiftKind::exterior : ShiftKind::symmetric;
        auto s = shift(g, kind, sh_opts.trials, sh_opts.seed);
        int chi = chromatic_of_shifted(s);
        json edges = json::array();
        for (auto [a, b] : s.edges) edges.push_back(json::array({a, b}));
        json out{{"command", "shift"},
                 {"input", input_block(sh_file, g)},
                 {"params",
                  {{"kind", to_string(kind)}, {"trials", sh_opts.trials}, {"seed", sh_opts.seed}}},
                 {"seeds", s.seeds},
                 {"results",
                  {{"kind", to_string(kind)},
                   {"n", s.n},
                   {"vertices_kept", s.vertices_kept},
                   {"edge_count", static_cast<int>(s.edges.size())},
                   {"edges", edges},
                   {"chromatic", chi},
                   {"degenerate_flagged", s.degenerate_flagged}}},
                 {"time_ms", t.ms()}};
        if (!sh_opts.as_json) {
            print_input(sh_file, g);
            std::cout << "kind: " << to_string(kind) << "  trials: " << s.trials
                      << "  seeds:";
            for (auto sd : s.seeds) std::cout << ' ' << sd;
            std::cout << "\nshifted edges (" << s.edges.size() << "):\n";
            for (auto [a, b] : s.edges) std::cout << "  " << a << ' ' << b << '\n';
            std::cout << "chromatic: " << chi << '\n';
            if (s.degenerate_flagged) std::cout << "warning: degenerate trial discarded\n";
            std::cout << "time_ms: " << t.ms() << '\n';
        }
        emit(sh_opts, out, "");
    });

    // ---- minor ----
    std::string mn_file, mn_pattern;
    uint64_t mn_budget = 100'000'000;
    CommonOpts mn_opts;
    auto* mn = app.add_subcommand("minor", "Minor detection with branch-set witness");
    mn->add_option("file", mn_file, "Host edge-list file or catalog name")->required();
    mn->add_option("--pattern", mn_pattern, "Pattern: catalog name or edge-list file")
        ->required();
    mn->add_option("--budget", mn_budget, "Search node budget");
    add_common(mn, mn_opts, false);
    mn->callback([&] {
        Timer t;
        Graph g = load_graph(mn_file);
        Graph h = load_graph(mn_pattern);
        auto w = has_minor(g, h, mn_budget);
        json out{{"command", "minor"},
                 {"input", input_block(mn_file, g)},
                 {"params", {{"pattern", mn_pattern}, {"pattern_n", h.vertex_count()},
                             {"pattern_e", h.edge_count()}, {"budget", mn_budget}}},
                 {"results",
                  {{"found", w.has_value()},
                   {"branch_sets", w ? branch_sets_json(*w) : json(nullptr)}}},
                 {"time_ms", t.ms()}};
        if (!mn_opts.as_json) {
            print_input(mn_file, g);
            std::cout << "pattern: " << mn_pattern << " (n=" << h.vertex_count()
                      << ", e=" << h.edge_count() << ")\n";
            if (w)
                std::cout << "minor: found\nbranch_sets: " << branch_sets_text(*w) << '\n';
            else
                std::cout << "minor: none\n";
            std::cout << "time_ms: " << t.ms() << '\n';
        }
        emit(mn_opts, out, "");
    });

    // ---- linkless ----
    std::string lk_file;
    CommonOpts lk_opts;
    auto* lk = app.add_subcommand("linkless", "Linkless embeddability (forbidden minors)");
    lk->add_option("file", lk_file, "Edge-list file or catalog name")->required();
    add_common(lk, lk_opts, false);
    lk->callback([&] {
        Timer t;
        Graph g = load_graph(lk_file);
        auto rep = is_linkless(g);
        json out{{"command", "linkless"},
                 {"input", input_block(lk_file, g)},
                 {"results",
                  {{"linkless", rep.linkless},
                   {"family_index", rep.family_index},
                   {"obstruction",
                    rep.obstruction ? branch_sets_json(*rep.obstruction) : json(nullptr)}}},
                 {"time_ms", t.ms()}};
        if (!lk_opts.as_json) {
            print_input(lk_file, g);
            std::cout << "linkless: " << yesno(rep.linkless) << '\n';
            if (rep.obstruction)
                std::cout << "obstruction: petersen_family_" << (rep.family_index + 1)
                          << " minor, branch_sets: " << branch_sets_text(*rep.obstruction)
                          << '\n';
            std::cout << "time_ms: " << t.ms() << '\n';
        }
        emit(lk_opts, out, "");
    });

    // ---- certify ----
    std::string cf_file;
    int cf_r = 0;
    bool cf_verify = false, cf_deep = false;
    CommonOpts cf_opts;
    auto* cf = app.add_subcommand(
        "certify", "Stress-freeness certificate or K_r minor witness");
    cf->add_option("file", cf_file, "Edge-list file or catalog name")->required();
    cf->add_option("-r", cf_r, "Clique order r (2..6)")->required();
    cf->add_flag("--verify", cf_verify, "Replay the certificate with numeric leaf checks");
    cf->add_flag("--deep", cf_deep, "With --verify: numeric checks at every node");
    add_common(cf, cf_opts);
    cf->callback([&] {
        Timer t;
        Graph g = load_graph(cf_file);
        auto outcome = certify(g, cf_r, cf_opts.trials, cf_opts.seed);
        json results;
        std::string cert_text;
        json verify_block(nullptr);
        if (outcome.certificate) {
            cert_text = serialize_certificate(*outcome.certificate);
            results["outcome"] = "certificate";
            results["certificate"] = cert_text;
            results["witness"] = nullptr;
        } else {
            results["outcome"] = "witness";
            results["certificate"] = nullptr;
            results["witness"] = branch_sets_json(*outcome.witness);
        }
        bool verify_ok = true;
        std::string verify_reason;
        if (cf_verify && outcome.certificate) {
            auto rr = replay_certificate(g, *outcome.certificate, true, cf_deep);
            verify_ok = rr.ok;
            verify_reason = rr.ok ? "" : rr.node_path + ": " + rr.reason;
            verify_block = json{{"ok", rr.ok}, {"reason", verify_reason}};
        } else if (cf_verify && outcome.witness) {
            verify_ok = verify_minor_witness(g, outcome.witness->pattern, *outcome.witness);
            verify_block = json{{"ok", verify_ok}, {"reason", ""}};
        }
        results["verify"] = verify_block;
        json out{{"command", "certify"},
                 {"input", input_block(cf_file, g)},
                 {"params",
                  {{"r", cf_r}, {"trials", cf_opts.trials}, {"seed", cf_opts.seed},
                   {"verify", cf_verify}, {"deep", cf_deep}}},
                 {"results", results},
                 {"time_ms", t.ms()}};
        if (!cf_opts.as_json) {
            print_input(cf_file, g);
            if (outcome.certificate) {
                std::cout << "outcome: certificate\n" << cert_text;
            } else {
                std::cout << "outcome: witness (K_" << cf_r << " minor)\n"
                          << "branch_sets: " << branch_sets_text(*outcome.witness) << '\n';
            }
            if (!verify_block.is_null())
                std::cout << "verify: " << (verify_ok ? "ok" : "FAILED " + verify_reason)
                          << '\n';
            std::cout << "time_ms: " << t.ms() << '\n';
        }
        emit(cf_opts, out, "");
        if (!verify_ok) throw std::runtime_error("certificate verification failed");
    });

    // ---- surface ----
    std::string sf_file, sf_genus, sf_kind = "symmetric";
    CommonOpts sf_opts;
    auto* sfc = app.add_subcommand("surface", "Shifting-based surface embedding obstruction");
    sfc->add_option("file", sf_file, "Edge-list file or catalog name")->required();
    sfc->add_option("--genus", sf_genus, "Surface genus, e.g. 1 or 1/2")->required();
    sfc->add_option("--kind", sf_kind, "exterior|symmetric")
        ->check(CLI::IsMember({"exterior", "symmetric"}));
    add_common(sfc, sf_opts);
    sfc->callback([&] {
        Timer t;
        long long num = 0, den = 1;
        if (!parse_genus(sf_genus, num, den))
            throw CLI::ValidationError("--genus", "expected a rational like 1 or 1/2");
        Graph g = load_graph(sf_file);
        ShiftKind kind = sf_kind == "exterior" ? ShiftKind::exterior : ShiftKind::symmetric;
        auto v = surface_obstruction(g, num, den, kind, sf_opts.trials, sf_opts.seed);
        json out{{"command", "surface"},
                 {"input", input_block(sf_file, g)},
                 {"params",
                  {{"genus", sf_genus}, {"kind", to_string(kind)},
                   {"trials", sf_opts.trials}, {"seed", sf_opts.seed}}},
                 {"results",
                  {{"heawood", v.heawood},
                   {"tested_r", v.tested_r},
                   {"reduced_n", v.reduced_n},
                   {"pair_present", v.pair_present},
                   {"obstructed", v.obstructed}}},
                 {"time_ms", t.ms()}};
        if (!sf_opts.as_json) {
            print_input(sf_file, g);
            std::cout << "genus: " << sf_genus << "  heawood: " << v.heawood
                      << "  kind: " << to_string(kind) << '\n'
                      << "obstructed: " << yesno(v.obstructed) << "  (pair {"
                      << v.tested_r - 1 << "," << v.tested_r
                      << "} present: " << yesno(v.pair_present)
                      << ", reduced_n: " << v.reduced_n << ")\n"
                      << "time_ms: " << t.ms() << '\n';
        }
        emit(sf_opts, out, "");
    });

    // ---- mader ----
    std::string md_file;
    int md_r = 0;
    CommonOpts md_opts;
    auto* md = app.add_subcommand("mader", "Edge bound for K_r-minor-free graphs");
    md->add_option("file", md_file, "Edge-list file or catalog name")->required();
    md->add_option("-r", md_r, "Clique order r (3..7)")->required();
    add_common(md, md_opts, false);
    md->callback([&] {
        Timer t;
        Graph g = load_graph(md_file);
        long long bound = mader_bound(md_r, g.vertex_count());
        bool ok = check_mader(g, md_r);
        json out{{"command", "mader"},
                 {"input", input_block(md_file, g)},
                 {"params", {{"r", md_r}}},
                 {"results",
                  {{"bound", bound}, {"edges", g.edge_count()}, {"within_bound", ok}}},
                 {"time_ms", t.ms()}};
        if (!md_opts.as_json) {
            print_input(md_file, g);
            std::cout << "r: " << md_r << "  bound: " << bound
                      << "  edges: " << g.edge_count() << '\n'
                      << "within_bound: " << yesno(ok) << '\n'
                      << "time_ms: " << t.ms() << '\n';
        }
        emit(md_opts, out, "");
    });

    // ---- catalog ----
    auto* cat = app.add_subcommand("catalog", "Built-in graphs");
    CommonOpts cat_opts;
    auto* cat_list = cat->add_subcommand("list", "List catalog entries");
    add_common(cat_list, cat_opts, false);
    cat_list->callback([&] {
        if (cat_opts.as_json) {
            json rows = json::array();
            for (const auto& e : catalog_entries())
                rows.push_back({{"name", e.name},
                                {"n", e.graph.vertex_count()},
                                {"e", e.graph.edge_count()},
                                {"tags", e.tags},
                                {"provenance", e.provenance}});
            std::cout << json{{"command", "catalog list"}, {"results", rows}}.dump(2)
                      << '\n';
            return;
        }
        for (const auto& e : catalog_entries()) {
            std::cout << e.name << " (n=" << e.graph.vertex_count()
                      << ", e=" << e.graph.edge_count() << ")";
            if (!e.tags.empty()) {
                std::cout << " [";
                for (size_t i = 0; i < e.tags.size(); ++i)
                    std::cout << (i ? "," : "") << e.tags[i];
                std::cout << "]";
            }
            std::cout << " - " << e.provenance << '\n';
        }
    });
    std::string cat_name;
    auto* cat_dump = cat->add_subcommand("dump", "Print a graph as an edge list");
    cat_dump->add_option("name", cat_name, "Catalog name (parametric names allowed)")
        ->required();
    cat_dump->callback([&] { std::cout << format_edge_list(catalog_get(cat_name)); });
    cat->require_subcommand(1);

    CLI11_PARSE(app, argc, argv);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run_app(argc, argv);
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << '\n';
        return 1;
    } catch (...) {
        std::cerr << "error: unknown failure\n";
        return 1;
    }
}
