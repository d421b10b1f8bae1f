#include "kcut/contraction.hpp"
#include "kcut/extremal.hpp"
#include "kcut/generators.hpp"
#include "kcut/io.hpp"
#include "kcut/minkcut.hpp"
#include "kcut/oracle.hpp"
#include "kcut/set_system.hpp"
#include "kcut/tree_packing.hpp"
#include "kcut/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace kcut;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitError = 2;

WeightedGraph load_graph(const std::string& input, const std::string& format) {
    GraphFormat fmt = GraphFormat::autodetect;
    if (format == "edgelist") fmt = GraphFormat::edgelist;
    if (format == "dimacs") fmt = GraphFormat::dimacs;
    if (input == "-") return parse_graph(std::cin, fmt);
    return parse_graph_file(input, fmt);
}

RangeSpace load_ranges(const std::string& input) {
    if (input == "-") return read_range_space(std::cin);
    std::ifstream in(input);
    if (!in) throw Error("cannot open " + input);
    return read_range_space(in);
}

Frac parse_frac(const std::string& text) {
    // accepts "p/q" or a decimal literal
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        return Frac(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
    }
    auto dot = text.find('.');
    if (dot == std::string::npos) return Frac(BigInt(text));
    const std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    BigInt den = 1;
    for (std::size_t i = 0; i < text.size() - dot - 1; ++i) den *= 10;
    return Frac(BigInt(digits), den);
}

struct CommonOpts {
    std::string input = "-";
    std::string format = "auto";
    std::string gamma = "1/20";
    std::uint64_t seed = 1;
    int threads = 0;
    bool json = false;
    bool echo_graph = false;
    std::size_t base_k = 0;  // 0 = derive from gamma
};

ScheduleConfig make_config(const CommonOpts& c) {
    ScheduleConfig cfg = ScheduleConfig::with_gamma(parse_frac(c.gamma));
    if (c.base_k) cfg.base_k = c.base_k;
    return cfg;
}

void add_common(CLI::App* cmd, CommonOpts& c, bool with_schedule = true) {
    cmd->add_option("--input", c.input, "graph file, or '-' for stdin")->capture_default_str();
    cmd->add_option("--format", c.format, "auto|edgelist|dimacs")->capture_default_str();
    cmd->add_option("--seed", c.seed, "RNG seed")->capture_default_str();
    cmd->add_option("--threads", c.threads, "worker cap (0 = all cores)")->capture_default_str();
    cmd->add_flag("--json", c.json, "structured output");
    if (with_schedule) {
        cmd->add_option("--gamma", c.gamma, "schedule gamma (rational, e.g. 1/20)")
            ->capture_default_str();
        cmd->add_option("--base-k", c.base_k, "override the k < Theta(1/gamma) cutoff");
    }
}

int cmd_enum(const CommonOpts& c, std::size_t k, std::size_t trees_override, bool telemetry) {
    set_max_threads(c.threads);
    WeightedGraph g = load_graph(c.input, c.format);
    if (c.echo_graph) write_graph_edgelist(std::cout, g);
    ScheduleConfig cfg = make_config(c);
    cfg.tree_cap = trees_override;
    const auto t0 = std::chrono::steady_clock::now();
    EnumerateResult res = enumerate_min_kcuts(g, k, cfg, c.seed);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.json) {
        nlohmann::json j = nlohmann::json::parse(partitions_json(res.weight, res.partitions));
        j["k"] = k;
        j["n"] = g.vertex_count();
        j["trees_packed"] = res.trees_packed;
        j["ks_repetitions"] = res.ks_repetitions;
        j["seconds"] = secs;
        std::cout << j.dump(2) << "\n";
    } else {
        write_partitions_text(std::cout, res.weight, res.partitions);
        std::cout << "(" << res.trees_packed << " trees, " << res.ks_repetitions
                  << " contraction repetitions, " << secs << "s)\n";
        if (telemetry) std::cout << res.telemetry.report();
    }
    return kExitOk;
}

int cmd_census(const CommonOpts& c, std::size_t k, const std::vector<std::string>& betas) {
    set_max_threads(c.threads);
    WeightedGraph g = load_graph(c.input, c.format);
    ScheduleConfig cfg = make_config(c);
    std::vector<Frac> thresholds;
    for (const auto& b : betas) thresholds.push_back(parse_frac(b));
    const KsResult ks = karger_stein_min_kcut(g, k, cfg, derive_stream(c.seed, 0xce));
    NormContext norm{ks.weight, k};
    const auto rows = small_cut_census(g, k, norm, thresholds, cfg, c.seed);
    if (c.json) {
        nlohmann::json j;
        j["n"] = g.vertex_count();
        j["k"] = k;
        j["opt_upper"] = ks.weight;
        auto& arr = j["rows"] = nlohmann::json::array();
        for (const auto& r : rows)
            arr.push_back({{"beta", to_double(r.beta)},
                           {"count", r.count},
                           {"cap", r.cap},
                           {"cap_kind", r.cap_kind}});
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << census_csv(g, k, rows);
    }
    return kExitOk;
}

int cmd_setsys(const CommonOpts& c, const std::string& what, int min_cells) {
    set_max_threads(c.threads);
    RangeSpace rs = load_ranges(c.input);
    nlohmann::json j;
    j["n"] = rs.n;
    j["ranges"] = rs.ranges.size();
    int exit_code = kExitOk;
    if (what == "crossing") {
        auto p = find_crossing_pair(rs);
        if (c.json) {
            j["found"] = p.has_value();
            if (p) j["pair"] = {p->first, p->second};
            std::cout << j.dump(2) << "\n";
        } else if (p) {
            std::cout << "crossing pair: ranges " << p->first << " and " << p->second << "\n"
                      << rs.ranges[p->first].to_bitstring() << "\n"
                      << rs.ranges[p->second].to_bitstring() << "\n";
        } else {
            std::cout << "no crossing pair\n";
        }
    } else if (what == "triple") {
        auto t = find_triple(rs, min_cells);
        if (c.json) {
            j["min_cells"] = min_cells;
            j["found"] = t.has_value();
            if (t) j["triple"] = {(*t)[0], (*t)[1], (*t)[2]};
            std::cout << j.dump(2) << "\n";
        } else if (t) {
            const auto occ = venn_occupancy(rs.ranges[(*t)[0]], rs.ranges[(*t)[1]],
                                            rs.ranges[(*t)[2]]);
            std::cout << "triple (" << (*t)[0] << ", " << (*t)[1] << ", " << (*t)[2] << ") with "
                      << occ.count() << " occupied cells\n";
        } else {
            std::cout << "no triple with >= " << min_cells << " cells\n";
        }
    } else if (what == "dualvc") {
        const int d = dual_vc_dimension(rs);
        if (c.json) {
            j["dual_vc_dimension"] = d;
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "dual VC dimension: " << d << "\n";
        }
    } else {
        std::cerr << "unknown setsys mode: " << what << "\n";
        exit_code = kExitError;
    }
    return exit_code;
}

int cmd_treepack(const CommonOpts& c, std::size_t k, bool check_oracle) {
    set_max_threads(c.threads);
    WeightedGraph g = load_graph(c.input, c.format);
    ScheduleConfig cfg = make_config(c);
    const auto trees = greedy_tree_pack(g, pack_size_for(k, g.edge_count(), cfg));
    std::cout << "packed " << trees.size() << " spanning trees (n=" << g.vertex_count()
              << ", m=" << g.edge_count() << ")\n";
    if (!check_oracle) return kExitOk;
    if (g.vertex_count() > 12) {
        std::cerr << "--check-oracle needs n <= 12\n";
        return kExitError;
    }
    const auto opt = brute_min_kcuts(g, k);
    std::size_t best = SIZE_MAX;
    for (const auto& p : opt.partitions)
        best = std::min(best, best_tree_crossing(trees, p).second);
    std::cout << "optimal k-cuts: " << opt.partitions.size() << " at weight " << opt.weight
              << "; best tree crossing " << best << " (target <= " << 2 * k - 2 << ")\n";
    return best <= 2 * k - 2 ? kExitOk : kExitViolation;
}

int cmd_verify(const CommonOpts& c, const std::vector<int>& only) {
    set_max_threads(c.threads);
    AcceptanceOptions opt;
    opt.seed = c.seed;
    opt.only = only;
    const auto results = run_acceptance(opt, &std::cout);
    if (c.json) {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& r : results)
            j.push_back({{"id", r.id},
                         {"name", r.name},
                         {"pass", r.pass},
                         {"detail", r.detail},
                         {"seconds", r.seconds}});
        std::cout << j.dump(2) << "\n";
    }
    return all_passed(results) ? kExitOk : kExitViolation;
}

int cmd_bench(const CommonOpts& c, const std::string& family, std::size_t n, std::size_t k) {
    set_max_threads(c.threads);
    WeightedGraph g;
    if (family == "cycle")
        g = make_cycle(n);
    else if (family == "random")
        g = make_random_connected(n, 1, 5, c.seed);
    else if (family == "planted")
        g = make_planted(n, k, c.seed);
    else {
        std::cerr << "unknown family: " << family << "\n";
        return kExitError;
    }
    ScheduleConfig cfg = make_config(c);

    struct Row {
        std::string name;
        double serial, parallel;
    };
    std::vector<Row> rows;
    auto timed = [](auto&& fn) {
        const auto t0 = std::chrono::steady_clock::now();
        fn();
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    };

    // repetition counts scale as n^{2 alpha} (resp. n^{2(k-1)}), so the
    // benchmark pins alpha = 1 and k = 2 and lets --n drive the load
    rows.push_back({"enum_small_cuts h=2 alpha=1",
                    timed([&] { enum_small_cuts(g, 2, Frac(1), cfg, c.seed, Exec::serial); }),
                    timed([&] { enum_small_cuts(g, 2, Frac(1), cfg, c.seed, Exec::parallel); })});
    rows.push_back(
        {"karger_stein k=2",
         timed([&] { karger_stein_min_kcut(g, 2, cfg, c.seed, Exec::serial); }),
         timed([&] { karger_stein_min_kcut(g, 2, cfg, c.seed, Exec::parallel); })});
    if (g.vertex_count() <= 20) {
        rows.push_back({"brute_cut_census w<=2",
                        timed([&] { brute_cut_census(g, 2, Exec::serial); }),
                        timed([&] { brute_cut_census(g, 2, Exec::parallel); })});
    }
    if (g.vertex_count() <= 12) {
        rows.push_back({"brute_min_kcuts k=3",
                        timed([&] { brute_min_kcuts(g, 3, Exec::serial); }),
                        timed([&] { brute_min_kcuts(g, 3, Exec::parallel); })});
    }

    if (c.json) {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& r : rows)
            j.push_back({{"kernel", r.name},
                         {"serial_s", r.serial},
                         {"parallel_s", r.parallel},
                         {"speedup", r.serial / std::max(1e-12, r.parallel)}});
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "family=" << family << " n=" << g.vertex_count() << " m=" << g.edge_count()
                  << " threads=" << max_threads() << "\n";
        std::cout << "kernel                          serial(s)   parallel(s)  speedup\n";
        for (const auto& r : rows) {
            std::ostringstream line;
            line.setf(std::ios::fixed);
            line.precision(4);
            line << r.name;
            for (std::size_t pad = line.str().size(); pad < 32; ++pad) line << ' ';
            line << r.serial << "      " << r.parallel << "      "
                 << r.serial / std::max(1e-12, r.parallel);
            std::cout << line.str() << "\n";
        }
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"minimum k-cut enumeration toolkit"};
    app.set_config("--config");
    app.require_subcommand(1);

    CommonOpts c;
    std::size_t k = 2, n = 16, trees_override = 0;
    int min_cells = 8;
    bool check_oracle = false, telemetry = false;
    std::vector<std::string> betas;
    std::vector<int> only;
    std::string setsys_mode, family = "cycle";

    auto* enum_cmd = app.add_subcommand("enum", "enumerate all minimum k-cuts");
    add_common(enum_cmd, c);
    enum_cmd->add_option("--k", k, "number of parts")->required();
    enum_cmd->add_option("--trees", trees_override, "cap the packed tree count");
    enum_cmd->add_flag("--telemetry", telemetry, "print per-depth branch telemetry");
    enum_cmd->add_flag("--echo-graph", c.echo_graph, "echo the parsed graph before results");

    auto* census_cmd = app.add_subcommand("census", "small-cut census CSV");
    add_common(census_cmd, c);
    census_cmd->add_option("--k", k, "number of parts")->required();
    census_cmd->add_option("--betas", betas, "normalized thresholds (rationals)")
        ->required()
        ->delimiter(',');

    auto* setsys_cmd = app.add_subcommand("setsys", "range-space experiments");
    add_common(setsys_cmd, c, false);
    setsys_cmd->add_option("mode", setsys_mode, "crossing|triple|dualvc")->required();
    setsys_cmd->add_option("--min-cells", min_cells, "occupied-cell target for triple")
        ->capture_default_str();

    auto* tp_cmd = app.add_subcommand("treepack", "greedy tree packing");
    add_common(tp_cmd, c);
    tp_cmd->add_option("--k", k, "number of parts")->required();
    tp_cmd->add_flag("--check-oracle", check_oracle,
                     "compare packed trees against brute-force optimal cuts");

    auto* verify_cmd = app.add_subcommand("verify", "run the acceptance suite");
    add_common(verify_cmd, c, false);
    verify_cmd->add_option("--criteria", only, "run only these criterion ids")->delimiter(',');

    auto* bench_cmd = app.add_subcommand("bench", "serial vs parallel kernel timings");
    add_common(bench_cmd, c);
    bench_cmd->add_option("--family", family, "cycle|random|planted")->capture_default_str();
    bench_cmd->add_option("--n", n, "vertex count")->capture_default_str();
    bench_cmd->add_option("--k", k, "parts (planted family)")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (enum_cmd->parsed()) return cmd_enum(c, k, trees_override, telemetry);
        if (census_cmd->parsed()) return cmd_census(c, k, betas);
        if (setsys_cmd->parsed()) return cmd_setsys(c, setsys_mode, min_cells);
        if (tp_cmd->parsed()) return cmd_treepack(c, k, check_oracle);
        if (verify_cmd->parsed()) return cmd_verify(c, only);
        if (bench_cmd->parsed()) return cmd_bench(c, family, n, k);
    } catch (const kcut::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
