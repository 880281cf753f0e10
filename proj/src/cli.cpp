#include "twinblocks/cli.hpp"

#include "twinblocks/connectivity.hpp"
#include "twinblocks/errors.hpp"
#include "twinblocks/oracle.hpp"
#include "twinblocks/strong_blocks.hpp"
#include "twinblocks/twinless.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace twinblocks::cli {

namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string input;
    std::string format = "json";
    std::string algo = "basic";
    std::uint64_t seed = 1;
    double budget_ms = 60000.0;
    std::size_t n = 10;
    std::size_t m = 20;
    bool twinless = false;
    std::vector<std::size_t> sizes{50, 100, 200, 300};
    std::size_t seeds = 1;
    std::vector<std::string> algos{"basic", "improved", "refine"};
};

Digraph load_graph(const Options& opt) {
    if (opt.input.empty()) {
        throw UsageError("--input is required");
    }
    std::ifstream in(opt.input, std::ios::binary);
    if (!in) {
        throw UsageError("cannot open '" + opt.input + "'");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_edge_list(buffer.str()).graph;
}

Algorithm algorithm_of(const std::string& name) {
    const auto algo = parse_algorithm(name);
    if (!algo) {
        throw UsageError("unknown algorithm '" + name + "' (expected basic, improved or refine)");
    }
    return *algo;
}

void require_format(const Options& opt, std::initializer_list<std::string_view> allowed) {
    for (std::string_view f : allowed) {
        if (opt.format == f) {
            return;
        }
    }
    throw UsageError("format '" + opt.format + "' is not supported by this command");
}

// Numeric labels compare by value and sort before the others.
bool label_less(const std::string& a, const std::string& b) {
    const auto numeric = [](const std::string& s) {
        return !s.empty() && s.size() < 19 && std::all_of(s.begin(), s.end(), [](unsigned char c) {
            return std::isdigit(c) != 0;
        });
    };
    const bool na = numeric(a), nb = numeric(b);
    if (na != nb) {
        return na;
    }
    if (na) {
        return std::stoull(a) < std::stoull(b);
    }
    return a < b;
}

std::vector<std::string> sorted_labels(const Digraph& g, const VertexSet& set) {
    std::vector<std::string> out;
    for (Vertex v : set) {
        out.push_back(g.label(v));
    }
    std::sort(out.begin(), out.end(), label_less);
    return out;
}

Json names(const Digraph& g, const VertexSet& set) {
    return Json(sorted_labels(g, set));
}

// Sets are listed in label order unless `keep_order` is set (the forest
// refers to its blocks by position).
Json names(const Digraph& g, const std::vector<VertexSet>& sets, bool keep_order = false) {
    std::vector<std::vector<std::string>> all;
    for (const VertexSet& s : sets) {
        all.push_back(sorted_labels(g, s));
    }
    if (!keep_order) {
        std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
            return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), label_less);
        });
    }
    return Json(all);
}

std::string joined(const std::vector<std::string>& labels) {
    std::string line;
    for (const std::string& l : labels) {
        if (!line.empty()) {
            line += ' ';
        }
        line += l;
    }
    return line;
}

std::string joined(const Digraph& g, const VertexSet& set) {
    return joined(sorted_labels(g, set));
}

void emit_sets(std::ostream& out, const Options& opt, const Digraph& g, Json doc, const char* key,
               const std::vector<VertexSet>& sets) {
    Json listed = names(g, sets);
    if (opt.format == "text") {
        for (const Json& s : listed) {
            out << joined(s.get<std::vector<std::string>>()) << '\n';
        }
        return;
    }
    doc[key] = std::move(listed);
    out << doc.dump() << '\n';
}

Json header(const Digraph& g) {
    Json doc;
    doc["n"] = g.vertex_count();
    doc["m"] = g.arc_count();
    return doc;
}

void write_dot(std::ostream& out, const Digraph& g, const BlockForest& forest) {
    out << "graph block_forest {\n";
    out << "  node [style=filled];\n";
    for (std::size_t i = 0; i < forest.blocks.size(); ++i) {
        out << "  b" << i << " [shape=box, fillcolor=lightblue, label=\"{" << joined(g, forest.blocks[i])
            << "}\"];\n";
    }
    for (Vertex v : forest.shared_vertices) {
        out << "  v" << v << " [shape=circle, fillcolor=lightyellow, label=\"" << g.label(v) << "\"];\n";
    }
    for (const auto& [b, v] : forest.edges) {
        out << "  b" << b << " -- v" << v << ";\n";
    }
    out << "}\n";
}

int cmd_tsccs(const Options& opt, std::ostream& out) {
    require_format(opt, {"json", "text"});
    const Digraph g = load_graph(opt);
    emit_sets(out, opt, g, header(g), "classes", twinless_sccs(g).classes());
    return kOk;
}

int cmd_points(const Options& opt, std::ostream& out, bool twinless) {
    require_format(opt, {"json", "text"});
    const Digraph g = load_graph(opt);
    const VertexSet points = twinless ? twinless_articulation_points(g) : strong_articulation_points(g);
    if (opt.format == "text") {
        out << joined(g, points) << '\n';
        return kOk;
    }
    Json doc = header(g);
    doc["vertices"] = names(g, points);
    out << doc.dump() << '\n';
    return kOk;
}

int cmd_blocks2s(const Options& opt, std::ostream& out) {
    require_format(opt, {"json", "text"});
    const Digraph g = load_graph(opt);
    Json doc = header(g);
    doc["algorithm"] = "two-strong";
    emit_sets(out, opt, g, std::move(doc), "blocks", two_strong_blocks(g).blocks());
    return kOk;
}

int cmd_blocks2t(const Options& opt, std::ostream& out) {
    require_format(opt, {"json", "text"});
    const Algorithm algo = algorithm_of(opt.algo);
    const Digraph g = load_graph(opt);
    Json doc = header(g);
    doc["algorithm"] = std::string(to_string(algo));
    emit_sets(out, opt, g, std::move(doc), "blocks", two_twinless_blocks(g, algo).blocks());
    return kOk;
}

int cmd_forest(const Options& opt, std::ostream& out) {
    require_format(opt, {"json", "text", "dot"});
    const Algorithm algo = algorithm_of(opt.algo);
    const Digraph g = load_graph(opt);
    const BlockForest forest = block_forest(two_twinless_blocks(g, algo));
    if (opt.format == "dot") {
        write_dot(out, g, forest);
    } else if (opt.format == "text") {
        for (const auto& [b, v] : forest.edges) {
            out << '{' << joined(g, forest.blocks[b]) << "} -- " << g.label(v) << '\n';
        }
    } else {
        Json doc = header(g);
        doc["algorithm"] = std::string(to_string(algo));
        doc["blocks"] = names(g, forest.blocks, true);
        doc["shared_vertices"] = names(g, forest.shared_vertices);
        Json edges = Json::array();
        for (const auto& [b, v] : forest.edges) {
            edges.push_back(Json::array({b, g.label(v)}));
        }
        doc["edges"] = std::move(edges);
        out << doc.dump() << '\n';
    }
    return kOk;
}

int cmd_check2vtc(const Options& opt, std::ostream& out) {
    require_format(opt, {"json", "text"});
    const Digraph g = load_graph(opt);
    const bool tsc = is_twinless_strongly_connected(g);
    const bool two_vtc = is_two_vertex_twinless_connected(g);
    if (opt.format == "text") {
        out << "twinless_strongly_connected " << (tsc ? "true" : "false") << '\n'
            << "two_vertex_twinless_connected " << (two_vtc ? "true" : "false") << '\n';
        return kOk;
    }
    Json doc = header(g);
    doc["twinless_strongly_connected"] = tsc;
    doc["two_vertex_twinless_connected"] = two_vtc;
    out << doc.dump() << '\n';
    return kOk;
}

int cmd_oracle(const Options& opt, std::ostream& out) {
    require_format(opt, {"json", "text"});
    const Digraph g = load_graph(opt);
    if (g.vertex_count() > kOracleBlockLimit) {
        throw UsageError("oracle mode handles at most " + std::to_string(kOracleBlockLimit) + " vertices");
    }
    std::vector<std::pair<std::string, bool>> checks;
    checks.emplace_back("tsccs", twinless_sccs(g) == oracle_twinless_sccs(g));
    checks.emplace_back("blocks2s", two_strong_blocks(g) == oracle_two_strong_blocks(g));
    const BlockFamily expected = oracle_two_twinless_blocks(g);
    for (Algorithm a : kAllAlgorithms) {
        checks.emplace_back("blocks2t:" + std::string(to_string(a)), two_twinless_blocks(g, a) == expected);
    }

    bool all = true;
    Json doc = header(g);
    for (const auto& [name, ok] : checks) {
        all = all && ok;
        if (opt.format == "text") {
            out << name << ' ' << (ok ? "MATCH" : "MISMATCH") << '\n';
        } else {
            doc[name] = ok ? "MATCH" : "MISMATCH";
        }
    }
    if (opt.format == "json") {
        out << doc.dump() << '\n';
    }
    return all ? kOk : kOracleMismatch;
}

int cmd_gen(const Options& opt, std::ostream& out) {
    Digraph g;
    if (opt.twinless) {
        if (opt.m < opt.n) {
            throw UsageError("a twinless graph on n vertices needs m >= n");
        }
        g = random_twinless_digraph(opt.n, opt.m - opt.n, opt.seed);
    } else {
        g = random_digraph(opt.n, opt.m, opt.seed);
    }
    out << to_edge_list(g);
    return kOk;
}

int cmd_bench(const Options& opt, std::ostream& out, std::ostream& err) {
    BenchConfig config;
    config.sizes = opt.sizes;
    config.seeds = opt.seeds;
    config.first_seed = opt.seed;
    config.budget_ms = opt.budget_ms;
    config.algorithms.clear();
    for (const std::string& name : opt.algos) {
        config.algorithms.push_back(algorithm_of(name));
    }
    const BenchReport report = run_bench(config);
    out << kBenchHeader << '\n';
    bool bound_ok = true;
    for (const BenchRow& row : report.rows) {
        out << format_row(row) << '\n';
        if (row.algo == Algorithm::improved && row.pair_updates > row.t * row.s * row.s) {
            bound_ok = false;
        }
    }
    if (report.truncated) {
        out << "# warning: wall-clock budget of " << opt.budget_ms << " ms exhausted, output truncated\n";
    }
    if (report.mismatch) {
        err << "bench: algorithms disagree on at least one graph\n";
        return kOracleMismatch;
    }
    if (!bound_ok) {
        err << "bench: improved pair updates exceed t*s^2\n";
        return kInvariant;
    }
    return kOk;
}

int cmd_fig1(const Options& opt, std::ostream& out) {
    require_format(opt, {"json", "text"});
    const Digraph g = fig1_fixture();
    const Algorithm algo = algorithm_of(opt.algo);
    const BlockFamily strong = two_strong_blocks(g);
    const BlockFamily twinless = two_twinless_blocks(g, algo);
    if (opt.format == "text") {
        out << "2-strong blocks:\n";
        for (const VertexSet& b : strong) {
            out << "  " << joined(g, b) << '\n';
        }
        out << "2-twinless blocks (" << to_string(algo) << "):\n";
        for (const VertexSet& b : twinless) {
            out << "  " << joined(g, b) << '\n';
        }
        return kOk;
    }
    Json doc = header(g);
    doc["algorithm"] = std::string(to_string(algo));
    doc["two_strong_blocks"] = names(g, strong.blocks());
    doc["blocks"] = names(g, twinless.blocks());
    out << doc.dump() << '\n';
    return kOk;
}

} // namespace

Digraph bench_graph(std::size_t n, std::uint64_t seed) {
    return random_twinless_digraph(n, n / 2, seed);
}

BenchReport run_bench(const BenchConfig& config) {
    using Clock = std::chrono::steady_clock;
    const auto started = Clock::now();
    auto elapsed_ms = [&] { return std::chrono::duration<double, std::milli>(Clock::now() - started).count(); };

    BenchReport report;
    for (std::size_t n : config.sizes) {
        for (std::size_t k = 0; k < config.seeds; ++k) {
            if (elapsed_ms() > config.budget_ms) {
                report.truncated = true;
                return report;
            }
            const Digraph g = bench_graph(n, config.first_seed + k);
            std::optional<BlockFamily> reference;
            for (Algorithm algo : config.algorithms) {
                RefinementStats stats;
                const auto t0 = Clock::now();
                BlockFamily family;
                switch (algo) {
                case Algorithm::basic:
                    family = two_twinless_blocks_basic(g, {}, &stats);
                    break;
                case Algorithm::improved:
                    family = two_twinless_blocks_improved(g, {}, &stats);
                    break;
                case Algorithm::refine:
                    family = two_twinless_blocks_refine(g, {}, &stats);
                    break;
                }
                const double millis = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
                report.rows.push_back(
                    {g.vertex_count(), g.arc_count(), stats.tap_count, stats.domain_size, algo, stats.pair_updates,
                     millis});
                if (!reference) {
                    reference = std::move(family);
                } else if (*reference != family) {
                    report.mismatch = true;
                }
            }
        }
    }
    return report;
}

std::string format_row(const BenchRow& row) {
    std::ostringstream line;
    line << row.n << ',' << row.m << ',' << row.t << ',' << row.s << ',' << to_string(row.algo) << ','
         << row.pair_updates << ',' << std::fixed << std::setprecision(3) << row.wall_millis;
    return line.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"2-twinless blocks and related connectivity structure of directed graphs", "twinblocks"};
    app.require_subcommand(1);
    Options opt;

    auto with_input = [&](CLI::App* sub) {
        sub->add_option("--input", opt.input, "edge-list file")->required();
        sub->add_option("--format", opt.format, "output format")->check(CLI::IsMember({"json", "text", "dot"}));
        return sub;
    };
    auto with_algo = [&](CLI::App* sub) {
        sub->add_option("--algo", opt.algo, "basic, improved or refine");
        return sub;
    };

    auto* tsccs = with_input(app.add_subcommand("tsccs", "twinless strongly connected components"));
    auto* taps = with_input(app.add_subcommand("taps", "twinless articulation points"));
    auto* saps = with_input(app.add_subcommand("saps", "strong articulation points"));
    auto* blocks2s = with_input(app.add_subcommand("blocks2s", "2-strong blocks"));
    auto* blocks2t = with_algo(with_input(app.add_subcommand("blocks2t", "2-twinless blocks")));
    auto* forest = with_algo(with_input(app.add_subcommand("forest", "2-twinless block forest")));
    auto* check2vtc = with_input(app.add_subcommand("check2vtc", "2-vertex-twinless-connectivity test"));
    auto* oracle = with_input(app.add_subcommand("oracle", "cross-check fast paths against brute force"));

    auto* gen = app.add_subcommand("gen", "print a random digraph as an edge list");
    gen->add_option("--n", opt.n, "vertex count");
    gen->add_option("--m", opt.m, "arc count");
    gen->add_option("--seed", opt.seed, "random seed");
    gen->add_flag("--twinless", opt.twinless, "Hamiltonian cycle plus m - n random arcs");

    auto* bench = app.add_subcommand("bench", "time the three 2-twinless block algorithms (CSV)");
    bench->add_option("--sizes", opt.sizes, "vertex counts")->delimiter(',');
    bench->add_option("--seeds", opt.seeds, "graphs per size");
    bench->add_option("--seed", opt.seed, "first seed");
    bench->add_option("--algos", opt.algos, "algorithms")->delimiter(',');
    bench->add_option("--budget-ms", opt.budget_ms, "wall-clock budget");

    auto* fig1 = with_algo(app.add_subcommand("fig1", "run the built-in 20-vertex example"));
    fig1->add_option("--format", opt.format, "output format")->check(CLI::IsMember({"json", "text"}));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (tsccs->parsed()) return cmd_tsccs(opt, out);
        if (taps->parsed()) return cmd_points(opt, out, true);
        if (saps->parsed()) return cmd_points(opt, out, false);
        if (blocks2s->parsed()) return cmd_blocks2s(opt, out);
        if (blocks2t->parsed()) return cmd_blocks2t(opt, out);
        if (forest->parsed()) return cmd_forest(opt, out);
        if (check2vtc->parsed()) return cmd_check2vtc(opt, out);
        if (oracle->parsed()) return cmd_oracle(opt, out);
        if (gen->parsed()) return cmd_gen(opt, out);
        if (bench->parsed()) return cmd_bench(opt, out, err);
        if (fig1->parsed()) return cmd_fig1(opt, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kParse;
    } catch (const InvariantError& e) {
        err << "internal invariant violated: " << e.what() << '\n';
        return kInvariant;
    } catch (const GraphError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

} // namespace twinblocks::cli
