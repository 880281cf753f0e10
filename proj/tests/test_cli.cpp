#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "twinblocks/cli.hpp"
#include "twinblocks/graph.hpp"

#include <json.hpp>

#include <unistd.h>

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace twinblocks;
namespace fs = std::filesystem;

namespace {

struct TempFile {
    fs::path path;
    explicit TempFile(const std::string& contents) {
        static std::atomic<int> counter{0};
        path = fs::temp_directory_path() /
               ("twinblocks_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter++) + ".txt");
        std::ofstream(path, std::ios::binary) << contents;
    }
    ~TempFile() { fs::remove(path); }
    std::string str() const { return path.string(); }
};

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result call(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string fig1_without_13() {
    std::string text;
    for (const Arc& a : fig1_fixture().arcs()) {
        const std::string t = std::to_string(a.tail + 1), h = std::to_string(a.head + 1);
        if (t != "13" && h != "13") {
            text += t + " " + h + "\n";
        }
    }
    return text;
}

} // namespace

TEST_CASE("blocks2t on an empty edge list") {
    TempFile empty("");
    const Result r = call({"blocks2t", "--input", empty.str(), "--format", "json"});
    CHECK(r.code == cli::kOk);
    CHECK(r.out == "{\"n\":0,\"m\":0,\"algorithm\":\"basic\",\"blocks\":[]}\n");
}

TEST_CASE("blocks2t reports labels in canonical order") {
    TempFile k4("# bidirected K4 on named vertices\nd c\nc d\na b\nb a\na c\nc a\na d\nd a\nb c\nc b\nb d\nd b\n");
    for (const char* algo : {"basic", "improved", "refine"}) {
        const Result r = call({"blocks2t", "--input", k4.str(), "--algo", algo});
        REQUIRE(r.code == cli::kOk);
        const auto doc = nlohmann::json::parse(r.out);
        CHECK(doc["n"] == 4);
        CHECK(doc["m"] == 12);
        CHECK(doc["algorithm"] == algo);
        CHECK(doc["blocks"] == nlohmann::json::parse(R"([["a","b","c","d"]])"));
    }
    // Byte-identical on repeat.
    CHECK(call({"blocks2t", "--input", k4.str()}).out == call({"blocks2t", "--input", k4.str()}).out);
}

TEST_CASE("blocks2t on the fixture file") {
    TempFile fig(to_edge_list(fig1_fixture()));
    const Result r = call({"blocks2t", "--input", fig.str(), "--format", "json"});
    REQUIRE(r.code == cli::kOk);
    CHECK(nlohmann::json::parse(r.out)["blocks"] ==
          nlohmann::json::parse(R"([["2","7"],["13","17"],["17","19"]])"));

    const Result text = call({"blocks2t", "--input", fig.str(), "--format", "text"});
    CHECK(text.out == "2 7\n13 17\n17 19\n");
}

TEST_CASE("tsccs separates 12 and 17 once 13 is gone") {
    TempFile minus(fig1_without_13());
    const Result r = call({"tsccs", "--input", minus.str()});
    REQUIRE(r.code == cli::kOk);
    const auto doc = nlohmann::json::parse(r.out);
    int with_12 = -1, with_17 = -1;
    for (std::size_t i = 0; i < doc["classes"].size(); ++i) {
        for (const auto& name : doc["classes"][i]) {
            with_12 = name == "12" ? static_cast<int>(i) : with_12;
            with_17 = name == "17" ? static_cast<int>(i) : with_17;
        }
    }
    CHECK(with_12 >= 0);
    CHECK(with_17 >= 0);
    CHECK(with_12 != with_17);
}

TEST_CASE("articulation points and connectivity checks") {
    TempFile cycle("1 2\n2 3\n3 1\n");
    CHECK(nlohmann::json::parse(call({"taps", "--input", cycle.str()}).out)["vertices"] ==
          nlohmann::json::parse(R"(["1","2","3"])"));
    CHECK(nlohmann::json::parse(call({"saps", "--input", cycle.str()}).out)["vertices"] ==
          nlohmann::json::parse(R"(["1","2","3"])"));
    const auto check = nlohmann::json::parse(call({"check2vtc", "--input", cycle.str()}).out);
    CHECK(check["twinless_strongly_connected"] == true);
    CHECK(check["two_vertex_twinless_connected"] == false);

    TempFile fig(to_edge_list(fig1_fixture()));
    const Result strong = call({"blocks2s", "--input", fig.str()});
    CHECK(nlohmann::json::parse(strong.out)["blocks"] ==
          nlohmann::json::parse(R"([["2","7"],["7","17"],["12","13","17","19"]])"));
}

TEST_CASE("forest output formats") {
    TempFile fig(to_edge_list(fig1_fixture()));
    const auto doc = nlohmann::json::parse(call({"forest", "--input", fig.str()}).out);
    CHECK(doc["shared_vertices"] == nlohmann::json::parse(R"(["17"])"));
    CHECK(doc["edges"].size() == 2);

    const Result dot = call({"forest", "--input", fig.str(), "--format", "dot"});
    CHECK(dot.code == cli::kOk);
    CHECK(dot.out.rfind("graph block_forest {", 0) == 0);
    CHECK(dot.out.find("fillcolor=lightblue") != std::string::npos);
    CHECK(dot.out.find("fillcolor=lightyellow") != std::string::npos);
    CHECK(dot.out.find("label=\"17\"") != std::string::npos);
    std::size_t links = 0;
    for (std::size_t at = dot.out.find(" -- v"); at != std::string::npos; at = dot.out.find(" -- v", at + 1)) {
        ++links;
    }
    CHECK(links == 2);
}

TEST_CASE("oracle mode") {
    std::ostringstream gen_out, err;
    REQUIRE(cli::run({"gen", "--n", "8", "--m", "16", "--seed", "5"}, gen_out, err) == cli::kOk);
    TempFile random(gen_out.str());
    const Result r = call({"oracle", "--input", random.str(), "--format", "text"});
    CHECK(r.code == cli::kOk);
    CHECK(r.out == "tsccs MATCH\nblocks2s MATCH\nblocks2t:basic MATCH\nblocks2t:improved MATCH\n"
                   "blocks2t:refine MATCH\n");

    TempFile fig(to_edge_list(fig1_fixture()));
    CHECK(call({"oracle", "--input", fig.str()}).code == cli::kUsage);
}

TEST_CASE("gen writes parseable graphs") {
    const Result plain = call({"gen", "--n", "12", "--m", "30", "--seed", "9"});
    REQUIRE(plain.code == cli::kOk);
    const Digraph g = parse_edge_list(plain.out).graph;
    CHECK(g.arc_count() == 30);
    CHECK(g.vertex_count() <= 12);
    CHECK(plain.out == call({"gen", "--n", "12", "--m", "30", "--seed", "9"}).out);

    const Result twinless = call({"gen", "--n", "10", "--m", "14", "--seed", "2", "--twinless"});
    REQUIRE(twinless.code == cli::kOk);
    CHECK(parse_edge_list(twinless.out).graph.vertex_count() == 10);
    CHECK(call({"gen", "--n", "10", "--m", "4", "--twinless"}).code == cli::kUsage);
}

TEST_CASE("bench emits CSV rows") {
    const Result r = call({"bench", "--sizes", "20,30", "--seeds", "2"});
    REQUIRE(r.code == cli::kOk);
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);
    CHECK(line == cli::kBenchHeader);
    int rows = 0;
    while (std::getline(lines, line)) {
        ++rows;
        CHECK(std::count(line.begin(), line.end(), ',') == 6);
    }
    CHECK(rows == 12);

    cli::BenchConfig config;
    config.sizes = {20};
    const cli::BenchReport report = cli::run_bench(config);
    REQUIRE(report.rows.size() == 3);
    CHECK_FALSE(report.mismatch);
    const cli::BenchRow& improved = report.rows[1];
    CHECK(improved.algo == Algorithm::improved);
    CHECK(improved.pair_updates <= improved.t * improved.s * improved.s);
}

TEST_CASE("bench budget truncates with a warning row") {
    const Result r = call({"bench", "--sizes", "20,20,20", "--budget-ms", "0"});
    CHECK(r.code == cli::kOk);
    CHECK(r.out.find("# warning:") != std::string::npos);
}

TEST_CASE("fig1 subcommand") {
    const auto doc = nlohmann::json::parse(call({"fig1", "--algo", "refine"}).out);
    CHECK(doc["n"] == 20);
    CHECK(doc["m"] == 28);
    CHECK(doc["algorithm"] == "refine");
    CHECK(doc["blocks"].size() == 3);
}

TEST_CASE("exit statuses") {
    CHECK(call({}).code == cli::kUsage);
    CHECK(call({"frobnicate"}).code == cli::kUsage);
    CHECK(call({"blocks2t"}).code == cli::kUsage);
    CHECK(call({"blocks2t", "--input", "/nonexistent/graph.txt"}).code == cli::kUsage);

    TempFile k2("1 2\n2 1\n");
    CHECK(call({"blocks2t", "--input", k2.str(), "--algo", "cubic"}).code == cli::kUsage);
    CHECK(call({"blocks2t", "--input", k2.str(), "--format", "yaml"}).code == cli::kUsage);
    CHECK(call({"tsccs", "--input", k2.str(), "--format", "dot"}).code == cli::kUsage);

    TempFile bad("1 2\n3\n");
    const Result r = call({"blocks2t", "--input", bad.str()});
    CHECK(r.code == cli::kParse);
    CHECK(r.err.find("2") != std::string::npos);
    CHECK(call({"--help"}).code == cli::kOk);
}
