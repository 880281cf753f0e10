#pragma once

#include "twinblocks/twinless_blocks.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace twinblocks::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kParse = 2,
    kInvariant = 3,
    kOracleMismatch = 4,
};

/// Runs one command line (without the program name). All output goes to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct BenchConfig {
    std::vector<std::size_t> sizes{50, 100, 200, 300};
    std::size_t seeds = 1;
    std::uint64_t first_seed = 1;
    std::vector<Algorithm> algorithms{Algorithm::basic, Algorithm::improved, Algorithm::refine};
    double budget_ms = 60000.0;
};

struct BenchRow {
    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t t = 0;
    std::size_t s = 0;
    Algorithm algo = Algorithm::basic;
    std::size_t pair_updates = 0;
    double wall_millis = 0.0;
};

struct BenchReport {
    std::vector<BenchRow> rows;
    /// The budget ran out before every configured graph was measured.
    bool truncated = false;
    /// Some graph produced different families under different algorithms.
    bool mismatch = false;
};

/// The graph measured for a given size and seed: a random twinless
/// strongly connected digraph with n/2 arcs beyond its Hamiltonian cycle.
Digraph bench_graph(std::size_t n, std::uint64_t seed);

BenchReport run_bench(const BenchConfig& config);

inline constexpr const char* kBenchHeader = "n,m,t,s,algo,pair_updates,wall_millis";
std::string format_row(const BenchRow& row);

} // namespace twinblocks::cli
