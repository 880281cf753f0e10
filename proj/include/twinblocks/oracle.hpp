#pragma once

// Brute-force routines that evaluate the connectivity definitions directly.
// Each one refuses inputs over its size budget (GraphError) rather than
// approximating. None of them calls the fast path it is meant to check.

#include "twinblocks/connectivity.hpp"
#include "twinblocks/graph.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace twinblocks {

/// Arc subset with no antiparallel pair whose spanning subgraph is strongly
/// connected.
struct TwinlessWitness {
    std::vector<Arc> arcs;
};

inline constexpr std::size_t kWitnessPairBudget = 20;
inline constexpr std::size_t kOracleTwinlessSccLimit = 12;
inline constexpr std::size_t kOracleBlockLimit = 10;

/// Search over the orientations of every antiparallel pair, all other arcs
/// kept. Absent iff g is not twinless strongly connected.
std::optional<TwinlessWitness> oracle_twinless_witness(const Digraph& g,
                                                       std::size_t pair_budget = kWitnessPairBudget);

/// Maximal vertex subsets with a twinless witness on their induced
/// subgraph, found by enumerating subsets largest first. n <= 12.
Partition oracle_twinless_sccs(const Digraph& g);

/// Pairs related by checking mutual reachability in g and in every g - u,
/// then maximal cliques of the relation. n <= 10.
BlockFamily oracle_two_strong_blocks(const Digraph& g);

/// Pairs x, y in one twinless component of g that share a twinless
/// component of g - w for every other w; maximal cliques of that relation.
/// n <= 10.
BlockFamily oracle_two_twinless_blocks(const Digraph& g);

namespace brute_force {

/// reach[u][v]: v reachable from u, ignoring vertex `skip` (npos: none).
std::vector<std::vector<char>> reachability(const Digraph& g, std::size_t skip = npos);

bool strongly_connected(std::size_t n, std::span<const Arc> arcs);

/// Bron-Kerbosch with pivoting; cliques of size >= 2.
BlockFamily maximal_cliques(const std::vector<std::vector<char>>& adjacent);

} // namespace brute_force

} // namespace twinblocks
