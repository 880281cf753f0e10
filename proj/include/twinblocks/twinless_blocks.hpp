#pragma once

#include "twinblocks/connectivity.hpp"
#include "twinblocks/graph.hpp"
#include "twinblocks/pair_matrix.hpp"

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace twinblocks {

enum class Algorithm { basic, improved, refine };

std::string_view to_string(Algorithm algo);
std::optional<Algorithm> parse_algorithm(std::string_view name);
inline constexpr Algorithm kAllAlgorithms[] = {Algorithm::basic, Algorithm::improved, Algorithm::refine};

/// Work counters for one run. For the driver they are summed over the
/// twinless components that were processed.
struct RefinementStats {
    std::size_t vertex_count = 0;
    std::size_t arc_count = 0;
    /// t: number of twinless articulation points.
    std::size_t tap_count = 0;
    /// s: size of the matrix domain (n for basic, |A| otherwise).
    std::size_t domain_size = 0;
    /// Matrix cells written before refinement starts.
    std::size_t init_cells = 0;
    /// Pair checks (basic, improved) or block-member moves (refine) made
    /// while refining over the articulation points.
    std::size_t pair_updates = 0;
    /// Set when the 2-vertex-twinless-connected shortcut answered.
    bool gated = false;

    RefinementStats& operator+=(const RefinementStats& other);
};

struct RefineOptions {
    /// Visit the twinless articulation points in a seeded random order
    /// instead of ascending order.
    std::optional<std::uint64_t> tap_shuffle_seed;
};

struct AllPairs {};
using MatrixSeed = std::variant<AllPairs, BlockFamily>;

/// The pair relation left after refining `seed` by every twinless
/// articulation point z of g: pairs over domain - {z} split by the twinless
/// components of g - z are cleared. g must be twinless strongly connected.
PairMatrix relation_matrix(const Digraph& g, const VertexSet& domain, const MatrixSeed& seed,
                           const RefineOptions& options = {}, RefinementStats* stats = nullptr);

/// Matrix refinement starting from all pairs related.
BlockFamily two_twinless_blocks_basic(const Digraph& g, const RefineOptions& options = {},
                                      RefinementStats* stats = nullptr);

/// Matrix refinement restricted to A, the union of the 2-strong blocks,
/// and seeded with those blocks.
BlockFamily two_twinless_blocks_improved(const Digraph& g, const RefineOptions& options = {},
                                         RefinementStats* stats = nullptr);

/// Splits each block of `family` along the classes of `classes`, a
/// partition of V - {z}. A block containing z keeps z in every piece.
/// Pieces smaller than two vertices are dropped, as are repeats and
/// pieces contained in another piece.
BlockFamily refine_family(const BlockFamily& family, const Partition& classes, Vertex z);

/// Starts from the 2-strong blocks and applies refine_family once per
/// twinless articulation point.
BlockFamily two_twinless_blocks_refine(const Digraph& g, const RefineOptions& options = {},
                                       RefinementStats* stats = nullptr);

/// Any digraph: runs `algo` on every twinless strongly connected component
/// with at least three vertices and merges the results.
BlockFamily two_twinless_blocks(const Digraph& g, Algorithm algo, const RefineOptions& options = {},
                                RefinementStats* stats = nullptr);
BlockFamily two_twinless_blocks(const Digraph& g, std::string_view algo);

/// Bipartite block/shared-vertex graph of a block family.
struct BlockForest {
    /// Block node i stands for blocks[i].
    std::vector<VertexSet> blocks;
    /// Vertices contained in two or more blocks.
    VertexSet shared_vertices;
    /// (block index, shared vertex) memberships.
    std::vector<std::pair<std::size_t, Vertex>> edges;

    std::size_t node_count() const noexcept { return blocks.size() + shared_vertices.size(); }
};

/// Throws InvariantError if the result contains a cycle.
BlockForest block_forest(const BlockFamily& blocks);

} // namespace twinblocks
