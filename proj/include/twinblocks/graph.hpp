#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace twinblocks {

using Vertex = std::uint32_t;

inline constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

struct Arc {
    Vertex tail = 0;
    Vertex head = 0;

    friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Unordered pair, stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Strictly ascending sequence of distinct vertices.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::vector<Vertex> members);
    VertexSet(std::initializer_list<Vertex> members);

    /// {0, 1, ..., n-1}
    static VertexSet range(std::size_t n);

    std::size_t size() const noexcept { return members_.size(); }
    bool empty() const noexcept { return members_.empty(); }
    Vertex operator[](std::size_t i) const { return members_[i]; }
    Vertex front() const { return members_.front(); }
    Vertex back() const { return members_.back(); }
    auto begin() const noexcept { return members_.begin(); }
    auto end() const noexcept { return members_.end(); }
    const std::vector<Vertex>& members() const noexcept { return members_; }

    bool contains(Vertex v) const;
    bool is_subset_of(const VertexSet& other) const;

    friend auto operator<=>(const VertexSet&, const VertexSet&) = default;

private:
    std::vector<Vertex> members_;
};

VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
VertexSet set_union(const VertexSet& a, const VertexSet& b);

/// Simple directed graph on vertices [0, n): no self-loops, no parallel arcs.
/// Construction normalizes the arc list (sorts, drops loops and duplicates).
/// Labels are optional; an unlabeled vertex prints as its decimal index.
class Digraph {
public:
    Digraph() = default;
    Digraph(std::size_t n, std::vector<Arc> arcs, std::vector<std::string> labels = {});

    std::size_t vertex_count() const noexcept { return n_; }
    std::size_t arc_count() const noexcept { return arcs_.size(); }

    /// Sorted by (tail, head).
    std::span<const Arc> arcs() const noexcept { return arcs_; }
    std::span<const Vertex> successors(Vertex v) const;
    std::span<const Vertex> predecessors(Vertex v) const;
    bool has_arc(Vertex tail, Vertex head) const;

    bool has_labels() const noexcept { return !labels_.empty(); }
    std::string label(Vertex v) const;
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    std::optional<Vertex> find_label(std::string_view name) const;

    friend bool operator==(const Digraph& a, const Digraph& b) {
        return a.n_ == b.n_ && a.arcs_ == b.arcs_ && a.labels_ == b.labels_;
    }

private:
    std::size_t n_ = 0;
    std::vector<Arc> arcs_;
    std::vector<std::size_t> out_offsets_;
    std::vector<Vertex> out_targets_;
    std::vector<std::size_t> in_offsets_;
    std::vector<Vertex> in_sources_;
    std::vector<std::string> labels_;
};

/// Simple undirected graph on [0, n).
class UndirectedGraph {
public:
    UndirectedGraph() = default;
    UndirectedGraph(std::size_t n, std::vector<Edge> edges);

    std::size_t vertex_count() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    std::span<const Edge> edges() const noexcept { return edges_; }
    /// Ascending.
    std::span<const Vertex> neighbors(Vertex v) const;
    bool has_edge(Vertex u, Vertex v) const;

private:
    std::size_t n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::size_t> offsets_;
    std::vector<Vertex> adjacency_;
};

/// A graph derived from a host graph, with the host index of every vertex.
struct Subgraph {
    Digraph graph;
    std::vector<Vertex> to_parent;
};

Subgraph remove_vertex(const Digraph& g, Vertex v);
Subgraph induced_subgraph(const Digraph& g, const VertexSet& vertices);

/// Antiparallel pairs collapse into a single edge.
UndirectedGraph underlying_undirected(const Digraph& g);

/// Pairs {u, v} with both (u, v) and (v, u) present.
std::vector<Edge> antiparallel_pairs(const Digraph& g);

/// m distinct non-loop arcs drawn uniformly without replacement.
Digraph random_digraph(std::size_t n, std::size_t m, std::uint64_t seed);

/// A random Hamiltonian cycle plus `extra_arcs` further distinct random arcs.
/// The cycle alone is twinless strongly connected for n >= 3, so the result
/// always is.
Digraph random_twinless_digraph(std::size_t n, std::size_t extra_arcs, std::uint64_t seed);

Digraph directed_cycle(std::size_t n);
Digraph bidirected_complete(std::size_t n);

/// The 20-vertex example graph with two 2-strong blocks and one 2-twinless
/// block. Vertices are labeled "1".."20"; internal index = label - 1.
Digraph fig1_fixture();

struct ParseResult {
    Digraph graph;
    std::size_t loops_dropped = 0;
    std::size_t duplicates_dropped = 0;
};

/// Lines "<u> <v>"; blank lines and lines starting with '#' are skipped.
/// Vertex names are indexed in order of first appearance.
ParseResult parse_edge_list(std::string_view text);

/// Inverse of parse_edge_list for graphs without isolated vertices (the
/// format has no way to declare one).
std::string to_edge_list(const Digraph& g);

} // namespace twinblocks
