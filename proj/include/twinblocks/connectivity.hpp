#pragma once

#include "twinblocks/graph.hpp"

#include <vector>

namespace twinblocks {

/// Disjoint classes over a host vertex set, ordered by smallest member.
class Partition {
public:
    Partition() = default;
    /// Throws GraphError on empty or overlapping classes.
    explicit Partition(std::vector<VertexSet> classes);

    std::size_t size() const noexcept { return classes_.size(); }
    const std::vector<VertexSet>& classes() const noexcept { return classes_; }
    const VertexSet& operator[](std::size_t i) const { return classes_[i]; }
    auto begin() const noexcept { return classes_.begin(); }
    auto end() const noexcept { return classes_.end(); }

    /// Index of the class holding v, or npos if v is not covered.
    std::size_t class_of(Vertex v) const;
    bool same_class(Vertex u, Vertex v) const;
    /// True iff the classes cover exactly [0, n).
    bool covers(std::size_t n) const;

    friend bool operator==(const Partition& a, const Partition& b) { return a.classes_ == b.classes_; }

private:
    std::vector<VertexSet> classes_;
    std::vector<std::size_t> class_of_;
};

/// Canonically ordered family of vertex sets of size >= 2: members
/// ascending, sets in lexicographic order, no repeats.
///
/// Families produced by the block algorithms also overlap pairwise in at most
/// one vertex and contain no nested sets; check_block_family() asserts that.
/// Cliques of a general chordal graph need not, so construction doesn't.
class BlockFamily {
public:
    BlockFamily() = default;
    explicit BlockFamily(std::vector<VertexSet> blocks);

    std::size_t size() const noexcept { return blocks_.size(); }
    bool empty() const noexcept { return blocks_.empty(); }
    const std::vector<VertexSet>& blocks() const noexcept { return blocks_; }
    const VertexSet& operator[](std::size_t i) const { return blocks_[i]; }
    auto begin() const noexcept { return blocks_.begin(); }
    auto end() const noexcept { return blocks_.end(); }

    /// Union of all members.
    VertexSet support() const;

    friend bool operator==(const BlockFamily&, const BlockFamily&) = default;

private:
    std::vector<VertexSet> blocks_;
};

/// Throws InvariantError if two blocks share two or more vertices or one
/// block contains another.
void check_block_family(const BlockFamily& family);

/// Iterative Tarjan.
Partition strongly_connected_components(const Digraph& g);
bool is_strongly_connected(const Digraph& g);

std::vector<Edge> bridges(const UndirectedGraph& u);
/// Connected components after deleting every bridge.
Partition two_edge_connected_components(const UndirectedGraph& u);

/// Vertex sets of the biconnected components that contain at least one
/// edge. A bridge is a 2-vertex block; cut vertices appear in each of their
/// blocks.
BlockFamily biconnected_blocks(const UndirectedGraph& u);

/// Visit order of a lexicographic breadth-first search (partition
/// refinement, linear time). Ties are broken toward smaller indices.
std::vector<Vertex> lex_bfs(const UndirectedGraph& u);

struct ChordalityResult {
    bool chordal = false;
    /// A perfect elimination ordering when chordal; empty otherwise.
    std::vector<Vertex> elimination_order;
};

ChordalityResult check_chordal(const UndirectedGraph& u);
inline bool is_chordal(const UndirectedGraph& u) { return check_chordal(u).chordal; }

/// Maximal cliques of size >= 2 of a chordal graph, read off a perfect
/// elimination ordering. Throws GraphError on non-chordal input.
BlockFamily maximal_cliques_chordal(const UndirectedGraph& u);

} // namespace twinblocks
