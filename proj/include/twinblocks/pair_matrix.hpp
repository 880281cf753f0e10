#pragma once

#include "twinblocks/connectivity.hpp"
#include "twinblocks/graph.hpp"

#include <span>
#include <vector>

namespace twinblocks {

/// Symmetric boolean relation over the unordered pairs of a vertex domain,
/// stored as a bit-packed strict upper triangle. Vertices are host-graph
/// indices; the domain may be a proper subset of the host.
class PairMatrix {
public:
    PairMatrix(VertexSet domain, std::size_t host_vertex_count, bool initial);

    const VertexSet& domain() const noexcept { return domain_; }
    std::size_t host_vertex_count() const noexcept { return position_.size(); }
    /// Position of v in the domain, or npos.
    std::size_t position(Vertex v) const { return v < position_.size() ? position_[v] : npos; }

    /// Number of unordered pairs, s(s-1)/2.
    std::size_t cell_count() const noexcept { return bits_.size(); }
    std::size_t true_count() const;

    bool get(Vertex v, Vertex w) const;
    void set(Vertex v, Vertex w, bool value);

    /// Same, addressed by domain positions (i != j).
    bool get_at(std::size_t i, std::size_t j) const { return bits_[cell(i, j)]; }
    void set_at(std::size_t i, std::size_t j, bool value) { bits_[cell(i, j)] = value; }

private:
    std::size_t cell(std::size_t i, std::size_t j) const;

    VertexSet domain_;
    std::vector<std::size_t> position_;
    std::vector<bool> bits_;
};

/// Clears every domain pair {v, w} with v, w != removed whose host classes
/// differ. `host_class[x]` is the class of host vertex x in the graph with
/// `removed` deleted. Returns the number of pairs examined.
std::size_t clear_separated_pairs(PairMatrix& s, Vertex removed, std::span<const std::size_t> host_class);

/// Class index of every host vertex in g - z, npos for z itself.
template <typename ComponentFn>
std::vector<std::size_t> classes_without(const Digraph& g, Vertex z, ComponentFn&& components) {
    const Subgraph rest = remove_vertex(g, z);
    const Partition p = components(rest.graph);
    std::vector<std::size_t> host_class(g.vertex_count(), npos);
    for (std::size_t local = 0; local < rest.to_parent.size(); ++local) {
        host_class[rest.to_parent[local]] = p.class_of(static_cast<Vertex>(local));
    }
    return host_class;
}

/// The undirected graph on domain positions with an edge per true pair.
UndirectedGraph relation_graph(const PairMatrix& s);

/// Biconnected blocks of the relation graph, in host vertex indices.
///
/// The relation graph is required to be chordal with biconnected blocks
/// equal to its maximal cliques; both are checked on every call and a
/// failure throws InvariantError.
BlockFamily blocks_from_matrix(const PairMatrix& s);

} // namespace twinblocks
