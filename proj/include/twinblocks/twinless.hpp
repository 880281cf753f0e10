#pragma once

#include "twinblocks/connectivity.hpp"
#include "twinblocks/graph.hpp"

namespace twinblocks {

/// Twinless strongly connected components.
///
/// Computed per strongly connected component: two vertices of one SCC share
/// a twinless component iff they are 2-edge-connected in the underlying
/// undirected graph of that SCC, where a pair of antiparallel arcs counts as
/// a single edge. Linear time.
Partition twinless_sccs(const Digraph& g);

/// True iff n >= 1 and twinless_sccs has a single class.
bool is_twinless_strongly_connected(const Digraph& g);

/// Vertices whose removal increases the number of twinless components.
/// One removal plus one twinless_sccs call per vertex: O(n(n+m)).
VertexSet twinless_articulation_points(const Digraph& g);

/// Twinless strongly connected, n >= 3, no twinless articulation points.
bool is_two_vertex_twinless_connected(const Digraph& g);

namespace detail {

/// { v : component_count(g - v) > component_count(g) }.
template <typename ComponentFn>
VertexSet articulation_points_by_removal(const Digraph& g, ComponentFn&& components) {
    const std::size_t base = components(g).size();
    std::vector<Vertex> points;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (components(remove_vertex(g, v).graph).size() > base) {
            points.push_back(v);
        }
    }
    return VertexSet(std::move(points));
}

} // namespace detail

} // namespace twinblocks
