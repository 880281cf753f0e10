#include "twinblocks/twinless.hpp"

namespace twinblocks {

Partition twinless_sccs(const Digraph& g) {
    const Partition sccs = strongly_connected_components(g);
    // Arcs between different SCCs lie on no cycle, so dropping them isolates
    // each SCC's underlying graph inside one undirected graph.
    std::vector<Edge> edges;
    edges.reserve(g.arc_count());
    for (const Arc& a : g.arcs()) {
        if (sccs.same_class(a.tail, a.head)) {
            edges.push_back({std::min(a.tail, a.head), std::max(a.tail, a.head)});
        }
    }
    return two_edge_connected_components(UndirectedGraph(g.vertex_count(), std::move(edges)));
}

bool is_twinless_strongly_connected(const Digraph& g) {
    return g.vertex_count() >= 1 && twinless_sccs(g).size() == 1;
}

VertexSet twinless_articulation_points(const Digraph& g) {
    return detail::articulation_points_by_removal(g, [](const Digraph& h) { return twinless_sccs(h); });
}

bool is_two_vertex_twinless_connected(const Digraph& g) {
    return g.vertex_count() >= 3 && is_twinless_strongly_connected(g) && twinless_articulation_points(g).empty();
}

} // namespace twinblocks
