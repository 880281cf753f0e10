#include "twinblocks/strong_blocks.hpp"

#include "twinblocks/pair_matrix.hpp"
#include "twinblocks/twinless.hpp"

namespace twinblocks {

VertexSet strong_articulation_points(const Digraph& g) {
    return detail::articulation_points_by_removal(g, [](const Digraph& h) { return strongly_connected_components(h); });
}

BlockFamily two_strong_blocks(const Digraph& g) {
    std::vector<VertexSet> blocks;
    for (const VertexSet& component : strongly_connected_components(g)) {
        if (component.size() < 2) {
            continue;
        }
        const Subgraph sub = induced_subgraph(g, component);
        const Digraph& h = sub.graph;
        const VertexSet saps = strong_articulation_points(h);
        if (h.vertex_count() >= 3 && saps.empty()) {
            blocks.push_back(component);
            continue;
        }
        PairMatrix s(VertexSet::range(h.vertex_count()), h.vertex_count(), true);
        for (Vertex z : saps) {
            const auto host_class =
                classes_without(h, z, [](const Digraph& x) { return strongly_connected_components(x); });
            clear_separated_pairs(s, z, host_class);
        }
        for (const VertexSet& local : blocks_from_matrix(s)) {
            std::vector<Vertex> members;
            for (Vertex v : local) {
                members.push_back(sub.to_parent[v]);
            }
            blocks.emplace_back(std::move(members));
        }
    }
    BlockFamily family(std::move(blocks));
    check_block_family(family);
    return family;
}

} // namespace twinblocks
