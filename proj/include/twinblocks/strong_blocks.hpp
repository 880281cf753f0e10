#pragma once

#include "twinblocks/connectivity.hpp"
#include "twinblocks/graph.hpp"

namespace twinblocks {

/// Vertices whose removal increases the number of SCCs. O(n(n+m)).
VertexSet strong_articulation_points(const Digraph& g);

/// Maximal vertex sets of size >= 2 whose pairs stay in one SCC after any
/// single-vertex deletion.
///
/// Each SCC C with |C| >= 2 is handled on its induced subgraph H: if H has
/// at least three vertices and no strong articulation points, C is the
/// block; otherwise all pairs start related, the pairs separated by each
/// strong articulation point z of H in H - z are cleared, and the blocks
/// of the surviving relation graph are returned.
BlockFamily two_strong_blocks(const Digraph& g);

} // namespace twinblocks
