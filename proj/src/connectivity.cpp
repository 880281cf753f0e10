#include "twinblocks/connectivity.hpp"

#include "twinblocks/errors.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace twinblocks {

Partition::Partition(std::vector<VertexSet> classes) : classes_(std::move(classes)) {
    Vertex max_member = 0;
    for (const VertexSet& c : classes_) {
        if (c.empty()) {
            throw GraphError("partition class is empty");
        }
        max_member = std::max(max_member, c.back());
    }
    std::sort(classes_.begin(), classes_.end(),
              [](const VertexSet& a, const VertexSet& b) { return a.front() < b.front(); });
    class_of_.assign(classes_.empty() ? 0 : max_member + 1, npos);
    for (std::size_t i = 0; i < classes_.size(); ++i) {
        for (Vertex v : classes_[i]) {
            if (class_of_[v] != npos) {
                throw GraphError("vertex " + std::to_string(v) + " appears in two partition classes");
            }
            class_of_[v] = i;
        }
    }
}

std::size_t Partition::class_of(Vertex v) const {
    return v < class_of_.size() ? class_of_[v] : npos;
}

bool Partition::same_class(Vertex u, Vertex v) const {
    const std::size_t cu = class_of(u);
    return cu != npos && cu == class_of(v);
}

bool Partition::covers(std::size_t n) const {
    return class_of_.size() == n && std::none_of(class_of_.begin(), class_of_.end(),
                                                 [](std::size_t c) { return c == npos; });
}

BlockFamily::BlockFamily(std::vector<VertexSet> blocks) : blocks_(std::move(blocks)) {
    for (const VertexSet& b : blocks_) {
        if (b.size() < 2) {
            throw InvariantError("block family member with fewer than two vertices");
        }
    }
    std::sort(blocks_.begin(), blocks_.end());
    blocks_.erase(std::unique(blocks_.begin(), blocks_.end()), blocks_.end());
}

VertexSet BlockFamily::support() const {
    std::vector<Vertex> all;
    for (const VertexSet& b : blocks_) {
        all.insert(all.end(), b.begin(), b.end());
    }
    return VertexSet(std::move(all));
}

void check_block_family(const BlockFamily& family) {
    std::map<Vertex, std::vector<std::size_t>> containing;
    for (std::size_t i = 0; i < family.size(); ++i) {
        for (Vertex v : family[i]) {
            containing[v].push_back(i);
        }
    }
    std::map<std::pair<std::size_t, std::size_t>, int> shared;
    for (const auto& [v, owners] : containing) {
        for (std::size_t a = 0; a < owners.size(); ++a) {
            for (std::size_t b = a + 1; b < owners.size(); ++b) {
                if (++shared[{owners[a], owners[b]}] >= 2) {
                    throw InvariantError("blocks #" + std::to_string(owners[a]) + " and #" +
                                         std::to_string(owners[b]) + " share more than one vertex");
                }
            }
        }
    }
}

Partition strongly_connected_components(const Digraph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<std::size_t> index(n, npos);
    std::vector<std::size_t> low(n, 0);
    std::vector<char> on_stack(n, 0);
    std::vector<Vertex> stack;
    std::vector<std::pair<Vertex, std::size_t>> frames;
    std::vector<VertexSet> components;
    std::size_t counter = 0;

    for (Vertex root = 0; root < n; ++root) {
        if (index[root] != npos) {
            continue;
        }
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = 1;
        frames.emplace_back(root, 0);

        while (!frames.empty()) {
            const Vertex v = frames.back().first;
            auto succ = g.successors(v);
            if (frames.back().second < succ.size()) {
                const Vertex w = succ[frames.back().second++];
                if (index[w] == npos) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    frames.emplace_back(w, 0);
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            if (low[v] == index[v]) {
                std::vector<Vertex> component;
                Vertex w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = 0;
                    component.push_back(w);
                } while (w != v);
                components.emplace_back(std::move(component));
            }
            frames.pop_back();
            if (!frames.empty()) {
                const Vertex parent = frames.back().first;
                low[parent] = std::min(low[parent], low[v]);
            }
        }
    }
    return Partition(std::move(components));
}

bool is_strongly_connected(const Digraph& g) {
    return g.vertex_count() >= 1 && strongly_connected_components(g).size() == 1;
}

namespace {

// Adjacency with edge ids, so a DFS can skip exactly the tree edge it came
// through rather than every edge to its parent.
struct IncidenceLists {
    std::vector<std::size_t> offsets;
    std::vector<std::pair<Vertex, std::size_t>> entries;

    explicit IncidenceLists(const UndirectedGraph& u) {
        const std::size_t n = u.vertex_count();
        offsets.assign(n + 1, 0);
        for (const Edge& e : u.edges()) {
            ++offsets[e.u + 1];
            ++offsets[e.v + 1];
        }
        for (std::size_t i = 0; i < n; ++i) {
            offsets[i + 1] += offsets[i];
        }
        entries.resize(2 * u.edge_count());
        std::vector<std::size_t> cursor(offsets.begin(), offsets.end() - 1);
        const auto edges = u.edges();
        for (std::size_t id = 0; id < edges.size(); ++id) {
            entries[cursor[edges[id].u]++] = {edges[id].v, id};
            entries[cursor[edges[id].v]++] = {edges[id].u, id};
        }
    }

    std::size_t degree(Vertex v) const { return offsets[v + 1] - offsets[v]; }
    const std::pair<Vertex, std::size_t>& at(Vertex v, std::size_t i) const { return entries[offsets[v] + i]; }
};

struct DfsFrame {
    Vertex vertex;
    std::size_t parent_edge;
    std::size_t next = 0;
};

} // namespace

std::vector<Edge> bridges(const UndirectedGraph& u) {
    const std::size_t n = u.vertex_count();
    const IncidenceLists inc(u);
    std::vector<std::size_t> tin(n, npos);
    std::vector<std::size_t> low(n, 0);
    std::vector<DfsFrame> frames;
    std::vector<Edge> result;
    std::size_t timer = 0;

    for (Vertex root = 0; root < n; ++root) {
        if (tin[root] != npos) {
            continue;
        }
        tin[root] = low[root] = timer++;
        frames.push_back({root, npos});
        while (!frames.empty()) {
            DfsFrame& f = frames.back();
            const Vertex v = f.vertex;
            if (f.next < inc.degree(v)) {
                const auto [w, id] = inc.at(v, f.next++);
                if (id == f.parent_edge) {
                    continue;
                }
                if (tin[w] == npos) {
                    tin[w] = low[w] = timer++;
                    frames.push_back({w, id});
                } else {
                    low[v] = std::min(low[v], tin[w]);
                }
                continue;
            }
            const std::size_t via = f.parent_edge;
            frames.pop_back();
            if (!frames.empty()) {
                const Vertex parent = frames.back().vertex;
                low[parent] = std::min(low[parent], low[v]);
                if (low[v] > tin[parent]) {
                    result.push_back(u.edges()[via]);
                }
            }
        }
    }
    std::sort(result.begin(), result.end());
    return result;
}

Partition two_edge_connected_components(const UndirectedGraph& u) {
    const std::size_t n = u.vertex_count();
    const std::vector<Edge> cut = bridges(u);
    std::vector<Vertex> label(n, 0);
    std::vector<char> seen(n, 0);
    std::vector<VertexSet> classes;
    std::vector<Vertex> queue;

    auto is_bridge = [&](Vertex a, Vertex b) {
        return std::binary_search(cut.begin(), cut.end(), Edge{std::min(a, b), std::max(a, b)});
    };
    for (Vertex s = 0; s < n; ++s) {
        if (seen[s]) {
            continue;
        }
        seen[s] = 1;
        queue.assign(1, s);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const Vertex v = queue[head];
            for (Vertex w : u.neighbors(v)) {
                if (!seen[w] && !is_bridge(v, w)) {
                    seen[w] = 1;
                    queue.push_back(w);
                }
            }
        }
        classes.emplace_back(queue);
    }
    return Partition(std::move(classes));
}

BlockFamily biconnected_blocks(const UndirectedGraph& u) {
    const std::size_t n = u.vertex_count();
    const IncidenceLists inc(u);
    const auto edges = u.edges();
    std::vector<std::size_t> tin(n, npos);
    std::vector<std::size_t> low(n, 0);
    std::vector<std::size_t> edge_stack;
    std::vector<DfsFrame> frames;
    std::vector<VertexSet> blocks;
    std::size_t timer = 0;

    for (Vertex root = 0; root < n; ++root) {
        if (tin[root] != npos) {
            continue;
        }
        tin[root] = low[root] = timer++;
        frames.push_back({root, npos});
        while (!frames.empty()) {
            DfsFrame& f = frames.back();
            const Vertex v = f.vertex;
            if (f.next < inc.degree(v)) {
                const auto [w, id] = inc.at(v, f.next++);
                if (id == f.parent_edge) {
                    continue;
                }
                if (tin[w] == npos) {
                    edge_stack.push_back(id);
                    tin[w] = low[w] = timer++;
                    frames.push_back({w, id});
                } else if (tin[w] < tin[v]) {
                    edge_stack.push_back(id);
                    low[v] = std::min(low[v], tin[w]);
                }
                continue;
            }
            const std::size_t via = f.parent_edge;
            frames.pop_back();
            if (frames.empty()) {
                continue;
            }
            const Vertex parent = frames.back().vertex;
            low[parent] = std::min(low[parent], low[v]);
            if (low[v] >= tin[parent]) {
                std::vector<Vertex> members;
                std::size_t id;
                do {
                    id = edge_stack.back();
                    edge_stack.pop_back();
                    members.push_back(edges[id].u);
                    members.push_back(edges[id].v);
                } while (id != via);
                blocks.emplace_back(std::move(members));
            }
        }
    }
    return BlockFamily(std::move(blocks));
}

std::vector<Vertex> lex_bfs(const UndirectedGraph& u) {
    const std::size_t n = u.vertex_count();
    struct Cell {
        std::size_t start;
        std::size_t end;
        std::size_t moved = 0;
    };
    std::vector<Vertex> order(n);
    std::vector<std::size_t> pos(n);
    std::vector<std::size_t> cell_of(n, 0);
    std::vector<Cell> cells;
    for (Vertex v = 0; v < n; ++v) {
        order[v] = v;
        pos[v] = v;
    }
    if (n > 0) {
        cells.push_back({0, n});
    }
    std::vector<std::size_t> touched;

    // Cells are contiguous ranges of `order`, ranked by position. Visiting
    // order[i] pulls each unvisited neighbour to the front of its cell, then
    // every touched cell splits with the pulled prefix becoming a new cell
    // ranked just ahead of the remainder.
    for (std::size_t i = 0; i < n; ++i) {
        const Vertex v = order[i];
        ++cells[cell_of[v]].start;
        for (Vertex w : u.neighbors(v)) {
            if (pos[w] <= i) {
                continue;
            }
            Cell& c = cells[cell_of[w]];
            const std::size_t target = c.start + c.moved;
            const Vertex displaced = order[target];
            std::swap(order[target], order[pos[w]]);
            pos[displaced] = pos[w];
            pos[w] = target;
            if (c.moved++ == 0) {
                touched.push_back(cell_of[w]);
            }
        }
        for (std::size_t id : touched) {
            const std::size_t k = std::exchange(cells[id].moved, 0);
            if (k == cells[id].end - cells[id].start) {
                continue;
            }
            const std::size_t fresh = cells.size();
            const std::size_t start = cells[id].start;
            cells.push_back({start, start + k});
            cells[id].start += k;
            for (std::size_t p = start; p < start + k; ++p) {
                cell_of[order[p]] = fresh;
            }
        }
        touched.clear();
    }
    return order;
}

namespace {

struct EliminationData {
    std::vector<std::size_t> rank;             // position in the elimination order
    std::vector<std::vector<Vertex>> later;    // neighbours eliminated afterwards
    std::vector<std::size_t> parent;           // earliest of `later`, or npos
};

EliminationData elimination_data(const UndirectedGraph& u, const std::vector<Vertex>& order) {
    const std::size_t n = u.vertex_count();
    EliminationData d{std::vector<std::size_t>(n), std::vector<std::vector<Vertex>>(n),
                      std::vector<std::size_t>(n, npos)};
    for (std::size_t i = 0; i < n; ++i) {
        d.rank[order[i]] = i;
    }
    for (Vertex v = 0; v < n; ++v) {
        for (Vertex w : u.neighbors(v)) {
            if (d.rank[w] > d.rank[v]) {
                d.later[v].push_back(w);
                if (d.parent[v] == npos || d.rank[w] < d.rank[d.parent[v]]) {
                    d.parent[v] = w;
                }
            }
        }
    }
    return d;
}

} // namespace

ChordalityResult check_chordal(const UndirectedGraph& u) {
    std::vector<Vertex> order = lex_bfs(u);
    std::reverse(order.begin(), order.end());
    const EliminationData d = elimination_data(u, order);
    for (Vertex v = 0; v < u.vertex_count(); ++v) {
        if (d.parent[v] == npos) {
            continue;
        }
        const auto p = static_cast<Vertex>(d.parent[v]);
        for (Vertex w : d.later[v]) {
            if (w != p && !u.has_edge(p, w)) {
                return {false, {}};
            }
        }
    }
    return {true, std::move(order)};
}

BlockFamily maximal_cliques_chordal(const UndirectedGraph& u) {
    ChordalityResult chordal = check_chordal(u);
    if (!chordal.chordal) {
        throw GraphError("maximal_cliques_chordal: graph is not chordal");
    }
    const EliminationData d = elimination_data(u, chordal.elimination_order);
    const std::size_t n = u.vertex_count();
    // {v} + later(v) is contained in {c} + later(c) exactly when c is a child
    // of v with one more later neighbour.
    std::vector<char> dominated(n, 0);
    for (Vertex c = 0; c < n; ++c) {
        if (d.parent[c] != npos && d.later[c].size() == d.later[d.parent[c]].size() + 1) {
            dominated[d.parent[c]] = 1;
        }
    }
    std::vector<VertexSet> cliques;
    for (Vertex v = 0; v < n; ++v) {
        if (dominated[v] || d.later[v].empty()) {
            continue;
        }
        std::vector<Vertex> members = d.later[v];
        members.push_back(v);
        cliques.emplace_back(std::move(members));
    }
    return BlockFamily(std::move(cliques));
}

} // namespace twinblocks
