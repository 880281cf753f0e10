#pragma once

// Test-only brute-force references and graph generators.

#include "twinblocks/connectivity.hpp"
#include "twinblocks/graph.hpp"
#include "twinblocks/oracle.hpp"
#include "twinblocks/twinless.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

namespace twinblocks::test {

inline VertexSet labels_to_set(const Digraph& g, std::initializer_list<const char*> names) {
    std::vector<Vertex> out;
    for (const char* name : names) {
        out.push_back(*g.find_label(name));
    }
    return VertexSet(std::move(out));
}

inline VertexSet fig1_set(std::initializer_list<int> one_based) {
    std::vector<Vertex> out;
    for (int v : one_based) {
        out.push_back(static_cast<Vertex>(v - 1));
    }
    return VertexSet(std::move(out));
}

/// SCCs as classes of mutual reachability.
inline Partition closure_sccs(const Digraph& g) {
    const auto reach = brute_force::reachability(g);
    const std::size_t n = g.vertex_count();
    std::vector<char> done(n, 0);
    std::vector<VertexSet> classes;
    for (Vertex v = 0; v < n; ++v) {
        if (done[v]) {
            continue;
        }
        std::vector<Vertex> cls;
        for (Vertex w = 0; w < n; ++w) {
            if (reach[v][w] && reach[w][v]) {
                cls.push_back(w);
                done[w] = 1;
            }
        }
        classes.emplace_back(std::move(cls));
    }
    return Partition(std::move(classes));
}

inline std::size_t connected_component_count(std::size_t n, const std::vector<Edge>& edges) {
    std::vector<std::size_t> parent(n);
    for (std::size_t i = 0; i < n; ++i) {
        parent[i] = i;
    }
    auto find = [&](std::size_t x) {
        while (parent[x] != x) {
            x = parent[x];
        }
        return x;
    };
    std::size_t count = n;
    for (const Edge& e : edges) {
        const std::size_t a = find(e.u);
        const std::size_t b = find(e.v);
        if (a != b) {
            parent[a] = b;
            --count;
        }
    }
    return count;
}

/// Edges whose deletion increases the number of connected components.
inline std::vector<Edge> brute_force_bridges(const UndirectedGraph& u) {
    const std::vector<Edge> all(u.edges().begin(), u.edges().end());
    const std::size_t base = connected_component_count(u.vertex_count(), all);
    std::vector<Edge> out;
    for (std::size_t i = 0; i < all.size(); ++i) {
        std::vector<Edge> rest = all;
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
        if (connected_component_count(u.vertex_count(), rest) > base) {
            out.push_back(all[i]);
        }
    }
    return out;
}

/// Connected components of the graph with every brute-force bridge deleted.
inline Partition brute_force_two_edge_components(const UndirectedGraph& u) {
    const std::vector<Edge> cut = brute_force_bridges(u);
    std::vector<Edge> kept;
    for (const Edge& e : u.edges()) {
        if (std::find(cut.begin(), cut.end(), e) == cut.end()) {
            kept.push_back(e);
        }
    }
    const UndirectedGraph rest(u.vertex_count(), kept);
    const std::size_t n = u.vertex_count();
    std::vector<char> seen(n, 0);
    std::vector<VertexSet> classes;
    for (Vertex s = 0; s < n; ++s) {
        if (seen[s]) {
            continue;
        }
        std::vector<Vertex> stack{s}, cls;
        seen[s] = 1;
        while (!stack.empty()) {
            const Vertex v = stack.back();
            stack.pop_back();
            cls.push_back(v);
            for (Vertex w : rest.neighbors(v)) {
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
            }
        }
        classes.emplace_back(std::move(cls));
    }
    return Partition(std::move(classes));
}

/// True iff some vertex subset of size >= 4 induces a cycle.
inline bool has_chordless_cycle(const UndirectedGraph& u) {
    const std::size_t n = u.vertex_count();
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) < 4) {
            continue;
        }
        std::vector<Vertex> members;
        for (Vertex v = 0; v < n; ++v) {
            if ((mask >> v) & 1) {
                members.push_back(v);
            }
        }
        bool all_degree_two = true;
        std::vector<Edge> inner;
        for (Vertex v : members) {
            std::size_t deg = 0;
            for (Vertex w : u.neighbors(v)) {
                if ((mask >> w) & 1) {
                    ++deg;
                    if (v < w) {
                        inner.push_back({v, w});
                    }
                }
            }
            all_degree_two = all_degree_two && deg == 2;
        }
        if (!all_degree_two) {
            continue;
        }
        // Degree two everywhere: a disjoint union of cycles. Connected means one.
        std::vector<Edge> relabeled;
        for (const Edge& e : inner) {
            const auto a = static_cast<Vertex>(std::find(members.begin(), members.end(), e.u) - members.begin());
            const auto b = static_cast<Vertex>(std::find(members.begin(), members.end(), e.v) - members.begin());
            relabeled.push_back({a, b});
        }
        if (connected_component_count(members.size(), relabeled) == 1) {
            return true;
        }
    }
    return false;
}

inline BlockFamily brute_force_cliques(const UndirectedGraph& u) {
    const std::size_t n = u.vertex_count();
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (const Edge& e : u.edges()) {
        adj[e.u][e.v] = adj[e.v][e.u] = 1;
    }
    return brute_force::maximal_cliques(adj);
}

inline UndirectedGraph random_undirected(std::size_t n, double p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (Vertex a = 0; a < n; ++a) {
        for (Vertex b = a + 1; b < n; ++b) {
            if (coin(rng)) {
                edges.push_back({a, b});
            }
        }
    }
    return UndirectedGraph(n, std::move(edges));
}

/// Random chordal graph: each new vertex joins a random clique-closed
/// neighbourhood (a random earlier vertex plus a subset of that vertex's
/// earlier-added clique).
inline UndirectedGraph random_chordal(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::vector<Vertex>> clique_of(n);
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v) {
        std::uniform_int_distribution<Vertex> pick(0, v - 1);
        const Vertex anchor = pick(rng);
        std::vector<Vertex> joined{anchor};
        std::bernoulli_distribution keep(0.6);
        for (Vertex w : clique_of[anchor]) {
            if (keep(rng)) {
                joined.push_back(w);
            }
        }
        if (std::bernoulli_distribution(0.15)(rng)) {
            joined.clear();
        }
        for (Vertex w : joined) {
            edges.push_back({w, v});
        }
        clique_of[v] = joined;
    }
    return UndirectedGraph(n, std::move(edges));
}

/// Mix of random digraphs with n <= 8 and m <= 20.
inline Digraph small_random_digraph(std::uint64_t seed) {
    std::mt19937_64 rng(seed * 7919 + 17);
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 8)(rng);
    const std::size_t cap = std::min<std::size_t>(20, n * (n - 1));
    const std::size_t m = std::uniform_int_distribution<std::size_t>(0, cap)(rng);
    return random_digraph(n, m, seed);
}

/// Twinless strongly connected graph with at most `max_n` vertices; the
/// largest twinless component of a random digraph or a cycle with chords.
inline Digraph random_tsc_graph(std::size_t max_n, std::uint64_t seed) {
    std::mt19937_64 rng(seed * 104729 + 3);
    const std::size_t n = std::uniform_int_distribution<std::size_t>(3, max_n)(rng);
    if (seed % 3 == 0) {
        const Digraph g = random_digraph(n, std::min(n * (n - 1), 2 * n + n / 2), seed);
        VertexSet largest;
        for (const VertexSet& c : twinless_sccs(g)) {
            if (c.size() > largest.size()) {
                largest = c;
            }
        }
        if (largest.size() >= 3) {
            return induced_subgraph(g, largest).graph;
        }
    }
    const std::size_t extra = std::uniform_int_distribution<std::size_t>(0, n)(rng);
    return random_twinless_digraph(n, extra, seed);
}

} // namespace twinblocks::test
