#include "twinblocks/oracle.hpp"

#include "twinblocks/errors.hpp"
#include "twinblocks/twinless.hpp"

#include <algorithm>
#include <string>

namespace twinblocks {

namespace brute_force {

std::vector<std::vector<char>> reachability(const Digraph& g, std::size_t skip) {
    const std::size_t n = g.vertex_count();
    std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
    std::vector<Vertex> queue;
    for (Vertex s = 0; s < n; ++s) {
        if (s == skip) {
            continue;
        }
        reach[s][s] = 1;
        queue.assign(1, s);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            for (Vertex w : g.successors(queue[head])) {
                if (w != skip && !reach[s][w]) {
                    reach[s][w] = 1;
                    queue.push_back(w);
                }
            }
        }
    }
    return reach;
}

bool strongly_connected(std::size_t n, std::span<const Arc> arcs) {
    if (n == 0) {
        return false;
    }
    std::vector<std::vector<Vertex>> fwd(n), bwd(n);
    for (const Arc& a : arcs) {
        fwd[a.tail].push_back(a.head);
        bwd[a.head].push_back(a.tail);
    }
    auto all_reached = [n](const std::vector<std::vector<Vertex>>& adj) {
        std::vector<char> seen(n, 0);
        std::vector<Vertex> stack{0};
        seen[0] = 1;
        std::size_t count = 1;
        while (!stack.empty()) {
            const Vertex v = stack.back();
            stack.pop_back();
            for (Vertex w : adj[v]) {
                if (!seen[w]) {
                    seen[w] = 1;
                    ++count;
                    stack.push_back(w);
                }
            }
        }
        return count == n;
    };
    return all_reached(fwd) && all_reached(bwd);
}

namespace {

void bron_kerbosch(const std::vector<std::vector<char>>& adj, std::vector<Vertex>& r, std::vector<Vertex> p,
                   std::vector<Vertex> x, std::vector<VertexSet>& out) {
    if (p.empty() && x.empty()) {
        if (r.size() >= 2) {
            out.emplace_back(r);
        }
        return;
    }
    Vertex pivot = !p.empty() ? p.front() : x.front();
    std::size_t best = 0;
    for (const auto* pool : {&p, &x}) {
        for (Vertex u : *pool) {
            const auto hits = static_cast<std::size_t>(
                std::count_if(p.begin(), p.end(), [&](Vertex v) { return adj[u][v] != 0; }));
            if (hits > best) {
                best = hits;
                pivot = u;
            }
        }
    }
    const std::vector<Vertex> candidates = p;
    for (Vertex v : candidates) {
        if (adj[pivot][v]) {
            continue;
        }
        std::vector<Vertex> p_next, x_next;
        for (Vertex w : p) {
            if (adj[v][w]) {
                p_next.push_back(w);
            }
        }
        for (Vertex w : x) {
            if (adj[v][w]) {
                x_next.push_back(w);
            }
        }
        r.push_back(v);
        bron_kerbosch(adj, r, std::move(p_next), std::move(x_next), out);
        r.pop_back();
        std::erase(p, v);
        x.push_back(v);
    }
}

} // namespace

BlockFamily maximal_cliques(const std::vector<std::vector<char>>& adjacent) {
    std::vector<Vertex> all(adjacent.size());
    for (std::size_t i = 0; i < all.size(); ++i) {
        all[i] = static_cast<Vertex>(i);
    }
    std::vector<Vertex> r;
    std::vector<VertexSet> out;
    bron_kerbosch(adjacent, r, all, {}, out);
    return BlockFamily(std::move(out));
}

} // namespace brute_force

namespace {

void require_at_most(const Digraph& g, std::size_t limit, const char* who) {
    if (g.vertex_count() > limit) {
        throw GraphError(std::string(who) + ": " + std::to_string(g.vertex_count()) +
                         " vertices exceeds the oracle limit of " + std::to_string(limit));
    }
}

} // namespace

std::optional<TwinlessWitness> oracle_twinless_witness(const Digraph& g, std::size_t pair_budget) {
    const std::size_t n = g.vertex_count();
    if (!brute_force::strongly_connected(n, g.arcs())) {
        return std::nullopt;
    }
    std::vector<Arc> single;
    std::vector<Edge> pairs;
    for (const Arc& a : g.arcs()) {
        if (!g.has_arc(a.head, a.tail)) {
            single.push_back(a);
        } else if (a.tail < a.head) {
            pairs.push_back({a.tail, a.head});
        }
    }
    if (pairs.size() > pair_budget) {
        throw GraphError("oracle_twinless_witness: " + std::to_string(pairs.size()) +
                         " antiparallel pairs exceeds the budget of " + std::to_string(pair_budget));
    }
    // Each pair may keep u->v, keep v->u, or keep neither. Deleting arcs
    // never creates strong connectivity, so "neither" succeeds only when a
    // one-arc choice also does and the two orientations cover the search.
    std::vector<Arc> arcs = single;
    arcs.resize(single.size() + pairs.size());
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            const Edge& e = pairs[i];
            arcs[single.size() + i] = (mask >> i) & 1 ? Arc{e.v, e.u} : Arc{e.u, e.v};
        }
        if (brute_force::strongly_connected(n, arcs)) {
            std::vector<Arc> chosen = arcs;
            std::sort(chosen.begin(), chosen.end());
            return TwinlessWitness{std::move(chosen)};
        }
    }
    return std::nullopt;
}

Partition oracle_twinless_sccs(const Digraph& g) {
    require_at_most(g, kOracleTwinlessSccLimit, "oracle_twinless_sccs");
    const std::size_t n = g.vertex_count();
    std::vector<std::uint32_t> masks(std::size_t{1} << n);
    for (std::uint32_t m = 0; m < masks.size(); ++m) {
        masks[m] = m;
    }
    std::stable_sort(masks.begin(), masks.end(), [](std::uint32_t a, std::uint32_t b) {
        return __builtin_popcount(a) > __builtin_popcount(b);
    });

    std::vector<std::uint32_t> maximal;
    for (std::uint32_t m : masks) {
        if (m == 0) {
            continue;
        }
        const bool inside_larger =
            std::any_of(maximal.begin(), maximal.end(), [m](std::uint32_t big) { return (m & big) == m; });
        if (inside_larger) {
            continue;
        }
        std::vector<Vertex> members;
        for (Vertex v = 0; v < n; ++v) {
            if ((m >> v) & 1) {
                members.push_back(v);
            }
        }
        if (oracle_twinless_witness(induced_subgraph(g, VertexSet(members)).graph)) {
            maximal.push_back(m);
        }
    }

    std::vector<VertexSet> classes;
    for (std::uint32_t m : maximal) {
        std::vector<Vertex> members;
        for (Vertex v = 0; v < n; ++v) {
            if ((m >> v) & 1) {
                members.push_back(v);
            }
        }
        classes.emplace_back(std::move(members));
    }
    Partition result;
    try {
        result = Partition(std::move(classes));
    } catch (const GraphError& e) {
        throw InvariantError(std::string("maximal twinless subsets overlap: ") + e.what());
    }
    if (n > 0 && !result.covers(n)) {
        throw InvariantError("maximal twinless subsets do not cover the vertex set");
    }
    return result;
}

BlockFamily oracle_two_strong_blocks(const Digraph& g) {
    require_at_most(g, kOracleBlockLimit, "oracle_two_strong_blocks");
    const std::size_t n = g.vertex_count();
    const auto base = brute_force::reachability(g);
    std::vector<std::vector<std::vector<char>>> without(n);
    for (Vertex u = 0; u < n; ++u) {
        without[u] = brute_force::reachability(g, u);
    }
    std::vector<std::vector<char>> related(n, std::vector<char>(n, 0));
    for (Vertex x = 0; x < n; ++x) {
        for (Vertex y = x + 1; y < n; ++y) {
            bool ok = base[x][y] && base[y][x];
            for (Vertex u = 0; ok && u < n; ++u) {
                if (u != x && u != y) {
                    ok = without[u][x][y] && without[u][y][x];
                }
            }
            related[x][y] = related[y][x] = ok;
        }
    }
    return brute_force::maximal_cliques(related);
}

BlockFamily oracle_two_twinless_blocks(const Digraph& g) {
    require_at_most(g, kOracleBlockLimit, "oracle_two_twinless_blocks");
    const std::size_t n = g.vertex_count();
    const Partition base = twinless_sccs(g);
    std::vector<Partition> without;
    for (Vertex w = 0; w < n; ++w) {
        without.push_back(twinless_sccs(remove_vertex(g, w).graph));
    }
    // Index of host vertex v in g - w.
    auto local = [](Vertex v, Vertex w) { return v > w ? v - 1 : v; };
    std::vector<std::vector<char>> related(n, std::vector<char>(n, 0));
    for (Vertex x = 0; x < n; ++x) {
        for (Vertex y = x + 1; y < n; ++y) {
            bool ok = base.same_class(x, y);
            for (Vertex w = 0; ok && w < n; ++w) {
                if (w != x && w != y) {
                    ok = without[w].same_class(local(x, w), local(y, w));
                }
            }
            related[x][y] = related[y][x] = ok;
        }
    }
    return brute_force::maximal_cliques(related);
}

} // namespace twinblocks
