#include "twinblocks/twinless_blocks.hpp"

#include "twinblocks/errors.hpp"
#include "twinblocks/strong_blocks.hpp"
#include "twinblocks/twinless.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <string>

namespace twinblocks {

std::string_view to_string(Algorithm algo) {
    switch (algo) {
    case Algorithm::basic:
        return "basic";
    case Algorithm::improved:
        return "improved";
    case Algorithm::refine:
        return "refine";
    }
    return "unknown";
}

std::optional<Algorithm> parse_algorithm(std::string_view name) {
    for (Algorithm a : kAllAlgorithms) {
        if (to_string(a) == name) {
            return a;
        }
    }
    return std::nullopt;
}

RefinementStats& RefinementStats::operator+=(const RefinementStats& other) {
    vertex_count += other.vertex_count;
    arc_count += other.arc_count;
    tap_count += other.tap_count;
    domain_size += other.domain_size;
    init_cells += other.init_cells;
    pair_updates += other.pair_updates;
    gated = gated || other.gated;
    return *this;
}

namespace {

void require_twinless(const Digraph& g) {
    if (!is_twinless_strongly_connected(g)) {
        throw GraphError("input graph is not twinless strongly connected");
    }
}

std::vector<Vertex> articulation_order(const Digraph& g, const RefineOptions& options) {
    const VertexSet taps = twinless_articulation_points(g);
    std::vector<Vertex> order = taps.members();
    if (options.tap_shuffle_seed) {
        std::mt19937_64 rng(*options.tap_shuffle_seed);
        std::shuffle(order.begin(), order.end(), rng);
    }
    return order;
}

std::vector<std::size_t> twinless_classes_without(const Digraph& g, Vertex z) {
    return classes_without(g, z, [](const Digraph& h) { return twinless_sccs(h); });
}

PairMatrix seeded_matrix(const Digraph& g, const VertexSet& domain, const MatrixSeed& seed,
                         RefinementStats& stats) {
    if (std::holds_alternative<AllPairs>(seed)) {
        PairMatrix s(domain, g.vertex_count(), true);
        stats.init_cells += s.cell_count();
        return s;
    }
    PairMatrix s(domain, g.vertex_count(), false);
    stats.init_cells += s.cell_count();
    for (const VertexSet& block : std::get<BlockFamily>(seed)) {
        for (std::size_t i = 0; i < block.size(); ++i) {
            if (s.position(block[i]) == npos) {
                continue;
            }
            for (std::size_t j = i + 1; j < block.size(); ++j) {
                if (s.position(block[j]) != npos) {
                    s.set(block[i], block[j], true);
                    ++stats.init_cells;
                }
            }
        }
    }
    return s;
}

void refine_matrix(PairMatrix& s, const Digraph& g, std::span<const Vertex> taps, RefinementStats& stats) {
    for (Vertex z : taps) {
        stats.pair_updates += clear_separated_pairs(s, z, twinless_classes_without(g, z));
    }
}

void begin_stats(RefinementStats& stats, const Digraph& g, std::size_t taps) {
    stats = RefinementStats{};
    stats.vertex_count = g.vertex_count();
    stats.arc_count = g.arc_count();
    stats.tap_count = taps;
}

BlockFamily whole_vertex_set(const Digraph& g, RefinementStats& stats) {
    stats.gated = true;
    stats.domain_size = g.vertex_count();
    return BlockFamily({VertexSet::range(g.vertex_count())});
}

BlockFamily checked(BlockFamily family) {
    check_block_family(family);
    return family;
}

} // namespace

PairMatrix relation_matrix(const Digraph& g, const VertexSet& domain, const MatrixSeed& seed,
                           const RefineOptions& options, RefinementStats* stats) {
    require_twinless(g);
    const std::vector<Vertex> taps = articulation_order(g, options);
    RefinementStats local;
    begin_stats(local, g, taps.size());
    local.domain_size = domain.size();
    PairMatrix s = seeded_matrix(g, domain, seed, local);
    refine_matrix(s, g, taps, local);
    if (stats) {
        *stats = local;
    }
    return s;
}

BlockFamily two_twinless_blocks_basic(const Digraph& g, const RefineOptions& options, RefinementStats* stats) {
    require_twinless(g);
    const std::vector<Vertex> taps = articulation_order(g, options);
    RefinementStats local;
    begin_stats(local, g, taps.size());
    BlockFamily result;
    if (g.vertex_count() >= 3 && taps.empty()) {
        result = whole_vertex_set(g, local);
    } else {
        const VertexSet all = VertexSet::range(g.vertex_count());
        local.domain_size = all.size();
        PairMatrix s = seeded_matrix(g, all, AllPairs{}, local);
        refine_matrix(s, g, taps, local);
        result = checked(blocks_from_matrix(s));
    }
    if (stats) {
        *stats = local;
    }
    return result;
}

BlockFamily two_twinless_blocks_improved(const Digraph& g, const RefineOptions& options, RefinementStats* stats) {
    require_twinless(g);
    const std::vector<Vertex> taps = articulation_order(g, options);
    RefinementStats local;
    begin_stats(local, g, taps.size());
    BlockFamily result;
    if (g.vertex_count() >= 3 && taps.empty()) {
        result = whole_vertex_set(g, local);
    } else {
        BlockFamily strong = two_strong_blocks(g);
        const VertexSet candidates = strong.support();
        local.domain_size = candidates.size();
        if (!candidates.empty()) {
            PairMatrix s = seeded_matrix(g, candidates, std::move(strong), local);
            refine_matrix(s, g, taps, local);
            result = checked(blocks_from_matrix(s));
        }
    }
    if (stats) {
        *stats = local;
    }
    return result;
}

BlockFamily refine_family(const BlockFamily& family, const Partition& classes, Vertex z) {
    std::size_t covered = 0;
    for (const VertexSet& c : classes) {
        covered += c.size();
    }
    // Disjoint classes holding n - 1 vertices, all below n and none equal
    // to z, are exactly [0, n) - {z}.
    const std::size_t n = covered + 1;
    bool partitions = z < n && classes.class_of(z) == npos;
    for (const VertexSet& c : classes) {
        partitions = partitions && c.back() < n;
    }
    if (!partitions) {
        throw GraphError("refine_family: classes do not partition V - {" + std::to_string(z) + "}");
    }

    std::vector<VertexSet> pieces;
    std::map<std::size_t, std::vector<Vertex>> groups;
    for (const VertexSet& block : family) {
        if (block.back() >= n) {
            throw GraphError("refine_family: block member outside the partitioned vertex set");
        }
        const bool keeps_z = block.contains(z);
        groups.clear();
        for (Vertex v : block) {
            if (v != z) {
                groups[classes.class_of(v)].push_back(v);
            }
        }
        for (auto& [cls, members] : groups) {
            if (keeps_z) {
                members.push_back(z);
            }
            if (members.size() >= 2) {
                pieces.emplace_back(std::move(members));
            }
        }
    }
    std::sort(pieces.begin(), pieces.end());
    pieces.erase(std::unique(pieces.begin(), pieces.end()), pieces.end());

    std::map<Vertex, std::vector<std::size_t>> containing;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        for (Vertex v : pieces[i]) {
            containing[v].push_back(i);
        }
    }
    std::vector<VertexSet> kept;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        const auto& owners = containing[pieces[i].front()];
        const bool nested = std::any_of(owners.begin(), owners.end(), [&](std::size_t j) {
            return j != i && pieces[j].size() > pieces[i].size() && pieces[i].is_subset_of(pieces[j]);
        });
        if (!nested) {
            kept.push_back(pieces[i]);
        }
    }
    return checked(BlockFamily(std::move(kept)));
}

BlockFamily two_twinless_blocks_refine(const Digraph& g, const RefineOptions& options, RefinementStats* stats) {
    require_twinless(g);
    const std::vector<Vertex> taps = articulation_order(g, options);
    RefinementStats local;
    begin_stats(local, g, taps.size());
    BlockFamily family;
    if (g.vertex_count() >= 3 && taps.empty()) {
        family = whole_vertex_set(g, local);
    } else {
        family = two_strong_blocks(g);
        local.domain_size = family.support().size();
        for (Vertex z : taps) {
            if (family.empty()) {
                break;
            }
            const Subgraph rest = remove_vertex(g, z);
            std::vector<VertexSet> mapped;
            for (const VertexSet& c : twinless_sccs(rest.graph)) {
                std::vector<Vertex> members;
                for (Vertex v : c) {
                    members.push_back(rest.to_parent[v]);
                }
                mapped.emplace_back(std::move(members));
            }
            for (const VertexSet& b : family) {
                local.pair_updates += b.size();
            }
            family = refine_family(family, Partition(std::move(mapped)), z);
        }
    }
    if (stats) {
        *stats = local;
    }
    return family;
}

BlockFamily two_twinless_blocks(const Digraph& g, Algorithm algo, const RefineOptions& options,
                                RefinementStats* stats) {
    std::vector<VertexSet> blocks;
    RefinementStats total;
    for (const VertexSet& component : twinless_sccs(g)) {
        if (component.size() < 3) {
            continue;
        }
        const Subgraph sub = induced_subgraph(g, component);
        RefinementStats part;
        BlockFamily local;
        switch (algo) {
        case Algorithm::basic:
            local = two_twinless_blocks_basic(sub.graph, options, &part);
            break;
        case Algorithm::improved:
            local = two_twinless_blocks_improved(sub.graph, options, &part);
            break;
        case Algorithm::refine:
            local = two_twinless_blocks_refine(sub.graph, options, &part);
            break;
        }
        total += part;
        for (const VertexSet& b : local) {
            std::vector<Vertex> members;
            for (Vertex v : b) {
                members.push_back(sub.to_parent[v]);
            }
            blocks.emplace_back(std::move(members));
        }
    }
    if (stats) {
        *stats = total;
    }
    return checked(BlockFamily(std::move(blocks)));
}

BlockFamily two_twinless_blocks(const Digraph& g, std::string_view algo) {
    const auto parsed = parse_algorithm(algo);
    if (!parsed) {
        throw GraphError("unknown algorithm '" + std::string(algo) + "'");
    }
    return two_twinless_blocks(g, *parsed);
}

BlockForest block_forest(const BlockFamily& blocks) {
    BlockForest forest;
    forest.blocks = blocks.blocks();

    std::map<Vertex, std::vector<std::size_t>> containing;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        for (Vertex v : blocks[i]) {
            containing[v].push_back(i);
        }
    }
    std::vector<Vertex> shared;
    for (const auto& [v, owners] : containing) {
        if (owners.size() >= 2) {
            shared.push_back(v);
        }
    }
    forest.shared_vertices = VertexSet(shared);

    // Union-find over block nodes [0, k) and vertex nodes [k, k + |shared|).
    const std::size_t k = blocks.size();
    std::vector<std::size_t> parent(forest.node_count());
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
        while (parent[x] != x) {
            x = parent[x] = parent[parent[x]];
        }
        return x;
    };
    for (std::size_t s = 0; s < shared.size(); ++s) {
        for (std::size_t b : containing[shared[s]]) {
            forest.edges.emplace_back(b, shared[s]);
            const std::size_t rb = find(b);
            const std::size_t rv = find(k + s);
            if (rb == rv) {
                throw InvariantError("block forest has a cycle through vertex " + std::to_string(shared[s]));
            }
            parent[rb] = rv;
        }
    }
    return forest;
}

} // namespace twinblocks
