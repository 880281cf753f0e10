#include "twinblocks/pair_matrix.hpp"

#include "twinblocks/errors.hpp"

#include <algorithm>

namespace twinblocks {

PairMatrix::PairMatrix(VertexSet domain, std::size_t host_vertex_count, bool initial)
    : domain_(std::move(domain)), position_(host_vertex_count, npos) {
    if (!domain_.empty() && domain_.back() >= host_vertex_count) {
        throw GraphError("pair matrix domain exceeds host vertex count");
    }
    for (std::size_t i = 0; i < domain_.size(); ++i) {
        position_[domain_[i]] = i;
    }
    const std::size_t s = domain_.size();
    bits_.assign(s < 2 ? 0 : s * (s - 1) / 2, initial);
}

std::size_t PairMatrix::cell(std::size_t i, std::size_t j) const {
    if (i > j) {
        std::swap(i, j);
    }
    const std::size_t s = domain_.size();
    return i * (2 * s - i - 1) / 2 + (j - i - 1);
}

std::size_t PairMatrix::true_count() const {
    return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true));
}

bool PairMatrix::get(Vertex v, Vertex w) const {
    const std::size_t i = position(v);
    const std::size_t j = position(w);
    if (i == npos || j == npos || i == j) {
        throw GraphError("pair (" + std::to_string(v) + "," + std::to_string(w) + ") is not in the matrix domain");
    }
    return get_at(i, j);
}

void PairMatrix::set(Vertex v, Vertex w, bool value) {
    const std::size_t i = position(v);
    const std::size_t j = position(w);
    if (i == npos || j == npos || i == j) {
        throw GraphError("pair (" + std::to_string(v) + "," + std::to_string(w) + ") is not in the matrix domain");
    }
    set_at(i, j, value);
}

std::size_t clear_separated_pairs(PairMatrix& s, Vertex removed, std::span<const std::size_t> host_class) {
    const VertexSet& domain = s.domain();
    std::vector<std::size_t> cls(domain.size());
    for (std::size_t i = 0; i < domain.size(); ++i) {
        cls[i] = host_class[domain[i]];
    }
    std::size_t examined = 0;
    for (std::size_t i = 0; i < domain.size(); ++i) {
        if (domain[i] == removed) {
            continue;
        }
        for (std::size_t j = i + 1; j < domain.size(); ++j) {
            if (domain[j] == removed) {
                continue;
            }
            ++examined;
            if (cls[i] != cls[j]) {
                s.set_at(i, j, false);
            }
        }
    }
    return examined;
}

UndirectedGraph relation_graph(const PairMatrix& s) {
    const std::size_t n = s.domain().size();
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (s.get_at(i, j)) {
                edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
            }
        }
    }
    return UndirectedGraph(n, std::move(edges));
}

BlockFamily blocks_from_matrix(const PairMatrix& s) {
    const UndirectedGraph gb = relation_graph(s);
    if (!is_chordal(gb)) {
        throw InvariantError("relation graph is not chordal");
    }
    const BlockFamily blocks = biconnected_blocks(gb);
    if (blocks != maximal_cliques_chordal(gb)) {
        throw InvariantError("relation graph blocks differ from its maximal cliques");
    }
    std::vector<VertexSet> mapped;
    mapped.reserve(blocks.size());
    for (const VertexSet& b : blocks) {
        std::vector<Vertex> members;
        members.reserve(b.size());
        for (Vertex pos : b) {
            members.push_back(s.domain()[pos]);
        }
        mapped.emplace_back(std::move(members));
    }
    return BlockFamily(std::move(mapped));
}

} // namespace twinblocks
