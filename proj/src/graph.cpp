#include "twinblocks/graph.hpp"

#include "twinblocks/errors.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace twinblocks {

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

VertexSet::VertexSet(std::initializer_list<Vertex> members) : VertexSet(std::vector<Vertex>(members)) {}

VertexSet VertexSet::range(std::size_t n) {
    std::vector<Vertex> all(n);
    std::iota(all.begin(), all.end(), Vertex{0});
    return VertexSet(std::move(all));
}

bool VertexSet::contains(Vertex v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
    return std::includes(other.members_.begin(), other.members_.end(), members_.begin(), members_.end());
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
    std::vector<Vertex> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return VertexSet(std::move(out));
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    std::vector<Vertex> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return VertexSet(std::move(out));
}

namespace {

void build_csr(std::size_t n, std::span<const Arc> arcs, bool by_head, std::vector<std::size_t>& offsets,
               std::vector<Vertex>& targets) {
    offsets.assign(n + 1, 0);
    for (const Arc& a : arcs) {
        ++offsets[(by_head ? a.head : a.tail) + 1];
    }
    std::partial_sum(offsets.begin(), offsets.end(), offsets.begin());
    targets.resize(arcs.size());
    std::vector<std::size_t> cursor(offsets.begin(), offsets.end() - 1);
    // Arcs are sorted by (tail, head); filling in that order keeps the
    // successor lists sorted, and the predecessor lists sorted by tail.
    for (const Arc& a : arcs) {
        if (by_head) {
            targets[cursor[a.head]++] = a.tail;
        } else {
            targets[cursor[a.tail]++] = a.head;
        }
    }
}

} // namespace

Digraph::Digraph(std::size_t n, std::vector<Arc> arcs, std::vector<std::string> labels)
    : n_(n), arcs_(std::move(arcs)), labels_(std::move(labels)) {
    if (!labels_.empty() && labels_.size() != n_) {
        throw GraphError("label count " + std::to_string(labels_.size()) + " does not match vertex count " +
                         std::to_string(n_));
    }
    for (const Arc& a : arcs_) {
        if (a.tail >= n_ || a.head >= n_) {
            throw GraphError("arc (" + std::to_string(a.tail) + "," + std::to_string(a.head) +
                             ") has an endpoint outside [0, " + std::to_string(n_) + ")");
        }
    }
    std::erase_if(arcs_, [](const Arc& a) { return a.tail == a.head; });
    std::sort(arcs_.begin(), arcs_.end());
    arcs_.erase(std::unique(arcs_.begin(), arcs_.end()), arcs_.end());
    build_csr(n_, arcs_, false, out_offsets_, out_targets_);
    build_csr(n_, arcs_, true, in_offsets_, in_sources_);
}

std::span<const Vertex> Digraph::successors(Vertex v) const {
    return std::span<const Vertex>(out_targets_).subspan(out_offsets_[v], out_offsets_[v + 1] - out_offsets_[v]);
}

std::span<const Vertex> Digraph::predecessors(Vertex v) const {
    return std::span<const Vertex>(in_sources_).subspan(in_offsets_[v], in_offsets_[v + 1] - in_offsets_[v]);
}

bool Digraph::has_arc(Vertex tail, Vertex head) const {
    if (tail >= n_ || head >= n_) {
        return false;
    }
    auto succ = successors(tail);
    return std::binary_search(succ.begin(), succ.end(), head);
}

std::string Digraph::label(Vertex v) const {
    return labels_.empty() ? std::to_string(v) : labels_[v];
}

std::optional<Vertex> Digraph::find_label(std::string_view name) const {
    for (std::size_t v = 0; v < n_; ++v) {
        if (label(static_cast<Vertex>(v)) == name) {
            return static_cast<Vertex>(v);
        }
    }
    return std::nullopt;
}

UndirectedGraph::UndirectedGraph(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    for (Edge& e : edges_) {
        if (e.u >= n_ || e.v >= n_) {
            throw GraphError("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                             "} has an endpoint outside [0, " + std::to_string(n_) + ")");
        }
        if (e.u > e.v) {
            std::swap(e.u, e.v);
        }
    }
    std::erase_if(edges_, [](const Edge& e) { return e.u == e.v; });
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

    offsets_.assign(n_ + 1, 0);
    for (const Edge& e : edges_) {
        ++offsets_[e.u + 1];
        ++offsets_[e.v + 1];
    }
    std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
    adjacency_.resize(2 * edges_.size());
    std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
    for (const Edge& e : edges_) {
        adjacency_[cursor[e.u]++] = e.v;
        adjacency_[cursor[e.v]++] = e.u;
    }
    for (std::size_t v = 0; v < n_; ++v) {
        std::sort(adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]),
                  adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]));
    }
}

std::span<const Vertex> UndirectedGraph::neighbors(Vertex v) const {
    return std::span<const Vertex>(adjacency_).subspan(offsets_[v], offsets_[v + 1] - offsets_[v]);
}

bool UndirectedGraph::has_edge(Vertex u, Vertex v) const {
    if (u >= n_ || v >= n_) {
        return false;
    }
    auto adj = neighbors(u);
    return std::binary_search(adj.begin(), adj.end(), v);
}

Subgraph induced_subgraph(const Digraph& g, const VertexSet& vertices) {
    const std::size_t n = g.vertex_count();
    if (!vertices.empty() && vertices.back() >= n) {
        throw GraphError("vertex " + std::to_string(vertices.back()) + " outside [0, " + std::to_string(n) + ")");
    }
    std::vector<std::size_t> local(n, npos);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        local[vertices[i]] = i;
    }
    std::vector<Arc> arcs;
    for (Vertex v : vertices) {
        for (Vertex w : g.successors(v)) {
            if (local[w] != npos) {
                arcs.push_back({static_cast<Vertex>(local[v]), static_cast<Vertex>(local[w])});
            }
        }
    }
    std::vector<std::string> labels;
    if (g.has_labels()) {
        labels.reserve(vertices.size());
        for (Vertex v : vertices) {
            labels.push_back(g.labels()[v]);
        }
    }
    return Subgraph{Digraph(vertices.size(), std::move(arcs), std::move(labels)), vertices.members()};
}

Subgraph remove_vertex(const Digraph& g, Vertex v) {
    const std::size_t n = g.vertex_count();
    if (v >= n) {
        throw GraphError("vertex " + std::to_string(v) + " outside [0, " + std::to_string(n) + ")");
    }
    std::vector<Vertex> keep;
    keep.reserve(n - 1);
    for (std::size_t u = 0; u < n; ++u) {
        if (u != v) {
            keep.push_back(static_cast<Vertex>(u));
        }
    }
    return induced_subgraph(g, VertexSet(std::move(keep)));
}

UndirectedGraph underlying_undirected(const Digraph& g) {
    std::vector<Edge> edges;
    edges.reserve(g.arc_count());
    for (const Arc& a : g.arcs()) {
        edges.push_back({std::min(a.tail, a.head), std::max(a.tail, a.head)});
    }
    return UndirectedGraph(g.vertex_count(), std::move(edges));
}

std::vector<Edge> antiparallel_pairs(const Digraph& g) {
    std::vector<Edge> pairs;
    for (const Arc& a : g.arcs()) {
        if (a.tail < a.head && g.has_arc(a.head, a.tail)) {
            pairs.push_back({a.tail, a.head});
        }
    }
    return pairs;
}

namespace {

Arc decode_arc(std::uint64_t index, std::size_t n) {
    const auto tail = static_cast<Vertex>(index / (n - 1));
    const auto r = static_cast<Vertex>(index % (n - 1));
    return {tail, r < tail ? r : r + 1};
}

} // namespace

Digraph random_digraph(std::size_t n, std::size_t m, std::uint64_t seed) {
    const std::uint64_t slots = n < 2 ? 0 : static_cast<std::uint64_t>(n) * (n - 1);
    if (m > slots) {
        throw GraphError("cannot place " + std::to_string(m) + " arcs on " + std::to_string(n) + " vertices");
    }
    // Floyd's sampling: m distinct slots out of n(n-1), uniformly.
    std::mt19937_64 rng(seed);
    std::unordered_set<std::uint64_t> chosen;
    std::vector<Arc> arcs;
    arcs.reserve(m);
    for (std::uint64_t j = slots - m; j < slots; ++j) {
        std::uniform_int_distribution<std::uint64_t> pick(0, j);
        std::uint64_t t = pick(rng);
        if (!chosen.insert(t).second) {
            t = j;
            chosen.insert(t);
        }
        arcs.push_back(decode_arc(t, n));
    }
    return Digraph(n, std::move(arcs));
}

Digraph random_twinless_digraph(std::size_t n, std::size_t extra_arcs, std::uint64_t seed) {
    if (n < 3) {
        throw GraphError("a twinless strongly connected cycle needs at least 3 vertices");
    }
    const std::uint64_t slots = static_cast<std::uint64_t>(n) * (n - 1);
    if (extra_arcs > slots - n) {
        throw GraphError("too many extra arcs for " + std::to_string(n) + " vertices");
    }
    std::mt19937_64 rng(seed);
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), Vertex{0});
    std::shuffle(order.begin(), order.end(), rng);

    std::set<Arc> arcs;
    for (std::size_t i = 0; i < n; ++i) {
        arcs.insert({order[i], order[(i + 1) % n]});
    }
    std::uniform_int_distribution<std::uint64_t> pick(0, slots - 1);
    while (arcs.size() < n + extra_arcs) {
        arcs.insert(decode_arc(pick(rng), n));
    }
    return Digraph(n, std::vector<Arc>(arcs.begin(), arcs.end()));
}

Digraph directed_cycle(std::size_t n) {
    std::vector<Arc> arcs;
    for (std::size_t i = 0; i < n; ++i) {
        arcs.push_back({static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n)});
    }
    return Digraph(n, std::move(arcs));
}

Digraph bidirected_complete(std::size_t n) {
    std::vector<Arc> arcs;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = 0; v < n; ++v) {
            if (u != v) {
                arcs.push_back({u, v});
            }
        }
    }
    return Digraph(n, std::move(arcs));
}

Digraph fig1_fixture() {
    static constexpr std::pair<int, int> kArcs[] = {
        {1, 5},   {2, 3},   {2, 1},   {7, 4},   {5, 7},   {7, 6},   {9, 2},   {4, 15},  {15, 2},  {10, 7},
        {3, 8},   {6, 9},   {8, 10},  {7, 17},  {17, 7},  {17, 18}, {20, 17}, {19, 12}, {12, 19}, {12, 13},
        {13, 12}, {13, 16}, {16, 17}, {17, 14}, {14, 13}, {18, 19}, {19, 11}, {11, 20},
    };
    std::vector<Arc> arcs;
    for (auto [u, v] : kArcs) {
        arcs.push_back({static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1)});
    }
    std::vector<std::string> labels;
    for (int i = 1; i <= 20; ++i) {
        labels.push_back(std::to_string(i));
    }
    return Digraph(20, std::move(arcs), std::move(labels));
}

ParseResult parse_edge_list(std::string_view text) {
    std::unordered_map<std::string, Vertex> index;
    std::vector<std::string> names;
    std::vector<Arc> arcs;
    ParseResult result;

    auto vertex_of = [&](const std::string& name) {
        auto [it, inserted] = index.try_emplace(name, static_cast<Vertex>(names.size()));
        if (inserted) {
            names.push_back(name);
        }
        return it->second;
    };

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) {
            eol = text.size();
        }
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;

        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string_view::npos || line[first] == '#') {
            continue;
        }
        std::istringstream tokens{std::string(line)};
        std::vector<std::string> fields;
        for (std::string tok; tokens >> tok;) {
            fields.push_back(std::move(tok));
        }
        if (fields.size() != 2) {
            throw ParseError(line_no, "expected two vertex names, found " + std::to_string(fields.size()) + " tokens");
        }
        const Vertex u = vertex_of(fields[0]);
        const Vertex v = vertex_of(fields[1]);
        if (u == v) {
            ++result.loops_dropped;
            continue;
        }
        arcs.push_back({u, v});
    }

    const std::size_t before = arcs.size();
    std::sort(arcs.begin(), arcs.end());
    arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
    result.duplicates_dropped = before - arcs.size();
    const std::size_t n = names.size();
    result.graph = Digraph(n, std::move(arcs), std::move(names));
    return result;
}

std::string to_edge_list(const Digraph& g) {
    std::string out;
    for (const Arc& a : g.arcs()) {
        out += g.label(a.tail);
        out += ' ';
        out += g.label(a.head);
        out += '\n';
    }
    return out;
}

} // namespace twinblocks
