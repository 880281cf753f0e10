#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "twinblocks/errors.hpp"
#include "twinblocks/graph.hpp"

#include <set>

using namespace twinblocks;
using twinblocks::test::fig1_set;

namespace {

std::set<std::pair<std::string, std::string>> labeled_arcs(const Digraph& g) {
    std::set<std::pair<std::string, std::string>> out;
    for (const Arc& a : g.arcs()) {
        out.emplace(g.label(a.tail), g.label(a.head));
    }
    return out;
}

} // namespace

TEST_CASE("parse_edge_list names vertices by first appearance") {
    const ParseResult r = parse_edge_list("a b\nb a\n");
    CHECK(r.graph.vertex_count() == 2);
    CHECK(r.graph.arcs().size() == 2);
    CHECK(r.graph.has_arc(0, 1));
    CHECK(r.graph.has_arc(1, 0));
    CHECK(r.graph.label(0) == "a");
    CHECK(r.graph.label(1) == "b");
}

TEST_CASE("parse_edge_list drops loops and duplicate arcs") {
    const ParseResult r = parse_edge_list("1 1\n1 2\n1 2\n");
    CHECK(r.graph.vertex_count() == 2);
    CHECK(r.graph.arc_count() == 1);
    CHECK(r.graph.has_arc(0, 1));
    CHECK(r.loops_dropped == 1);
    CHECK(r.duplicates_dropped == 1);
}

TEST_CASE("parse_edge_list skips comments and blank lines") {
    const ParseResult r = parse_edge_list("# header\n\n  \nx y\n   # indented comment\r\ny z\r\n");
    CHECK(r.graph.vertex_count() == 3);
    CHECK(r.graph.arc_count() == 2);
}

TEST_CASE("parse_edge_list reports the offending line") {
    try {
        parse_edge_list("a b\n# ok\na b c\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
    CHECK_THROWS_AS(parse_edge_list("lonely\n"), ParseError);
}

TEST_CASE("parsing the fixture edge list") {
    const std::string text = to_edge_list(fig1_fixture());
    // A repeated (7,4) line collapses.
    const ParseResult r = parse_edge_list(text + "7 4\n");
    CHECK(r.graph.vertex_count() == 20);
    CHECK(r.graph.arc_count() == 28);
    CHECK(r.duplicates_dropped == 1);
    CHECK(labeled_arcs(r.graph) == labeled_arcs(fig1_fixture()));
}

TEST_CASE("round trip through text preserves the labeled arc set") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const Digraph g = random_digraph(9, 25, seed);
        const Digraph first = parse_edge_list(to_edge_list(g)).graph;
        const Digraph second = parse_edge_list(to_edge_list(first)).graph;
        CHECK(labeled_arcs(first) == labeled_arcs(g));
        CHECK(labeled_arcs(second) == labeled_arcs(first));
    }
}

TEST_CASE("fixture shape") {
    const Digraph g = fig1_fixture();
    CHECK(g.vertex_count() == 20);
    CHECK(g.arc_count() == 28);
    CHECK(g.label(0) == "1");
    CHECK(g.label(19) == "20");

    std::set<std::pair<int, int>> pairs;
    for (const Edge& e : antiparallel_pairs(g)) {
        pairs.emplace(e.u + 1, e.v + 1);
    }
    CHECK(pairs == std::set<std::pair<int, int>>{{7, 17}, {12, 19}, {12, 13}});
}

TEST_CASE("Digraph rejects out-of-range endpoints") {
    CHECK_THROWS_AS(Digraph(2, {{0, 2}}), GraphError);
    CHECK_THROWS_AS(Digraph(2, {{0, 1}}, {"only-one"}), GraphError);
}

TEST_CASE("remove_vertex on a 3-cycle") {
    const Subgraph s = remove_vertex(directed_cycle(3), 1);
    CHECK(s.graph.vertex_count() == 2);
    CHECK(s.graph.arc_count() == 1);
    // Arc (2,0) becomes (1,0) after reindexing.
    CHECK(s.graph.has_arc(1, 0));
    CHECK(s.to_parent == std::vector<Vertex>{0, 2});
}

TEST_CASE("remove_vertex 13 from the fixture") {
    const Digraph g = fig1_fixture();
    const Subgraph s = remove_vertex(g, 12);
    CHECK(s.graph.vertex_count() == 19);
    CHECK(s.graph.arc_count() == 24);
    CHECK_FALSE(s.graph.find_label("13").has_value());
    CHECK(s.graph.find_label("12").has_value());
    CHECK_THROWS_AS(remove_vertex(g, 20), GraphError);
}

TEST_CASE("remove_vertex property: arc count drops by the vertex degree") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const Digraph g = random_digraph(7, 18, seed);
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            const Subgraph s = remove_vertex(g, v);
            const std::size_t degree = g.successors(v).size() + g.predecessors(v).size();
            CHECK(s.graph.arc_count() == g.arc_count() - degree);
            for (Vertex parent : s.to_parent) {
                CHECK(parent != v);
            }
            for (const Arc& a : s.graph.arcs()) {
                CHECK(g.has_arc(s.to_parent[a.tail], s.to_parent[a.head]));
            }
        }
    }
}

TEST_CASE("remove an isolated vertex") {
    const Digraph g(4, {{0, 1}, {1, 2}, {2, 0}});
    const Subgraph s = remove_vertex(g, 3);
    CHECK(s.graph.arcs().size() == 3);
    CHECK(std::equal(s.graph.arcs().begin(), s.graph.arcs().end(), g.arcs().begin()));
}

TEST_CASE("induced_subgraph") {
    const Digraph g = fig1_fixture();
    const Subgraph all = induced_subgraph(g, VertexSet::range(20));
    CHECK(all.graph == g);

    const Subgraph lower = induced_subgraph(g, fig1_set({1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 15}));
    CHECK(lower.graph.vertex_count() == 11);
    CHECK(lower.graph.arc_count() == 13);
    CHECK(antiparallel_pairs(lower.graph).empty());

    const Subgraph none = induced_subgraph(g, VertexSet{});
    CHECK(none.graph.vertex_count() == 0);
    CHECK(none.graph.arc_count() == 0);
    CHECK_THROWS_AS(induced_subgraph(g, VertexSet{3, 25}), GraphError);
}

TEST_CASE("underlying_undirected collapses antiparallel pairs") {
    CHECK(underlying_undirected(Digraph(2, {{0, 1}, {1, 0}})).edge_count() == 1);
    const UndirectedGraph tri = underlying_undirected(directed_cycle(3));
    CHECK(tri.edge_count() == 3);
    CHECK(tri.has_edge(0, 2));
    CHECK(underlying_undirected(fig1_fixture()).edge_count() == 25);

    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const Digraph g = random_digraph(8, 30, seed);
        CHECK(underlying_undirected(g).edge_count() == g.arc_count() - antiparallel_pairs(g).size());
    }
}

TEST_CASE("random_digraph contract") {
    CHECK(random_digraph(5, 0, 99).arc_count() == 0);
    CHECK(random_digraph(5, 20, 7) == random_digraph(5, 20, 7));
    CHECK(random_digraph(5, 20, 7).arc_count() == 20);

    const Digraph g = random_digraph(8, 20, 1);
    CHECK(g.arc_count() == 20);
    for (const Arc& a : g.arcs()) {
        CHECK(a.tail != a.head);
    }
    CHECK_THROWS_AS(random_digraph(3, 7, 1), GraphError);
}

TEST_CASE("random_digraph spreads over all slots") {
    // Every one of the 6 arcs of a 3-vertex graph should show up as the
    // single sampled arc for some seed.
    std::set<Arc> seen;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        seen.insert(random_digraph(3, 1, seed).arcs()[0]);
    }
    CHECK(seen.size() == 6);
}

TEST_CASE("VertexSet basics") {
    const VertexSet s{5, 1, 3, 1};
    CHECK(s.members() == std::vector<Vertex>{1, 3, 5});
    CHECK(s.contains(3));
    CHECK_FALSE(s.contains(2));
    CHECK(VertexSet{1, 5}.is_subset_of(s));
    CHECK(set_intersection(s, VertexSet{3, 4, 5}) == VertexSet{3, 5});
    CHECK(set_union(s, VertexSet{2}) == VertexSet{1, 2, 3, 5});
}
