#include <doctest.h>

#include "corpus.hpp"
#include "reference.hpp"
#include "sparsecut/error.hpp"
#include "sparsecut/generators.hpp"
#include "sparsecut/graph.hpp"

using namespace sparsecut;

namespace {

Graph path3() {
    std::vector<Edge> e{{0, 1}, {1, 2}};
    return Graph(3, e);
}

ErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an exception");
    return ErrorKind::Invariant;
}

}  // namespace

TEST_CASE("graph construction keeps adjacency sorted and symmetric") {
    std::vector<Edge> e{{3, 0}, {0, 1}, {2, 0}};
    Graph g(4, e);
    CHECK(g.order() == 4);
    CHECK(g.size() == 3);
    CHECK(std::vector<Vertex>(g.neighbors(0).begin(), g.neighbors(0).end()) == std::vector<Vertex>{1, 2, 3});
    CHECK(g.has_edge(3, 0));
    CHECK(g.has_edge(0, 3));
    CHECK_FALSE(g.has_edge(1, 2));
    CHECK(g.edges() == std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}});
    CHECK(g.max_degree() == 3);
    CHECK(g.min_degree() == 1);
}

TEST_CASE("graph construction rejects non-simple input") {
    std::vector<Edge> loop{{1, 1}};
    std::vector<Edge> dup{{0, 1}, {1, 0}};
    std::vector<Edge> range{{0, 5}};
    std::vector<Edge> negative{{-1, 0}};
    CHECK(kind_of([&] { Graph(3, loop); }) == ErrorKind::InvalidInput);
    CHECK(kind_of([&] { Graph(3, dup); }) == ErrorKind::InvalidInput);
    CHECK(kind_of([&] { Graph(3, range); }) == ErrorKind::InvalidInput);
    CHECK(kind_of([&] { Graph(3, negative); }) == ErrorKind::InvalidInput);
}

TEST_CASE("vertex sets") {
    VertexSet s(6, {4, 1, 3});
    CHECK(s.str() == "{1,3,4}");
    CHECK(s.contains(3));
    CHECK_FALSE(s.contains(2));
    CHECK(s.with(2).str() == "{1,2,3,4}");
    CHECK(s.without(3).str() == "{1,4}");
    CHECK(VertexSet::all(3).str() == "{0,1,2}");
    CHECK(VertexSet(6, {0, 5}) < VertexSet(6, {1}));
    CHECK(kind_of([] { VertexSet(3, {1, 1}); }) == ErrorKind::InvalidInput);
    CHECK(kind_of([] { VertexSet(3, {3}); }) == ErrorKind::InvalidInput);
}

TEST_CASE("is_cutset on P3") {
    Graph p = path3();
    CHECK(is_cutset(p, VertexSet(3, {1})));
    CHECK_FALSE(is_cutset(p, VertexSet(3, {0})));
    CHECK_FALSE(is_cutset(p, VertexSet(3, {0, 1})));
    CHECK(kind_of([&] { is_cutset(p, VertexSet::all(3)); }) == ErrorKind::InvalidInput);
}

TEST_CASE("components ordered by smallest member") {
    std::vector<Edge> e{{0, 4}, {1, 2}, {3, 5}};
    Graph g(6, e);
    auto cs = components(g, VertexSet(6));
    REQUIRE(cs.size() == 3);
    CHECK(cs[0].str() == "{0,4}");
    CHECK(cs[1].str() == "{1,2}");
    CHECK(cs[2].str() == "{3,5}");
    CHECK(components(g, VertexSet(6, {0})).front().str() == "{1,2}");
}

TEST_CASE("induced_stats on the icosahedron neighborhood") {
    Graph g = gen::icosahedron();
    auto r = induced_stats(g, neighborhood(g, 0));
    CHECK(r.cutset.size() == 5);
    CHECK(r.max_degree_in_s == 2);
    CHECK(r.edges_in_s == 5);
    CHECK(r.component_count == 2);
    CHECK(r.minimal == Minimality::Yes);
    CHECK(r.avg_degree() == Rational{2});
}

TEST_CASE("minimality is unknown above the exhaustive limit and No for non-cutsets") {
    Graph c = gen::cycle_graph(20);
    auto big = induced_stats(c, VertexSet(20, {0, 2, 4, 6, 8, 10, 12}));
    CHECK(big.separates());
    CHECK(big.minimal == Minimality::Unknown);
    auto none = induced_stats(c, VertexSet(20, {0}));
    CHECK_FALSE(none.separates());
    CHECK(none.minimal == Minimality::No);
    auto not_min = induced_stats(c, VertexSet(20, {0, 5, 10}));
    CHECK(not_min.minimal == Minimality::No);
}

TEST_CASE("empty set has average degree zero") {
    std::vector<Edge> e{{0, 1}, {2, 3}};
    Graph g(4, e);
    auto r = induced_stats(g, VertexSet(4));
    CHECK(r.avg_degree() == Rational{0});
    CHECK(r.separates());
    CHECK(r.minimal == Minimality::Yes);
}

TEST_CASE("rational comparisons are exact") {
    CHECK(Rational{1, 3} < Rational{1, 2});
    CHECK(Rational{2, 4} == Rational{1, 2});
    CHECK(Rational{3, -6}.str() == "-1/2");
    CHECK(Rational{8, 4}.str() == "2");
    CHECK_FALSE(Rational{2} < Rational{2});
}

TEST_CASE("induced subgraphs keep the parent map") {
    Graph g = gen::squared_cycle(8);
    auto sub = neighborhood_induced(g, 0);
    CHECK(sub.to_parent == std::vector<Vertex>{1, 2, 6, 7});
    CHECK(sub.graph.size() == 3);  // P4: 6-7-1-2
    CHECK(max_degree_within(g, neighborhood(g, 0)) == 2);
    CHECK(degree_into(g, neighborhood(g, 0), 7) == 2);
    CHECK(edges_within(g, neighborhood(g, 0)) == 3);
}

TEST_CASE("degree helpers break ties by smallest id") {
    std::vector<Edge> e{{0, 1}, {1, 2}, {2, 3}, {3, 1}};
    Graph g(4, e);
    CHECK(min_degree_vertex(g) == 0);
    CHECK(max_degree_vertex(g) == 1);
    CHECK(is_connected(g));
    CHECK_FALSE(is_regular(g, 2));
    CHECK(is_regular(gen::cycle_graph(5), 2));
}

TEST_CASE("property: induced_stats agrees with the reference on random sets") {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        Graph g = corpus::random_connected(12, 4, 8, seed);
        ref::Matrix m(g);
        Rng rng(seed * 97);
        for (int t = 0; t < 20; ++t) {
            std::vector<int> pick;
            for (int v = 0; v < 12; ++v)
                if (rng.below(3) == 0) pick.push_back(v);
            if (pick.size() >= 11) continue;
            auto r = induced_stats(g, VertexSet(12, pick));
            CHECK(r.separates() == ref::is_cutset(m, pick));
            CHECK(r.max_degree_in_s == ref::inner_max_degree(m, pick));
            CHECK(r.edges_in_s == ref::inner_edges(m, pick));
            CHECK(r.component_count == ref::components_without(m, ref::flags(12, pick)));
            if (pick.size() <= kMinimalityLimit)
                CHECK((r.minimal == Minimality::Yes) == ref::is_minimal_cutset(m, pick));
        }
    }
}
