#include <doctest.h>

#include <algorithm>
#include <set>

#include "corpus.hpp"
#include "reference.hpp"
#include "sparsecut/error.hpp"
#include "sparsecut/generators.hpp"
#include "sparsecut/oracles.hpp"

using namespace sparsecut;

namespace {

std::vector<int> degree_sequence(const Graph& g) {
    std::vector<int> d;
    for (Vertex v = 0; v < g.order(); ++v) d.push_back(g.degree(v));
    return d;
}

bool throws_kind(auto&& fn, ErrorKind kind) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind() == kind;
    }
    return false;
}

// The graph survives a rebuild from its own edge list.
void check_simple(const Graph& g) {
    auto edges = g.edges();
    CHECK(Graph(g.order(), edges) == g);
}

}  // namespace

TEST_CASE("icosahedron: 12 vertices, 30 edges, every neighborhood a 5-cycle") {
    Graph g = gen::icosahedron();
    CHECK(g.order() == 12);
    CHECK(g.size() == 30);
    CHECK(is_regular(g, 5));
    CHECK(ref::every_neighborhood_is(ref::Matrix(g), 5, 5, 2));
    CHECK(is_connected(g));
    CHECK(gen::icosahedron_labels()[0] == "a");
    CHECK(gen::icosahedron_labels()[11] == "l");
    // N(a) = {b,...,f} induces the cycle b c d e f
    CHECK(neighborhood(g, 0).str() == "{1,2,3,4,5}");
    for (auto [x, y] : std::vector<Edge>{{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}}) CHECK(g.has_edge(x, y));
    check_simple(g);
}

TEST_CASE("squared cycles") {
    Graph c14 = gen::squared_cycle(14);
    CHECK(c14.size() == 28);
    CHECK(is_regular(c14, 4));
    CHECK(gen::squared_cycle(5) == gen::complete_graph(5));
    CHECK(throws_kind([] { gen::squared_cycle(4); }, ErrorKind::InvalidInput));
    for (int n = 7; n <= 16; ++n) {
        Graph g = gen::squared_cycle(n);
        for (Vertex v = 0; v < n; ++v) CHECK(oracle::recognize_pattern(neighborhood_induced(g, v).graph, oracle::Pattern::P4));
    }
}

TEST_CASE("squared paths") {
    CHECK(degree_sequence(gen::squared_path(6)) == std::vector<int>{2, 3, 4, 4, 3, 2});
    CHECK(gen::squared_path(3) == gen::complete_graph(3));
    CHECK(throws_kind([] { gen::squared_path(2); }, ErrorKind::InvalidInput));
    // consecutive vertices of C14^2 induce P6^2
    auto sub = induced_subgraph(gen::squared_cycle(14), VertexSet(14, {3, 4, 5, 6, 7, 8}));
    CHECK(sub.graph == gen::squared_path(6));
}

TEST_CASE("figure2 pattern: 5-regular, connected, every neighborhood contains P3") {
    CHECK(throws_kind([] { gen::figure2_pattern(3); }, ErrorKind::InvalidInput));
    for (int blocks = 4; blocks <= 7; ++blocks) {
        Graph g = gen::figure2_pattern(blocks);
        CHECK(g.order() == 4 * blocks);
        CHECK(is_regular(g, 5));
        CHECK(is_connected(g));
        ref::Matrix m(g);
        for (Vertex v = 0; v < g.order(); ++v) {
            auto nb = neighborhood(g, v);
            std::vector<int> s(nb.begin(), nb.end());
            CHECK(ref::inner_max_degree(m, s) >= 2);
        }
        check_simple(g);
    }
}

TEST_CASE("clique chain: sizes, degree bound, connectivity, block map") {
    gen::CliqueChainParams p;
    CHECK(p.clique_order() == 4);
    CHECK(p.connector_degree() == 3);
    auto cc = gen::clique_chain(p);
    CHECK(cc.graph.order() == 12);
    CHECK(cc.graph.max_degree() <= 9);
    CHECK(is_connected(cc.graph));
    REQUIRE(cc.block_of.size() == 12);
    CHECK(cc.block_of[0] == 0);
    CHECK(cc.block_of[11] == 2);

    for (int delta : {9, 16, 25})
        for (std::uint64_t seed = 1; seed <= 100; ++seed) {
            gen::CliqueChainParams q{delta, 4, seed % 2 == 0, seed};
            auto out = gen::clique_chain(q);
            CHECK(out.graph.max_degree() <= delta);
            CHECK(is_connected(out.graph));
        }
    CHECK(throws_kind([] { gen::clique_chain({8, 3, true, 1}); }, ErrorKind::InvalidInput));
    CHECK(throws_kind([] { gen::clique_chain({9, 2, true, 1}); }, ErrorKind::InvalidInput));
}

TEST_CASE("clique chain probe records cutset density") {
    auto cc = gen::clique_chain({9, 3, true, 1});
    auto mins = oracle::enumerate_min_cutsets(cc.graph, {24, cc.graph.order() - 2, 0});
    REQUIRE(mins.status == oracle::Status::Found);
    int lowest = 1 << 20;
    for (const auto& s : mins.value->cutsets) lowest = std::min(lowest, max_degree_within(cc.graph, s));
    MESSAGE("clique chain delta=9: kappa = ", *mins.value->kappa, ", min cutsets = ", mins.value->cutsets.size(),
            ", smallest inner max degree = ", lowest);
}

TEST_CASE("named small graphs") {
    Graph k4 = gen::named_small(gen::NamedGraph::K4);
    CHECK(k4.order() == 4);
    CHECK(is_regular(k4, 3));
    Graph prism = gen::named_small(gen::NamedGraph::TriangularPrism);
    CHECK(prism.order() == 6);
    CHECK(is_regular(prism, 3));
    Graph k3k3 = gen::named_small(gen::NamedGraph::K3BoxK3);
    CHECK(k3k3.order() == 9);
    CHECK(is_regular(k3k3, 4));
    CHECK(ref::every_neighborhood_is(ref::Matrix(k3k3), 4, 2, 1));
    Graph lp = gen::named_small(gen::NamedGraph::LineGraphPetersen);
    CHECK(lp.order() == 15);
    CHECK(lp.size() == 30);
    CHECK(is_regular(lp, 4));
    CHECK(ref::every_neighborhood_is(ref::Matrix(lp), 4, 2, 1));

    CHECK(gen::parse_named("K4") == gen::NamedGraph::K4);
    CHECK(gen::parse_named("prism") == gen::NamedGraph::TriangularPrism);
    CHECK(gen::parse_named("line-graph-petersen") == gen::NamedGraph::LineGraphPetersen);
    CHECK(throws_kind([] { gen::parse_named("k5"); }, ErrorKind::InvalidInput));
}

TEST_CASE("petersen and the projective plane incidence graph") {
    Graph p = gen::petersen_graph();
    CHECK(p.order() == 10);
    CHECK(is_regular(p, 3));
    CHECK_FALSE(ref::has_k22(ref::Matrix(p)));
    Graph pg = gen::projective_plane_incidence_q4();
    CHECK(pg.order() == 42);
    CHECK(is_regular(pg, 5));
    CHECK(is_connected(pg));
    CHECK_FALSE(ref::has_k22(ref::Matrix(pg)));
    // bipartite: points only meet lines
    for (auto [u, v] : pg.edges()) CHECK((u < 21) != (v < 21));
}

TEST_CASE("random regular graphs") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        Graph g = gen::random_regular(14, 5, seed);
        CHECK(is_regular(g, 5));
        check_simple(g);
    }
    CHECK(gen::random_regular(12, 4, 3).size() == 24);
    CHECK(gen::random_regular(16, 3, 42) == gen::random_regular(16, 3, 42));
    CHECK_FALSE(gen::random_regular(16, 3, 42) == gen::random_regular(16, 3, 43));
    CHECK(throws_kind([] { gen::random_regular(7, 3, 1); }, ErrorKind::InvalidInput));
    CHECK(throws_kind([] { gen::random_regular(4, 4, 1); }, ErrorKind::InvalidInput));

    int disconnected = 0;
    for (std::uint64_t seed = 1; seed <= 200; ++seed) disconnected += !is_connected(gen::random_regular(8, 2, seed));
    MESSAGE("random 2-regular graphs on 8 vertices: ", disconnected, " of 200 disconnected");
    CHECK(disconnected > 0);
}

TEST_CASE("small builders") {
    CHECK(gen::complete_graph(5).size() == 10);
    CHECK(gen::path_graph(4).size() == 3);
    CHECK(gen::cycle_graph(6).size() == 6);
    Graph k3 = gen::complete_graph(3);
    CHECK(gen::cartesian_product(k3, k3) == gen::named_small(gen::NamedGraph::K3BoxK3));
    Graph lk4 = gen::line_graph(gen::complete_graph(4));
    CHECK(lk4.order() == 6);
    CHECK(is_regular(lk4, 4));
}
