#include <doctest.h>

#include <string>

#include "corpus.hpp"
#include "reference.hpp"
#include "sparsecut/error.hpp"
#include "sparsecut/generators.hpp"
#include "sparsecut/io.hpp"

using namespace sparsecut;
using namespace sparsecut::io;

namespace {

std::string error_text(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::InvalidInput);
        return e.what();
    }
    FAIL("expected an exception");
    return {};
}

bool contains(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }

}  // namespace

TEST_CASE("edge list basics") {
    Graph p3 = parse_edge_list("0 1\n1 2");
    CHECK(p3.order() == 3);
    CHECK(p3.size() == 2);
    CHECK(p3 == gen::path_graph(3));

    Graph hdr = parse_edge_list("# comment\nn 5\n0 1  # trailing\n\n3 4\n");
    CHECK(hdr.order() == 5);
    CHECK(hdr.size() == 2);
    CHECK(parse_edge_list("").order() == 0);
    CHECK(parse_edge_list("n 4\n").order() == 4);
}

TEST_CASE("edge list errors carry line numbers") {
    CHECK(contains(error_text([] { parse_edge_list("0 0"); }), "line 1: self-loop"));
    CHECK(contains(error_text([] { parse_edge_list("0 1\n2 3\n1 0\n"); }), "line 3: duplicate edge 0 1 (first seen at line 1)"));
    CHECK(contains(error_text([] { parse_edge_list("0 1\n1 x\n"); }), "line 2: malformed"));
    CHECK(contains(error_text([] { parse_edge_list("0 1 2\n"); }), "line 1"));
    CHECK(contains(error_text([] { parse_edge_list("0 -1\n"); }), "line 1: malformed"));
    CHECK(contains(error_text([] { parse_edge_list("0 99999999999999999999\n"); }), "id overflow"));
    CHECK(contains(error_text([] { parse_edge_list("0 99999999\n"); }), "id overflow"));
    CHECK(contains(error_text([] { parse_edge_list("n 3\n0 3\n"); }), "line 2: vertex 3 out of range"));
    CHECK(contains(error_text([] { parse_edge_list("0 1\nn 3\n"); }), "line 2"));
}

TEST_CASE("icosahedron fixture file") {
    Graph g = parse_edge_list(read_file(std::string(SPARSECUT_FIXTURE_DIR) + "/icosahedron.edges"));
    CHECK(g.order() == 12);
    CHECK(g.size() == 30);
    CHECK(g == gen::icosahedron());
}

TEST_CASE("edge list round trip") {
    for (const Graph& g : {gen::icosahedron(), gen::petersen_graph(), gen::figure2_pattern(5), Graph(3)})
        CHECK(parse_edge_list(emit_edge_list(g)) == g);
}

TEST_CASE("graph6 agrees with the reference encoder") {
    CHECK(ref::graph6(ref::Matrix(gen::cycle_graph(5))) == "Dhc");
    Graph c5 = parse_graph6("Dhc");
    CHECK(c5.order() == 5);
    CHECK(c5.size() == 5);
    CHECK(c5 == gen::cycle_graph(5));
    CHECK(emit_graph6(gen::petersen_graph()) == "IheA@GUAo");
    CHECK(emit_graph6(gen::complete_graph(4)) == "C~");
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        Graph g = corpus::random_connected(3 + static_cast<int>(seed * 7 % 60), 5, 20, seed);
        CHECK(emit_graph6(g) == ref::graph6(ref::Matrix(g)));
        CHECK(parse_graph6(emit_graph6(g)) == g);
    }
    Graph big = corpus::random_connected(70, 4, 30, 5);
    CHECK(emit_graph6(big).front() == '~');
    CHECK(emit_graph6(big) == ref::graph6(ref::Matrix(big)));
    CHECK(parse_graph6(emit_graph6(big)) == big);
}

TEST_CASE("graph6 round trip on fixture strings") {
    for (std::string s : {"Dhc", "IheA@GUAo", "C~", "?", "@", "A_", "K~~~~~~~~~~~"}) CHECK(emit_graph6(parse_graph6(s)) == s);
    CHECK(parse_graph6("?").order() == 0);
    CHECK(parse_graph6(">>graph6<<Dhc\n") == gen::cycle_graph(5));
}

TEST_CASE("graph6 errors") {
    CHECK(contains(error_text([] { parse_graph6("D h"); }), "invalid character"));
    CHECK(contains(error_text([] { parse_graph6("Dh"); }), "length mismatch"));
    CHECK(contains(error_text([] { parse_graph6("Dhcc"); }), "length mismatch"));
    CHECK(contains(error_text([] { parse_graph6("Dhd"); }), "padding"));
}

TEST_CASE("format detection") {
    CHECK(detect_format("Dhc\n") == GraphFormat::Graph6);
    CHECK(detect_format("0 1\n") == GraphFormat::EdgeList);
    CHECK(detect_format("n 3\n") == GraphFormat::EdgeList);
    CHECK(parse_graph("IheA@GUAo") == gen::petersen_graph());
    CHECK(parse_format_name("g6") == GraphFormat::Graph6);
}

TEST_CASE("digest ignores the input format") {
    Graph p = gen::petersen_graph();
    CHECK(input_digest(parse_graph6(emit_graph6(p))) == input_digest(parse_edge_list(emit_edge_list(p))));
    CHECK(input_digest(p) != input_digest(gen::cycle_graph(10)));
    CHECK(input_digest(p).starts_with("fnv1a64:"));
}

TEST_CASE("certificates survive a JSON round trip") {
    Graph g = gen::squared_cycle(14);
    auto report = induced_stats(g, VertexSet(14, {2, 3, 12, 13}));
    std::vector<Certificate> certs{
        GoodCutset{report, {4, 1, Rational{3, 2}, true}},
        GoodCutset{report, {4, std::nullopt, std::nullopt, false}},
        KrrWitness{2, VertexSet(14, {0, 1}), VertexSet(14, {2, 13})},
        SquaredCycleIso{{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13}},
        IndependentCutset{report, 3},
        IsIcosahedron{},
    };
    for (const auto& c : certs) {
        auto text = certificate_to_json(c, 14).dump();
        CHECK(certificate_from_json(Json::parse(text), 14) == c);
    }
    auto j = certificate_to_json(certs[0], 14);
    CHECK(j["claims"]["avg_below"] == "3/2");
    CHECK(contains(error_text([&] { certificate_from_json(j, 15); }), "differs"));
    j["kind"] = "mystery";
    CHECK(contains(error_text([&] { certificate_from_json(j, 14); }), "unknown kind"));
    CHECK(contains(error_text([] { certificate_from_json(Json::parse(R"({"kind":"krr_witness","n":4})"), 4); }),
                   "certificate"));
}

TEST_CASE("report field order is fixed") {
    RunReport r;
    r.input_digest = "fnv1a64:0";
    auto j = report_to_json(r, 3);
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"schema_version", "command", "input_digest", "status", "error", "certificate",
                                           "verified", "stats", "details", "timing_ms"});
    CHECK(j["schema_version"] == 1);
}

TEST_CASE("DOT export highlights the cutset") {
    Graph g = gen::path_graph(3);
    VertexSet s(3, {1});
    auto dot = to_dot(g, &s);
    CHECK(contains(dot, "1 [style=filled"));
    CHECK(contains(dot, "0 -- 1;"));
    CHECK_FALSE(contains(to_dot(g), "filled"));
}
