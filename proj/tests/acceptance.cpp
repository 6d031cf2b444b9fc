// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "sparsecut/cli.hpp"
#include "sparsecut/cutsets.hpp"
#include "sparsecut/error.hpp"
#include "sparsecut/generators.hpp"
#include "sparsecut/io.hpp"
#include "sparsecut/oracles.hpp"

using namespace sparsecut;
using namespace sparsecut::cutsets;

namespace {

struct Check {
    std::vector<std::string> failures;
    int cases = 0;

    void expect(bool ok, const std::string& what) {
        if (!ok && failures.size() < 5) failures.push_back(what);
        if (!ok && failures.size() == 5) failures.push_back("...");
    }
};

std::string where(const std::string& label, const Graph& g) { return label + " (" + io::emit_graph6(g) + ")"; }

void verify(Check& c, const Graph& g, const Certificate& cert, const std::string& label) {
    auto v = oracle::verify_certificate(g, cert);
    c.expect(v.ok, label + ": " + v.reason);
}

struct Fixture {
    std::string name;
    Graph graph;
};

std::vector<Fixture> fixtures() {
    std::vector<Fixture> out;
    const std::string dir = SPARSECUT_FIXTURE_DIR;
    for (const char* f : {"icosahedron.edges", "k3boxk3.edges", "petersen.g6", "prism.edges", "projective_plane_4.g6",
                          "squared_cycle_14.edges"})
        out.push_back({f, io::parse_graph(io::read_file(dir + "/" + f))});
    out.push_back({"k4", gen::named_small(gen::NamedGraph::K4)});
    out.push_back({"line-graph-petersen", gen::named_small(gen::NamedGraph::LineGraphPetersen)});
    out.push_back({"figure2-4", gen::figure2_pattern(4)});
    out.push_back({"figure2-5", gen::figure2_pattern(5)});
    out.push_back({"squared-path-8", gen::squared_path(8)});
    return out;
}

void theorem1_suite(Check& c) {
    auto run_one = [&](const Graph& g, int delta, const std::string& label) {
        ++c.cases;
        auto res = theorem1_run(g, delta);
        const auto& r = res.report;
        verify(c, g, GoodCutset{r, {static_cast<std::size_t>(delta), delta - 3, std::nullopt, false}}, label);
        c.expect(static_cast<int>(r.cutset.size()) <= delta, label + ": |S| > delta");
        c.expect(r.max_degree_in_s <= delta - 3, label + ": inner degree above delta-3");
        c.expect(res.iterations() <= delta + 3, label + ": too many iterations");
        for (std::size_t i = 1; i < res.trace.size(); ++i) {
            const auto& a = res.trace[i - 1];
            const auto& b = res.trace[i];
            c.expect(b.m_i - 2 * b.n_i >= a.m_i - 2 * a.n_i + delta - 2, label + ": ledger step " + std::to_string(b.step));
        }
    };
    for (std::uint64_t seed = 1; seed <= 500; ++seed) {
        Rng rng(seed * 7 + 3);
        const int delta = 3 + static_cast<int>(rng.below(4));
        int n = 2 * delta + 4 + static_cast<int>(rng.below(static_cast<std::uint64_t>(60 - (2 * delta + 4) + 1)));
        Graph g;
        switch (seed % 3) {
            case 0:
                if (n * delta % 2) ++n;
                g = corpus::connected_regular(std::min(n, 60 - (60 * delta) % 2), delta, seed);
                break;
            case 1:
                if (n * delta % 2) ++n;
                g = corpus::regular_minus_edge(std::min(n, 60 - (60 * delta) % 2), delta, seed);
                break;
            default:
                g = corpus::random_connected(n, delta, 3 * n, seed);
        }
        if (g.max_degree() > delta) continue;
        run_one(g, delta, where("seed " + std::to_string(seed), g));
    }
    for (const auto& f : fixtures()) {
        const int delta = std::max(3, f.graph.max_degree());
        if (f.graph.order() >= 2 * delta + 4 && is_connected(f.graph)) run_one(f.graph, delta, f.name);
    }
}

void theorem2_suite(Check& c) {
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        const int n = 14 + 2 * static_cast<int>(seed % 14);
        Graph g = corpus::connected_regular(n, 5, seed);
        const auto label = where("seed " + std::to_string(seed), g);
        ++c.cases;
        auto cert = theorem2_cutset(g);
        auto* good = std::get_if<GoodCutset>(&cert);
        c.expect(good != nullptr, label + ": no GoodCutset");
        if (!good) continue;
        const auto& r = good->report;
        verify(c, g, GoodCutset{r, {5, 2, Rational{2}, false}}, label);
        c.expect(r.cutset.size() <= 5 && r.max_degree_in_s <= 2 && r.avg_degree() < Rational{2}, label + ": bounds");
    }
}

void theorem3_suite(Check& c) {
    for (int n = 7; n <= 20; ++n) {
        Graph g = corpus::relabel(gen::squared_cycle(n), static_cast<std::uint64_t>(n) * 13);
        ++c.cases;
        auto cert = theorem3_dichotomy(g);
        c.expect(std::holds_alternative<SquaredCycleIso>(cert), "C" + std::to_string(n) + "^2: not recognized");
        verify(c, g, cert, "C" + std::to_string(n) + "^2");
    }
    int accepted = 0;
    for (std::uint64_t seed = 1; accepted < 100 && seed < 1000; ++seed) {
        const int n = 12 + static_cast<int>(seed % 13);
        Graph g = corpus::connected_regular(n, 4, seed);
        bool some_not_2k2 = false;
        for (Vertex v = 0; v < n && !some_not_2k2; ++v)
            some_not_2k2 = !oracle::recognize_pattern(neighborhood_induced(g, v).graph, oracle::Pattern::TwoK2);
        if (!some_not_2k2 || oracle::recognize_squared_cycle(g)) continue;
        ++accepted;
        ++c.cases;
        const auto label = where("seed " + std::to_string(seed), g);
        auto cert = theorem3_dichotomy(g);
        auto* good = std::get_if<GoodCutset>(&cert);
        c.expect(good != nullptr, label + ": no GoodCutset");
        if (!good) continue;
        verify(c, g, GoodCutset{good->report, {4, std::nullopt, Rational{1}, true}}, label);
    }
    c.expect(accepted == 100, "only " + std::to_string(accepted) + " random 4-regular graphs qualified");
    for (auto named : {gen::NamedGraph::K3BoxK3, gen::NamedGraph::LineGraphPetersen}) {
        ++c.cases;
        try {
            theorem3_dichotomy(gen::named_small(named));
            c.expect(false, "all-2K2 graph accepted");
        } catch (const Error& e) {
            std::string what = e.what();
            c.expect(e.kind() == ErrorKind::Precondition && what.find("2K2") != std::string::npos, "wrong error: " + what);
        }
    }
}

void theorem4_suite(Check& c) {
    std::vector<std::pair<std::string, Graph>> corpus_graphs;
    for (int k = 1; k <= 3; ++k)
        for (std::uint64_t seed = 1; seed <= 10; ++seed)
            corpus_graphs.push_back({"planted k=" + std::to_string(k), corpus::planted_separator(k, false, seed)});
    for (std::uint64_t seed = 1; seed <= 10; ++seed)
        corpus_graphs.push_back({"planted adjacent", corpus::planted_separator(2, true, seed)});
    int sampled = 0;
    for (std::uint64_t seed = 1; seed <= 400; ++seed) {
        Graph g = gen::random_regular(8 + 2 * static_cast<int>(seed % 6), 4, seed);
        if (is_connected(g) && oracle::vertex_connectivity(g) <= 3) {
            corpus_graphs.push_back({"sampled", g});
            ++sampled;
        }
    }
    c.expect(sampled > 0, "no random 4-regular graph with connectivity <= 3");
    for (const auto& [name, g] : corpus_graphs) {
        if (oracle::vertex_connectivity(g) > 3) continue;
        ++c.cases;
        const auto label = where(name, g);
        auto cert = theorem4_independent_cutset(g);
        auto* ind = std::get_if<IndependentCutset>(&cert);
        c.expect(ind != nullptr && ind->report.cutset.size() <= 3, label + ": no independent cutset of order <= 3");
        verify(c, g, cert, label);
    }
}

void theorem5_suite(Check& c) {
    Graph pg = gen::projective_plane_incidence_q4();
    ++c.cases;
    c.expect(pg.order() >= 30 && is_regular(pg, 5), "fixture is not 5-regular of order >= 30");
    c.expect(oracle::girth(pg).value_or(0) >= 5, "fixture girth below 5");
    c.expect(!oracle::find_krr(pg, 2), "fixture contains K22");
    auto cert = theorem5_certify(pg, 5, 2);
    auto* good = std::get_if<GoodCutset>(&cert);
    c.expect(good && good->report.cutset.size() <= 5 && good->report.max_degree_in_s <= 1, "fixture: bounds");
    verify(c, pg, cert, "fixture");

    std::vector<Graph> with_k22{gen::icosahedron(), gen::figure2_pattern(4), gen::figure2_pattern(6)};
    for (std::uint64_t seed = 1; seed <= 40; ++seed) with_k22.push_back(corpus::connected_regular(14 + 2 * (seed % 8), 5, seed));
    for (const auto& g : with_k22) {
        if (!oracle::find_krr(g, 2)) continue;
        ++c.cases;
        auto out = theorem5_certify(g, 5, 2);
        const bool one_kind = std::holds_alternative<KrrWitness>(out) || std::holds_alternative<GoodCutset>(out);
        c.expect(one_kind, where("K22 graph", g) + ": unexpected certificate kind");
        verify(c, g, out, where("K22 graph", g));
    }
}

void figure_facts(Check& c) {
    oracle::OracleBudget wide{24, 22, 0};
    auto no_independent = [&](const Graph& g, const std::string& name) {
        ++c.cases;
        c.expect(oracle::find_independent_cutset(g, wide).status == oracle::Status::None, name + " has an independent cutset");
    };
    no_independent(gen::named_small(gen::NamedGraph::K4), "K4");
    no_independent(gen::named_small(gen::NamedGraph::TriangularPrism), "prism");
    no_independent(gen::squared_cycle(14), "C14^2");
    auto no_sparse = [&](const Graph& g, const std::string& name) {
        ++c.cases;
        c.expect(oracle::find_constrained_cutset(g, 1, std::nullopt, wide).status == oracle::Status::None,
                 name + " has a cutset with inner degree <= 1");
    };
    no_sparse(gen::icosahedron(), "icosahedron");
    no_sparse(gen::figure2_pattern(4), "figure2 pattern");
    ++c.cases;
    c.expect(oracle::vertex_connectivity(gen::icosahedron()) == 5, "icosahedron connectivity is not 5");
}

void prop1_suite(Check& c) {
    for (const auto& f : fixtures()) {
        ++c.cases;
        const bool expected = f.name == "icosahedron.edges";
        c.expect(prop1_is_icosahedron(f.graph) == expected, f.name);
    }
    ++c.cases;
    c.expect(prop1_is_icosahedron(corpus::relabel(gen::icosahedron(), 99)), "relabeled icosahedron");
}

void prop2_suite(Check& c) {
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        Graph g = corpus::sparse_gated(6 + static_cast<int>(seed % 25), static_cast<int>(seed % 3), seed * 101);
        const auto label = where("seed " + std::to_string(seed), g);
        ++c.cases;
        c.expect(prop2_edge_gate(g), label + ": gate");
        auto r = prop2_cutset(g);
        verify(c, g, GoodCutset{r, {static_cast<std::size_t>(g.order() - 1), 1, std::nullopt, false}}, label);
    }
}

void minimal_audit(Check& c) {
    std::vector<Fixture> all = fixtures();
    for (std::uint64_t seed = 1; seed <= 6; ++seed)
        all.push_back({"random-" + std::to_string(seed), corpus::connected_regular(12 + 2 * (seed % 3), 3 + seed % 3, seed)});
    for (const auto& f : all) {
        const int n = f.graph.order();
        oracle::OracleBudget b{64, n <= 18 ? std::max(1, n - 2) : 6, 0};
        auto res = oracle::enumerate_minimal_cutsets(f.graph, b);
        c.expect(res.status == oracle::Status::Found || res.status == oracle::Status::None, f.name + ": budget");
        if (!res.value) continue;
        const int delta = f.graph.max_degree();
        for (const auto& s : *res.value) {
            ++c.cases;
            c.expect(max_degree_within(f.graph, s) <= delta - 2, f.name + ": " + s.str());
        }
    }
}

// Runs a fixed batch of commands through the CLI and concatenates the JSON.
std::string suite_transcript() {
    std::ostringstream all;
    auto run = [&](std::vector<std::string> args, const std::string& input) {
        args.push_back("--zero-timing");
        std::istringstream in(input);
        std::ostringstream out, err;
        int code = cli::run(args, in, out, err);
        all << code << "\n" << out.str();
    };
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        run({"find-cutset", "--method", "thm1"}, io::emit_edge_list(corpus::connected_regular(20, 4, seed)));
        run({"find-cutset", "--method", "thm2"}, io::emit_graph6(corpus::connected_regular(16, 5, seed)));
        run({"find-cutset", "--method", "thm3"}, io::emit_edge_list(corpus::connected_regular(14, 4, seed)));
        run({"find-cutset", "--method", "thm4"}, io::emit_edge_list(corpus::planted_separator(2, seed % 2, seed)));
        run({"find-cutset", "--method", "prop2"}, io::emit_edge_list(corpus::sparse_gated(15, seed % 3, seed)));
    }
    run({"find-cutset", "--method", "thm5"}, io::emit_graph6(gen::projective_plane_incidence_q4()));
    run({"find-cutset", "--method", "thm2"}, io::emit_edge_list(gen::icosahedron()));
    run({"oracle", "min-cutsets"}, io::emit_edge_list(gen::figure2_pattern(4)));
    run({"generate", "random-regular", "30", "5", "--seed", "17"}, "");
    return all.str();
}

void determinism(Check& c) {
    ++c.cases;
    auto a = suite_transcript();
    auto b = suite_transcript();
    c.expect(!a.empty() && a == b, "transcripts differ");
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<void(Check&)> body;
    };
    const std::vector<Criterion> criteria{
        {"1 thm1 guarantee suite", theorem1_suite},
        {"2 thm2 guarantee suite", theorem2_suite},
        {"3 thm3 dichotomy", theorem3_suite},
        {"4 thm4 independent cutsets", theorem4_suite},
        {"5 thm5 dual certificate", theorem5_suite},
        {"6 figure facts", figure_facts},
        {"7 prop1 icosahedron recognition", prop1_suite},
        {"8 prop2 sparse graphs", prop2_suite},
        {"9 minimal cutset degree audit", minimal_audit},
        {"10 determinism", determinism},
    };
    int failed = 0;
    for (const auto& cr : criteria) {
        Check c;
        auto start = std::chrono::steady_clock::now();
        try {
            cr.body(c);
        } catch (const std::exception& e) {
            c.failures.push_back(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool ok = c.failures.empty();
        failed += !ok;
        std::printf("%s  %-34s %5d cases  %.2fs\n", ok ? "PASS" : "FAIL", cr.name, c.cases, secs);
        for (const auto& f : c.failures) std::printf("      %s\n", f.c_str());
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
