#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sparsecut/graph.hpp"

namespace sparsecut::gen {

/// Icosahedron with ids 0..11 standing for the labels a..l of the usual
/// drawing: N(a) = {b,c,d,e,f} induces the 5-cycle b c d e f.
Graph icosahedron();
const std::array<std::string_view, 12>& icosahedron_labels();

/// C_n^2: i ~ i±1, i±2 (mod n). Requires n >= 5.
Graph squared_cycle(int n);

/// P_n^2: i ~ i±1, i±2 where in range. Requires n >= 3.
Graph squared_path(int n);

/// Cyclic closure of the 5-regular strip pattern whose middle path vertices
/// all have 5-cycle neighborhoods. Each block holds four vertices
/// (bottom, middle, middle', top) with ids 4k..4k+3. Requires blocks >= 4;
/// three blocks would close up into the icosahedron.
Graph figure2_pattern(int blocks);

struct CliqueChainParams {
    int delta = 9;          // target maximum degree, >= 9
    int base_length = 3;    // order of the base path or cycle, >= 3
    bool base_is_cycle = true;
    std::uint64_t seed = 1;

    /// Clique order n' = delta + 1 - 2 ceil(sqrt(delta)).
    int clique_order() const;
    /// Connector degree ceil(sqrt(delta)).
    int connector_degree() const;
};

struct CliqueChain {
    Graph graph;
    std::vector<int> block_of;  // vertex -> index of its clique in the base graph
};

/// Replaces every base vertex by a clique of order n' and every base edge by
/// a random connector-degree-regular bipartite graph between the two cliques
/// (union of random perfect matchings, resampled on collision). The random
/// connector stands in for the extremal bipartite graph of the lower-bound
/// construction, so cutset density guarantees are heuristic only.
CliqueChain clique_chain(const CliqueChainParams& params);

enum class NamedGraph { K4, TriangularPrism, K3BoxK3, LineGraphPetersen };

Graph named_small(NamedGraph name);
/// Accepts "k4", "triangular-prism", "k3boxk3", "line-graph-petersen"
/// (case-insensitive). Throws InvalidInput for anything else.
NamedGraph parse_named(std::string_view name);

Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph petersen_graph();
Graph line_graph(const Graph& g);
Graph cartesian_product(const Graph& a, const Graph& b);

/// Incidence (Levi) graph of the projective plane of order 4, built from the
/// cyclic difference set {0,1,4,14,16} mod 21. 42 vertices, 5-regular,
/// girth 6; points are 0..20 and lines 21..41.
Graph projective_plane_incidence_q4();

/// Uniform-ish simple d-regular graph from the pairing model, rejecting
/// non-simple pairings. Throws BudgetExhausted after max_attempts rejections.
/// Connectivity is not guaranteed.
Graph random_regular(int n, int d, std::uint64_t seed, int max_attempts = 200000);

}  // namespace sparsecut::gen
