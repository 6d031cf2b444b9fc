#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sparsecut/certificate.hpp"
#include "sparsecut/graph.hpp"
#include "sparsecut/rational.hpp"

// Brute-force and classical-algorithm checks used as the trust anchor for
// every certificate. Nothing here calls into sparsecut::cutsets, and the
// connectivity tests are reimplemented on bitmasks / union-find rather than
// borrowed from the graph core.
namespace sparsecut::oracle {

struct OracleBudget {
    int max_n = 24;            // order cap for exponential searches (at most 64)
    int max_subset_size = 6;   // cap for cutset enumeration
    double time_hint = 0.0;    // soft wall-clock limit in seconds, 0 = none
};

/// Budget with the caps read from SPARSECUT_ORACLE_MAX_N,
/// SPARSECUT_ORACLE_MAX_SUBSET and SPARSECUT_ORACLE_TIME when set.
OracleBudget budget_from_env();

enum class Status { Found, None, BudgetExhausted };

std::string to_string(Status s);

/// Result of a bounded search. BudgetExhausted never means "none".
template <class T>
struct Outcome {
    Status status = Status::None;
    std::optional<T> value;

    static Outcome found(T v) { return {Status::Found, std::move(v)}; }
    static Outcome none() { return {Status::None, std::nullopt}; }
    static Outcome exhausted() { return {Status::BudgetExhausted, std::nullopt}; }
};

struct MinCutsets {
    std::optional<int> kappa;  // empty for complete graphs (no cutset at all)
    std::vector<VertexSet> cutsets;
};

/// All cutsets of order exactly κ(G), lexicographic.
Outcome<MinCutsets> enumerate_min_cutsets(const Graph& g, const OracleBudget& budget = {});

/// Every inclusion-minimal cutset of order <= budget.max_subset_size, in
/// (size, lexicographic) order.
Outcome<std::vector<VertexSet>> enumerate_minimal_cutsets(const Graph& g, const OracleBudget& budget = {});

/// κ(G) by unit-capacity max-flow on the vertex-split network over all
/// non-adjacent pairs; n - 1 for complete graphs, 0 for disconnected graphs.
int vertex_connectivity(const Graph& g);

/// Independent cutset of minimum order, lexicographically least among those.
Outcome<VertexSet> find_independent_cutset(const Graph& g, const OracleBudget& budget = {});

/// Cutset with Δ_G(S) <= max_delta and, when avg_below is set,
/// d̄_G(S) < avg_below, in (size, lexicographic) order. "None" is only
/// reported after every size up to n - 2 was searched; a smaller subset cap
/// turns an unsuccessful search into BudgetExhausted.
Outcome<VertexSet> find_constrained_cutset(const Graph& g, int max_delta, std::optional<Rational> avg_below,
                                           const OracleBudget& budget = {});

/// Disjoint A, B with |A| = |B| = r and all r² cross edges (subgraph, not
/// induced). Enumerates r-subsets A and intersects their neighborhoods, so
/// cost grows like C(n, r).
std::optional<std::pair<VertexSet, VertexSet>> find_krr(const Graph& g, int r);

enum class Pattern { C5, TwoK2, P4 };

/// Exact isomorphism test of a small graph against a fixed pattern.
bool recognize_pattern(const Graph& g, Pattern pattern);

/// Mapping position -> vertex witnessing G ≅ C_n^2. For n >= 7 the cycle is
/// rebuilt from the P4 neighborhoods (interior vertices are v±1); n = 5, 6
/// use the fact that every 4-regular graph there is K5 resp. K6 - 3K2.
std::optional<std::vector<Vertex>> recognize_squared_cycle(const Graph& g);

/// Vertices p_1..p_k in path order with G[{p_i}] = P_k^2.
Outcome<std::vector<Vertex>> find_induced_squared_path(const Graph& g, int k, const OracleBudget& budget = {});

/// Maximum matching between left and right using G's edges, by augmenting
/// paths in id order. Pairs are (left vertex, right vertex).
std::vector<Edge> bipartite_matching(const VertexSet& left, const VertexSet& right, const Graph& g);

/// Length of a shortest cycle, empty for forests.
std::optional<int> girth(const Graph& g);

/// Union-find test that G - S has at least two components.
bool separates(const Graph& g, const VertexSet& s);

struct Verdict {
    bool ok = false;
    std::string reason;  // first failed check, empty on success
};

/// Re-checks a certificate against G from its data alone.
Verdict verify_certificate(const Graph& g, const Certificate& cert);

}  // namespace sparsecut::oracle
