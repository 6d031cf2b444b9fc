#pragma once

#include <optional>
#include <vector>

#include "sparsecut/certificate.hpp"
#include "sparsecut/graph.hpp"

// Constructive cutset procedures for bounded-degree graphs. Each one checks
// its hypotheses up front (ErrorKind::Precondition, message prefixed with the
// method name) and re-checks the invariants of its construction while it
// runs (ErrorKind::Invariant). Ties are always broken by smallest vertex id.
namespace sparsecut::cutsets {

/// One state of the grow-and-swap process: U is a component of G - S grown
/// one vertex per step, S is the separator around it.
struct GrowthState {
    VertexSet u;
    VertexSet s;
    int n_i = 0;   // |S|
    int m_i = 0;   // edges between S and U
    int step = 0;  // 1-based
    int s_max_degree = 0;

    /// R = V - (S ∪ U).
    VertexSet remainder() const;
};

struct Theorem1Result {
    CutsetReport report;
    bool direct = false;  // the min-degree neighborhood already qualified
    std::vector<GrowthState> trace;
    int iterations() const { return trace.empty() ? 0 : trace.back().step; }
};

/// Cutset of order <= delta with Δ_G(S) <= delta - 3 in a connected graph of
/// maximum degree <= delta (delta >= 3) and order >= 2 delta + 4.
///
/// If the minimum degree is at most delta - 2 the neighborhood of a
/// minimum-degree vertex is returned. Otherwise U = {u}, S = N(u) is grown:
/// while some v in S has >= delta - 2 neighbors in S, v moves to U and its
/// (at most one) neighbor outside S ∪ U joins S. Every transition keeps |S|
/// and gains >= delta - 2 S-U edges, or drops |S| by one and gains
/// >= delta - 4, so m_i - 2 n_i grows by >= delta - 2 per step and the loop
/// stops within delta + 3 steps. Both facts are asserted.
Theorem1Result theorem1_run(const Graph& g, int delta);
CutsetReport theorem1_cutset(const Graph& g, int delta);

struct Theorem2Options {
    bool allow_small = false;  // lift the n >= 14 gate (icosahedron becomes reachable)
};

/// Connected 5-regular graphs: a cutset of order <= 5 with Δ_G(S) <= 2 and
/// average degree < 2, or IsIcosahedron when the gate is lifted.
///
/// Starts at a vertex whose neighborhood is not a 5-cycle, runs the
/// theorem-1 growth down to Δ_G(S) <= 2, and while G[S] is a cycle either
/// drops a vertex with no neighbor beyond S ∪ U or pushes a vertex with
/// exactly two U-neighbors into U. The growth loop is re-entered whenever
/// Δ_G(S) climbs back to 3. m_i strictly increases and is at most 25.
Certificate theorem2_cutset(const Graph& g, Theorem2Options options = {});

struct Theorem3Options {
    int min_order = 10;  // below this only the squared-cycle side is attempted
};

/// Connected 4-regular graph with some neighborhood not inducing 2K2:
/// SquaredCycleIso when G is C_n^2, else the first minimal cutset of order
/// <= 4 with average degree < 1 in (size, lexicographic) order. If none
/// exists the order is below the unquantified threshold; reported as a
/// precondition failure.
Certificate theorem3_dichotomy(const Graph& g, Theorem3Options options = {});

/// Own squared-cycle recognition by extending a Hamiltonian ordering in which
/// every new vertex is a common neighbor of the previous two; the result is
/// checked edge by edge. Returns the position -> vertex mapping.
std::optional<std::vector<Vertex>> squared_cycle_order(const Graph& g);

/// 4-regular graph with connectivity <= 3: an independent cutset of order <= 3.
Certificate theorem4_independent_cutset(const Graph& g);

/// c = 3 + floor(2 (delta - 3r + 2) / (r (r - 1))).
int theorem5_constant(int delta, int r);

struct Thm5State {
    VertexSet s;
    VertexSet c;
    VertexSet t;  // every vertex of c is adjacent to every vertex of t
    int i = 0;
    int delta = 0;
    int r = 0;
    int c_const = 0;
};

struct Theorem5Result {
    Certificate certificate;
    std::vector<Thm5State> trace;
};

/// Graph of maximum degree exactly delta: a cutset of order
/// <= delta + (c-3)(r-2) with Δ_G(S) <= delta - c, or a K_{r,r} subgraph.
Theorem5Result theorem5_run(const Graph& g, int delta, int r);
Certificate theorem5_certify(const Graph& g, int delta, int r);

/// True iff G is connected and every vertex neighborhood induces C5; such a
/// graph is the icosahedron, which is asserted (n = 12, m = 30).
bool prop1_is_icosahedron(const Graph& g);

/// m <= (2 + 1/(Δ²+1)) n - 4, compared exactly.
bool prop2_edge_gate(const Graph& g);

struct Prop2Options {
    int contracted_cap = 24;  // order cap for the independent-cutset search
};

/// Sparse connected graph: a cutset with Δ_G(S) <= 1. Contracts one edge
/// u_i v_i (u_i, v_i sharing two neighbors) at each vertex of a greedy
/// independent set of G², searches the contracted graph exhaustively for an
/// independent cutset and expands the contracted vertices again.
CutsetReport prop2_cutset(const Graph& g, Prop2Options options = {});

/// N(u) ∪ I with I a greedy independent set at distance >= 3 from u. Shows
/// that average degree alone is a weak measure: d̄ -> 0 as n grows.
CutsetReport degenerate_sparse_cutset(const Graph& g, Vertex u);

}  // namespace sparsecut::cutsets
