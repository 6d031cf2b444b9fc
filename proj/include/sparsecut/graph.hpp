#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sparsecut/rational.hpp"

namespace sparsecut {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on the dense vertex range 0..n-1.
///
/// Neighbor lists are kept sorted. The constructor rejects self-loops,
/// parallel edges and out-of-range endpoints instead of normalizing them,
/// so a Graph value is always simple and symmetric. Immutable once built.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, std::span<const Edge> edges);

    int order() const noexcept { return static_cast<int>(adj_.size()); }
    std::size_t size() const noexcept { return m_; }

    std::span<const Vertex> neighbors(Vertex v) const { return adj_.at(static_cast<std::size_t>(v)); }
    int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
    bool has_edge(Vertex u, Vertex v) const;

    int max_degree() const noexcept;
    int min_degree() const noexcept;

    /// All edges as (u, v) with u < v, lexicographically sorted.
    std::vector<Edge> edges() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<std::vector<Vertex>> adj_;
    std::size_t m_ = 0;
};

/// Sorted, duplicate-free set of vertex ids belonging to a graph of order
/// parent_n.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int parent_n) : parent_n_(parent_n) {}
    /// Sorts the members; throws on duplicates or ids outside 0..parent_n-1.
    VertexSet(int parent_n, std::vector<Vertex> members);

    static VertexSet all(int n);

    int parent_n() const noexcept { return parent_n_; }
    std::size_t size() const noexcept { return members_.size(); }
    bool empty() const noexcept { return members_.empty(); }
    bool contains(Vertex v) const;

    const std::vector<Vertex>& members() const noexcept { return members_; }
    auto begin() const noexcept { return members_.begin(); }
    auto end() const noexcept { return members_.end(); }
    Vertex operator[](std::size_t i) const { return members_[i]; }

    VertexSet with(Vertex v) const;
    VertexSet without(Vertex v) const;

    /// Per-vertex membership flags, length parent_n.
    std::vector<char> mask() const;

    std::string str() const;

    friend bool operator==(const VertexSet&, const VertexSet&) = default;
    friend auto operator<=>(const VertexSet& a, const VertexSet& b) { return a.members_ <=> b.members_; }

private:
    std::vector<Vertex> members_;
    int parent_n_ = 0;
};

enum class Minimality { Yes, No, Unknown };

std::string to_string(Minimality m);

/// Largest |S| for which induced_stats decides minimality exhaustively.
inline constexpr std::size_t kMinimalityLimit = 6;

/// Exact statistics of a candidate cutset S.
struct CutsetReport {
    VertexSet cutset;
    int max_degree_in_s = 0;  // maximum degree of G[S]
    int edges_in_s = 0;       // |E(G[S])|
    int component_count = 0;  // components of G - S
    Minimality minimal = Minimality::Unknown;

    /// Average degree of G[S] as 2|E(G[S])| / |S|, and 0 for the empty set.
    Rational avg_degree() const {
        return cutset.empty() ? Rational{0, 1}
                              : Rational{2 * static_cast<std::int64_t>(edges_in_s),
                                         static_cast<std::int64_t>(cutset.size())};
    }
    bool separates() const noexcept { return component_count >= 2; }

    friend bool operator==(const CutsetReport&, const CutsetReport&) = default;
};

/// Connected components of G - removed, ordered by smallest member.
std::vector<VertexSet> components(const Graph& g, const VertexSet& removed);

/// True iff G - S is disconnected. Throws InvalidInput when S = V(G).
bool is_cutset(const Graph& g, const VertexSet& s);

/// Exact degree statistics of G[S], component count of G - S, and the
/// minimality flag (exhaustive over all proper subsets when |S| <= 6).
CutsetReport induced_stats(const Graph& g, const VertexSet& s);

bool is_connected(const Graph& g);
bool is_regular(const Graph& g, int d);

/// Vertex of minimum degree, smallest id among ties. Requires n >= 1.
Vertex min_degree_vertex(const Graph& g);
/// Vertex of maximum degree, smallest id among ties. Requires n >= 1.
Vertex max_degree_vertex(const Graph& g);

VertexSet neighborhood(const Graph& g, Vertex v);

/// Number of neighbors of v inside S.
int degree_into(const Graph& g, const VertexSet& s, Vertex v);
int edges_within(const Graph& g, const VertexSet& s);
int max_degree_within(const Graph& g, const VertexSet& s);

struct InducedSubgraph {
    Graph graph;
    std::vector<Vertex> to_parent;  // subgraph id -> id in the parent graph
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);
InducedSubgraph neighborhood_induced(const Graph& g, Vertex v);

}  // namespace sparsecut
