#include "sparsecut/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

#include "sparsecut/error.hpp"

namespace sparsecut {

Graph::Graph(int n) {
    require(n >= 0, ErrorKind::InvalidInput, "graph order must be nonnegative");
    adj_.resize(static_cast<std::size_t>(n));
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            fail(ErrorKind::InvalidInput, "edge {" + std::to_string(u) + "," + std::to_string(v) +
                                              "} has an endpoint outside 0.." + std::to_string(n - 1));
        if (u == v) fail(ErrorKind::InvalidInput, "self-loop at vertex " + std::to_string(u));
        adj_[static_cast<std::size_t>(u)].push_back(v);
        adj_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (std::size_t v = 0; v < adj_.size(); ++v) {
        auto& nb = adj_[v];
        std::sort(nb.begin(), nb.end());
        auto dup = std::adjacent_find(nb.begin(), nb.end());
        if (dup != nb.end())
            fail(ErrorKind::InvalidInput, "duplicate edge {" + std::to_string(std::min<Vertex>(v, *dup)) + "," +
                                              std::to_string(std::max<Vertex>(v, *dup)) + "}");
    }
    m_ = edges.size();
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

int Graph::max_degree() const noexcept {
    int best = 0;
    for (const auto& nb : adj_) best = std::max(best, static_cast<int>(nb.size()));
    return best;
}

int Graph::min_degree() const noexcept {
    if (adj_.empty()) return 0;
    auto best = adj_.front().size();
    for (const auto& nb : adj_) best = std::min(best, nb.size());
    return static_cast<int>(best);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex u = 0; u < order(); ++u)
        for (Vertex v : neighbors(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

VertexSet::VertexSet(int parent_n, std::vector<Vertex> members) : members_(std::move(members)), parent_n_(parent_n) {
    std::sort(members_.begin(), members_.end());
    if (std::adjacent_find(members_.begin(), members_.end()) != members_.end())
        fail(ErrorKind::InvalidInput, "vertex set contains a duplicate id");
    if (!members_.empty() && (members_.front() < 0 || members_.back() >= parent_n_))
        fail(ErrorKind::InvalidInput, "vertex set id out of range for graph of order " + std::to_string(parent_n_));
}

VertexSet VertexSet::all(int n) {
    std::vector<Vertex> vs(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) vs[static_cast<std::size_t>(i)] = i;
    return VertexSet(n, std::move(vs));
}

bool VertexSet::contains(Vertex v) const { return std::binary_search(members_.begin(), members_.end(), v); }

VertexSet VertexSet::with(Vertex v) const {
    if (contains(v)) return *this;
    auto copy = members_;
    copy.insert(std::upper_bound(copy.begin(), copy.end(), v), v);
    return VertexSet(parent_n_, std::move(copy));
}

VertexSet VertexSet::without(Vertex v) const {
    auto copy = members_;
    copy.erase(std::remove(copy.begin(), copy.end(), v), copy.end());
    VertexSet out(parent_n_);
    out.members_ = std::move(copy);
    return out;
}

std::vector<char> VertexSet::mask() const {
    std::vector<char> m(static_cast<std::size_t>(parent_n_), 0);
    for (Vertex v : members_) m[static_cast<std::size_t>(v)] = 1;
    return m;
}

std::string VertexSet::str() const {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < members_.size(); ++i) os << (i ? "," : "") << members_[i];
    os << '}';
    return os.str();
}

std::string to_string(Minimality m) {
    switch (m) {
        case Minimality::Yes: return "yes";
        case Minimality::No: return "no";
        case Minimality::Unknown: return "unknown";
    }
    return "unknown";
}

namespace {

void check_membership(const Graph& g, const VertexSet& s) {
    require(s.parent_n() == g.order(), ErrorKind::InvalidInput,
            "vertex set refers to a graph of order " + std::to_string(s.parent_n()) + ", not " +
                std::to_string(g.order()));
}

// Component count of G - removed, where removed is a membership mask.
int count_components(const Graph& g, const std::vector<char>& removed) {
    const auto n = static_cast<std::size_t>(g.order());
    std::vector<char> seen(removed);
    std::vector<Vertex> stack;
    int count = 0;
    for (std::size_t s = 0; s < n; ++s) {
        if (seen[s]) continue;
        ++count;
        seen[s] = 1;
        stack.push_back(static_cast<Vertex>(s));
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (Vertex w : g.neighbors(v))
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    stack.push_back(w);
                }
        }
    }
    return count;
}

}  // namespace

std::vector<VertexSet> components(const Graph& g, const VertexSet& removed) {
    check_membership(g, removed);
    const auto n = static_cast<std::size_t>(g.order());
    std::vector<char> seen = removed.mask();
    std::vector<VertexSet> out;
    std::vector<Vertex> queue;
    for (std::size_t s = 0; s < n; ++s) {
        if (seen[s]) continue;
        seen[s] = 1;
        queue.assign(1, static_cast<Vertex>(s));
        for (std::size_t head = 0; head < queue.size(); ++head)
            for (Vertex w : g.neighbors(queue[head]))
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    queue.push_back(w);
                }
        out.emplace_back(g.order(), queue);
    }
    return out;
}

bool is_cutset(const Graph& g, const VertexSet& s) {
    check_membership(g, s);
    require(static_cast<int>(s.size()) < g.order(), ErrorKind::InvalidInput,
            "a cutset must leave at least one vertex: S = V(G)");
    return count_components(g, s.mask()) >= 2;
}

int degree_into(const Graph& g, const VertexSet& s, Vertex v) {
    int d = 0;
    for (Vertex w : g.neighbors(v))
        if (s.contains(w)) ++d;
    return d;
}

int edges_within(const Graph& g, const VertexSet& s) {
    int twice = 0;
    for (Vertex v : s) twice += degree_into(g, s, v);
    return twice / 2;
}

int max_degree_within(const Graph& g, const VertexSet& s) {
    int best = 0;
    for (Vertex v : s) best = std::max(best, degree_into(g, s, v));
    return best;
}

CutsetReport induced_stats(const Graph& g, const VertexSet& s) {
    check_membership(g, s);
    CutsetReport r;
    r.cutset = s;
    r.max_degree_in_s = max_degree_within(g, s);
    r.edges_in_s = edges_within(g, s);
    auto removed = s.mask();
    r.component_count = count_components(g, removed);

    if (!r.separates()) {
        r.minimal = Minimality::No;
    } else if (s.size() > kMinimalityLimit) {
        r.minimal = Minimality::Unknown;
    } else {
        r.minimal = Minimality::Yes;
        const auto k = s.size();
        for (std::uint32_t sub = 0; sub + 1 < (1u << k); ++sub) {
            std::vector<char> part(removed.size(), 0);
            for (std::size_t i = 0; i < k; ++i)
                if (sub & (1u << i)) part[static_cast<std::size_t>(s[i])] = 1;
            if (count_components(g, part) >= 2) {
                r.minimal = Minimality::No;
                break;
            }
        }
    }
    return r;
}

bool is_connected(const Graph& g) { return g.order() == 0 || count_components(g, std::vector<char>(g.order(), 0)) == 1; }

bool is_regular(const Graph& g, int d) {
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) != d) return false;
    return true;
}

Vertex min_degree_vertex(const Graph& g) {
    require(g.order() >= 1, ErrorKind::InvalidInput, "min_degree_vertex needs a nonempty graph");
    Vertex best = 0;
    for (Vertex v = 1; v < g.order(); ++v)
        if (g.degree(v) < g.degree(best)) best = v;
    return best;
}

Vertex max_degree_vertex(const Graph& g) {
    require(g.order() >= 1, ErrorKind::InvalidInput, "max_degree_vertex needs a nonempty graph");
    Vertex best = 0;
    for (Vertex v = 1; v < g.order(); ++v)
        if (g.degree(v) > g.degree(best)) best = v;
    return best;
}

VertexSet neighborhood(const Graph& g, Vertex v) {
    auto nb = g.neighbors(v);
    return VertexSet(g.order(), std::vector<Vertex>(nb.begin(), nb.end()));
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
    check_membership(g, s);
    std::vector<int> index(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < s.size(); ++i) index[static_cast<std::size_t>(s[i])] = static_cast<int>(i);
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < s.size(); ++i)
        for (Vertex w : g.neighbors(s[i])) {
            int j = index[static_cast<std::size_t>(w)];
            if (j > static_cast<int>(i)) edges.emplace_back(static_cast<int>(i), j);
        }
    return {Graph(static_cast<int>(s.size()), edges), s.members()};
}

InducedSubgraph neighborhood_induced(const Graph& g, Vertex v) { return induced_subgraph(g, neighborhood(g, v)); }

}  // namespace sparsecut
