#include "sparsecut/generators.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>

#include "sparsecut/error.hpp"
#include "sparsecut/random.hpp"

namespace sparsecut::gen {

namespace {

int ceil_sqrt(int x) {
    int r = static_cast<int>(std::sqrt(static_cast<double>(x)));
    while (r * r < x) ++r;
    while (r > 0 && (r - 1) * (r - 1) >= x) --r;
    return r;
}

Graph from_pairs(int n, std::vector<Edge> edges) {
    for (auto& [u, v] : edges)
        if (u > v) std::swap(u, v);
    return Graph(n, edges);
}

}  // namespace

Graph icosahedron() {
    enum : Vertex { a, b, c, d, e, f, g, h, i, j, k, l };
    // Neighborhood cycles: a:bcdef, e:afghd, d:acihe, h:degji, g:efkjh, i:cdhjl
    std::vector<Edge> edges = {
        {a, b}, {a, c}, {a, d}, {a, e}, {a, f}, {b, c}, {c, d}, {d, e}, {e, f}, {f, b},
        {e, g}, {e, h}, {f, g}, {g, h}, {h, d}, {d, i}, {c, i}, {i, h}, {h, j}, {g, j},
        {j, i}, {g, k}, {k, f}, {k, j}, {k, b}, {i, l}, {l, c}, {l, j}, {l, k}, {l, b},
    };
    return from_pairs(12, std::move(edges));
}

const std::array<std::string_view, 12>& icosahedron_labels() {
    static const std::array<std::string_view, 12> labels = {"a", "b", "c", "d", "e", "f",
                                                            "g", "h", "i", "j", "k", "l"};
    return labels;
}

Graph squared_cycle(int n) {
    require(n >= 5, ErrorKind::InvalidInput, "squared_cycle needs n >= 5 (got " + std::to_string(n) + ")");
    std::vector<Edge> edges;
    for (int v = 0; v < n; ++v) {
        edges.emplace_back(v, (v + 1) % n);
        edges.emplace_back(v, (v + 2) % n);
    }
    return from_pairs(n, std::move(edges));
}

Graph squared_path(int n) {
    require(n >= 3, ErrorKind::InvalidInput, "squared_path needs n >= 3 (got " + std::to_string(n) + ")");
    std::vector<Edge> edges;
    for (int v = 0; v < n; ++v) {
        if (v + 1 < n) edges.emplace_back(v, v + 1);
        if (v + 2 < n) edges.emplace_back(v, v + 2);
    }
    return Graph(n, edges);
}

Graph figure2_pattern(int blocks) {
    require(blocks >= 4, ErrorKind::InvalidInput,
            "figure2_pattern needs blocks >= 4 (got " + std::to_string(blocks) + "); three blocks give the icosahedron");
    auto bottom = [&](int k) { return 4 * (k % blocks); };
    auto mid = [&](int k) { return 4 * (k % blocks) + 1; };
    auto mid2 = [&](int k) { return 4 * (k % blocks) + 2; };
    auto top = [&](int k) { return 4 * (k % blocks) + 3; };
    std::vector<Edge> edges;
    for (int k = 0; k < blocks; ++k) {
        edges.insert(edges.end(), {
                                      {bottom(k), bottom(k + 1)},
                                      {top(k), top(k + 1)},
                                      {mid(k), mid2(k)},
                                      {mid2(k), mid(k + 1)},
                                      {mid(k), top(k)},
                                      {top(k), mid2(k)},
                                      {mid(k), bottom(k)},
                                      {bottom(k), mid2(k)},
                                      {mid2(k), bottom(k + 1)},
                                      {top(k), mid(k + 1)},
                                  });
    }
    return from_pairs(4 * blocks, std::move(edges));
}

int CliqueChainParams::clique_order() const { return delta + 1 - 2 * ceil_sqrt(delta); }
int CliqueChainParams::connector_degree() const { return ceil_sqrt(delta); }

CliqueChain clique_chain(const CliqueChainParams& p) {
    require(p.delta >= 9, ErrorKind::InvalidInput, "clique_chain needs delta >= 9");
    require(p.base_length >= 3, ErrorKind::InvalidInput, "clique_chain needs a base of order >= 3");
    const int order = p.clique_order();
    const int deg = p.connector_degree();
    require(order >= deg, ErrorKind::InvalidInput,
            "clique_chain: clique order " + std::to_string(order) + " < connector degree " + std::to_string(deg) +
                ", no regular bipartite connector exists");

    const int n = order * p.base_length;
    CliqueChain out;
    out.block_of.resize(static_cast<std::size_t>(n));
    std::vector<Edge> edges;
    for (int blk = 0; blk < p.base_length; ++blk)
        for (int i = 0; i < order; ++i) {
            out.block_of[static_cast<std::size_t>(blk * order + i)] = blk;
            for (int j = i + 1; j < order; ++j) edges.emplace_back(blk * order + i, blk * order + j);
        }

    Rng rng(p.seed);
    auto connect = [&](int left, int right) {
        // Union of deg perfect matchings between the cliques, each resampled
        // until it avoids the pairs already used.
        constexpr int kAttempts = 100000;
        for (int attempt = 0; attempt < kAttempts; ++attempt) {
            std::vector<std::vector<char>> used(static_cast<std::size_t>(order),
                                                std::vector<char>(static_cast<std::size_t>(order), 0));
            std::vector<Edge> pairs;
            bool ok = true;
            for (int layer = 0; layer < deg && ok; ++layer) {
                std::vector<int> perm(static_cast<std::size_t>(order));
                std::iota(perm.begin(), perm.end(), 0);
                ok = false;
                for (int tries = 0; tries < 1000 && !ok; ++tries) {
                    rng.shuffle(perm);
                    ok = true;
                    for (int i = 0; i < order && ok; ++i)
                        if (used[static_cast<std::size_t>(i)][static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])])
                            ok = false;
                }
                if (!ok) break;
                for (int i = 0; i < order; ++i) {
                    used[static_cast<std::size_t>(i)][static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = 1;
                    pairs.emplace_back(left * order + i, right * order + perm[static_cast<std::size_t>(i)]);
                }
            }
            if (ok) {
                edges.insert(edges.end(), pairs.begin(), pairs.end());
                return;
            }
        }
        fail(ErrorKind::BudgetExhausted, "clique_chain: could not sample a simple regular connector");
    };
    for (int blk = 0; blk + 1 < p.base_length; ++blk) connect(blk, blk + 1);
    if (p.base_is_cycle) connect(p.base_length - 1, 0);

    out.graph = Graph(n, edges);
    return out;
}

Graph complete_graph(int n) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, edges);
}

Graph path_graph(int n) {
    std::vector<Edge> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph(n, edges);
}

Graph cycle_graph(int n) {
    require(n >= 3, ErrorKind::InvalidInput, "cycle_graph needs n >= 3");
    std::vector<Edge> edges;
    for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    return from_pairs(n, std::move(edges));
}

Graph petersen_graph() {
    std::vector<Edge> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);
        edges.emplace_back(i, 5 + i);
    }
    return from_pairs(10, std::move(edges));
}

Graph line_graph(const Graph& g) {
    const auto es = g.edges();
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < es.size(); ++i)
        for (std::size_t j = i + 1; j < es.size(); ++j) {
            auto [a, b] = es[i];
            auto [c, d] = es[j];
            if (a == c || a == d || b == c || b == d) edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
        }
    return Graph(static_cast<int>(es.size()), edges);
}

Graph cartesian_product(const Graph& a, const Graph& b) {
    const int na = a.order(), nb = b.order();
    auto id = [nb](int i, int j) { return i * nb + j; };
    std::vector<Edge> edges;
    for (auto [u, v] : a.edges())
        for (int j = 0; j < nb; ++j) edges.emplace_back(id(u, j), id(v, j));
    for (auto [u, v] : b.edges())
        for (int i = 0; i < na; ++i) edges.emplace_back(id(i, u), id(i, v));
    return Graph(na * nb, edges);
}

Graph named_small(NamedGraph name) {
    switch (name) {
        case NamedGraph::K4: return complete_graph(4);
        case NamedGraph::TriangularPrism:
            return Graph(6, std::vector<Edge>{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
        case NamedGraph::K3BoxK3: return cartesian_product(complete_graph(3), complete_graph(3));
        case NamedGraph::LineGraphPetersen: return line_graph(petersen_graph());
    }
    fail(ErrorKind::InvalidInput, "unknown named graph");
}

NamedGraph parse_named(std::string_view name) {
    std::string key;
    for (char ch : name) key.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
    if (key == "k4") return NamedGraph::K4;
    if (key == "triangular-prism" || key == "prism") return NamedGraph::TriangularPrism;
    if (key == "k3boxk3") return NamedGraph::K3BoxK3;
    if (key == "line-graph-petersen" || key == "linegraphpetersen") return NamedGraph::LineGraphPetersen;
    fail(ErrorKind::InvalidInput, "unknown named graph '" + std::string(name) + "'");
}

Graph projective_plane_incidence_q4() {
    constexpr int kModulus = 21;
    constexpr std::array<int, 5> kDifferenceSet = {0, 1, 4, 14, 16};
    std::vector<Edge> edges;
    for (int point = 0; point < kModulus; ++point)
        for (int d : kDifferenceSet) edges.emplace_back(point, kModulus + (point - d + kModulus) % kModulus);
    return Graph(2 * kModulus, edges);
}

Graph random_regular(int n, int d, std::uint64_t seed, int max_attempts) {
    require(n >= 1 && d >= 0, ErrorKind::InvalidInput, "random_regular needs n >= 1 and d >= 0");
    require(d < n, ErrorKind::InvalidInput, "random_regular needs d < n");
    require((static_cast<long>(n) * d) % 2 == 0, ErrorKind::InvalidInput, "random_regular needs n*d even");

    Rng rng(seed);
    const std::size_t total = static_cast<std::size_t>(n) * static_cast<std::size_t>(d);
    const auto ud = static_cast<std::size_t>(d);
    std::vector<Vertex> stubs(total);
    std::vector<Vertex> nbr(total);
    std::vector<int> filled(static_cast<std::size_t>(n));
    std::vector<Edge> edges;
    edges.reserve(total / 2);
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        for (std::size_t i = 0; i < total; ++i) stubs[i] = static_cast<Vertex>(i / ud);
        std::fill(filled.begin(), filled.end(), 0);
        edges.clear();
        // Pairs come off a lazy Fisher-Yates shuffle, so a collision ends the
        // attempt before the rest of the permutation is drawn.
        bool simple = true;
        for (std::size_t i = 0; i + 1 < total; i += 2) {
            std::swap(stubs[i], stubs[i + rng.below(total - i)]);
            std::swap(stubs[i + 1], stubs[i + 1 + rng.below(total - i - 1)]);
            const Vertex u = stubs[i], v = stubs[i + 1];
            const auto su = static_cast<std::size_t>(u), sv = static_cast<std::size_t>(v);
            const Vertex* row = nbr.data() + su * ud;
            if (u == v || std::find(row, row + filled[su], v) != row + filled[su]) {
                simple = false;
                break;
            }
            nbr[su * ud + static_cast<std::size_t>(filled[su]++)] = v;
            nbr[sv * ud + static_cast<std::size_t>(filled[sv]++)] = u;
            edges.emplace_back(std::min(u, v), std::max(u, v));
        }
        if (simple) {
            std::sort(edges.begin(), edges.end());
            return Graph(n, edges);
        }
    }
    fail(ErrorKind::BudgetExhausted, "random_regular: no simple pairing after " + std::to_string(max_attempts) +
                                         " attempts (n=" + std::to_string(n) + ", d=" + std::to_string(d) +
                                         ", seed=" + std::to_string(seed) + ")");
}

}  // namespace sparsecut::gen
