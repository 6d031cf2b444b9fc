#include "sparsecut/cutsets.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

#include "internal.hpp"
#include "sparsecut/oracles.hpp"

namespace sparsecut::cutsets {

using detail::precondition;

namespace {

// Calls fn on every k-subset of 0..n-1 in lexicographic order until it
// returns true. Returns whether fn stopped the walk.
template <class Fn>
bool for_each_subset(int n, int k, Fn&& fn) {
    if (k > n) return false;
    std::vector<Vertex> pick(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = i;
    for (;;) {
        if (fn(pick)) return true;
        int i = k - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) return false;
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
}

bool neighborhood_is_two_k2(const Graph& g, Vertex v) {
    if (g.degree(v) != 4) return false;
    auto nb = neighborhood(g, v);
    for (Vertex w : nb)
        if (degree_into(g, nb, w) != 1) return false;
    return true;
}

std::string describe_neighborhood(const Graph& g, Vertex v) {
    return "N(" + std::to_string(v) + ") = " + neighborhood(g, v).str();
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    auto q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

}  // namespace

std::optional<std::vector<Vertex>> squared_cycle_order(const Graph& g) {
    const int n = g.order();
    if (n < 5 || !is_regular(g, 4) || g.size() != static_cast<std::size_t>(2 * n)) return std::nullopt;

    // Position i may touch position j < i - 2 only across the seam.
    auto seam = [n](int i, int j) { return (i == n - 2 && j == 0) || (i == n - 1 && (j == 0 || j == 1)); };

    std::vector<Vertex> order;
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    auto fits = [&](Vertex cand) {
        const int i = static_cast<int>(order.size());
        for (int j = 0; j < i; ++j) {
            const bool want = j >= i - 2 || seam(i, j);
            if (g.has_edge(cand, order[static_cast<std::size_t>(j)]) != want) return false;
        }
        return true;
    };

    auto extend = [&](auto&& self) -> bool {
        if (static_cast<int>(order.size()) == n) return true;
        std::vector<Vertex> candidates;
        if (order.size() == 1) {
            auto nb = g.neighbors(order[0]);
            candidates.assign(nb.begin(), nb.end());
        } else {
            for (Vertex w : g.neighbors(order.back()))
                if (g.has_edge(w, order[order.size() - 2])) candidates.push_back(w);
        }
        for (Vertex w : candidates) {
            if (used[static_cast<std::size_t>(w)] || !fits(w)) continue;
            used[static_cast<std::size_t>(w)] = 1;
            order.push_back(w);
            if (self(self)) return true;
            order.pop_back();
            used[static_cast<std::size_t>(w)] = 0;
        }
        return false;
    };

    order.push_back(0);
    used[0] = 1;
    if (!extend(extend)) return std::nullopt;
    for (int i = 0; i < n; ++i) {
        auto at = [&](int k) { return order[static_cast<std::size_t>(k % n)]; };
        ensure(g.has_edge(at(i), at(i + 1)) && g.has_edge(at(i), at(i + 2)), "squared-cycle order is an embedding");
    }
    return order;
}

Certificate theorem3_dichotomy(const Graph& g, Theorem3Options options) {
    precondition("thm3", is_regular(g, 4), "graph must be 4-regular");
    precondition("thm3", is_connected(g), "graph must be connected");
    Vertex x = 0;
    while (x < g.order() && neighborhood_is_two_k2(g, x)) ++x;
    precondition("thm3", x < g.order(),
                 "some vertex neighborhood must not induce 2K2, but every neighborhood induces 2K2 (e.g. " +
                     describe_neighborhood(g, 0) + ")");
    if (auto order = squared_cycle_order(g)) return SquaredCycleIso{std::move(*order)};
    precondition("thm3", g.order() >= options.min_order,
                 "n >= " + std::to_string(options.min_order) + " (got n = " + std::to_string(g.order()) + ")");

    const CutsetClaims claims{4, std::nullopt, Rational{1}, true};
    std::optional<CutsetReport> found;
    for (int k = 1; k <= 4 && !found; ++k) {
        for_each_subset(g.order(), k, [&](const std::vector<Vertex>& pick) {
            int edges = 0;
            for (std::size_t a = 0; a < pick.size(); ++a)
                for (std::size_t b = a + 1; b < pick.size(); ++b) edges += g.has_edge(pick[a], pick[b]);
            if (2 * edges >= k) return false;
            auto report = induced_stats(g, VertexSet(g.order(), pick));
            if (!report.separates() || report.minimal != Minimality::Yes) return false;
            found = std::move(report);
            return true;
        });
    }
    precondition("thm3", found.has_value(),
                 "no good cutset found and G is not a squared cycle; n = " + std::to_string(g.order()) +
                     " is below the order from which the dichotomy holds");
    ensure(found->avg_degree() < Rational{1}, "thm3 cutset has average degree < 1");
    return GoodCutset{std::move(*found), claims};
}

Certificate theorem4_independent_cutset(const Graph& g) {
    precondition("thm4", is_regular(g, 4), "graph must be 4-regular");
    const int kappa = oracle::vertex_connectivity(g);
    precondition("thm4", kappa <= 3, "connectivity <= 3 (got " + std::to_string(kappa) + ")");

    auto certify = [&](const VertexSet& s) -> Certificate {
        auto report = induced_stats(g, s);
        ensure(report.separates() && report.edges_in_s == 0 && s.size() <= 3, "thm4 result is an independent cutset");
        return IndependentCutset{std::move(report), 3};
    };

    if (kappa == 0) return certify(VertexSet(g.order()));
    if (kappa == 1) {
        for (Vertex v = 0; v < g.order(); ++v) {
            VertexSet s(g.order(), {v});
            if (is_cutset(g, s)) return certify(s);
        }
        ensure(false, "a graph of connectivity 1 has a cut vertex");
    }

    // Cutset of order kappa whose smallest component is as small as possible.
    std::optional<VertexSet> best;
    std::vector<VertexSet> best_parts;
    std::size_t best_small = SIZE_MAX;
    for_each_subset(g.order(), kappa, [&](const std::vector<Vertex>& pick) {
        VertexSet s(g.order(), pick);
        auto parts = components(g, s);
        if (parts.size() < 2) return false;
        std::size_t small = SIZE_MAX;
        for (const auto& p : parts) small = std::min(small, p.size());
        if (small < best_small) {
            best_small = small;
            best = s;
            best_parts = std::move(parts);
        }
        return false;
    });
    ensure(best.has_value(), "a cutset of order kappa exists");
    const VertexSet& s = *best;
    if (edges_within(g, s) == 0) return certify(s);

    ensure(edges_within(g, s) == 1, "the chosen cutset spans exactly one edge");
    ensure(best_parts.size() == 2, "the chosen cutset leaves exactly two components");
    const auto& small_part = best_parts[0].size() == best_small ? best_parts[0] : best_parts[1];
    const auto& other = &small_part == &best_parts[0] ? best_parts[1] : best_parts[0];

    Vertex u = -1, v = -1;
    for (Vertex a : s)
        for (Vertex b : s)
            if (a < b && g.has_edge(a, b)) u = a, v = b;

    auto matching = oracle::bipartite_matching(s, other, g);
    ensure(static_cast<int>(matching.size()) == kappa, "matching between S and the far component saturates S");
    auto partner = [&](Vertex a) {
        for (auto [l, r] : matching)
            if (l == a) return r;
        return -1;
    };
    const Vertex u2 = partner(u), v2 = partner(v);
    VertexSet swapped;
    if (degree_into(g, s, u2) == 1)
        swapped = s.without(u).with(u2);
    else if (degree_into(g, s, v2) == 1)
        swapped = s.without(v).with(v2);
    else
        ensure(false, "one matched partner of the inner edge has a single neighbor in S");
    return certify(swapped);
}

int theorem5_constant(int delta, int r) {
    precondition("thm5", r >= 2, "r >= 2 (got " + std::to_string(r) + ")");
    return 3 + static_cast<int>(floor_div(2 * (static_cast<std::int64_t>(delta) - 3 * r + 2),
                                          static_cast<std::int64_t>(r) * (r - 1)));
}

namespace {

void check_thm5_state(const Graph& g, const Thm5State& st) {
    const int i = st.i, c = st.c_const;
    ensure(static_cast<int>(st.s.size()) <= st.delta + (c - 3) * (i - 1), "|S_i| <= delta + (c-3)(i-1)");
    ensure(static_cast<int>(st.c.size()) == i, "|C_i| = i");
    ensure(2 * static_cast<int>(st.t.size()) >= 2 * st.delta - (c - 3) * (i * i - i) - 4 * (i - 1),
           "|T_i| >= delta - (c-3)(i²/2 - i/2) - 2(i-1)");
    for (Vertex v : st.s) ensure(degree_into(g, st.c, v) >= 1, "every vertex of S_i has a neighbor in C_i");
    for (Vertex t : st.t) {
        ensure(st.s.contains(t), "T_i is a subset of S_i");
        for (Vertex x : st.c) ensure(g.has_edge(x, t), "C_i x T_i is complete bipartite");
    }
    for (Vertex x : st.c)
        for (Vertex w : g.neighbors(x)) ensure(st.c.contains(w) || st.s.contains(w), "C_i is a component of G - S_i");
    ensure(static_cast<int>(st.s.size() + st.c.size()) < g.order(), "S_i ∪ C_i misses some vertex");
}

}  // namespace

Theorem5Result theorem5_run(const Graph& g, int delta, int r) {
    const int c = theorem5_constant(delta, r);
    precondition("thm5", c > 3, "c = 3 + floor(2(delta-3r+2)/(r(r-1))) > 3 (got c = " + std::to_string(c) + ")");
    precondition("thm5", g.order() >= 1 && g.max_degree() == delta,
                 "maximum degree must equal delta = " + std::to_string(delta) + " (got " +
                     std::to_string(g.max_degree()) + ")");
    const int min_order = delta + (c - 3) * (r - 1) + r;
    precondition("thm5", g.order() > min_order,
                 "n > delta + (c-3)(r-1) + r = " + std::to_string(min_order) + " (got n = " +
                     std::to_string(g.order()) + ")");

    Theorem5Result result;
    const Vertex first = max_degree_vertex(g);
    Thm5State st{neighborhood(g, first), VertexSet(g.order(), {first}), neighborhood(g, first), 1, delta, r, c};
    check_thm5_state(g, st);
    result.trace.push_back(st);

    const CutsetClaims claims{static_cast<std::size_t>(delta + (c - 3) * (r - 2)), delta - c, std::nullopt, false};
    for (; st.i < r; ) {
        if (max_degree_within(g, st.s) <= delta - c) {
            auto report = induced_stats(g, st.s);
            ensure(report.separates(), "S_i is a cutset");
            ensure(report.cutset.size() <= claims.max_order, "|S_i| within the good-cutset bound");
            result.certificate = GoodCutset{std::move(report), claims};
            return result;
        }
        Vertex u = -1;
        for (Vertex v : st.s)
            if (degree_into(g, st.s, v) >= delta - c + 1) {
                u = v;
                break;
            }
        std::vector<Vertex> fresh;
        for (Vertex w : g.neighbors(u))
            if (!st.s.contains(w) && !st.c.contains(w)) fresh.push_back(w);
        ensure(static_cast<int>(fresh.size()) <= c - 2, "N_i has at most c - 2 vertices");

        VertexSet next_s = st.s.without(u);
        for (Vertex w : fresh) next_s = next_s.with(w);
        std::vector<Vertex> next_t;
        for (Vertex t : st.t)
            if (g.has_edge(u, t)) next_t.push_back(t);
        st.s = std::move(next_s);
        st.c = st.c.with(u);
        st.t = VertexSet(g.order(), std::move(next_t));
        ++st.i;
        check_thm5_state(g, st);
        result.trace.push_back(st);
    }

    ensure(static_cast<int>(st.t.size()) >= r, "|T_r| >= r");
    std::vector<Vertex> side_b(st.t.begin(), st.t.begin() + r);
    result.certificate = KrrWitness{r, st.c, VertexSet(g.order(), std::move(side_b))};
    return result;
}

Certificate theorem5_certify(const Graph& g, int delta, int r) { return theorem5_run(g, delta, r).certificate; }

bool prop1_is_icosahedron(const Graph& g) {
    if (g.order() == 0 || !is_connected(g)) return false;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (g.degree(v) != 5) return false;
        auto nb = neighborhood(g, v);
        for (Vertex w : nb)
            if (degree_into(g, nb, w) != 2) return false;
    }
    ensure(g.order() == 12 && g.size() == 30, "a connected graph with all neighborhoods C5 is the icosahedron");
    return true;
}

bool prop2_edge_gate(const Graph& g) {
    const std::int64_t d = g.max_degree();
    const std::int64_t q = d * d + 1;
    const auto n = static_cast<std::int64_t>(g.order());
    const auto m = static_cast<std::int64_t>(g.size());
    return m * q <= (2 * q + 1) * n - 4 * q;
}

CutsetReport prop2_cutset(const Graph& g, Prop2Options options) {
    precondition("prop2", g.order() >= 3, "n >= 3 (got n = " + std::to_string(g.order()) + ")");
    precondition("prop2", is_connected(g), "graph must be connected");
    precondition("prop2", prop2_edge_gate(g),
                 "m <= (2 + 1/(Δ²+1)) n - 4 (got m = " + std::to_string(g.size()) + ", n = " +
                     std::to_string(g.order()) + ", Δ = " + std::to_string(g.max_degree()) + ")");

    const int n = g.order();
    const int d = g.max_degree();

    // Greedy independent set of G²: each pick blocks its closed 2-ball.
    std::vector<Vertex> centers;
    std::vector<char> blocked(static_cast<std::size_t>(n), 0);
    for (Vertex v = 0; v < n; ++v) {
        if (blocked[static_cast<std::size_t>(v)]) continue;
        centers.push_back(v);
        blocked[static_cast<std::size_t>(v)] = 1;
        for (Vertex w : g.neighbors(v)) {
            blocked[static_cast<std::size_t>(w)] = 1;
            for (Vertex x : g.neighbors(w)) blocked[static_cast<std::size_t>(x)] = 1;
        }
    }
    ensure(static_cast<long>(centers.size()) * (d * d + 1) >= n, "alpha >= n / (Δ²+1)");

    for (Vertex u : centers) {
        auto nb = neighborhood(g, u);
        if (max_degree_within(g, nb) > 1) continue;
        auto report = induced_stats(g, nb);
        // N(u) = V - u happens only for a universal u; then G - u has
        // maximum degree <= 1 on >= 2 vertices and {u} separates it.
        if (!report.separates()) report = induced_stats(g, VertexSet(n, {u}));
        ensure(report.separates() && report.max_degree_in_s <= 1, "sparse neighborhood gives the cutset");
        return report;
    }

    // Contract u_i v_i where u_i, v_i share at least two neighbors.
    std::vector<int> image(static_cast<std::size_t>(n), -1);
    std::vector<std::vector<Vertex>> preimage;
    std::vector<Vertex> partner(static_cast<std::size_t>(n), -1);
    for (Vertex u : centers) {
        Vertex chosen = -1;
        for (Vertex w : g.neighbors(u)) {
            int common = 0;
            for (Vertex x : g.neighbors(w)) common += g.has_edge(u, x);
            if (common >= 2) {
                chosen = w;
                break;
            }
        }
        ensure(chosen >= 0, "a neighbor of u_i shares two neighbors with it");
        partner[static_cast<std::size_t>(u)] = chosen;
        partner[static_cast<std::size_t>(chosen)] = u;
    }
    for (Vertex v = 0; v < n; ++v) {
        if (image[static_cast<std::size_t>(v)] >= 0) continue;
        image[static_cast<std::size_t>(v)] = static_cast<int>(preimage.size());
        preimage.push_back({v});
        if (Vertex p = partner[static_cast<std::size_t>(v)]; p >= 0) {
            image[static_cast<std::size_t>(p)] = image[static_cast<std::size_t>(v)];
            preimage.back().push_back(p);
        }
    }
    std::set<Edge> contracted_edges;
    for (auto [a, b] : g.edges()) {
        int x = image[static_cast<std::size_t>(a)], y = image[static_cast<std::size_t>(b)];
        if (x != y) contracted_edges.emplace(std::min(x, y), std::max(x, y));
    }
    const int n2 = static_cast<int>(preimage.size());
    Graph contracted(n2, std::vector<Edge>(contracted_edges.begin(), contracted_edges.end()));
    ensure(static_cast<long>(contracted.size()) <= 2L * n2 - 4, "contracted graph has m' <= 2n' - 4");

    if (n2 > options.contracted_cap)
        fail(ErrorKind::BudgetExhausted, "prop2: contracted graph has " + std::to_string(n2) +
                                             " vertices, above the independent-cutset search cap of " +
                                             std::to_string(options.contracted_cap));
    oracle::OracleBudget budget;
    budget.max_n = options.contracted_cap;
    auto found = oracle::find_independent_cutset(contracted, budget);
    if (found.status == oracle::Status::BudgetExhausted)
        fail(ErrorKind::BudgetExhausted, "prop2: independent-cutset search exceeded its budget");
    ensure(found.status == oracle::Status::Found, "a graph with m <= 2n - 4 has an independent cutset");

    std::vector<Vertex> expanded;
    for (Vertex x : *found.value)
        for (Vertex v : preimage[static_cast<std::size_t>(x)]) expanded.push_back(v);
    auto report = induced_stats(g, VertexSet(n, std::move(expanded)));
    ensure(report.separates() && report.max_degree_in_s <= 1, "expanded cutset has Δ_G(S) <= 1");
    return report;
}

CutsetReport degenerate_sparse_cutset(const Graph& g, Vertex u) {
    precondition("degenerate", u >= 0 && u < g.order(), "u must be a vertex of G");
    precondition("degenerate", is_connected(g), "graph must be connected");
    const int d = g.max_degree();
    precondition("degenerate", g.order() > d * d + 1,
                 "n > Δ²+1 = " + std::to_string(d * d + 1) + " (got n = " + std::to_string(g.order()) + ")");

    std::vector<char> blocked(static_cast<std::size_t>(g.order()), 0);
    blocked[static_cast<std::size_t>(u)] = 1;
    for (Vertex w : g.neighbors(u)) {
        blocked[static_cast<std::size_t>(w)] = 1;
        for (Vertex x : g.neighbors(w)) blocked[static_cast<std::size_t>(x)] = 1;
    }
    const auto available = std::count(blocked.begin(), blocked.end(), 0);

    auto members = neighborhood(g, u).members();
    std::size_t picked = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (blocked[static_cast<std::size_t>(v)]) continue;
        members.push_back(v);
        ++picked;
        blocked[static_cast<std::size_t>(v)] = 1;
        for (Vertex w : g.neighbors(v)) blocked[static_cast<std::size_t>(w)] = 1;
    }
    ensure(static_cast<long>(picked) * (d + 1) >= available, "|I| >= (n - Δ² - 1) / (Δ + 1)");

    auto report = induced_stats(g, VertexSet(g.order(), std::move(members)));
    ensure(report.separates(), "N(u) ∪ I is a cutset");
    return report;
}

}  // namespace sparsecut::cutsets
