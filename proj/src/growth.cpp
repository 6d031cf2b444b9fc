// Grow-and-swap procedures: the generic cutset growth and its 5-regular
// refinement.

#include <algorithm>
#include <optional>

#include "internal.hpp"
#include "sparsecut/cutsets.hpp"

namespace sparsecut::cutsets {

namespace {

// Mutable (U, S) pair. U starts as a single vertex and S as its
// neighborhood; absorb() moves one vertex of S into U.
class Growth {
public:
    Growth(const Graph& g, Vertex start)
        : g_(g), in_s_(static_cast<std::size_t>(g.order()), 0), in_u_(static_cast<std::size_t>(g.order()), 0) {
        in_u_[idx(start)] = 1;
        for (Vertex w : g.neighbors(start)) in_s_[idx(w)] = 1;
        s_count_ = g.degree(start);
        m_ = g.degree(start);
    }

    bool in_s(Vertex v) const { return in_s_[idx(v)]; }
    bool in_u(Vertex v) const { return in_u_[idx(v)]; }
    bool in_r(Vertex v) const { return !in_s(v) && !in_u(v); }

    int s_degree(Vertex v) const { return count(v, in_s_); }
    int u_degree(Vertex v) const { return count(v, in_u_); }
    int r_degree(Vertex v) const { return g_.degree(v) - s_degree(v) - u_degree(v); }

    int n_i() const { return s_count_; }
    int m_i() const { return m_; }

    int s_max_degree() const {
        int best = 0;
        for (Vertex v = 0; v < g_.order(); ++v)
            if (in_s(v)) best = std::max(best, s_degree(v));
        return best;
    }

    bool s_two_regular() const {
        if (s_count_ == 0) return false;
        for (Vertex v = 0; v < g_.order(); ++v)
            if (in_s(v) && s_degree(v) != 2) return false;
        return true;
    }

    template <class Pred>
    std::optional<Vertex> first_in_s(Pred pred) const {
        for (Vertex v = 0; v < g_.order(); ++v)
            if (in_s(v) && pred(v)) return v;
        return std::nullopt;
    }

    bool remainder_nonempty() const {
        for (Vertex v = 0; v < g_.order(); ++v)
            if (in_r(v)) return true;
        return false;
    }

    /// Moves v from S to U and adds N(v) - (S ∪ U) to S. Returns the added vertices.
    std::vector<Vertex> absorb(Vertex v) {
        ensure(in_s(v), "absorbed vertex must lie in S");
        std::vector<Vertex> added;
        for (Vertex w : g_.neighbors(v))
            if (in_r(w)) added.push_back(w);
        m_ -= u_degree(v);
        in_s_[idx(v)] = 0;
        in_u_[idx(v)] = 1;
        for (Vertex w : added) in_s_[idx(w)] = 1;
        // vertices of R never touch U, so the only new S-U edges run to v
        m_ += s_degree(v);
        s_count_ += static_cast<int>(added.size()) - 1;
        return added;
    }

    VertexSet s_set() const { return collect(in_s_); }
    VertexSet u_set() const { return collect(in_u_); }

    GrowthState snapshot(int step) const {
        return {u_set(), s_set(), n_i(), m_i(), step, s_max_degree()};
    }

    // U spans a component of G - S, every S vertex sees U, m_i is exact.
    void check_invariants() const {
        int m = 0;
        for (Vertex v = 0; v < g_.order(); ++v) {
            if (in_s(v)) {
                ensure(u_degree(v) >= 1, "every vertex of S has a neighbor in U");
                m += u_degree(v);
            }
            if (in_u(v)) ensure(r_degree(v) == 0, "U has no neighbor outside S ∪ U");
        }
        ensure(m == m_, "m_i matches the recomputed S-U edge count");

        auto u = u_set();
        std::vector<char> seen(in_u_.size(), 0);
        std::vector<Vertex> stack{u[0]};
        seen[idx(u[0])] = 1;
        std::size_t reached = 1;
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (Vertex w : g_.neighbors(v))
                if (in_u(w) && !seen[idx(w)]) {
                    seen[idx(w)] = 1;
                    ++reached;
                    stack.push_back(w);
                }
        }
        ensure(reached == u.size(), "G[U] is connected");
    }

private:
    static std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

    int count(Vertex v, const std::vector<char>& flags) const {
        int d = 0;
        for (Vertex w : g_.neighbors(v)) d += flags[idx(w)];
        return d;
    }

    VertexSet collect(const std::vector<char>& flags) const {
        std::vector<Vertex> out;
        for (Vertex v = 0; v < g_.order(); ++v)
            if (flags[idx(v)]) out.push_back(v);
        return VertexSet(g_.order(), std::move(out));
    }

    const Graph& g_;
    std::vector<char> in_s_;
    std::vector<char> in_u_;
    int s_count_ = 0;
    int m_ = 0;
};

bool is_five_cycle_neighborhood(const Graph& g, Vertex v) {
    if (g.degree(v) != 5) return false;
    auto nb = neighborhood(g, v);
    for (Vertex w : nb)
        if (degree_into(g, nb, w) != 2) return false;
    return true;
}

}  // namespace

VertexSet GrowthState::remainder() const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < s.parent_n(); ++v)
        if (!s.contains(v) && !u.contains(v)) out.push_back(v);
    return VertexSet(s.parent_n(), std::move(out));
}

Theorem1Result theorem1_run(const Graph& g, int delta) {
    using detail::precondition;
    precondition("thm1", delta >= 3, "delta >= 3 (got " + std::to_string(delta) + ")");
    precondition("thm1", g.max_degree() <= delta,
                 "maximum degree " + std::to_string(g.max_degree()) + " exceeds delta = " + std::to_string(delta));
    precondition("thm1", g.order() >= 2 * delta + 4,
                 "n >= 2*delta+4 = " + std::to_string(2 * delta + 4) + " (got n = " + std::to_string(g.order()) + ")");
    precondition("thm1", is_connected(g), "graph must be connected");

    Theorem1Result result;
    const Vertex u = min_degree_vertex(g);
    if (g.degree(u) <= delta - 2) {
        result.direct = true;
        result.report = induced_stats(g, neighborhood(g, u));
        ensure(result.report.separates(), "N(u) of a minimum-degree vertex separates u");
        return result;
    }

    Growth growth(g, u);
    int step = 1;
    result.trace.push_back(growth.snapshot(step));
    while (growth.s_max_degree() >= delta - 2) {
        auto v = growth.first_in_s([&](Vertex x) { return growth.s_degree(x) >= delta - 2; });
        ensure(v.has_value(), "a vertex of S attains the maximum inner degree");
        const int prev_n = growth.n_i(), prev_m = growth.m_i();
        auto added = growth.absorb(*v);
        ensure(added.size() <= 1, "N(v) - (S ∪ U) has at most one vertex");
        ++step;
        ensure(step <= delta + 3, "growth terminates within delta + 3 steps");

        const int n = growth.n_i(), m = growth.m_i();
        const bool same_order = n == prev_n && m >= prev_m + (delta - 2);
        const bool shrunk = n == prev_n - 1 && m >= prev_m + (delta - 4);
        ensure(same_order != shrunk, "exactly one transition case holds");
        ensure(m - 2 * n >= prev_m - 2 * prev_n + (delta - 2), "m_i - 2 n_i grows by at least delta - 2");
        ensure(n <= g.degree(u), "|S_i| never exceeds the degree of u");
        growth.check_invariants();
        result.trace.push_back(growth.snapshot(step));
    }
    ensure(growth.remainder_nonempty(), "R_k = V - (S_k ∪ U_k) is nonempty");

    result.report = induced_stats(g, growth.s_set());
    ensure(result.report.separates(), "final S is a cutset");
    ensure(static_cast<int>(result.report.cutset.size()) <= delta, "|S| <= delta");
    ensure(result.report.max_degree_in_s <= delta - 3, "Δ_G(S) <= delta - 3");
    return result;
}

CutsetReport theorem1_cutset(const Graph& g, int delta) { return theorem1_run(g, delta).report; }

Certificate theorem2_cutset(const Graph& g, Theorem2Options options) {
    using detail::precondition;
    precondition("thm2", is_regular(g, 5), "graph must be 5-regular");
    precondition("thm2", options.allow_small || g.order() >= 14,
                 "n >= 14 (got n = " + std::to_string(g.order()) + ")");
    precondition("thm2", is_connected(g), "graph must be connected");

    if (prop1_is_icosahedron(g)) return IsIcosahedron{};

    const CutsetClaims claims{5, 2, Rational{2}, false};
    auto good = [&](const VertexSet& s) -> Certificate {
        auto report = induced_stats(g, s);
        ensure(report.separates(), "thm2 result is a cutset");
        ensure(report.cutset.size() <= 5 && report.max_degree_in_s <= 2 && report.avg_degree() < Rational{2},
               "thm2 result meets |S| <= 5, Δ <= 2, d̄ < 2");
        return GoodCutset{report, claims};
    };

    Vertex u = 0;
    while (u < g.order() && is_five_cycle_neighborhood(g, u)) ++u;
    ensure(u < g.order(), "some neighborhood is not a 5-cycle when G is not the icosahedron");

    auto start = neighborhood(g, u);
    if (max_degree_within(g, start) <= 2) return good(start);

    Growth growth(g, u);
    for (;;) {
        while (growth.s_max_degree() >= 3) {
            auto v = growth.first_in_s([&](Vertex x) { return growth.s_degree(x) >= 3; });
            const int prev_m = growth.m_i();
            auto added = growth.absorb(*v);
            ensure(added.size() <= 1, "N(v) - (S ∪ U) has at most one vertex");
            ensure(growth.m_i() > prev_m, "m_i strictly increases");
            ensure(growth.m_i() <= 25, "m_i <= 5 |S| <= 25");
            growth.check_invariants();
        }
        ensure(growth.remainder_nonempty(), "R = V - (S ∪ U) is nonempty");
        if (!growth.s_two_regular()) return good(growth.s_set());

        // G[S] is an induced cycle
        if (auto x = growth.first_in_s([&](Vertex v) { return growth.r_degree(v) == 0; }))
            return good(growth.s_set().without(*x));

        auto v = growth.first_in_s([&](Vertex x) { return growth.u_degree(x) == 2; });
        ensure(v.has_value(), "some cycle vertex has exactly two neighbors in U");
        const int prev_m = growth.m_i();
        auto added = growth.absorb(*v);
        ensure(added.size() == 1, "the swapped vertex has exactly one neighbor in R");
        ensure(growth.m_i() > prev_m, "m_i strictly increases");
        ensure(growth.m_i() <= 25, "m_i <= 5 |S| <= 25");
        growth.check_invariants();
    }
}

}  // namespace sparsecut::cutsets
