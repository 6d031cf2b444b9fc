#include "sparsecut/oracles.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <queue>
#include <unordered_set>

#include "sparsecut/error.hpp"

namespace sparsecut::oracle {

namespace {

using Mask = std::uint64_t;

Mask bit(Vertex v) { return Mask{1} << v; }

std::vector<Vertex> members_of(Mask m) {
    std::vector<Vertex> out;
    while (m) {
        out.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    return out;
}

class Deadline {
public:
    explicit Deadline(double seconds) : limit_(seconds), start_(std::chrono::steady_clock::now()) {}

    bool expired() {
        if (limit_ <= 0.0 || ++calls_ % 1024 != 0) return false;
        std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start_;
        return elapsed.count() > limit_;
    }

private:
    double limit_;
    std::chrono::steady_clock::time_point start_;
    std::uint64_t calls_ = 0;
};

// Adjacency as bitmasks; only for n <= 64.
struct MaskGraph {
    int n = 0;
    std::vector<Mask> adj;
    Mask all = 0;

    explicit MaskGraph(const Graph& g) : n(g.order()), adj(static_cast<std::size_t>(g.order()), 0) {
        for (auto [u, v] : g.edges()) {
            adj[static_cast<std::size_t>(u)] |= bit(v);
            adj[static_cast<std::size_t>(v)] |= bit(u);
        }
        all = n == 64 ? ~Mask{0} : (bit(n) - 1);
    }

    Mask nb(Vertex v) const { return adj[static_cast<std::size_t>(v)]; }

    // Vertices reachable from the lowest vertex of `within`.
    Mask reach(Mask within) const {
        Mask seen = within & (~within + 1);
        Mask frontier = seen;
        while (frontier) {
            Mask next = 0;
            for (Mask f = frontier; f; f &= f - 1) next |= nb(std::countr_zero(f));
            next &= within & ~seen;
            seen |= next;
            frontier = next;
        }
        return seen;
    }

    bool disconnected_without(Mask removed) const {
        Mask rest = all & ~removed;
        return rest != 0 && reach(rest) != rest;
    }

    int inner_max_degree(Mask s) const {
        int best = 0;
        for (Mask f = s; f; f &= f - 1) best = std::max(best, std::popcount(nb(std::countr_zero(f)) & s));
        return best;
    }

    int inner_edges(Mask s) const {
        int twice = 0;
        for (Mask f = s; f; f &= f - 1) twice += std::popcount(nb(std::countr_zero(f)) & s);
        return twice / 2;
    }
};

int effective_cap(const OracleBudget& budget) { return std::min(budget.max_n, 64); }

// Visits k-subsets of `pool` in lexicographic order; the callback returns
// true to stop. `prune(chosen, v)` rejects extending chosen by v.
template <class Accept, class Prune>
bool walk_subsets(int k, Mask pool, Deadline& clock, bool& expired, Accept&& accept,
                  Prune&& prune) {
    std::function<bool(Mask, int, Mask)> rec = [&](Mask chosen, int left, Mask cand) -> bool {
        if (clock.expired()) {
            expired = true;
            return true;
        }
        if (left == 0) return accept(chosen);
        if (std::popcount(cand) < left) return false;
        for (Mask f = cand; f; f &= f - 1) {
            Vertex v = std::countr_zero(f);
            Mask later = f & ~bit(v);
            if (std::popcount(later) + 1 < left) break;
            if (prune(chosen, v)) continue;
            if (rec(chosen | bit(v), left - 1, later)) return true;
        }
        return false;
    };
    return rec(0, k, pool);
}

VertexSet to_set(int n, Mask m) { return VertexSet(n, members_of(m)); }

bool complete(const Graph& g) {
    const auto n = static_cast<std::size_t>(g.order());
    return g.size() == n * (n - (n > 0 ? 1 : 0)) / 2;
}

// Union-find component count of G - S.
int dsu_components(const Graph& g, const VertexSet& s) {
    const int n = g.order();
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    std::vector<char> removed(static_cast<std::size_t>(n), 0);
    for (Vertex v : s) removed[static_cast<std::size_t>(v)] = 1;
    int count = n - static_cast<int>(s.size());
    for (auto [u, v] : g.edges()) {
        if (removed[static_cast<std::size_t>(u)] || removed[static_cast<std::size_t>(v)]) continue;
        int a = find(u), b = find(v);
        if (a != b) {
            parent[static_cast<std::size_t>(a)] = b;
            --count;
        }
    }
    return count;
}

}  // namespace

std::string to_string(Status s) {
    switch (s) {
        case Status::Found: return "found";
        case Status::None: return "none";
        case Status::BudgetExhausted: return "budget_exhausted";
    }
    return "none";
}

OracleBudget budget_from_env() {
    OracleBudget b;
    if (const char* v = std::getenv("SPARSECUT_ORACLE_MAX_N")) b.max_n = std::atoi(v);
    if (const char* v = std::getenv("SPARSECUT_ORACLE_MAX_SUBSET")) b.max_subset_size = std::atoi(v);
    if (const char* v = std::getenv("SPARSECUT_ORACLE_TIME")) b.time_hint = std::atof(v);
    require(b.max_n >= 1 && b.max_subset_size >= 0, ErrorKind::InvalidInput, "oracle caps must be positive");
    return b;
}

bool separates(const Graph& g, const VertexSet& s) { return dsu_components(g, s) >= 2; }

Outcome<MinCutsets> enumerate_min_cutsets(const Graph& g, const OracleBudget& budget) {
    const int n = g.order();
    if (n > effective_cap(budget)) return Outcome<MinCutsets>::exhausted();
    if (complete(g)) return Outcome<MinCutsets>::found({std::nullopt, {}});
    MaskGraph mg(g);
    if (mg.disconnected_without(0)) return Outcome<MinCutsets>::found({0, {VertexSet(n)}});

    Deadline clock(budget.time_hint);
    const int top = std::min(budget.max_subset_size, n - 2);
    for (int k = 1; k <= top; ++k) {
        std::vector<VertexSet> found;
        bool expired = false;
        walk_subsets(
            k, mg.all, clock, expired,
            [&](Mask s) {
                if (mg.disconnected_without(s)) found.push_back(to_set(n, s));
                return false;
            },
            [](Mask, Vertex) { return false; });
        if (expired) return Outcome<MinCutsets>::exhausted();
        if (!found.empty()) return Outcome<MinCutsets>::found({k, std::move(found)});
    }
    return Outcome<MinCutsets>::exhausted();
}

Outcome<std::vector<VertexSet>> enumerate_minimal_cutsets(const Graph& g, const OracleBudget& budget) {
    using Result = Outcome<std::vector<VertexSet>>;
    const int n = g.order();
    if (n > effective_cap(budget)) return Result::exhausted();
    MaskGraph mg(g);
    Deadline clock(budget.time_hint);

    std::unordered_set<Mask> cutsets;
    std::vector<VertexSet> minimal;
    if (mg.disconnected_without(0)) {
        cutsets.insert(0);
        minimal.emplace_back(n);
    }
    const int top = std::min(budget.max_subset_size, n - 2);
    for (int k = 1; k <= top; ++k) {
        bool expired = false;
        walk_subsets(
            k, mg.all, clock, expired,
            [&](Mask s) {
                if (!mg.disconnected_without(s)) return false;
                cutsets.insert(s);
                bool is_min = !cutsets.contains(0);
                for (Mask sub = (s - 1) & s; is_min && sub; sub = (sub - 1) & s) is_min = !cutsets.contains(sub);
                if (is_min) minimal.push_back(to_set(n, s));
                return false;
            },
            [](Mask, Vertex) { return false; });
        if (expired) return Result::exhausted();
    }
    return Result::found(std::move(minimal));
}

int vertex_connectivity(const Graph& g) {
    const int n = g.order();
    if (n <= 1) return 0;
    if (complete(g)) return n - 1;

    // Nodes 2v (in) and 2v+1 (out); unit capacity on in->out.
    struct Arc {
        int to, cap, rev;
    };
    const int big = n;
    int best = n - 1;
    for (Vertex s = 0; s < n; ++s)
        for (Vertex t = s + 1; t < n; ++t) {
            if (g.has_edge(s, t)) continue;
            std::vector<std::vector<Arc>> net(static_cast<std::size_t>(2 * n));
            auto add = [&](int a, int b, int cap) {
                net[static_cast<std::size_t>(a)].push_back({b, cap, static_cast<int>(net[static_cast<std::size_t>(b)].size())});
                net[static_cast<std::size_t>(b)].push_back({a, 0, static_cast<int>(net[static_cast<std::size_t>(a)].size()) - 1});
            };
            for (Vertex v = 0; v < n; ++v) add(2 * v, 2 * v + 1, (v == s || v == t) ? big : 1);
            for (auto [u, v] : g.edges()) {
                add(2 * u + 1, 2 * v, big);
                add(2 * v + 1, 2 * u, big);
            }
            const int source = 2 * s + 1, sink = 2 * t;
            int flow = 0;
            while (flow < best) {
                std::vector<std::pair<int, int>> via(static_cast<std::size_t>(2 * n), {-1, -1});
                std::queue<int> q;
                q.push(source);
                via[static_cast<std::size_t>(source)] = {source, -1};
                while (!q.empty() && via[static_cast<std::size_t>(sink)].first < 0) {
                    int x = q.front();
                    q.pop();
                    for (std::size_t i = 0; i < net[static_cast<std::size_t>(x)].size(); ++i) {
                        const Arc& a = net[static_cast<std::size_t>(x)][i];
                        if (a.cap > 0 && via[static_cast<std::size_t>(a.to)].first < 0) {
                            via[static_cast<std::size_t>(a.to)] = {x, static_cast<int>(i)};
                            q.push(a.to);
                        }
                    }
                }
                if (via[static_cast<std::size_t>(sink)].first < 0) break;
                for (int y = sink; y != source;) {
                    auto [x, i] = via[static_cast<std::size_t>(y)];
                    Arc& a = net[static_cast<std::size_t>(x)][static_cast<std::size_t>(i)];
                    a.cap -= 1;
                    net[static_cast<std::size_t>(y)][static_cast<std::size_t>(a.rev)].cap += 1;
                    y = x;
                }
                ++flow;
            }
            best = std::min(best, flow);
            if (best == 0) return 0;
        }
    return best;
}

Outcome<VertexSet> find_independent_cutset(const Graph& g, const OracleBudget& budget) {
    const int n = g.order();
    if (n > effective_cap(budget)) return Outcome<VertexSet>::exhausted();
    MaskGraph mg(g);
    if (n >= 2 && mg.disconnected_without(0)) return Outcome<VertexSet>::found(VertexSet(n));

    Deadline clock(budget.time_hint);
    for (int k = 1; k <= n - 2; ++k) {
        bool expired = false, any = false;
        Mask hit = 0;
        bool stopped = walk_subsets(
            k, mg.all, clock, expired,
            [&](Mask s) {
                any = true;
                if (mg.disconnected_without(s)) {
                    hit = s;
                    return true;
                }
                return false;
            },
            [&](Mask chosen, Vertex v) { return (mg.nb(v) & chosen) != 0; });
        if (expired) return Outcome<VertexSet>::exhausted();
        if (stopped) return Outcome<VertexSet>::found(to_set(n, hit));
        if (!any) break;  // no independent set of this size, so none larger
    }
    return Outcome<VertexSet>::none();
}

Outcome<VertexSet> find_constrained_cutset(const Graph& g, int max_delta, std::optional<Rational> avg_below,
                                           const OracleBudget& budget) {
    const int n = g.order();
    if (n > effective_cap(budget)) return Outcome<VertexSet>::exhausted();
    MaskGraph mg(g);
    auto avg_ok = [&](Mask s) {
        if (!avg_below) return true;
        const std::int64_t k = std::popcount(s);
        if (k == 0) return Rational{0} < *avg_below;
        return Rational{2 * static_cast<std::int64_t>(mg.inner_edges(s)), k} < *avg_below;
    };
    if (max_delta >= 0 && n >= 2 && mg.disconnected_without(0) && avg_ok(0))
        return Outcome<VertexSet>::found(VertexSet(n));
    if (max_delta < 0) return Outcome<VertexSet>::none();

    Deadline clock(budget.time_hint);
    const int top = std::min(budget.max_subset_size, n - 2);
    for (int k = 1; k <= top; ++k) {
        bool expired = false;
        Mask hit = 0;
        bool stopped = walk_subsets(
            k, mg.all, clock, expired,
            [&](Mask s) {
                if (avg_ok(s) && mg.disconnected_without(s)) {
                    hit = s;
                    return true;
                }
                return false;
            },
            [&](Mask chosen, Vertex v) {
                Mask inner = mg.nb(v) & chosen;
                if (std::popcount(inner) > max_delta) return true;
                for (Mask f = inner; f; f &= f - 1)
                    if (std::popcount(mg.nb(std::countr_zero(f)) & chosen) + 1 > max_delta) return true;
                return false;
            });
        if (expired) return Outcome<VertexSet>::exhausted();
        if (stopped) return Outcome<VertexSet>::found(to_set(n, hit));
    }
    return top >= n - 2 ? Outcome<VertexSet>::none() : Outcome<VertexSet>::exhausted();
}

std::optional<std::pair<VertexSet, VertexSet>> find_krr(const Graph& g, int r) {
    require(r >= 1, ErrorKind::InvalidInput, "find_krr needs r >= 1");
    const int n = g.order();
    const std::size_t words = (static_cast<std::size_t>(n) + 63) / 64;
    using Bits = std::vector<Mask>;
    std::vector<Bits> nb(static_cast<std::size_t>(n), Bits(words, 0));
    for (auto [u, v] : g.edges()) {
        nb[static_cast<std::size_t>(u)][static_cast<std::size_t>(v) / 64] |= bit(v % 64);
        nb[static_cast<std::size_t>(v)][static_cast<std::size_t>(u) / 64] |= bit(u % 64);
    }
    auto count = [](const Bits& b) {
        int c = 0;
        for (Mask w : b) c += std::popcount(w);
        return c;
    };

    std::vector<Vertex> side_a;
    std::optional<std::pair<VertexSet, VertexSet>> result;
    std::function<bool(Vertex, const Bits&)> rec = [&](Vertex from, const Bits& common) -> bool {
        if (static_cast<int>(side_a.size()) == r) {
            std::vector<Vertex> side_b;
            for (std::size_t w = 0; w < words && static_cast<int>(side_b.size()) < r; ++w)
                for (Mask m = common[w]; m && static_cast<int>(side_b.size()) < r; m &= m - 1)
                    side_b.push_back(static_cast<Vertex>(w * 64) + std::countr_zero(m));
            result.emplace(VertexSet(n, side_a), VertexSet(n, std::move(side_b)));
            return true;
        }
        for (Vertex v = from; v < n; ++v) {
            Bits next(words);
            for (std::size_t w = 0; w < words; ++w) next[w] = common[w] & nb[static_cast<std::size_t>(v)][w];
            if (count(next) < r) continue;
            side_a.push_back(v);
            if (rec(v + 1, next)) return true;
            side_a.pop_back();
        }
        return false;
    };
    Bits everything(words, ~Mask{0});
    rec(0, everything);
    return result;
}

bool recognize_pattern(const Graph& g, Pattern pattern) {
    std::vector<int> degs;
    for (Vertex v = 0; v < g.order(); ++v) degs.push_back(g.degree(v));
    std::sort(degs.begin(), degs.end());
    auto connected = [&] { return g.order() == 0 || dsu_components(g, VertexSet(g.order())) == 1; };
    switch (pattern) {
        case Pattern::C5: return g.order() == 5 && g.size() == 5 && degs == std::vector<int>(5, 2) && connected();
        case Pattern::TwoK2: return g.order() == 4 && g.size() == 2 && degs == std::vector<int>(4, 1);
        case Pattern::P4: return g.order() == 4 && g.size() == 3 && degs == std::vector<int>{1, 1, 2, 2} && connected();
    }
    return false;
}

namespace {

bool is_squared_cycle_mapping(const Graph& g, const std::vector<Vertex>& p) {
    const int n = g.order();
    if (n < 5 || static_cast<int>(p.size()) != n || g.size() != static_cast<std::size_t>(2 * n)) return false;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (Vertex v : p) {
        if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) return false;
        seen[static_cast<std::size_t>(v)] = 1;
    }
    for (int i = 0; i < n; ++i) {
        Vertex a = p[static_cast<std::size_t>(i)];
        if (!g.has_edge(a, p[static_cast<std::size_t>((i + 1) % n)]) || !g.has_edge(a, p[static_cast<std::size_t>((i + 2) % n)]))
            return false;
    }
    return true;
}

}  // namespace

std::optional<std::vector<Vertex>> recognize_squared_cycle(const Graph& g) {
    const int n = g.order();
    if (n < 5 || !is_regular(g, 4)) return std::nullopt;
    std::vector<Vertex> p;
    if (n == 5) {
        p = {0, 1, 2, 3, 4};
    } else if (n == 6) {
        // K6 minus a perfect matching: antipodal positions are the non-edges.
        auto non_neighbor = [&](Vertex v) {
            for (Vertex w = 0; w < n; ++w)
                if (w != v && !g.has_edge(v, w)) return w;
            return -1;
        };
        p.assign(6, -1);
        std::vector<char> used(6, 0);
        int pos = 0;
        for (Vertex v = 0; v < n && pos < 3; ++v) {
            if (used[static_cast<std::size_t>(v)]) continue;
            Vertex w = non_neighbor(v);
            if (w < 0) return std::nullopt;
            p[static_cast<std::size_t>(pos)] = v;
            p[static_cast<std::size_t>(pos + 3)] = w;
            used[static_cast<std::size_t>(v)] = used[static_cast<std::size_t>(w)] = 1;
            ++pos;
        }
    } else {
        std::vector<std::vector<Vertex>> interior(static_cast<std::size_t>(n));
        for (Vertex v = 0; v < n; ++v) {
            auto local = neighborhood_induced(g, v);
            if (!recognize_pattern(local.graph, Pattern::P4)) return std::nullopt;
            for (Vertex i = 0; i < 4; ++i)
                if (local.graph.degree(i) == 2) interior[static_cast<std::size_t>(v)].push_back(local.to_parent[static_cast<std::size_t>(i)]);
        }
        p.push_back(0);
        Vertex prev = 0, cur = interior[0][0];
        while (cur != 0 && static_cast<int>(p.size()) <= n) {
            p.push_back(cur);
            const auto& in = interior[static_cast<std::size_t>(cur)];
            Vertex next = in[0] == prev ? in[1] : in[0];
            prev = cur;
            cur = next;
        }
    }
    if (!is_squared_cycle_mapping(g, p)) return std::nullopt;
    return p;
}

Outcome<std::vector<Vertex>> find_induced_squared_path(const Graph& g, int k, const OracleBudget& budget) {
    using Result = Outcome<std::vector<Vertex>>;
    require(k >= 3, ErrorKind::InvalidInput, "find_induced_squared_path needs k >= 3");
    const int n = g.order();
    if (n > effective_cap(budget)) return Result::exhausted();
    if (k > n) return Result::none();
    MaskGraph mg(g);
    Deadline clock(budget.time_hint);
    bool expired = false;

    std::vector<Vertex> path;
    Mask used = 0;
    std::function<bool()> rec = [&]() -> bool {
        if (clock.expired()) {
            expired = true;
            return true;
        }
        const std::size_t len = path.size();
        if (static_cast<int>(len) == k) return true;
        Mask cand = mg.nb(path.back()) & ~used;
        if (len >= 2) cand &= mg.nb(path[len - 2]);
        // no edges back to anything before the last two
        Mask older = used & ~bit(path.back()) & ~(len >= 2 ? bit(path[len - 2]) : 0);
        for (Mask f = cand; f; f &= f - 1) {
            Vertex v = std::countr_zero(f);
            if (mg.nb(v) & older) continue;
            path.push_back(v);
            used |= bit(v);
            if (rec()) return true;
            used &= ~bit(v);
            path.pop_back();
        }
        return false;
    };
    for (Vertex s = 0; s < n; ++s) {
        path.assign(1, s);
        used = bit(s);
        if (rec()) break;
        path.clear();
    }
    if (expired) return Result::exhausted();
    if (static_cast<int>(path.size()) == k) return Result::found(path);
    return Result::none();
}

std::vector<Edge> bipartite_matching(const VertexSet& left, const VertexSet& right, const Graph& g) {
    for (Vertex v : left)
        require(!right.contains(v), ErrorKind::InvalidInput, "bipartite_matching needs disjoint sides");
    std::vector<Vertex> match_right(static_cast<std::size_t>(g.order()), -1);
    std::vector<char> visited;
    std::function<bool(Vertex)> augment = [&](Vertex l) -> bool {
        for (Vertex r : g.neighbors(l)) {
            if (!right.contains(r) || visited[static_cast<std::size_t>(r)]) continue;
            visited[static_cast<std::size_t>(r)] = 1;
            if (match_right[static_cast<std::size_t>(r)] < 0 || augment(match_right[static_cast<std::size_t>(r)])) {
                match_right[static_cast<std::size_t>(r)] = l;
                return true;
            }
        }
        return false;
    };
    for (Vertex l : left) {
        visited.assign(static_cast<std::size_t>(g.order()), 0);
        augment(l);
    }
    std::vector<Edge> out;
    for (Vertex l : left)
        for (Vertex r : right)
            if (match_right[static_cast<std::size_t>(r)] == l) out.emplace_back(l, r);
    return out;
}

std::optional<int> girth(const Graph& g) {
    const int n = g.order();
    std::optional<int> best;
    for (Vertex s = 0; s < n; ++s) {
        std::vector<int> dist(static_cast<std::size_t>(n), -1), from(static_cast<std::size_t>(n), -1);
        std::queue<Vertex> q;
        dist[static_cast<std::size_t>(s)] = 0;
        q.push(s);
        while (!q.empty()) {
            Vertex v = q.front();
            q.pop();
            for (Vertex w : g.neighbors(v)) {
                if (dist[static_cast<std::size_t>(w)] < 0) {
                    dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
                    from[static_cast<std::size_t>(w)] = v;
                    q.push(w);
                } else if (from[static_cast<std::size_t>(v)] != w) {
                    int len = dist[static_cast<std::size_t>(v)] + dist[static_cast<std::size_t>(w)] + 1;
                    if (!best || len < *best) best = len;
                }
            }
        }
    }
    return best;
}

namespace {

Verdict reject(std::string why) { return {false, std::move(why)}; }

// Recomputes the cutset statistics from G and compares them with the report.
Verdict check_cutset_report(const Graph& g, const CutsetReport& r) {
    const auto& s = r.cutset;
    if (s.parent_n() != g.order()) return reject("cutset refers to a graph of a different order");
    if (static_cast<int>(s.size()) >= g.order()) return reject("cutset covers every vertex");
    const int comps = dsu_components(g, s);
    if (comps < 2) return reject("G - S is connected");
    if (comps != r.component_count) return reject("component count does not match");
    int twice = 0, top = 0;
    for (Vertex v : s) {
        int d = 0;
        for (Vertex w : s) d += g.has_edge(v, w);
        twice += d;
        top = std::max(top, d);
    }
    if (top != r.max_degree_in_s) return reject("reported maximum inner degree is wrong");
    if (twice / 2 != r.edges_in_s) return reject("reported inner edge count is wrong");
    return {true, {}};
}

bool minimal_by_brute_force(const Graph& g, const VertexSet& s) {
    const auto k = s.size();
    if (k > 20) return false;
    for (std::uint32_t sub = 0; sub + 1 < (1u << k); ++sub) {
        std::vector<Vertex> part;
        for (std::size_t i = 0; i < k; ++i)
            if (sub & (1u << i)) part.push_back(s[i]);
        if (dsu_components(g, VertexSet(g.order(), std::move(part))) >= 2) return false;
    }
    return true;
}

struct VerifyVisitor {
    const Graph& g;

    Verdict operator()(const GoodCutset& c) const {
        if (auto v = check_cutset_report(g, c.report); !v.ok) return v;
        const auto& r = c.report;
        if (r.cutset.size() > c.claims.max_order) return reject("cutset is larger than claimed");
        if (c.claims.max_inner_degree && r.max_degree_in_s > *c.claims.max_inner_degree)
            return reject("inner maximum degree exceeds the claim");
        if (c.claims.avg_below) {
            const auto k = static_cast<std::int64_t>(r.cutset.size());
            Rational avg = k == 0 ? Rational{0} : Rational{2 * static_cast<std::int64_t>(r.edges_in_s), k};
            if (!(avg < *c.claims.avg_below)) return reject("average inner degree is not below the claim");
        }
        if (c.claims.minimal && !minimal_by_brute_force(g, r.cutset)) return reject("cutset is not minimal");
        return {true, {}};
    }

    Verdict operator()(const IndependentCutset& c) const {
        if (auto v = check_cutset_report(g, c.report); !v.ok) return v;
        if (c.report.edges_in_s != 0) return reject("cutset is not independent");
        if (c.report.cutset.size() > c.max_order) return reject("cutset is larger than claimed");
        return {true, {}};
    }

    Verdict operator()(const KrrWitness& w) const {
        if (w.r < 1) return reject("r must be positive");
        if (static_cast<int>(w.side_a.size()) != w.r || static_cast<int>(w.side_b.size()) != w.r)
            return reject("witness sides must both have r vertices");
        if (w.side_a.parent_n() != g.order() || w.side_b.parent_n() != g.order())
            return reject("witness refers to a graph of a different order");
        for (Vertex a : w.side_a) {
            if (w.side_b.contains(a)) return reject("witness sides intersect");
            for (Vertex b : w.side_b)
                if (!g.has_edge(a, b)) return reject("missing cross edge in K_{r,r} witness");
        }
        return {true, {}};
    }

    Verdict operator()(const SquaredCycleIso& iso) const {
        if (!is_squared_cycle_mapping(g, iso.mapping)) return reject("mapping is not an isomorphism onto C_n^2");
        return {true, {}};
    }

    Verdict operator()(const IsIcosahedron&) const {
        if (g.order() != 12 || g.size() != 30) return reject("the icosahedron has 12 vertices and 30 edges");
        if (dsu_components(g, VertexSet(12)) != 1) return reject("graph is disconnected");
        for (Vertex v = 0; v < 12; ++v)
            if (!recognize_pattern(neighborhood_induced(g, v).graph, Pattern::C5))
                return reject("a neighborhood does not induce C5");
        return {true, {}};
    }
};

}  // namespace

Verdict verify_certificate(const Graph& g, const Certificate& cert) { return std::visit(VerifyVisitor{g}, cert); }

}  // namespace sparsecut::oracle
