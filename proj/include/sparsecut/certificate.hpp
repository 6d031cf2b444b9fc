#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "sparsecut/graph.hpp"
#include "sparsecut/rational.hpp"

namespace sparsecut {

// Bounds a GoodCutset promises; the verifier checks each one that is set.
struct CutsetClaims {
    std::size_t max_order = 0;
    std::optional<int> max_inner_degree;  // Δ_G(S) <= this
    std::optional<Rational> avg_below;    // d̄_G(S) < this, strictly
    bool minimal = false;

    friend bool operator==(const CutsetClaims&, const CutsetClaims&) = default;
};

struct GoodCutset {
    CutsetReport report;
    CutsetClaims claims;
    friend bool operator==(const GoodCutset&, const GoodCutset&) = default;
};

// Disjoint sides of size r with every cross pair adjacent (not necessarily induced).
struct KrrWitness {
    int r = 0;
    VertexSet side_a;
    VertexSet side_b;
    friend bool operator==(const KrrWitness&, const KrrWitness&) = default;
};

// mapping[i] is the vertex of G playing position i of C_n^2.
struct SquaredCycleIso {
    std::vector<Vertex> mapping;
    friend bool operator==(const SquaredCycleIso&, const SquaredCycleIso&) = default;
};

struct IndependentCutset {
    CutsetReport report;
    std::size_t max_order = 0;
    friend bool operator==(const IndependentCutset&, const IndependentCutset&) = default;
};

struct IsIcosahedron {
    friend bool operator==(const IsIcosahedron&, const IsIcosahedron&) = default;
};

using Certificate = std::variant<GoodCutset, KrrWitness, SquaredCycleIso, IndependentCutset, IsIcosahedron>;

inline std::string_view kind_name(const Certificate& c) {
    static constexpr std::string_view names[] = {"good_cutset", "krr_witness", "squared_cycle_iso",
                                                 "independent_cutset", "is_icosahedron"};
    return names[c.index()];
}

/// The cutset statistics carried by the certificate, if it is a cutset kind.
inline const CutsetReport* cutset_report(const Certificate& c) {
    if (auto* g = std::get_if<GoodCutset>(&c)) return &g->report;
    if (auto* i = std::get_if<IndependentCutset>(&c)) return &i->report;
    return nullptr;
}

}  // namespace sparsecut
