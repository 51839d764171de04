#pragma once

#include <algorithm>
#include <compare>
#include <string>
#include <vector>

#include "rgsd/analysis.hpp"

namespace rgsd {

/// Isomorphism-invariant profile of one vertex pair (q,r).
struct PairProfile {
    std::size_t minus_edges = 0;
    std::size_t plus_edges = 0;
    std::size_t related = 0;
    /// Sorted relation degrees of the minus edges and of the plus edges.
    std::vector<std::size_t> minus_degrees;
    std::vector<std::size_t> plus_degrees;

    auto operator<=>(const PairProfile&) const = default;
};

inline PairProfile pair_profile(const RGraph& g, VertexRef q, VertexRef r) {
    PairProfile p;
    auto minus = g.edges(Sign::minus, q, r);
    auto plus = g.edges(Sign::plus, q, r);
    p.minus_edges = minus.size();
    p.plus_edges = plus.size();
    for (auto f : minus) {
        auto deg = static_cast<std::size_t>(std::ranges::count_if(plus, [&](EdgeRef e) { return g.related(f, e); }));
        p.minus_degrees.push_back(deg);
        p.related += deg;
    }
    for (auto e : plus)
        p.plus_degrees.push_back(
            static_cast<std::size_t>(std::ranges::count_if(minus, [&](EdgeRef f) { return g.related(f, e); })));
    std::ranges::sort(p.minus_degrees);
    std::ranges::sort(p.plus_degrees);
    return p;
}

struct Fingerprint {
    std::size_t vertices = 0;
    /// Multiset (sorted) over the vertex pairs that carry edges.
    std::vector<PairProfile> pairs;
    std::size_t minus_R = 0;
    std::size_t plus_R = 0;
    std::size_t single_predecessor = 0;
    std::size_t single_predecessor_full = 0;

    auto operator<=>(const Fingerprint&) const = default;
};

inline Fingerprint fingerprint(const RGraph& g) {
    Fingerprint fp;
    fp.vertices = g.vertex_count();
    for (auto q : g.vertices()) {
        for (auto r : g.vertices()) {
            auto p = pair_profile(g, q, r);
            if (p.minus_edges + p.plus_edges > 0) fp.pairs.push_back(std::move(p));
        }
    }
    std::ranges::sort(fp.pairs);
    auto d = derived_sets(g);
    fp.minus_R = d.minus_R.size();
    fp.plus_R = d.plus_R.size();
    fp.single_predecessor = d.single_predecessor.size();
    fp.single_predecessor_full = d.single_predecessor_full.size();
    return fp;
}

/// Name of the first invariant on which two fingerprints differ, or empty if equal.
inline std::string first_difference(const Fingerprint& a, const Fingerprint& b) {
    if (a.vertices != b.vertices) return "vertex count";
    if (a.pairs.size() != b.pairs.size()) return "number of connected vertex pairs";
    auto total = [](const Fingerprint& f, auto field) {
        std::size_t n = 0;
        for (const auto& p : f.pairs) n += p.*field;
        return n;
    };
    if (total(a, &PairProfile::minus_edges) != total(b, &PairProfile::minus_edges)) return "minus edge count";
    if (total(a, &PairProfile::plus_edges) != total(b, &PairProfile::plus_edges)) return "plus edge count";
    if (total(a, &PairProfile::related) != total(b, &PairProfile::related)) return "relation size";
    if (a.pairs != b.pairs) return "per-pair relation degree sequences";
    if (a.minus_R != b.minus_R) return "size of E-_R";
    if (a.plus_R != b.plus_R) return "size of E+_R";
    if (a.single_predecessor != b.single_predecessor) return "size of P(1)";
    if (a.single_predecessor_full != b.single_predecessor_full) return "size of P(1)_R";
    return {};
}

} // namespace rgsd
