#pragma once

// Exhaustive R-graph isomorphism search: backtracking over vertex bijections,
// then over sign-preserving edge bijections inside each vertex pair, pruned by
// pair profiles and relation degrees.

#include <cstddef>
#include <vector>

#include "rgsd/fingerprint.hpp"

namespace rgsd {

struct GraphIso {
    std::vector<VertexRef> vertex_map; ///< indexed by vertex of the first graph
    std::vector<EdgeRef> edge_map;     ///< indexed by edge of the first graph

    friend bool operator==(const GraphIso&, const GraphIso&) = default;
};

enum class SearchStatus {
    exhaustive,    ///< every isomorphism was listed
    limit_reached, ///< stopped after `limit` maps; more may exist
    aborted,       ///< node budget exhausted; the list is incomplete
};

inline std::string_view to_string(SearchStatus s) noexcept {
    switch (s) {
    case SearchStatus::exhaustive: return "exhaustive";
    case SearchStatus::limit_reached: return "limit reached";
    case SearchStatus::aborted: return "search aborted";
    }
    return "?";
}

struct IsoSearchResult {
    std::vector<GraphIso> isomorphisms;
    SearchStatus status = SearchStatus::exhaustive;
    std::size_t nodes = 0;

    /// True only when the search proved that no isomorphism exists.
    bool proven_none() const noexcept { return isomorphisms.empty() && status == SearchStatus::exhaustive; }
};

/// Checks sign, source, target and relation preservation pair by pair.
inline bool verify_isomorphism(const RGraph& a, const RGraph& b, const GraphIso& iso) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    if (iso.vertex_map.size() != a.vertex_count() || iso.edge_map.size() != a.edge_count()) return false;
    std::vector<bool> hit_v(b.vertex_count(), false), hit_e(b.edge_count(), false);
    for (auto v : iso.vertex_map) {
        if (index_of(v) >= b.vertex_count() || hit_v[index_of(v)]) return false;
        hit_v[index_of(v)] = true;
    }
    for (auto e : iso.edge_map) {
        if (index_of(e) >= b.edge_count() || hit_e[index_of(e)]) return false;
        hit_e[index_of(e)] = true;
    }
    auto vmap = [&](VertexRef v) { return iso.vertex_map[index_of(v)]; };
    auto emap = [&](EdgeRef e) { return iso.edge_map[index_of(e)]; };
    for (auto e : a.edges()) {
        if (a.sign(e) != b.sign(emap(e))) return false;
        if (vmap(a.source(e)) != b.source(emap(e)) || vmap(a.target(e)) != b.target(emap(e))) return false;
    }
    for (auto f : a.edges(Sign::minus))
        for (auto p : a.edges(Sign::plus))
            if (a.related(f, p) != b.related(emap(f), emap(p))) return false;
    return true;
}

inline IsoSearchResult find_isomorphisms(const RGraph& a, const RGraph& b, std::size_t limit,
                                         std::size_t node_budget = 10'000'000) {
    IsoSearchResult result;
    if (limit == 0) {
        result.status = SearchStatus::limit_reached;
        return result;
    }
    if (fingerprint(a) != fingerprint(b)) return result;

    const std::size_t n = a.vertex_count();
    auto profiles = [n](const RGraph& g) {
        std::vector<std::vector<PairProfile>> m(n, std::vector<PairProfile>(n));
        for (auto q : g.vertices())
            for (auto r : g.vertices()) m[index_of(q)][index_of(r)] = pair_profile(g, q, r);
        return m;
    };
    const auto pa = profiles(a);
    const auto pb = profiles(b);

    auto signature = [n](const std::vector<std::vector<PairProfile>>& m, std::size_t v) {
        std::vector<PairProfile> out_row, in_col;
        for (std::size_t w = 0; w < n; ++w) {
            if (w == v) continue;
            out_row.push_back(m[v][w]);
            in_col.push_back(m[w][v]);
        }
        std::ranges::sort(out_row);
        std::ranges::sort(in_col);
        return std::tuple{m[v][v], out_row, in_col};
    };
    std::vector<decltype(signature(pa, 0))> sig_a, sig_b;
    for (std::size_t v = 0; v < n; ++v) {
        sig_a.push_back(signature(pa, v));
        sig_b.push_back(signature(pb, v));
    }

    auto degree = [](const RGraph& g) {
        std::vector<std::size_t> d(g.edge_count(), 0);
        for (auto [f, p] : g.relation_pairs()) {
            ++d[index_of(f)];
            ++d[index_of(p)];
        }
        return d;
    };
    const auto deg_a = degree(a);
    const auto deg_b = degree(b);

    GraphIso current;
    current.vertex_map.assign(n, VertexRef{});
    current.edge_map.assign(a.edge_count(), EdgeRef{});
    std::vector<bool> vertex_used(n, false);
    bool stop = false;

    auto budget_ok = [&] {
        if (++result.nodes > node_budget) {
            result.status = SearchStatus::aborted;
            stop = true;
        }
        return !stop;
    };

    // Edge phase: the edges of `a` in pair order, minus edges of a pair before its plus edges.
    struct Slot {
        EdgeRef edge;
        std::vector<EdgeRef> candidates;
        std::vector<EdgeRef> group_minus; ///< minus edges of the same pair (mapped earlier)
    };

    auto edge_phase = [&]() {
        std::vector<Slot> slots;
        for (auto q : a.vertices()) {
            for (auto r : a.vertices()) {
                auto mq = current.vertex_map[index_of(q)];
                auto mr = current.vertex_map[index_of(r)];
                auto minus = a.edges(Sign::minus, q, r);
                for (auto f : minus) slots.push_back({f, b.edges(Sign::minus, mq, mr), {}});
                for (auto p : a.edges(Sign::plus, q, r)) slots.push_back({p, b.edges(Sign::plus, mq, mr), minus});
            }
        }
        std::vector<bool> edge_used(b.edge_count(), false);

        auto assign = [&](auto& self, std::size_t i) -> void {
            if (stop) return;
            if (i == slots.size()) {
                result.isomorphisms.push_back(current);
                if (result.isomorphisms.size() >= limit) {
                    result.status = SearchStatus::limit_reached;
                    stop = true;
                }
                return;
            }
            const auto& slot = slots[i];
            for (auto c : slot.candidates) {
                if (edge_used[index_of(c)] || deg_a[index_of(slot.edge)] != deg_b[index_of(c)]) continue;
                if (!budget_ok()) return;
                bool consistent = std::ranges::all_of(slot.group_minus, [&](EdgeRef f) {
                    return a.related(f, slot.edge) == b.related(current.edge_map[index_of(f)], c);
                });
                if (!consistent) continue;
                edge_used[index_of(c)] = true;
                current.edge_map[index_of(slot.edge)] = c;
                self(self, i + 1);
                edge_used[index_of(c)] = false;
                if (stop) return;
            }
        };
        assign(assign, 0);
    };

    auto vertex_phase = [&](auto& self, std::size_t v) -> void {
        if (stop) return;
        if (v == n) {
            edge_phase();
            return;
        }
        for (std::size_t c = 0; c < n; ++c) {
            if (vertex_used[c] || sig_a[v] != sig_b[c]) continue;
            if (!budget_ok()) return;
            bool consistent = true;
            for (std::size_t u = 0; u < v && consistent; ++u) {
                auto mu = index_of(current.vertex_map[u]);
                consistent = pa[v][u] == pb[c][mu] && pa[u][v] == pb[mu][c];
            }
            if (!consistent) continue;
            vertex_used[c] = true;
            current.vertex_map[v] = VertexRef(c);
            self(self, v + 1);
            vertex_used[c] = false;
            if (stop) return;
        }
    };
    vertex_phase(vertex_phase, 0);
    return result;
}

} // namespace rgsd
