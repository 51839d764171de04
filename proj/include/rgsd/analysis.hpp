#pragma once

// Omega sets, the derived edge and vertex sets, and conditions (a)-(d).

#include <optional>
#include <set>
#include <variant>
#include <vector>

#include "rgsd/rgraph.hpp"

namespace rgsd {

/// For each edge: Omega+(e) if e is a minus edge, Omega-(e) if e is a plus edge,
/// taken within the edge's own vertex-pair relation. Indexed by EdgeRef.
inline std::vector<std::vector<EdgeRef>> omega_sets(const RGraph& g) {
    std::vector<std::vector<EdgeRef>> out(g.edge_count());
    for (auto e : g.edges()) {
        auto [q, r] = g.vertex_pair(e);
        if (g.sign(e) == Sign::minus) {
            for (auto p : g.edges(Sign::plus, q, r))
                if (g.related(e, p)) out[index_of(e)].push_back(p);
        } else {
            for (auto m : g.edges(Sign::minus, q, r))
                if (g.related(m, e)) out[index_of(e)].push_back(m);
        }
    }
    return out;
}

/// E-(R(q,r)): minus edges of the pair related to every plus edge of the pair.
inline std::vector<EdgeRef> fully_related(const RGraph& g, Sign s, VertexRef q, VertexRef r) {
    auto minus = g.edges(Sign::minus, q, r);
    auto plus = g.edges(Sign::plus, q, r);
    std::vector<EdgeRef> out;
    if (s == Sign::minus) {
        for (auto f : minus)
            if (std::ranges::all_of(plus, [&](EdgeRef p) { return g.related(f, p); })) out.push_back(f);
    } else {
        for (auto p : plus)
            if (std::ranges::all_of(minus, [&](EdgeRef f) { return g.related(f, p); })) out.push_back(p);
    }
    return out;
}

struct DerivedSets {
    /// Vertices with a single predecessor vertex in the minus-edge graph.
    std::vector<VertexRef> single_predecessor;
    /// kappa(p) for p in single_predecessor; empty otherwise. Indexed by VertexRef.
    std::vector<std::optional<VertexRef>> kappa;
    std::vector<EdgeRef> minus_R;
    std::vector<EdgeRef> plus_R;
    /// Vertices p in single_predecessor whose relation R(kappa(p), p) is the full product.
    std::vector<VertexRef> single_predecessor_full;
};

inline DerivedSets derived_sets(const RGraph& g) {
    DerivedSets d;
    d.kappa.assign(g.vertex_count(), std::nullopt);
    std::vector<std::set<VertexRef>> preds(g.vertex_count());
    for (auto e : g.edges(Sign::minus)) preds[index_of(g.target(e))].insert(g.source(e));

    std::set<EdgeRef> minus_R, plus_R;
    for (auto p : g.vertices()) {
        if (preds[index_of(p)].size() != 1) continue;
        auto k = *preds[index_of(p)].begin();
        d.single_predecessor.push_back(p);
        d.kappa[index_of(p)] = k;
        for (auto e : fully_related(g, Sign::minus, k, p)) minus_R.insert(e);
        for (auto e : fully_related(g, Sign::plus, k, p)) plus_R.insert(e);

        auto minus = g.edges(Sign::minus, k, p);
        auto plus = g.edges(Sign::plus, k, p);
        bool full = std::ranges::all_of(minus, [&](EdgeRef f) {
            return std::ranges::all_of(plus, [&](EdgeRef q) { return g.related(f, q); });
        });
        if (full) d.single_predecessor_full.push_back(p);
    }
    d.minus_R.assign(minus_R.begin(), minus_R.end());
    d.plus_R.assign(plus_R.begin(), plus_R.end());
    return d;
}

enum class Condition { a_minus, a_plus, b_minus, b_plus, c, d };

inline constexpr Condition all_conditions[] = {Condition::a_minus, Condition::a_plus, Condition::b_minus,
                                               Condition::b_plus,  Condition::c,      Condition::d};

inline std::string_view to_string(Condition c) noexcept {
    switch (c) {
    case Condition::a_minus: return "(a-)";
    case Condition::a_plus: return "(a+)";
    case Condition::b_minus: return "(b-)";
    case Condition::b_plus: return "(b+)";
    case Condition::c: return "(c)";
    case Condition::d: return "(d)";
    }
    return "?";
}

/// Two distinct edges of one vertex pair with equal Omega sets.
struct EdgePairWitness {
    EdgeRef first;
    EdgeRef second;
};
/// A closed walk (edges in order) inside E-_R or E+_R.
struct CycleWitness {
    std::vector<EdgeRef> edges;
};
struct VertexWitness {
    VertexRef vertex;
};
/// q != r in P(1) joined by both a minus path and a plus path.
struct PathPairWitness {
    VertexRef from;
    VertexRef to;
    std::vector<EdgeRef> minus_path;
    std::vector<EdgeRef> plus_path;
};

using Witness = std::variant<std::monostate, EdgePairWitness, CycleWitness, VertexWitness, PathPairWitness>;

struct ConditionResult {
    Condition condition;
    bool holds = true;
    Witness witness;
};

struct ConditionReport {
    std::vector<ConditionResult> results;

    bool all_hold() const noexcept {
        return std::ranges::all_of(results, [](const ConditionResult& r) { return r.holds; });
    }
    const ConditionResult& operator[](Condition c) const {
        for (const auto& r : results)
            if (r.condition == c) return r;
        throw std::out_of_range("condition not evaluated");
    }
};

struct ConditionOptions {
    /// Evaluate (c) with its literal text, which names E-(R(kappa(p),p)) twice.
    /// Default reading: E-(R(kappa(p),p)) empty or E+(R(kappa(p),p)) empty.
    bool literal_c = false;
    /// Look for the E+_R path of (d) from r to q instead of from q to r.
    bool reverse_plus_paths = false;
};

namespace detail {

/// Some cycle in the digraph formed by `edges` (directed source -> target), if any.
inline std::optional<std::vector<EdgeRef>> find_cycle(const RGraph& g, const std::vector<EdgeRef>& edges) {
    std::vector<std::vector<EdgeRef>> out(g.vertex_count());
    for (auto e : edges) out[index_of(g.source(e))].push_back(e);

    enum class Mark : std::uint8_t { white, grey, black };
    std::vector<Mark> mark(g.vertex_count(), Mark::white);
    std::vector<EdgeRef> stack;
    std::optional<std::vector<EdgeRef>> found;

    auto dfs = [&](auto& self, VertexRef v) -> void {
        mark[index_of(v)] = Mark::grey;
        for (auto e : out[index_of(v)]) {
            if (found) return;
            auto w = g.target(e);
            if (mark[index_of(w)] == Mark::grey) {
                // The DFS path leaves each grey vertex exactly once.
                auto from_w = std::ranges::find_if(stack, [&](EdgeRef x) { return g.source(x) == w; });
                std::vector<EdgeRef> cycle(from_w, stack.end());
                cycle.push_back(e);
                found = std::move(cycle);
                return;
            }
            if (mark[index_of(w)] == Mark::white) {
                stack.push_back(e);
                self(self, w);
                stack.pop_back();
            }
        }
        mark[index_of(v)] = Mark::black;
    };
    for (auto v : g.vertices()) {
        if (found) break;
        if (mark[index_of(v)] == Mark::white) dfs(dfs, v);
    }
    return found;
}

/// Shortest nonempty path from `from` to `to` using `edges` (source -> target).
inline std::optional<std::vector<EdgeRef>> find_path(const RGraph& g, const std::vector<EdgeRef>& edges, VertexRef from,
                                                     VertexRef to) {
    std::vector<std::optional<EdgeRef>> via(g.vertex_count());
    std::vector<bool> seen(g.vertex_count(), false);
    std::queue<VertexRef> todo;
    // Seed with the edges leaving `from` so that a path always has length >= 1.
    for (auto e : edges) {
        if (g.source(e) == from && !seen[index_of(g.target(e))]) {
            seen[index_of(g.target(e))] = true;
            via[index_of(g.target(e))] = e;
            todo.push(g.target(e));
        }
    }
    while (!todo.empty()) {
        auto v = todo.front();
        todo.pop();
        if (v == to) break;
        for (auto e : edges) {
            if (g.source(e) == v && !seen[index_of(g.target(e))]) {
                seen[index_of(g.target(e))] = true;
                via[index_of(g.target(e))] = e;
                todo.push(g.target(e));
            }
        }
    }
    if (!seen[index_of(to)]) return std::nullopt;
    std::vector<EdgeRef> path;
    auto v = to;
    do {
        auto e = *via[index_of(v)];
        path.push_back(e);
        v = g.source(e);
    } while (v != from || path.empty());
    std::ranges::reverse(path);
    return path;
}

} // namespace detail

/// Evaluates (a-), (a+), (b-), (b+), (c), (d). Every failing condition carries a witness.
inline ConditionReport check_conditions(const RGraph& g, ConditionOptions opts = {}) {
    ConditionReport report;
    const auto omega = omega_sets(g);
    const auto derived = derived_sets(g);

    auto check_a = [&](Sign s) {
        ConditionResult res{s == Sign::minus ? Condition::a_minus : Condition::a_plus, true, {}};
        for (auto q : g.vertices()) {
            for (auto r : g.vertices()) {
                auto es = g.edges(s, q, r);
                for (std::size_t i = 0; i < es.size() && res.holds; ++i) {
                    for (std::size_t j = i + 1; j < es.size(); ++j) {
                        if (omega[index_of(es[i])] == omega[index_of(es[j])]) {
                            res.holds = false;
                            res.witness = EdgePairWitness{es[i], es[j]};
                            break;
                        }
                    }
                }
                if (!res.holds) return res;
            }
        }
        return res;
    };
    report.results.push_back(check_a(Sign::minus));
    report.results.push_back(check_a(Sign::plus));

    auto check_b = [&](Sign s) {
        ConditionResult res{s == Sign::minus ? Condition::b_minus : Condition::b_plus, true, {}};
        if (auto cycle = detail::find_cycle(g, s == Sign::minus ? derived.minus_R : derived.plus_R)) {
            res.holds = false;
            res.witness = CycleWitness{std::move(*cycle)};
        }
        return res;
    };
    report.results.push_back(check_b(Sign::minus));
    report.results.push_back(check_b(Sign::plus));

    ConditionResult c{Condition::c, true, {}};
    for (auto p : derived.single_predecessor) {
        auto k = *derived.kappa[index_of(p)];
        if (k == p) continue;
        bool minus_empty = fully_related(g, Sign::minus, k, p).empty();
        bool plus_empty = fully_related(g, Sign::plus, k, p).empty();
        bool ok = opts.literal_c ? minus_empty : (minus_empty || plus_empty);
        if (!ok) {
            c.holds = false;
            c.witness = VertexWitness{p};
            break;
        }
    }
    report.results.push_back(c);

    ConditionResult d{Condition::d, true, {}};
    for (auto q : derived.single_predecessor) {
        for (auto r : derived.single_predecessor) {
            if (q == r || !d.holds) continue;
            auto mp = detail::find_path(g, derived.minus_R, q, r);
            if (!mp) continue;
            auto pp = opts.reverse_plus_paths ? detail::find_path(g, derived.plus_R, r, q)
                                              : detail::find_path(g, derived.plus_R, q, r);
            if (!pp) continue;
            d.holds = false;
            d.witness = PathPairWitness{q, r, std::move(*mp), std::move(*pp)};
        }
    }
    report.results.push_back(d);
    return report;
}

/// Re-checks a failing result's witness against the definition of its condition.
inline bool witness_confirms(const RGraph& g, const ConditionResult& res, ConditionOptions opts = {}) {
    if (res.holds) return std::holds_alternative<std::monostate>(res.witness);
    const auto derived = derived_sets(g);
    auto in = [](const std::vector<EdgeRef>& set, EdgeRef e) { return std::ranges::find(set, e) != set.end(); };
    switch (res.condition) {
    case Condition::a_minus:
    case Condition::a_plus: {
        const auto* w = std::get_if<EdgePairWitness>(&res.witness);
        if (!w || w->first == w->second) return false;
        auto sign = res.condition == Condition::a_minus ? Sign::minus : Sign::plus;
        if (g.sign(w->first) != sign || g.sign(w->second) != sign) return false;
        if (g.vertex_pair(w->first) != g.vertex_pair(w->second)) return false;
        auto omega = omega_sets(g);
        return omega[index_of(w->first)] == omega[index_of(w->second)];
    }
    case Condition::b_minus:
    case Condition::b_plus: {
        const auto* w = std::get_if<CycleWitness>(&res.witness);
        if (!w || w->edges.empty()) return false;
        const auto& set = res.condition == Condition::b_minus ? derived.minus_R : derived.plus_R;
        for (std::size_t i = 0; i < w->edges.size(); ++i) {
            auto e = w->edges[i];
            auto next = w->edges[(i + 1) % w->edges.size()];
            if (!in(set, e) || g.target(e) != g.source(next)) return false;
        }
        return true;
    }
    case Condition::c: {
        const auto* w = std::get_if<VertexWitness>(&res.witness);
        if (!w) return false;
        auto k = derived.kappa[index_of(w->vertex)];
        if (!k || *k == w->vertex) return false;
        bool minus_empty = fully_related(g, Sign::minus, *k, w->vertex).empty();
        bool plus_empty = fully_related(g, Sign::plus, *k, w->vertex).empty();
        return opts.literal_c ? !minus_empty : !(minus_empty || plus_empty);
    }
    case Condition::d: {
        const auto* w = std::get_if<PathPairWitness>(&res.witness);
        if (!w || w->from == w->to || w->minus_path.empty() || w->plus_path.empty()) return false;
        auto walks = [&](const std::vector<EdgeRef>& path, const std::vector<EdgeRef>& set, VertexRef a, VertexRef b) {
            if (g.source(path.front()) != a || g.target(path.back()) != b) return false;
            for (std::size_t i = 0; i < path.size(); ++i) {
                if (!in(set, path[i])) return false;
                if (i + 1 < path.size() && g.target(path[i]) != g.source(path[i + 1])) return false;
            }
            return true;
        };
        bool plus_ok = opts.reverse_plus_paths ? walks(w->plus_path, derived.plus_R, w->to, w->from)
                                               : walks(w->plus_path, derived.plus_R, w->from, w->to);
        return walks(w->minus_path, derived.minus_R, w->from, w->to) && plus_ok;
    }
    }
    return false;
}

} // namespace rgsd
