#pragma once

// R-graphs: a vertex set, minus and plus edges, and a relation between minus
// and plus edges of the same vertex pair.
//
// A minus edge e in E-(q,r) runs q -> r. A plus edge e in E+(q,r) runs r -> q.
// The relation R(q,r) is a subset of E-(q,r) x E+(q,r).

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rgsd {

enum class Sign : std::uint8_t { minus, plus };

enum class VertexRef : std::uint32_t {};
enum class EdgeRef : std::uint32_t {};

constexpr std::size_t index_of(VertexRef v) noexcept { return static_cast<std::size_t>(v); }
constexpr std::size_t index_of(EdgeRef e) noexcept { return static_cast<std::size_t>(e); }

inline std::string_view to_string(Sign s) noexcept { return s == Sign::minus ? "minus" : "plus"; }

/// Raw, unvalidated description of an R-graph, as read from a file or
/// produced by a constructor. Identity is by name/id, never by position.
struct EdgeData {
    std::string id;
    Sign sign = Sign::minus;
    std::string source;
    std::string target;

    friend bool operator==(const EdgeData&, const EdgeData&) = default;
};

struct RGraphData {
    std::vector<std::string> vertices;
    std::vector<EdgeData> edges;
    /// (minus edge id, plus edge id)
    std::vector<std::pair<std::string, std::string>> relations;
};

enum class ViolationKind {
    no_vertices,
    empty_token,
    duplicate_vertex,
    duplicate_edge,
    dangling_endpoint,
    unknown_relation_edge,
    mistyped_relation,
    duplicate_relation,
    emptiness_mismatch,
    not_strongly_connected,
};

inline std::string_view to_string(ViolationKind k) noexcept {
    switch (k) {
    case ViolationKind::no_vertices: return "no vertices";
    case ViolationKind::empty_token: return "empty or malformed token";
    case ViolationKind::duplicate_vertex: return "duplicate vertex";
    case ViolationKind::duplicate_edge: return "duplicate edge id";
    case ViolationKind::dangling_endpoint: return "dangling endpoint";
    case ViolationKind::unknown_relation_edge: return "unknown relation edge";
    case ViolationKind::mistyped_relation: return "mistyped relation";
    case ViolationKind::duplicate_relation: return "duplicate relation pair";
    case ViolationKind::emptiness_mismatch: return "emptiness mismatch";
    case ViolationKind::not_strongly_connected: return "not strongly connected";
    }
    return "unknown";
}

struct Violation {
    ViolationKind kind;
    std::string detail;
};

struct ValidationResult {
    std::vector<Violation> violations;

    bool ok() const noexcept { return violations.empty(); }
    bool has(ViolationKind k) const noexcept {
        return std::ranges::any_of(violations, [k](const Violation& v) { return v.kind == k; });
    }
};

namespace detail {

inline bool is_token(std::string_view s) noexcept {
    if (s.empty()) return false;
    return std::ranges::none_of(s, [](unsigned char c) { return c <= 0x20 || c == 0x7f; });
}

/// Strong connectivity of a digraph on n vertices given as (source, target) index pairs.
inline bool strongly_connected(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& arcs) {
    if (n == 0) return false;
    auto reach_all = [&](bool reversed) {
        std::vector<std::vector<std::size_t>> adj(n);
        for (auto [s, t] : arcs) {
            if (reversed) adj[t].push_back(s);
            else adj[s].push_back(t);
        }
        std::vector<bool> seen(n, false);
        std::queue<std::size_t> todo;
        todo.push(0);
        seen[0] = true;
        std::size_t count = 1;
        while (!todo.empty()) {
            auto v = todo.front();
            todo.pop();
            for (auto w : adj[v]) {
                if (!seen[w]) {
                    seen[w] = true;
                    ++count;
                    todo.push(w);
                }
            }
        }
        return count == n;
    };
    return reach_all(false) && reach_all(true);
}

} // namespace detail

/// Checks every structural invariant of an R-graph and reports all violations.
inline ValidationResult validate(const RGraphData& g) {
    ValidationResult out;
    auto report = [&](ViolationKind k, std::string detail) { out.violations.push_back({k, std::move(detail)}); };

    if (g.vertices.empty()) report(ViolationKind::no_vertices, "vertex set is empty");

    std::map<std::string, std::size_t, std::less<>> vertex_index;
    for (const auto& v : g.vertices) {
        if (!detail::is_token(v)) report(ViolationKind::empty_token, "vertex name '" + v + "'");
        if (!vertex_index.emplace(v, vertex_index.size()).second)
            report(ViolationKind::duplicate_vertex, v);
    }

    std::map<std::string, const EdgeData*, std::less<>> edge_index;
    for (const auto& e : g.edges) {
        if (!detail::is_token(e.id)) report(ViolationKind::empty_token, "edge id '" + e.id + "'");
        if (!edge_index.emplace(e.id, &e).second) report(ViolationKind::duplicate_edge, e.id);
        for (const auto* endpoint : {&e.source, &e.target}) {
            if (!vertex_index.contains(*endpoint))
                report(ViolationKind::dangling_endpoint, "edge " + e.id + " references unknown vertex '" + *endpoint + "'");
        }
    }

    // The vertex pair (q,r) an edge belongs to: minus q->r, plus r->q.
    auto pair_of = [](const EdgeData& e) {
        return e.sign == Sign::minus ? std::pair{e.source, e.target} : std::pair{e.target, e.source};
    };

    std::map<std::pair<std::string, std::string>, std::pair<std::size_t, std::size_t>> pair_counts;
    for (const auto& e : g.edges) {
        auto& c = pair_counts[pair_of(e)];
        (e.sign == Sign::minus ? c.first : c.second)++;
    }
    for (const auto& [pair, counts] : pair_counts) {
        if ((counts.first == 0) != (counts.second == 0)) {
            report(ViolationKind::emptiness_mismatch,
                   "pair (" + pair.first + "," + pair.second + "): " + std::to_string(counts.first) + " minus edges, " +
                       std::to_string(counts.second) + " plus edges");
        }
    }

    std::set<std::pair<std::string, std::string>> seen_relations;
    for (const auto& [f, gp] : g.relations) {
        auto fi = edge_index.find(f);
        auto gi = edge_index.find(gp);
        if (fi == edge_index.end() || gi == edge_index.end()) {
            report(ViolationKind::unknown_relation_edge, "(" + f + "," + gp + ")");
            continue;
        }
        if (!seen_relations.emplace(f, gp).second) report(ViolationKind::duplicate_relation, "(" + f + "," + gp + ")");
        const EdgeData& fe = *fi->second;
        const EdgeData& ge = *gi->second;
        if (fe.sign != Sign::minus || ge.sign != Sign::plus) {
            report(ViolationKind::mistyped_relation, "(" + f + "," + gp + ") is not a (minus, plus) pair");
        } else if (pair_of(fe) != pair_of(ge)) {
            report(ViolationKind::mistyped_relation,
                   "(" + f + "," + gp + ") relates edges of different vertex pairs");
        }
    }

    if (!g.vertices.empty()) {
        std::vector<std::pair<std::size_t, std::size_t>> arcs;
        for (const auto& e : g.edges) {
            if (e.sign != Sign::minus) continue;
            auto s = vertex_index.find(e.source);
            auto t = vertex_index.find(e.target);
            if (s != vertex_index.end() && t != vertex_index.end()) arcs.emplace_back(s->second, t->second);
        }
        if (!detail::strongly_connected(vertex_index.size(), arcs))
            report(ViolationKind::not_strongly_connected, "the minus-edge graph is not strongly connected");
    }
    return out;
}

class InvalidGraph : public std::runtime_error {
public:
    explicit InvalidGraph(std::vector<Violation> violations)
        : std::runtime_error(summary(violations)), violations_(std::move(violations)) {}

    const std::vector<Violation>& violations() const noexcept { return violations_; }

private:
    static std::string summary(const std::vector<Violation>& vs) {
        std::string s = "invalid R-graph";
        for (const auto& v : vs) {
            s += "; ";
            s += to_string(v.kind);
            s += ": ";
            s += v.detail;
        }
        return s;
    }
    std::vector<Violation> violations_;
};

/// A validated R-graph with dense indices. Vertices are ordered by name and
/// edges by id, so EdgeRef/VertexRef order is canonical.
class RGraph {
public:
    explicit RGraph(RGraphData data) {
        if (auto v = validate(data); !v.ok()) throw InvalidGraph(std::move(v.violations));

        vertices_ = std::move(data.vertices);
        std::ranges::sort(vertices_);
        for (std::size_t i = 0; i < vertices_.size(); ++i) vertex_lookup_.emplace(vertices_[i], VertexRef(i));

        std::ranges::sort(data.edges, {}, &EdgeData::id);
        edges_.reserve(data.edges.size());
        for (std::size_t i = 0; i < data.edges.size(); ++i) {
            const auto& e = data.edges[i];
            edge_lookup_.emplace(e.id, EdgeRef(i));
            edges_.push_back({e.id, e.sign, *find_vertex(e.source), *find_vertex(e.target)});
        }

        related_.assign(edges_.size() * edges_.size(), false);
        for (const auto& [f, gp] : data.relations) {
            related_[index_of(*find_edge(f)) * edges_.size() + index_of(*find_edge(gp))] = true;
        }
    }

    std::size_t vertex_count() const noexcept { return vertices_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    const std::string& vertex_name(VertexRef v) const { return vertices_.at(index_of(v)); }
    const std::string& edge_id(EdgeRef e) const { return edges_.at(index_of(e)).id; }
    Sign sign(EdgeRef e) const { return edges_[index_of(e)].sign; }
    VertexRef source(EdgeRef e) const { return edges_[index_of(e)].source; }
    VertexRef target(EdgeRef e) const { return edges_[index_of(e)].target; }

    /// The vertex pair (q,r) with e in E-(q,r) or E+(q,r).
    std::pair<VertexRef, VertexRef> vertex_pair(EdgeRef e) const {
        const auto& d = edges_[index_of(e)];
        return d.sign == Sign::minus ? std::pair{d.source, d.target} : std::pair{d.target, d.source};
    }

    /// (f, g) in R. False for anything that is not a (minus, plus) pair.
    bool related(EdgeRef minus, EdgeRef plus) const noexcept {
        return related_[index_of(minus) * edges_.size() + index_of(plus)];
    }

    std::optional<VertexRef> find_vertex(std::string_view name) const {
        auto it = vertex_lookup_.find(name);
        if (it == vertex_lookup_.end()) return std::nullopt;
        return it->second;
    }
    std::optional<EdgeRef> find_edge(std::string_view id) const {
        auto it = edge_lookup_.find(id);
        if (it == edge_lookup_.end()) return std::nullopt;
        return it->second;
    }

    std::vector<VertexRef> vertices() const {
        std::vector<VertexRef> out;
        for (std::size_t i = 0; i < vertices_.size(); ++i) out.push_back(VertexRef(i));
        return out;
    }
    std::vector<EdgeRef> edges() const {
        std::vector<EdgeRef> out;
        for (std::size_t i = 0; i < edges_.size(); ++i) out.push_back(EdgeRef(i));
        return out;
    }
    std::vector<EdgeRef> edges(Sign s) const {
        std::vector<EdgeRef> out;
        for (std::size_t i = 0; i < edges_.size(); ++i)
            if (edges_[i].sign == s) out.push_back(EdgeRef(i));
        return out;
    }
    /// E-(q,r) or E+(q,r), in id order.
    std::vector<EdgeRef> edges(Sign s, VertexRef q, VertexRef r) const {
        std::vector<EdgeRef> out;
        for (std::size_t i = 0; i < edges_.size(); ++i) {
            if (edges_[i].sign == s && vertex_pair(EdgeRef(i)) == std::pair{q, r}) out.push_back(EdgeRef(i));
        }
        return out;
    }

    /// All relation pairs in (minus, plus) index order.
    std::vector<std::pair<EdgeRef, EdgeRef>> relation_pairs() const {
        std::vector<std::pair<EdgeRef, EdgeRef>> out;
        for (std::size_t f = 0; f < edges_.size(); ++f)
            for (std::size_t g = 0; g < edges_.size(); ++g)
                if (related_[f * edges_.size() + g]) out.emplace_back(EdgeRef(f), EdgeRef(g));
        return out;
    }

    /// Canonical raw form (sorted vertices, edges, relations).
    RGraphData data() const {
        RGraphData d;
        d.vertices = vertices_;
        for (const auto& e : edges_) d.edges.push_back({e.id, e.sign, vertex_name(e.source), vertex_name(e.target)});
        for (auto [f, g] : relation_pairs()) d.relations.emplace_back(edge_id(f), edge_id(g));
        return d;
    }

private:
    struct Edge {
        std::string id;
        Sign sign;
        VertexRef source;
        VertexRef target;
    };

    std::vector<std::string> vertices_;
    std::vector<Edge> edges_;
    std::vector<bool> related_;
    std::map<std::string, VertexRef, std::less<>> vertex_lookup_;
    std::map<std::string, EdgeRef, std::less<>> edge_lookup_;
};

// ---------------------------------------------------------------------------
// Constructors for standard families.

/// Dyck shift on n bracket pairs: one vertex "p", edges a<i>m / a<i>p, diagonal relation.
inline RGraph build_dyck(std::size_t n) {
    if (n == 0) throw std::invalid_argument("build_dyck: n must be at least 1");
    RGraphData d;
    d.vertices = {"p"};
    for (std::size_t i = 1; i <= n; ++i) {
        auto base = "a" + std::to_string(i);
        d.edges.push_back({base + "m", Sign::minus, "p", "p"});
        d.edges.push_back({base + "p", Sign::plus, "p", "p"});
        d.relations.emplace_back(base + "m", base + "p");
    }
    return RGraph(std::move(d));
}

/// A finite directed multigraph, the input of the Markov-Dyck construction.
struct Digraph {
    struct Arc {
        std::string id;
        std::string source;
        std::string target;
    };
    std::vector<std::string> vertices;
    std::vector<Arc> arcs;
};

/// Markov-Dyck R-graph: every arc e: q -> r becomes a minus edge "<e>m" (q -> r)
/// and a reversed plus edge "<e>p" (r -> q), related only to each other.
inline RGraph build_markov_dyck(const Digraph& g) {
    if (g.arcs.empty()) throw std::invalid_argument("build_markov_dyck: digraph has no arcs");
    std::map<std::string, std::size_t, std::less<>> index;
    for (const auto& v : g.vertices) index.emplace(v, index.size());
    std::vector<std::pair<std::size_t, std::size_t>> arcs;
    for (const auto& a : g.arcs) {
        auto s = index.find(a.source);
        auto t = index.find(a.target);
        if (s == index.end() || t == index.end())
            throw std::invalid_argument("build_markov_dyck: arc " + a.id + " has an unknown endpoint");
        arcs.emplace_back(s->second, t->second);
    }
    if (!detail::strongly_connected(index.size(), arcs))
        throw std::invalid_argument("build_markov_dyck: digraph is not strongly connected");

    RGraphData d;
    d.vertices = g.vertices;
    for (const auto& a : g.arcs) {
        d.edges.push_back({a.id + "m", Sign::minus, a.source, a.target});
        d.edges.push_back({a.id + "p", Sign::plus, a.target, a.source});
        d.relations.emplace_back(a.id + "m", a.id + "p");
    }
    return RGraph(std::move(d));
}

/// One-vertex R-graph of D2 x B_K: edges e<m>_<beta>m and e<l>_<beta>p,
/// related iff the beta labels agree.
inline RGraph build_product_dyck_full(std::size_t k) {
    if (k < 2) throw std::invalid_argument("build_product_dyck_full: K must be at least 2");
    RGraphData d;
    d.vertices = {"p"};
    auto name = [](std::size_t m, int beta, char sign) {
        return "e" + std::to_string(m) + "_" + std::to_string(beta) + sign;
    };
    for (std::size_t m = 1; m <= k; ++m) {
        for (int beta = 0; beta <= 1; ++beta) {
            d.edges.push_back({name(m, beta, 'm'), Sign::minus, "p", "p"});
            d.edges.push_back({name(m, beta, 'p'), Sign::plus, "p", "p"});
        }
    }
    for (std::size_t m = 1; m <= k; ++m)
        for (std::size_t l = 1; l <= k; ++l)
            for (int beta = 0; beta <= 1; ++beta) d.relations.emplace_back(name(m, beta, 'm'), name(l, beta, 'p'));
    return RGraph(std::move(d));
}

} // namespace rgsd
