#pragma once

// The R-graph semigroup S_R as a cancellation system with normal forms.
//
// Every nonzero element has a unique irreducible form
//     (plus walk) 1_mid (minus walk)
// because the only rule that shortens a word consumes a minus edge followed by
// a plus edge: f- g+ = 1_q when (f-, g+) is in R(q,r), and 0 otherwise.

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rgsd/rgraph.hpp"

namespace rgsd {

class Element {
public:
    static Element zero() { return Element{}; }

    /// Unchecked; see well_formed().
    static Element reduced(std::vector<EdgeRef> plus, VertexRef mid, std::vector<EdgeRef> minus) {
        Element x;
        x.zero_ = false;
        x.plus_ = std::move(plus);
        x.mid_ = mid;
        x.minus_ = std::move(minus);
        return x;
    }

    bool is_zero() const noexcept { return zero_; }
    std::span<const EdgeRef> plus_walk() const noexcept { return plus_; }
    VertexRef mid() const noexcept { return mid_; }
    std::span<const EdgeRef> minus_walk() const noexcept { return minus_; }

    /// Normal forms are unique, so equality is structural.
    friend bool operator==(const Element& a, const Element& b) {
        if (a.zero_ || b.zero_) return a.zero_ == b.zero_;
        return a.mid_ == b.mid_ && a.plus_ == b.plus_ && a.minus_ == b.minus_;
    }

    friend void multiply_into(const RGraph& g, Element& x, const Element& y);

    friend void append_generator(const RGraph& g, Element& x, EdgeRef e);

private:
    bool zero_ = true;
    std::vector<EdgeRef> plus_;
    VertexRef mid_{};
    std::vector<EdgeRef> minus_;
};

inline bool equal(const Element& x, const Element& y) { return x == y; }

inline Element idempotent(const RGraph&, VertexRef p) { return Element::reduced({}, p, {}); }

inline Element idempotent(const RGraph& g, std::string_view name) {
    auto v = g.find_vertex(name);
    if (!v) throw std::out_of_range("unknown vertex '" + std::string(name) + "'");
    return idempotent(g, *v);
}

inline Element generator(const RGraph& g, EdgeRef e) {
    if (g.sign(e) == Sign::minus) return Element::reduced({}, g.source(e), {e});
    return Element::reduced({e}, g.target(e), {});
}

/// x <- x * y.
inline void multiply_into(const RGraph& g, Element& x, const Element& y) {
    if (x.zero_) return;
    if (y.zero_) {
        x = Element::zero();
        return;
    }
    // Vertex at the junction, seen from the x side.
    VertexRef left = x.minus_.empty() ? x.mid_ : g.target(x.minus_.back());
    std::size_t i = 0;
    while (!x.minus_.empty() && i < y.plus_.size()) {
        auto f = x.minus_.back();
        auto p = y.plus_[i];
        if (!g.related(f, p)) {
            x = Element::zero();
            return;
        }
        left = g.source(f);
        x.minus_.pop_back();
        ++i;
    }
    VertexRef right = i < y.plus_.size() ? g.source(y.plus_[i]) : y.mid_;
    if (left != right) {
        x = Element::zero();
        return;
    }
    if (x.minus_.empty()) {
        x.plus_.insert(x.plus_.end(), y.plus_.begin() + static_cast<std::ptrdiff_t>(i), y.plus_.end());
        x.mid_ = y.mid_;
    }
    x.minus_.insert(x.minus_.end(), y.minus_.begin(), y.minus_.end());
}

/// x <- x * e for a single generator, without building the generator element.
/// Agrees with multiply_into(g, x, generator(g, e)).
inline void append_generator(const RGraph& g, Element& x, EdgeRef e) {
    if (x.zero_) return;
    if (g.sign(e) == Sign::minus) {
        auto at = x.minus_.empty() ? x.mid_ : g.target(x.minus_.back());
        if (at != g.source(e)) x = Element::zero();
        else x.minus_.push_back(e);
    } else if (!x.minus_.empty()) {
        if (g.related(x.minus_.back(), e)) x.minus_.pop_back();
        else x = Element::zero();
    } else if (x.mid_ != g.source(e)) {
        x = Element::zero();
    } else {
        x.plus_.push_back(e);
        x.mid_ = g.target(e);
    }
}

inline Element multiply(const RGraph& g, Element x, const Element& y) {
    multiply_into(g, x, y);
    return x;
}

/// Product of a nonempty generator word. S_R has no identity, so the empty word is rejected.
inline Element reduce_word(const RGraph& g, std::span<const EdgeRef> w) {
    if (w.empty()) throw std::invalid_argument("reduce_word: empty word");
    for (auto e : w)
        if (index_of(e) >= g.edge_count()) throw std::out_of_range("reduce_word: unknown edge");
    Element acc = generator(g, w.front());
    for (auto e : w.subspan(1)) {
        multiply_into(g, acc, generator(g, e));
        if (acc.is_zero()) break;
    }
    return acc;
}

/// Checks the normal-form invariants of an element against the graph.
inline bool well_formed(const RGraph& g, const Element& x) {
    if (x.is_zero()) return true;
    if (index_of(x.mid()) >= g.vertex_count()) return false;
    auto plus = x.plus_walk();
    auto minus = x.minus_walk();
    for (auto e : plus)
        if (index_of(e) >= g.edge_count() || g.sign(e) != Sign::plus) return false;
    for (auto e : minus)
        if (index_of(e) >= g.edge_count() || g.sign(e) != Sign::minus) return false;
    for (std::size_t i = 1; i < plus.size(); ++i)
        if (g.target(plus[i - 1]) != g.source(plus[i])) return false;
    for (std::size_t i = 1; i < minus.size(); ++i)
        if (g.target(minus[i - 1]) != g.source(minus[i])) return false;
    if (!plus.empty() && g.target(plus.back()) != x.mid()) return false;
    if (!minus.empty() && g.source(minus.front()) != x.mid()) return false;
    return true;
}

// Text form: "0" or "plus:[a1p,a2p] @p minus:[a1m]".

inline std::string render(const RGraph& g, const Element& x) {
    if (x.is_zero()) return "0";
    auto list = [&](std::span<const EdgeRef> es) {
        std::string s = "[";
        for (std::size_t i = 0; i < es.size(); ++i) {
            if (i) s += ',';
            s += g.edge_id(es[i]);
        }
        return s + "]";
    };
    return "plus:" + list(x.plus_walk()) + " @" + g.vertex_name(x.mid()) + " minus:" + list(x.minus_walk());
}

inline Element parse_element(const RGraph& g, std::string_view text) {
    auto fail = [&](const std::string& why) {
        throw std::invalid_argument("parse_element: " + why + " in '" + std::string(text) + "'");
    };
    auto trim = [](std::string_view s) {
        while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
        while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
        return s;
    };
    auto rest = trim(text);
    if (rest == "0") return Element::zero();

    auto take_list = [&](std::string_view prefix) {
        rest = trim(rest);
        if (!rest.starts_with(prefix)) fail("expected '" + std::string(prefix) + "'");
        rest.remove_prefix(prefix.size());
        if (rest.empty() || rest.front() != '[') fail("expected '['");
        auto close = rest.find(']');
        if (close == std::string_view::npos) fail("missing ']'");
        auto body = rest.substr(1, close - 1);
        rest.remove_prefix(close + 1);
        std::vector<EdgeRef> out;
        while (!body.empty()) {
            auto comma = body.find(',');
            auto id = trim(body.substr(0, comma));
            auto e = g.find_edge(id);
            if (!e) fail("unknown edge '" + std::string(id) + "'");
            out.push_back(*e);
            if (comma == std::string_view::npos) break;
            body.remove_prefix(comma + 1);
        }
        return out;
    };

    auto plus = take_list("plus:");
    rest = trim(rest);
    if (rest.empty() || rest.front() != '@') fail("expected '@mid'");
    rest.remove_prefix(1);
    auto space = rest.find(' ');
    auto mid_name = rest.substr(0, space);
    auto mid = g.find_vertex(mid_name);
    if (!mid) fail("unknown vertex '" + std::string(mid_name) + "'");
    rest.remove_prefix(space == std::string_view::npos ? rest.size() : space);
    auto minus = take_list("minus:");
    if (!trim(rest).empty()) fail("trailing text");

    auto x = Element::reduced(std::move(plus), *mid, std::move(minus));
    if (!well_formed(g, x)) fail("not a normal form of this graph");
    return x;
}

} // namespace rgsd
