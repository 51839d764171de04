#pragma once

// Reduction of generator words by local string rewriting under a chosen
// strategy. This is a second route to the normal form, independent of the
// junction-cancellation product in semigroup.hpp, used to exercise confluence.
//
// Tokens are edges, idempotents 1_p, and 0. Every rule rewrites two adjacent
// tokens into one:
//   0 x, x 0          -> 0
//   1_q 1_r           -> 1_q if q == r, else 0
//   1_q e             -> e if s(e) == q, else 0
//   e 1_r             -> e if t(e) == r, else 0
//   e e'              -> 0 if t(e) != s(e')
//   f- g+             -> 1_s(f) if (f,g) in R, else 0

#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

#include "rgsd/semigroup.hpp"

namespace rgsd::rewriting {

enum class Strategy { leftmost, rightmost, random };

struct Token {
    enum class Kind : std::uint8_t { edge, idempotent, zero } kind;
    std::uint32_t value = 0;

    friend bool operator==(const Token&, const Token&) = default;
};

/// The result of rewriting the adjacent pair (a, b), if a rule applies.
inline std::optional<Token> rewrite_pair(const RGraph& g, Token a, Token b) {
    using K = Token::Kind;
    const Token zero{K::zero};
    if (a.kind == K::zero || b.kind == K::zero) return zero;
    auto vertex = [](std::uint32_t v) { return VertexRef(v); };
    auto edge = [](std::uint32_t e) { return EdgeRef(e); };
    if (a.kind == K::idempotent && b.kind == K::idempotent) return a.value == b.value ? a : zero;
    if (a.kind == K::idempotent) return g.source(edge(b.value)) == vertex(a.value) ? b : zero;
    if (b.kind == K::idempotent) return g.target(edge(a.value)) == vertex(b.value) ? a : zero;

    auto e = edge(a.value);
    auto f = edge(b.value);
    if (g.target(e) != g.source(f)) return zero;
    if (g.sign(e) == Sign::minus && g.sign(f) == Sign::plus) {
        if (!g.related(e, f)) return zero;
        return Token{K::idempotent, static_cast<std::uint32_t>(index_of(g.source(e)))};
    }
    return std::nullopt;
}

/// Reads an irreducible token string back as an element.
inline Element to_element(const RGraph& g, const std::vector<Token>& tokens) {
    using K = Token::Kind;
    if (tokens.size() == 1 && tokens[0].kind == K::zero) return Element::zero();
    if (tokens.size() == 1 && tokens[0].kind == K::idempotent) return Element::reduced({}, VertexRef(tokens[0].value), {});
    std::vector<EdgeRef> plus, minus;
    for (const auto& t : tokens) {
        if (t.kind != K::edge) throw std::logic_error("rewriting: irreducible word contains a non-edge token");
        auto e = EdgeRef(t.value);
        if (g.sign(e) == Sign::plus) {
            if (!minus.empty()) throw std::logic_error("rewriting: irreducible word has a plus edge after a minus edge");
            plus.push_back(e);
        } else {
            minus.push_back(e);
        }
    }
    auto mid = plus.empty() ? g.source(minus.front()) : g.target(plus.back());
    return Element::reduced(std::move(plus), mid, std::move(minus));
}

/// Rewrites until no rule applies, choosing the redex by `strategy`.
inline Element reduce(const RGraph& g, std::span<const EdgeRef> w, Strategy strategy, std::mt19937_64* rng = nullptr) {
    if (w.empty()) throw std::invalid_argument("rewriting::reduce: empty word");
    if (strategy == Strategy::random && rng == nullptr)
        throw std::invalid_argument("rewriting::reduce: random strategy needs a generator");
    std::vector<Token> tokens;
    for (auto e : w) tokens.push_back({Token::Kind::edge, static_cast<std::uint32_t>(index_of(e))});

    std::vector<std::pair<std::size_t, Token>> redexes;
    for (;;) {
        redexes.clear();
        for (std::size_t i = 0; i + 1 < tokens.size(); ++i)
            if (auto r = rewrite_pair(g, tokens[i], tokens[i + 1])) redexes.emplace_back(i, *r);
        if (redexes.empty()) break;
        std::size_t pick = 0;
        switch (strategy) {
        case Strategy::leftmost: pick = 0; break;
        case Strategy::rightmost: pick = redexes.size() - 1; break;
        case Strategy::random:
            pick = std::uniform_int_distribution<std::size_t>(0, redexes.size() - 1)(*rng);
            break;
        }
        auto [pos, token] = redexes[pick];
        tokens[pos] = token;
        tokens.erase(tokens.begin() + static_cast<std::ptrdiff_t>(pos) + 1);
    }
    return to_element(g, tokens);
}

} // namespace rgsd::rewriting
