#pragma once

// Shift presentations: an R-graph shift followed by a sequence of symbol
// expansions. Expanding sigma replaces every occurrence of sigma by
// sigma followed by a fresh bullet symbol.
//
// Admissibility in an expanded shift is decided by parsing: undo the steps
// last to first, checking the bullet pattern of each step, then test the
// remaining core word in the R-graph semigroup.

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rgsd/semigroup.hpp"

namespace rgsd {

/// A letter of a presentation alphabet. Symbols below the base edge count
/// are edges of the base graph (same index as their EdgeRef); the rest are
/// bullets, in the order their steps were applied.
enum class Symbol : std::uint32_t {};

constexpr std::size_t index_of(Symbol s) noexcept { return static_cast<std::size_t>(s); }

using Word = std::vector<Symbol>;

struct ExpansionStep {
    Symbol sigma;
    Symbol bullet;

    friend bool operator==(const ExpansionStep&, const ExpansionStep&) = default;
};

class UnknownSymbol : public std::invalid_argument {
public:
    explicit UnknownSymbol(const std::string& token) : std::invalid_argument("unknown symbol '" + token + "'") {}
};

class ShiftPresentation {
public:
    explicit ShiftPresentation(RGraph base) : base_(std::move(base)) {
        for (auto e : base_.edges()) add_name(base_.edge_id(e));
    }

    const RGraph& base() const noexcept { return base_; }
    std::span<const ExpansionStep> steps() const noexcept { return steps_; }
    bool expanded() const noexcept { return !steps_.empty(); }

    std::size_t symbol_count() const noexcept { return names_.size(); }
    bool is_base_symbol(Symbol s) const noexcept { return index_of(s) < base_.edge_count(); }
    bool contains(Symbol s) const noexcept { return index_of(s) < names_.size(); }

    const std::string& name(Symbol s) const { return names_.at(index_of(s)); }
    std::optional<Symbol> find(std::string_view token) const {
        auto it = lookup_.find(token);
        if (it == lookup_.end()) return std::nullopt;
        return it->second;
    }

    /// The alphabet in token (string) order; this order defines "lexicographic" for words.
    std::span<const Symbol> alphabet() const noexcept { return sorted_; }
    std::size_t rank(Symbol s) const { return rank_.at(index_of(s)); }

    bool word_less(std::span<const Symbol> a, std::span<const Symbol> b) const {
        auto by_rank = [this](Symbol s) { return rank(s); };
        return std::ranges::lexicographical_compare(a, b, {}, by_rank, by_rank);
    }

    /// Appends the step that expands `sigma`. The bullet is named "._<k>" for
    /// the k-th step unless a name is given; it must not clash with an existing token.
    ExpansionStep expand(Symbol sigma, std::optional<std::string> bullet_name = std::nullopt) {
        if (!contains(sigma)) throw std::invalid_argument("expand: sigma is not in the current alphabet");
        auto name = bullet_name ? *bullet_name : "._" + std::to_string(steps_.size() + 1);
        if (name.empty() || std::ranges::any_of(name, [](unsigned char c) { return c <= 0x20; }))
            throw std::invalid_argument("expand: bullet name must be a nonempty token");
        if (lookup_.contains(name)) throw std::invalid_argument("expand: bullet '" + name + "' is already a symbol");
        ExpansionStep step{sigma, Symbol(names_.size())};
        add_name(std::move(name));
        steps_.push_back(step);
        return step;
    }

    ExpansionStep expand(std::string_view sigma, std::optional<std::string> bullet_name = std::nullopt) {
        auto s = find(sigma);
        if (!s) throw std::invalid_argument("expand: sigma '" + std::string(sigma) + "' is not in the current alphabet");
        return expand(*s, std::move(bullet_name));
    }

    /// Whitespace-separated tokens.
    Word parse_word(std::string_view text) const {
        Word w;
        std::size_t i = 0;
        while (i < text.size()) {
            while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
            std::size_t j = i;
            while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
            if (j > i) {
                auto tok = text.substr(i, j - i);
                auto s = find(tok);
                if (!s) throw UnknownSymbol(std::string(tok));
                w.push_back(*s);
            }
            i = j;
        }
        return w;
    }

    std::string format(std::span<const Symbol> w) const {
        std::string out;
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (i) out += ' ';
            out += name(w[i]);
        }
        return out;
    }

private:
    void add_name(std::string name) {
        auto s = Symbol(names_.size());
        lookup_.emplace(name, s);
        names_.push_back(std::move(name));
        sorted_.clear();
        for (std::size_t i = 0; i < names_.size(); ++i) sorted_.push_back(Symbol(i));
        std::ranges::sort(sorted_, {}, [this](Symbol x) -> const std::string& { return names_[index_of(x)]; });
        rank_.assign(names_.size(), 0);
        for (std::size_t r = 0; r < sorted_.size(); ++r) rank_[index_of(sorted_[r])] = r;
    }

    RGraph base_;
    std::vector<ExpansionStep> steps_;
    std::vector<std::string> names_;
    std::map<std::string, Symbol, std::less<>> lookup_;
    std::vector<Symbol> sorted_;
    std::vector<std::size_t> rank_;
};

struct StepRequest {
    std::string sigma;
    std::optional<std::string> bullet;
};

/// Applies the steps in order. A sigma must name a symbol of the alphabet as it
/// stands before its step; bullets of earlier steps may be expanded.
inline ShiftPresentation apply_expansion_sequence(RGraph base, std::span<const StepRequest> steps) {
    ShiftPresentation p(std::move(base));
    for (const auto& s : steps) p.expand(s.sigma, s.bullet);
    return p;
}

inline Word to_word(std::span<const EdgeRef> edges) {
    Word w;
    w.reserve(edges.size());
    for (auto e : edges) w.push_back(Symbol(index_of(e)));
    return w;
}

/// Substitutes sigma -> sigma bullet.
inline Word expand_word(std::span<const Symbol> w, const ExpansionStep& step) {
    if (std::ranges::find(w, step.bullet) != w.end())
        throw std::invalid_argument("expand_word: word already contains the step's bullet");
    Word out;
    out.reserve(w.size() + static_cast<std::size_t>(std::ranges::count(w, step.sigma)));
    for (auto s : w) {
        out.push_back(s);
        if (s == step.sigma) out.push_back(step.bullet);
    }
    return out;
}

/// Result of undoing one expansion on a finite window. A bullet at position 0
/// stands for a sigma just outside the window; `implied_sigma` records it.
struct Deexpansion {
    Word core;
    bool implied_sigma = false;

    /// The core with the implied sigma put back in front.
    Word restored(const ExpansionStep& step) const {
        if (!implied_sigma) return core;
        Word w;
        w.reserve(core.size() + 1);
        w.push_back(step.sigma);
        w.insert(w.end(), core.begin(), core.end());
        return w;
    }
};

/// Pattern check: every bullet sits at position 0 or right after sigma, and
/// every sigma sits at the last position or right before a bullet.
inline std::optional<Deexpansion> deexpand_word(std::span<const Symbol> w, const ExpansionStep& step) {
    Deexpansion d;
    d.core.reserve(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] == step.bullet) {
            if (i > 0 && w[i - 1] != step.sigma) return std::nullopt;
            continue;
        }
        if (w[i] == step.sigma && i + 1 < w.size() && w[i + 1] != step.bullet) return std::nullopt;
        d.core.push_back(w[i]);
    }
    d.implied_sigma = !w.empty() && w.front() == step.bullet;
    return d;
}

/// Cyclic version for period words: the pattern wraps around and no sigma is implied.
/// A word made only of bullets has no preimage.
inline std::optional<Word> deexpand_cyclic(std::span<const Symbol> w, const ExpansionStep& step) {
    const auto n = w.size();
    Word core;
    for (std::size_t i = 0; i < n; ++i) {
        if (w[i] == step.bullet) {
            if (w[(i + n - 1) % n] != step.sigma) return std::nullopt;
            continue;
        }
        if (w[i] == step.sigma && w[(i + 1) % n] != step.bullet) return std::nullopt;
        core.push_back(w[i]);
    }
    if (core.empty()) return std::nullopt;
    return core;
}

/// Product in the base semigroup is nonzero. Symbols must be base edges.
inline bool base_admissible(const RGraph& g, std::span<const Symbol> w) {
    if (w.empty()) return false;
    Element acc = generator(g, EdgeRef(index_of(w.front())));
    for (auto s : w.subspan(1)) {
        append_generator(g, acc, EdgeRef(index_of(s)));
        if (acc.is_zero()) return false;
    }
    return true;
}

/// Admissibility of a nonempty word in the (possibly expanded) shift, without input checks.
inline bool is_admissible_expanded(const ShiftPresentation& p, std::span<const Symbol> w) {
    if (w.empty()) return false;
    if (!p.expanded()) return base_admissible(p.base(), w);
    Word current(w.begin(), w.end());
    for (auto it = p.steps().rbegin(); it != p.steps().rend(); ++it) {
        auto d = deexpand_word(current, *it);
        if (!d) return false;
        current = d->restored(*it);
    }
    return base_admissible(p.base(), current);
}

/// Fully undoes all steps on a period word; nullopt if the cycle is not an image.
inline std::optional<Word> deexpand_cyclic_all(const ShiftPresentation& p, std::span<const Symbol> w) {
    Word current(w.begin(), w.end());
    for (auto it = p.steps().rbegin(); it != p.steps().rend(); ++it) {
        auto core = deexpand_cyclic(current, *it);
        if (!core) return std::nullopt;
        current = std::move(*core);
    }
    return current;
}

} // namespace rgsd
