#pragma once

// The language of a shift presentation: admissibility, enumeration, and the
// horizon-truncated follower, predecessor, context and omega sets.
//
// Infinite rays are replaced by words of a fixed horizon. Under truncation:
//   - omega sets shrink as the opposite-side horizon grows;
//   - context classes at horizon h+1 refine those at horizon h.

#include <algorithm>
#include <map>
#include <span>
#include <stdexcept>
#include <vector>

#include "rgsd/presentation.hpp"

namespace rgsd {

class InadmissibleWord : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Words of one fixed length, sorted lexicographically in alphabet order.
struct HorizonSet {
    std::size_t horizon = 0;
    std::vector<Word> members;

    bool contains(std::span<const Symbol> w) const {
        return std::ranges::find_if(members, [&](const Word& m) { return std::ranges::equal(m, w); }) != members.end();
    }
    friend bool operator==(const HorizonSet&, const HorizonSet&) = default;
};

struct ContextSet {
    std::size_t horizon = 0;
    /// (left context u, right context v), sorted.
    std::vector<std::pair<Word, Word>> members;

    friend bool operator==(const ContextSet&, const ContextSet&) = default;
};

namespace detail {

inline void check_symbols(const ShiftPresentation& p, std::span<const Symbol> w) {
    for (auto s : w)
        if (!p.contains(s)) throw std::invalid_argument("word contains a symbol outside the alphabet");
}

inline void require_admissible(const ShiftPresentation& p, std::span<const Symbol> a) {
    if (a.empty()) throw std::invalid_argument("anchor word is empty");
    check_symbols(p, a);
    if (!is_admissible_expanded(p, a)) throw InadmissibleWord("anchor word '" + p.format(a) + "' is not admissible");
}

inline Word concat(std::span<const Symbol> a, std::span<const Symbol> b) {
    Word w(a.begin(), a.end());
    w.insert(w.end(), b.begin(), b.end());
    return w;
}

inline Word concat(std::span<const Symbol> a, std::span<const Symbol> b, std::span<const Symbol> c) {
    Word w = concat(a, b);
    w.insert(w.end(), c.begin(), c.end());
    return w;
}

/// Depth-first extension of `prefix` to the right by `length` symbols. The
/// language is factorial, so a branch is cut as soon as it becomes inadmissible.
/// Calls visit(extension) for each admissible completion, in lexicographic order.
template <class Visit>
void extend_right(const ShiftPresentation& p, Word& buffer, std::size_t fixed, std::size_t length, Visit&& visit) {
    if (buffer.size() == fixed + length) {
        visit(std::span<const Symbol>(buffer).subspan(fixed));
        return;
    }
    for (auto s : p.alphabet()) {
        buffer.push_back(s);
        if (is_admissible_expanded(p, buffer)) extend_right(p, buffer, fixed, length, visit);
        buffer.pop_back();
    }
}

} // namespace detail

/// Checked admissibility test: rejects the empty word and foreign symbols.
inline bool is_admissible(const ShiftPresentation& p, std::span<const Symbol> w) {
    if (w.empty()) throw std::invalid_argument("is_admissible: empty word");
    detail::check_symbols(p, w);
    return is_admissible_expanded(p, w);
}

/// All admissible words of exactly `length`, in lexicographic order.
inline std::vector<Word> enumerate_words(const ShiftPresentation& p, std::size_t length) {
    if (length == 0) throw std::invalid_argument("enumerate_words: length must be at least 1");
    std::vector<Word> out;
    Word buffer;
    detail::extend_right(p, buffer, 0, length, [&](std::span<const Symbol> w) { out.emplace_back(w.begin(), w.end()); });
    return out;
}

/// All admissible words of length 1..max_length, shortest first.
inline std::vector<Word> enumerate_words_upto(const ShiftPresentation& p, std::size_t max_length) {
    std::vector<Word> out;
    for (std::size_t l = 1; l <= max_length; ++l) {
        auto ws = enumerate_words(p, l);
        out.insert(out.end(), std::make_move_iterator(ws.begin()), std::make_move_iterator(ws.end()));
    }
    return out;
}

/// {b : |b| = k, a b admissible}.
inline HorizonSet follower_set(const ShiftPresentation& p, std::span<const Symbol> a, std::size_t k) {
    detail::require_admissible(p, a);
    if (k == 0) throw std::invalid_argument("follower_set: horizon must be at least 1");
    HorizonSet out{k, {}};
    Word buffer(a.begin(), a.end());
    detail::extend_right(p, buffer, a.size(), k,
                         [&](std::span<const Symbol> b) { out.members.emplace_back(b.begin(), b.end()); });
    return out;
}

/// {u : |u| = k, u a admissible}.
inline HorizonSet predecessor_set(const ShiftPresentation& p, std::span<const Symbol> a, std::size_t k) {
    detail::require_admissible(p, a);
    if (k == 0) throw std::invalid_argument("predecessor_set: horizon must be at least 1");
    HorizonSet out{k, {}};
    // Suffix-closed as well, so growing to the left prunes the same way.
    auto grow = [&](auto& self, Word& u) -> void {
        if (u.size() == k) {
            out.members.push_back(u);
            return;
        }
        for (auto s : p.alphabet()) {
            Word next;
            next.reserve(u.size() + 1);
            next.push_back(s);
            next.insert(next.end(), u.begin(), u.end());
            if (is_admissible_expanded(p, detail::concat(next, a))) self(self, next);
        }
    };
    Word empty;
    grow(grow, empty);
    std::ranges::sort(out.members, [&](const Word& x, const Word& y) { return p.word_less(x, y); });
    return out;
}

/// {(u, v) : |u| = |v| = h, u a v admissible}.
inline ContextSet context_set(const ShiftPresentation& p, std::span<const Symbol> a, std::size_t h) {
    auto left = predecessor_set(p, a, h);
    ContextSet out{h, {}};
    for (const auto& u : left.members) {
        Word buffer = detail::concat(u, a);
        detail::extend_right(p, buffer, buffer.size(), h, [&](std::span<const Symbol> v) {
            out.members.emplace_back(u, Word(v.begin(), v.end()));
        });
    }
    return out;
}

/// Groups the admissible words of length 1..max_length by equality of their
/// context sets at horizon h. Classes are ordered by their first member
/// (shorter words first, then lexicographic).
inline std::vector<std::vector<Word>> context_classes(const ShiftPresentation& p, std::size_t max_length,
                                                      std::size_t h) {
    if (max_length == 0 || h == 0) throw std::invalid_argument("context_classes: lengths must be at least 1");
    std::vector<std::vector<Word>> classes;
    std::map<std::vector<std::pair<Word, Word>>, std::size_t> index;
    for (auto& w : enumerate_words_upto(p, max_length)) {
        auto ctx = context_set(p, w, h);
        auto [it, inserted] = index.emplace(std::move(ctx.members), classes.size());
        if (inserted) classes.emplace_back();
        classes[it->second].push_back(std::move(w));
    }
    return classes;
}

/// {b in follower_set(a, k) : u a b admissible for every u in predecessor_set(a, g)}.
inline HorizonSet omega_plus_truncated(const ShiftPresentation& p, std::span<const Symbol> a, std::size_t k,
                                       std::size_t g) {
    auto followers = follower_set(p, a, k);
    auto preds = predecessor_set(p, a, g);
    HorizonSet out{k, {}};
    for (auto& b : followers.members) {
        bool all = std::ranges::all_of(preds.members,
                                       [&](const Word& u) { return is_admissible_expanded(p, detail::concat(u, a, b)); });
        if (all) out.members.push_back(std::move(b));
    }
    return out;
}

/// {u in predecessor_set(a, k) : u a v admissible for every v in follower_set(a, g)}.
inline HorizonSet omega_minus_truncated(const ShiftPresentation& p, std::span<const Symbol> a, std::size_t k,
                                        std::size_t g) {
    auto preds = predecessor_set(p, a, k);
    auto followers = follower_set(p, a, g);
    HorizonSet out{k, {}};
    for (auto& u : preds.members) {
        bool all = std::ranges::all_of(followers.members,
                                       [&](const Word& v) { return is_admissible_expanded(p, detail::concat(u, a, v)); });
        if (all) out.members.push_back(std::move(u));
    }
    return out;
}

} // namespace rgsd
