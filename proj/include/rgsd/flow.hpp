#pragma once

// Symbol expansion on orbits, and finite-horizon checks of how the omega sets,
// context sets and A_n windows of a shift transport to its expansion.
//
// The checks are reporters: a finite horizon can exhibit a counterexample or
// accumulate agreement, never prove the statement about infinite rays.

#include <map>
#include <stdexcept>
#include <string_view>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rgsd/orbits.hpp"

namespace rgsd {

/// The orbit of the expanded periodic point. The substitution is applied
/// cyclically, so a sigma in the last position also gains its bullet.
inline PeriodicOrbit expand_orbit(const ShiftPresentation& expanded, const PeriodicOrbit& orbit,
                                  const ExpansionStep& step) {
    auto image = expand_word(orbit.period_word, step);
    return PeriodicOrbit{least_rotation(expanded, primitive_root(image))};
}

/// A presentation with one more step expanding `sigma`.
inline std::pair<ShiftPresentation, ExpansionStep> with_expansion(const ShiftPresentation& p, Symbol sigma) {
    ShiftPresentation q = p;
    auto step = q.expand(sigma);
    return {std::move(q), step};
}

/// Summary of a batch check, shaped for line and JSON output.
struct LemmaReport {
    std::string lemma;
    std::vector<std::pair<std::string, std::string>> params;
    std::size_t checked = 0;
    /// Instances whose precondition failed; they are not counted as checked.
    std::size_t skipped = 0;
    std::vector<std::string> counterexamples;

    bool passed() const noexcept { return counterexamples.empty(); }
};

// ---------------------------------------------------------------------------
// Horizons across an expansion.
//
// A window of m symbols in the expansion covers between m/2 and m symbols of
// the original shift, so equal symbol counts on both sides do not describe the
// same rays. Unit alignment measures expanded windows in units: symbols other
// than the new bullet, with a sigma always carrying its bullet. Unit windows
// are exactly the images of windows of the original shift.
// Shifted alignment uses plain symbol counts (horizon h against h + 1 for
// contexts, and images cut to k symbols for omega sets).

enum class HorizonAlignment { units, shifted };

inline std::string_view to_string(HorizonAlignment a) noexcept {
    return a == HorizonAlignment::units ? "units" : "shifted";
}

/// Admissible words of the expansion that hold exactly `units` units: no
/// leading bullet, no trailing sigma. Lexicographic order.
inline std::vector<Word> unit_words(const ShiftPresentation& q, const ExpansionStep& step, std::size_t units) {
    if (units == 0) throw std::invalid_argument("unit_words: unit count must be at least 1");
    std::vector<Word> out;
    Word buffer;
    auto grow = [&](auto& self, std::size_t count) -> void {
        if (count == units && buffer.back() != step.sigma) {
            out.push_back(buffer);
            return;
        }
        for (auto s : q.alphabet()) {
            bool bullet = s == step.bullet;
            if (bullet && buffer.empty()) continue;
            if (!bullet && count == units) continue;
            buffer.push_back(s);
            if (is_admissible_expanded(q, buffer)) self(self, count + (bullet ? 0 : 1));
            buffer.pop_back();
        }
    };
    grow(grow, 0);
    std::ranges::sort(out, [&](const Word& x, const Word& y) { return q.word_less(x, y); });
    return out;
}

namespace detail {

inline void sort_unique(const ShiftPresentation& q, std::vector<Word>& ws) {
    std::ranges::sort(ws, [&](const Word& x, const Word& y) { return q.word_less(x, y); });
    auto dup = std::ranges::unique(ws);
    ws.erase(dup.begin(), dup.end());
}

/// Context pairs of `a` drawn from fixed candidate windows.
inline std::vector<std::pair<Word, Word>> contexts_from(const ShiftPresentation& q, std::span<const Symbol> a,
                                                        const std::vector<Word>& windows) {
    std::vector<std::pair<Word, Word>> out;
    for (const auto& u : windows) {
        auto ua = concat(u, a);
        if (!is_admissible_expanded(q, ua)) continue;
        for (const auto& v : windows)
            if (is_admissible_expanded(q, concat(ua, v))) out.emplace_back(u, v);
    }
    return out;
}

} // namespace detail

// ---------------------------------------------------------------------------
// Omega sets under expansion.

struct OmegaTransport {
    /// Expanded images of the omega set of the original anchor.
    std::vector<Word> image;
    /// Omega set of the expanded anchor in the expansion.
    std::vector<Word> expanded;
    bool equal = false;
    /// First word in exactly one of the two sets, and whether it is in `image`.
    std::optional<Word> witness;
    bool witness_in_image = false;
};

/// Compares phi+(omega+(a; k, g)) with omega+(phi(a); k, g) in the expansion.
inline OmegaTransport verify_omega_transport(const ShiftPresentation& p, Symbol sigma, std::span<const Symbol> a,
                                             std::size_t k, std::size_t g,
                                             HorizonAlignment align = HorizonAlignment::units) {
    auto [q, step] = with_expansion(p, sigma);
    OmegaTransport out;
    for (const auto& b : omega_plus_truncated(p, a, k, g).members) {
        auto img = expand_word(b, step);
        if (align == HorizonAlignment::shifted) img.resize(k);
        out.image.push_back(std::move(img));
    }
    detail::sort_unique(q, out.image);

    const auto fa = expand_word(a, step);
    if (align == HorizonAlignment::shifted) {
        out.expanded = omega_plus_truncated(q, fa, k, g).members;
    } else {
        std::vector<Word> preds;
        for (auto& u : unit_words(q, step, g))
            if (is_admissible_expanded(q, detail::concat(u, fa))) preds.push_back(std::move(u));
        for (auto& v : unit_words(q, step, k)) {
            auto fav = detail::concat(fa, v);
            if (!is_admissible_expanded(q, fav)) continue;
            bool all = std::ranges::all_of(
                preds, [&](const Word& u) { return is_admissible_expanded(q, detail::concat(u, fav)); });
            if (all) out.expanded.push_back(std::move(v));
        }
    }

    out.equal = out.image == out.expanded;
    if (!out.equal) {
        auto missing_from = [](const std::vector<Word>& xs, const std::vector<Word>& ys) -> std::optional<Word> {
            for (const auto& w : xs)
                if (std::ranges::find(ys, w) == ys.end()) return w;
            return std::nullopt;
        };
        out.witness = missing_from(out.image, out.expanded);
        out.witness_in_image = out.witness.has_value();
        if (!out.witness) out.witness = missing_from(out.expanded, out.image);
    }
    return out;
}

/// Every admissible anchor of length 1..max_length.
inline LemmaReport verify_omega_transport_batch(const ShiftPresentation& p, Symbol sigma, std::size_t max_length,
                                                std::size_t k, std::size_t g,
                                                HorizonAlignment align = HorizonAlignment::units) {
    LemmaReport r{"21",
                  {{"sigma", p.name(sigma)},
                   {"max_length", std::to_string(max_length)},
                   {"k", std::to_string(k)},
                   {"g", std::to_string(g)},
                   {"alignment", std::string(to_string(align))}},
                  0, 0, {}};
    auto [q, step] = with_expansion(p, sigma);
    for (const auto& a : enumerate_words_upto(p, max_length)) {
        auto t = verify_omega_transport(p, sigma, a, k, g, align);
        ++r.checked;
        if (!t.equal) {
            r.counterexamples.push_back("a=[" + p.format(a) + "] " + (t.witness_in_image ? "image-only" : "expanded-only") +
                                        " member [" + q.format(*t.witness) + "]");
        }
    }
    return r;
}

// ---------------------------------------------------------------------------
// Context sets under expansion.

struct ContextTransport {
    bool base_equal = false;
    bool expanded_equal = false;
    /// A context pair in exactly one of the two sets, if they differ.
    std::optional<std::pair<Word, Word>> base_witness;
    std::optional<std::pair<Word, Word>> expanded_witness;

    bool agree() const noexcept { return base_equal == expanded_equal; }
};

namespace detail {

inline std::optional<std::pair<Word, Word>> symmetric_difference_member(const std::vector<std::pair<Word, Word>>& x,
                                                                        const std::vector<std::pair<Word, Word>>& y) {
    for (const auto& m : x)
        if (std::ranges::find(y, m) == y.end()) return m;
    for (const auto& m : y)
        if (std::ranges::find(x, m) == x.end()) return m;
    return std::nullopt;
}

/// Context sets of expanded words, at unit horizon h or symbol horizon h + 1.
class ExpandedContexts {
public:
    ExpandedContexts(const ShiftPresentation& q, const ExpansionStep& step, std::size_t h, HorizonAlignment align)
        : q_(q), step_(step), h_(h), align_(align) {
        if (align == HorizonAlignment::units) windows_ = unit_words(q, step, h);
    }

    std::vector<std::pair<Word, Word>> of(std::span<const Symbol> b) const {
        auto fb = expand_word(b, step_);
        if (align_ == HorizonAlignment::shifted) return context_set(q_, fb, h_ + 1).members;
        return contexts_from(q_, fb, windows_);
    }

private:
    const ShiftPresentation& q_;
    ExpansionStep step_;
    std::size_t h_;
    HorizonAlignment align_;
    std::vector<Word> windows_;
};

} // namespace detail

/// Context equality of b, b' at horizon h versus context equality of their
/// images at the aligned horizon in the expansion.
inline ContextTransport verify_context_transport(const ShiftPresentation& p, Symbol sigma, std::span<const Symbol> b,
                                                 std::span<const Symbol> b2, std::size_t h,
                                                 HorizonAlignment align = HorizonAlignment::units) {
    detail::require_admissible(p, b);
    detail::require_admissible(p, b2);
    auto [q, step] = with_expansion(p, sigma);
    ContextTransport out;
    auto cb = context_set(p, b, h).members;
    auto cb2 = context_set(p, b2, h).members;
    out.base_equal = cb == cb2;
    if (!out.base_equal) out.base_witness = detail::symmetric_difference_member(cb, cb2);
    detail::ExpandedContexts ctx(q, step, h, align);
    auto eb = ctx.of(b);
    auto eb2 = ctx.of(b2);
    out.expanded_equal = eb == eb2;
    if (!out.expanded_equal) out.expanded_witness = detail::symmetric_difference_member(eb, eb2);
    return out;
}

/// All pairs b <= b' of admissible words of length 1..max_length. Context sets
/// are computed once per word and compared through class labels.
inline LemmaReport verify_context_transport_batch(const ShiftPresentation& p, Symbol sigma, std::size_t max_length,
                                                  std::size_t h, HorizonAlignment align = HorizonAlignment::units) {
    LemmaReport r{"22",
                  {{"sigma", p.name(sigma)},
                   {"max_length", std::to_string(max_length)},
                   {"h", std::to_string(h)},
                   {"alignment", std::string(to_string(align))}},
                  0, 0, {}};
    auto [q, step] = with_expansion(p, sigma);
    detail::ExpandedContexts ctx(q, step, h, align);
    const auto words = enumerate_words_upto(p, max_length);

    using Key = std::vector<std::pair<Word, Word>>;
    auto label = [](std::map<Key, std::size_t>& index, Key c) {
        return index.emplace(std::move(c), index.size()).first->second;
    };
    std::map<Key, std::size_t> base_index, expanded_index;
    std::vector<std::size_t> base_label, expanded_label;
    for (const auto& w : words) {
        base_label.push_back(label(base_index, context_set(p, w, h).members));
        expanded_label.push_back(label(expanded_index, ctx.of(w)));
    }
    for (std::size_t i = 0; i < words.size(); ++i) {
        for (std::size_t j = i; j < words.size(); ++j) {
            ++r.checked;
            bool base_equal = base_label[i] == base_label[j];
            bool expanded_equal = expanded_label[i] == expanded_label[j];
            if (base_equal != expanded_equal) {
                r.counterexamples.push_back("b=[" + p.format(words[i]) + "] b'=[" + p.format(words[j]) + "] base " +
                                            (base_equal ? "equal" : "unequal") + ", expanded " +
                                            (expanded_equal ? "equal" : "unequal"));
            }
        }
    }
    return r;
}

// ---------------------------------------------------------------------------
// A_n windows under expansion.

enum class InclusionStatus { passed, failed, precondition_failed };

inline std::string_view to_string(InclusionStatus s) noexcept {
    switch (s) {
    case InclusionStatus::passed: return "passed";
    case InclusionStatus::failed: return "failed";
    case InclusionStatus::precondition_failed: return "precondition failed";
    }
    return "?";
}

struct WindowInclusion {
    InclusionStatus status = InclusionStatus::passed;
    PeriodicOrbit image;
    /// The failing window of the image (or of the orbit itself on a precondition failure).
    WindowCheck window;
};

/// If the orbit passes the window check for n in the shift, its expanded
/// image should pass the window check for 2n in the expansion.
inline WindowInclusion verify_window_inclusion(const ShiftPresentation& p, Symbol sigma, const PeriodicOrbit& orbit,
                                               std::size_t n, std::size_t k, std::size_t g) {
    auto [q, step] = with_expansion(p, sigma);
    WindowInclusion out;
    out.image = expand_orbit(q, orbit, step);
    auto pre = an_window_check_detailed(p, orbit, n, k, g);
    if (!pre.passed) {
        out.status = InclusionStatus::precondition_failed;
        out.window = pre;
        return out;
    }
    out.window = an_window_check_detailed(q, out.image, 2 * n, k, g);
    out.status = out.window.passed ? InclusionStatus::passed : InclusionStatus::failed;
    return out;
}

/// Every orbit of period 1..max_period that passes the window check for n.
inline LemmaReport verify_window_inclusion_batch(const ShiftPresentation& p, Symbol sigma, std::size_t max_period,
                                                 std::size_t n, std::size_t k, std::size_t g) {
    LemmaReport r{"31",
                  {{"sigma", p.name(sigma)},
                   {"max_period", std::to_string(max_period)},
                   {"n", std::to_string(n)},
                   {"k", std::to_string(k)},
                   {"g", std::to_string(g)}},
                  0, 0, {}};
    auto [q, step] = with_expansion(p, sigma);
    WindowChecker base(p, k, g);
    WindowChecker expanded(q, k, g);
    auto orbits = enumerate_periodic_orbits(p, max_period);
    for (const auto& w : orbits.inconclusive) r.counterexamples.push_back("inconclusive power test for [" + p.format(w) + "]");
    for (const auto& o : orbits.orbits) {
        if (!base.check(o, n).passed) {
            ++r.skipped;
            continue;
        }
        ++r.checked;
        auto image = expand_orbit(q, o, step);
        auto res = expanded.check(image, 2 * n);
        if (!res.passed) {
            r.counterexamples.push_back("orbit [" + p.format(o.period_word) + "] -> [" + q.format(image.period_word) +
                                        "] fails at phase " + std::to_string(res.failing_phase) +
                                        (res.side == WindowSide::forward ? " (forward)" : " (backward)"));
        }
    }
    return r;
}

} // namespace rgsd
