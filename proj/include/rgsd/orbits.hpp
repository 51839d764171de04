#pragma once

// Periodic orbits of a shift presentation and the finite-window test for
// membership of an orbit in A_n.

#include <map>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "rgsd/language.hpp"

namespace rgsd {

enum class PeriodicVerdict { yes, no, inconclusive };

inline std::string_view to_string(PeriodicVerdict v) noexcept {
    switch (v) {
    case PeriodicVerdict::yes: return "yes";
    case PeriodicVerdict::no: return "no";
    case PeriodicVerdict::inconclusive: return "inconclusive";
    }
    return "?";
}

inline std::size_t default_power_cap(std::size_t word_length) { return 2 * (word_length + 2); }

/// Is the point w^infinity in the R-graph shift? Computes w^n for n = 1..cap.
/// A zero power answers "no". Once two consecutive rounds grow the normal
/// form by the same amounts, the pattern repeats and the answer is "yes":
/// with w = P 1 M, w^2 = P (M P) M and the junction M P collapses to a pure
/// plus or pure minus walk, so every further power only repeats that walk.
inline PeriodicVerdict base_periodic_verdict(const RGraph& g, std::span<const EdgeRef> w, std::size_t cap) {
    if (w.empty()) throw std::invalid_argument("periodic test: empty word");
    const Element x = reduce_word(g, w);
    if (x.is_zero()) return PeriodicVerdict::no;
    Element power = x;
    std::optional<std::pair<std::ptrdiff_t, std::ptrdiff_t>> last_growth;
    for (std::size_t n = 2; n <= cap; ++n) {
        Element next = multiply(g, power, x);
        if (next.is_zero()) return PeriodicVerdict::no;
        std::pair growth{static_cast<std::ptrdiff_t>(next.plus_walk().size()) -
                             static_cast<std::ptrdiff_t>(power.plus_walk().size()),
                         static_cast<std::ptrdiff_t>(next.minus_walk().size()) -
                             static_cast<std::ptrdiff_t>(power.minus_walk().size())};
        if (last_growth && *last_growth == growth) return PeriodicVerdict::yes;
        last_growth = growth;
        power = std::move(next);
    }
    return PeriodicVerdict::inconclusive;
}

/// Periodic admissibility in a possibly expanded presentation: the period word
/// is de-expanded cyclically through every step, then tested in the base shift.
inline PeriodicVerdict is_periodic_admissible(const ShiftPresentation& p, std::span<const Symbol> w,
                                              std::size_t cap = 0) {
    if (w.empty()) throw std::invalid_argument("is_periodic_admissible: empty word");
    detail::check_symbols(p, w);
    if (cap == 0) cap = default_power_cap(w.size());
    auto core = deexpand_cyclic_all(p, w);
    if (!core) return PeriodicVerdict::no;
    std::vector<EdgeRef> edges;
    for (auto s : *core) edges.push_back(EdgeRef(index_of(s)));
    return base_periodic_verdict(p.base(), edges, cap);
}

struct PeriodicOrbit {
    /// Primitive and least among its rotations.
    Word period_word;

    std::size_t period() const noexcept { return period_word.size(); }
    friend bool operator==(const PeriodicOrbit&, const PeriodicOrbit&) = default;
};

inline bool is_primitive(std::span<const Symbol> w) {
    const auto n = w.size();
    for (std::size_t d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        bool repeats = true;
        for (std::size_t i = d; i < n && repeats; ++i) repeats = w[i] == w[i - d];
        if (repeats) return false;
    }
    return n > 0;
}

inline Word least_rotation(const ShiftPresentation& p, std::span<const Symbol> w) {
    Word best(w.begin(), w.end());
    Word rot = best;
    for (std::size_t i = 1; i < w.size(); ++i) {
        std::rotate(rot.begin(), rot.begin() + 1, rot.end());
        if (p.word_less(rot, best)) best = rot;
    }
    return best;
}

/// Shortest word whose power is w.
inline Word primitive_root(std::span<const Symbol> w) {
    const auto n = w.size();
    for (std::size_t d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        bool repeats = true;
        for (std::size_t i = d; i < n && repeats; ++i) repeats = w[i] == w[i - d];
        if (repeats) return Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(d));
    }
    return Word(w.begin(), w.end());
}

/// Normalizes a period word into an orbit. Throws for non-primitive words and
/// for words whose periodic point is not (provably) in the shift.
inline PeriodicOrbit make_orbit(const ShiftPresentation& p, std::span<const Symbol> w) {
    if (!is_primitive(w)) throw std::invalid_argument("make_orbit: period word must be nonempty and primitive");
    auto verdict = is_periodic_admissible(p, w);
    if (verdict != PeriodicVerdict::yes)
        throw std::invalid_argument("make_orbit: '" + p.format(w) + "' is not a periodic point (" +
                                    std::string(to_string(verdict)) + ")");
    return PeriodicOrbit{least_rotation(p, w)};
}

struct OrbitEnumeration {
    std::vector<PeriodicOrbit> orbits;
    /// Candidates whose power test hit the cap; reported, never dropped silently.
    std::vector<Word> inconclusive;
};

/// All orbits of period 1..max_period, by period, then lexicographic.
inline OrbitEnumeration enumerate_periodic_orbits(const ShiftPresentation& p, std::size_t max_period) {
    if (max_period == 0) throw std::invalid_argument("enumerate_periodic_orbits: max period must be at least 1");
    OrbitEnumeration out;
    for (std::size_t len = 1; len <= max_period; ++len) {
        for (auto& w : enumerate_words(p, len)) {
            if (!is_primitive(w) || least_rotation(p, w) != w) continue;
            switch (is_periodic_admissible(p, w)) {
            case PeriodicVerdict::yes: out.orbits.push_back({std::move(w)}); break;
            case PeriodicVerdict::inconclusive: out.inconclusive.push_back(std::move(w)); break;
            case PeriodicVerdict::no: break;
            }
        }
    }
    return out;
}

enum class WindowSide { forward, backward };

struct WindowCheck {
    bool passed = true;
    std::size_t failing_phase = 0;
    WindowSide side = WindowSide::forward;
};

/// Finite-window necessary condition for an orbit to lie in A_n: at every
/// phase i of the periodic point y,
///   y[i, i+k)    is in omega+ (y[i-n, i); k, g)
///   y(i-k, i]    is in omega- (y(i, i+n]; k, g)
/// Omega sets are memoized per anchor block.
class WindowChecker {
public:
    WindowChecker(const ShiftPresentation& p, std::size_t k, std::size_t g) : p_(p), k_(k), g_(g) {
        if (k == 0 || g == 0) throw std::invalid_argument("window check: horizons must be at least 1");
    }

    WindowCheck check(const PeriodicOrbit& orbit, std::size_t n) {
        if (n == 0) throw std::invalid_argument("window check: n must be at least 1");
        const auto& y = orbit.period_word;
        const auto len = y.size();
        if (len == 0) throw std::invalid_argument("window check: empty orbit");
        auto at = [&](std::ptrdiff_t i) {
            auto m = static_cast<std::ptrdiff_t>(len);
            return y[static_cast<std::size_t>(((i % m) + m) % m)];
        };
        auto slice = [&](std::ptrdiff_t from, std::size_t count) {
            Word w;
            for (std::size_t j = 0; j < count; ++j) w.push_back(at(from + static_cast<std::ptrdiff_t>(j)));
            return w;
        };
        const auto sn = static_cast<std::ptrdiff_t>(n);
        const auto sk = static_cast<std::ptrdiff_t>(k_);
        for (std::size_t phase = 0; phase < len; ++phase) {
            auto i = static_cast<std::ptrdiff_t>(phase);
            if (!omega(plus_, slice(i - sn, n), true).contains(slice(i, k_))) return {false, phase, WindowSide::forward};
            if (!omega(minus_, slice(i + 1, n), false).contains(slice(i - sk + 1, k_)))
                return {false, phase, WindowSide::backward};
        }
        return {};
    }

private:
    const HorizonSet& omega(std::map<Word, HorizonSet>& cache, const Word& block, bool plus) {
        auto it = cache.find(block);
        if (it == cache.end()) {
            auto set = plus ? omega_plus_truncated(p_, block, k_, g_) : omega_minus_truncated(p_, block, k_, g_);
            it = cache.emplace(block, std::move(set)).first;
        }
        return it->second;
    }

    const ShiftPresentation& p_;
    std::size_t k_;
    std::size_t g_;
    std::map<Word, HorizonSet> plus_;
    std::map<Word, HorizonSet> minus_;
};

inline WindowCheck an_window_check_detailed(const ShiftPresentation& p, const PeriodicOrbit& orbit, std::size_t n,
                                            std::size_t k, std::size_t g) {
    WindowChecker checker(p, k, g);
    return checker.check(orbit, n);
}

inline bool an_window_check(const ShiftPresentation& p, const PeriodicOrbit& orbit, std::size_t n, std::size_t k,
                            std::size_t g) {
    return an_window_check_detailed(p, orbit, n, k, g).passed;
}

} // namespace rgsd
