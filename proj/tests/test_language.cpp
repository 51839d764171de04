#include <catch_amalgamated.hpp>

#include <set>

#include "oracles.hpp"
#include "rgsd/io.hpp"

using namespace rgsd;
namespace t = rgsd::testing;

namespace {

ShiftPresentation d2() { return ShiftPresentation(build_dyck(2)); }

ShiftPresentation from_file(const std::string& name) { return ShiftPresentation(RGraph(io::read_graph(t::data_file(name)))); }

std::vector<std::string> fmt(const ShiftPresentation& p, const std::vector<Word>& ws) {
    std::vector<std::string> out;
    for (const auto& w : ws) out.push_back(p.format(w));
    return out;
}

} // namespace

TEST_CASE("is_admissible on D2") {
    auto p = d2();
    CHECK(is_admissible(p, p.parse_word("a1m a1p")));
    CHECK_FALSE(is_admissible(p, p.parse_word("a1m a2p")));
    for (auto s : p.alphabet()) CHECK(is_admissible(p, Word{s}));
    CHECK_THROWS_AS(is_admissible(p, Word{}), std::invalid_argument);
    CHECK_THROWS_AS(is_admissible(p, Word{Symbol(17)}), std::invalid_argument);
    CHECK_THROWS_AS(p.parse_word("a1m zz"), UnknownSymbol);
}

TEST_CASE("enumerate_words counts on D2") {
    auto p = d2();
    CHECK(enumerate_words(p, 1).size() == 4);
    CHECK(enumerate_words(p, 2).size() == 14);
    auto triples = t::all_words(p, 3);
    CHECK(enumerate_words(p, 3).size() ==
          static_cast<std::size_t>(std::ranges::count_if(triples, [&](const Word& w) { return t::oracle_admissible(p.base(), w); })));
    CHECK(fmt(p, enumerate_words(p, 1)) == std::vector<std::string>{"a1m", "a1p", "a2m", "a2p"});
    CHECK_THROWS_AS(enumerate_words(p, 0), std::invalid_argument);
}

TEST_CASE("property: enumerate_words equals the brute-force filter") {
    for (const auto& name : {"d2.json", "d3.json", "markov-dyck-3cycle.json"}) {
        auto p = from_file(name);
        for (std::size_t len = 1; len <= 5; ++len) {
            std::vector<Word> oracle;
            for (auto& w : t::all_words(p, len))
                if (t::oracle_admissible(p.base(), w)) oracle.push_back(std::move(w));
            INFO(name << " length " << len);
            REQUIRE(enumerate_words(p, len) == oracle);
        }
    }
}

TEST_CASE("follower and predecessor sets") {
    auto p = d2();
    CHECK(fmt(p, follower_set(p, p.parse_word("a1m"), 1).members) == std::vector<std::string>{"a1m", "a1p", "a2m"});
    CHECK(fmt(p, follower_set(p, p.parse_word("a2m"), 1).members) == std::vector<std::string>{"a1m", "a2m", "a2p"});
    CHECK(fmt(p, predecessor_set(p, p.parse_word("a1p"), 1).members) == std::vector<std::string>{"a1m", "a1p", "a2p"});
    CHECK_THROWS_AS(follower_set(p, p.parse_word("a1m a2p"), 1), InadmissibleWord);
    CHECK_THROWS_AS(follower_set(p, p.parse_word("a1m"), 0), std::invalid_argument);
}

TEST_CASE("context sets") {
    auto p = d2();
    auto c1 = context_set(p, p.parse_word("a1m"), 1);
    CHECK(c1 != context_set(p, p.parse_word("a2m"), 1));
    CHECK(context_set(p, p.parse_word("a1m a1p"), 1) == context_set(p, p.parse_word("a2m a2p"), 1));

    auto a = p.parse_word("a1p a2m");
    auto ctx = context_set(p, a, 2);
    auto left = predecessor_set(p, a, 2), right = follower_set(p, a, 2);
    for (const auto& [u, v] : ctx.members) {
        CHECK(left.contains(u));
        CHECK(right.contains(v));
        CHECK(t::oracle_admissible(p.base(), detail::concat(u, a, v)));
    }
}

TEST_CASE("context classes on D2") {
    auto p = d2();
    CHECK(context_classes(p, 1, 1).size() == 4);
    auto classes = context_classes(p, 2, 1);
    auto a = p.parse_word("a1m a1p"), b = p.parse_word("a2m a2p");
    bool together = std::ranges::any_of(classes, [&](const std::vector<Word>& c) {
        return std::ranges::find(c, a) != c.end() && std::ranges::find(c, b) != c.end();
    });
    CHECK(together);
    CHECK_THROWS_AS(context_classes(p, 0, 1), std::invalid_argument);
}

TEST_CASE("property: context classes at h+1 refine those at h") {
    for (const auto& name : {"d2.json", "markov-dyck-3cycle.json"}) {
        auto p = from_file(name);
        for (std::size_t h = 1; h <= 2; ++h) {
            auto coarse = context_classes(p, 3, h);
            auto fine = context_classes(p, 3, h + 1);
            std::map<Word, std::size_t> label;
            for (std::size_t i = 0; i < coarse.size(); ++i)
                for (const auto& w : coarse[i]) label[w] = i;
            for (const auto& c : fine)
                for (const auto& w : c) CHECK(label.at(w) == label.at(c.front()));
        }
    }
}

TEST_CASE("omega sets on D2") {
    auto p = d2();
    CHECK(fmt(p, omega_plus_truncated(p, p.parse_word("a1m"), 1, 1).members) ==
          std::vector<std::string>{"a1m", "a1p", "a2m"});

    // Brute force: a2p survives iff no length-1 predecessor u has u a1p a2p = 0.
    auto a = p.parse_word("a1p");
    bool oracle_has_a2p = true;
    for (auto& u : t::all_words(p, 1))
        if (t::oracle_admissible(p.base(), detail::concat(u, a)) &&
            !t::oracle_admissible(p.base(), detail::concat(u, a, p.parse_word("a2p"))))
            oracle_has_a2p = false;
    CHECK(omega_plus_truncated(p, a, 1, 1).contains(p.parse_word("a2p")) == oracle_has_a2p);
}

TEST_CASE("property: omega sets shrink as the opposite horizon grows") {
    for (const auto& name : {"d2.json", "markov-dyck-3cycle.json"}) {
        auto p = from_file(name);
        for (const auto& a : enumerate_words_upto(p, 2)) {
            for (std::size_t g = 1; g <= 2; ++g) {
                auto small = omega_plus_truncated(p, a, 2, g + 1).members;
                auto big = omega_plus_truncated(p, a, 2, g).members;
                for (const auto& b : small) CHECK(std::ranges::find(big, b) != big.end());
                auto msmall = omega_minus_truncated(p, a, 2, g + 1).members;
                auto mbig = omega_minus_truncated(p, a, 2, g).members;
                for (const auto& u : msmall) CHECK(std::ranges::find(mbig, u) != mbig.end());
            }
        }
    }
}

TEST_CASE("property: factorial and bi-extensible") {
    for (const auto& name : {"d2.json", "d2xb2.json", "markov-dyck-3cycle.json"}) {
        auto p = from_file(name);
        for (const auto& w : enumerate_words_upto(p, 4)) {
            for (std::size_t i = 0; i < w.size(); ++i)
                for (std::size_t j = i + 1; j <= w.size(); ++j)
                    REQUIRE(is_admissible(p, std::span(w).subspan(i, j - i)));
            REQUIRE_FALSE(follower_set(p, w, 1).members.empty());
            REQUIRE_FALSE(predecessor_set(p, w, 1).members.empty());
        }
    }
}

TEST_CASE("property: follower sets depend only on the normal form") {
    auto p = from_file("d2.json");
    std::map<std::string, HorizonSet> by_form;
    for (const auto& w : enumerate_words_upto(p, 4)) {
        std::vector<EdgeRef> es;
        for (auto s : w) es.push_back(EdgeRef(index_of(s)));
        auto key = render(p.base(), reduce_word(p.base(), es));
        auto f = follower_set(p, w, 2);
        auto [it, inserted] = by_form.emplace(key, f);
        if (!inserted) REQUIRE(it->second == f);
    }
}

TEST_CASE("periodic admissibility") {
    auto p = d2();
    CHECK(is_periodic_admissible(p, p.parse_word("a1m a1p")) == PeriodicVerdict::yes);
    CHECK(is_periodic_admissible(p, p.parse_word("a1m")) == PeriodicVerdict::yes);
    CHECK(is_periodic_admissible(p, p.parse_word("a1m a2p")) == PeriodicVerdict::no);
    CHECK(is_periodic_admissible(p, p.parse_word("a1p a1m")) == PeriodicVerdict::yes);
    CHECK(is_periodic_admissible(p, p.parse_word("a1p a2m")) == PeriodicVerdict::no);
    CHECK(is_periodic_admissible(p, p.parse_word("a1m"), 2) == PeriodicVerdict::inconclusive);
    CHECK_THROWS_AS(is_periodic_admissible(p, Word{}), std::invalid_argument);
}

TEST_CASE("property: periodic verdict agrees with high powers") {
    for (const auto& name : {"d2.json", "markov-dyck-3cycle.json"}) {
        auto p = from_file(name);
        for (std::size_t len = 1; len <= 4; ++len) {
            for (const auto& w : t::all_words(p, len)) {
                auto verdict = is_periodic_admissible(p, w);
                REQUIRE(verdict != PeriodicVerdict::inconclusive);
                Word power;
                for (int i = 0; i < 50; ++i) power.insert(power.end(), w.begin(), w.end());
                INFO(p.format(w));
                REQUIRE((verdict == PeriodicVerdict::yes) == t::oracle_admissible(p.base(), power));
            }
        }
    }
}

TEST_CASE("periodic orbits on D2") {
    auto p = d2();
    auto one = enumerate_periodic_orbits(p, 1);
    CHECK(one.orbits.size() == 4);
    CHECK(one.inconclusive.empty());

    auto two = enumerate_periodic_orbits(p, 2);
    auto has = [&](std::string_view w) {
        auto word = p.parse_word(w);
        return std::ranges::any_of(two.orbits, [&](const PeriodicOrbit& o) { return o.period_word == word; });
    };
    CHECK(has("a1m a1p"));
    CHECK_FALSE(has("a1m a2p"));
    CHECK_FALSE(has("a1p a1m"));
    CHECK(make_orbit(p, p.parse_word("a1p a1m")) == make_orbit(p, p.parse_word("a1m a1p")));
    CHECK_THROWS_AS(make_orbit(p, p.parse_word("a1m a1m")), std::invalid_argument);
    CHECK_THROWS_AS(make_orbit(p, p.parse_word("a1m a2p")), std::invalid_argument);
}

TEST_CASE("A_n window check") {
    auto p = d2();
    auto orbit = make_orbit(p, p.parse_word("a1m a1p"));
    CHECK(an_window_check(p, orbit, 1, 2, 2) == t::oracle_an_window(p, orbit, 1, 2, 2));
    for (const auto& o : enumerate_periodic_orbits(p, 2).orbits)
        CHECK_NOTHROW(an_window_check(p, o, 2 * o.period() + 1, 1, 1));
    CHECK_THROWS_AS(an_window_check(p, orbit, 0, 1, 1), std::invalid_argument);
}

TEST_CASE("property: window check agrees with brute force") {
    for (const auto& name : {"d2.json", "markov-dyck-3cycle.json"}) {
        auto p = from_file(name);
        for (const auto& o : enumerate_periodic_orbits(p, 3).orbits)
            for (std::size_t n = 1; n <= 2; ++n) {
                INFO(p.format(o.period_word) << " n=" << n);
                REQUIRE(an_window_check(p, o, n, 2, 2) == t::oracle_an_window(p, o, n, 2, 2));
            }
    }
}

TEST_CASE("property: a window pass at larger g implies a pass at smaller g") {
    auto p = d2();
    for (const auto& o : enumerate_periodic_orbits(p, 3).orbits)
        for (std::size_t g = 1; g <= 2; ++g)
            if (an_window_check(p, o, 1, 2, g + 1)) CHECK(an_window_check(p, o, 1, 2, g));
}
