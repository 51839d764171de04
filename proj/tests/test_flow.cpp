#include <catch_amalgamated.hpp>

#include <set>

#include "oracles.hpp"
#include "rgsd/io.hpp"

using namespace rgsd;
namespace t = rgsd::testing;

namespace {

ShiftPresentation d2() { return ShiftPresentation(build_dyck(2)); }

ShiftPresentation from_file(const std::string& name) { return ShiftPresentation(RGraph(io::read_graph(t::data_file(name)))); }

Symbol sym(const ShiftPresentation& p, std::string_view token) { return *p.find(token); }

std::set<Word> as_set(const std::vector<Word>& ws) { return {ws.begin(), ws.end()}; }

} // namespace

TEST_CASE("expand_word") {
    auto p = d2();
    auto step = p.expand("a1m");
    CHECK(p.name(step.bullet) == "._1");
    CHECK(p.symbol_count() == 5);
    CHECK(p.format(expand_word(p.parse_word("a1m a2m a1m"), step)) == "a1m ._1 a2m a1m ._1");
    auto plain = p.parse_word("a2m a2p a1p");
    CHECK(expand_word(plain, step) == plain);
    CHECK_THROWS_AS(expand_word(p.parse_word("a1m ._1"), step), std::invalid_argument);
    CHECK_THROWS_AS(p.expand("zz"), std::invalid_argument);
    CHECK_THROWS_AS(p.expand("a2m", "a1p"), std::invalid_argument);
}

TEST_CASE("deexpand_word") {
    auto p = d2();
    auto step = p.expand("a1m");
    auto d = deexpand_word(p.parse_word("a1m ._1 a1p"), step);
    REQUIRE(d);
    CHECK(p.format(d->core) == "a1m a1p");
    CHECK_FALSE(d->implied_sigma);

    auto lead = deexpand_word(p.parse_word("._1 a2m"), step);
    REQUIRE(lead);
    CHECK(p.format(lead->core) == "a2m");
    CHECK(lead->implied_sigma);
    CHECK(p.format(lead->restored(step)) == "a1m a2m");

    CHECK_FALSE(deexpand_word(p.parse_word("a2m ._1"), step));
    CHECK_FALSE(deexpand_word(p.parse_word("a1m a1p"), step));
    CHECK(deexpand_word(p.parse_word("a2m a1m"), step));
}

TEST_CASE("is_admissible_expanded examples") {
    auto p = d2();
    p.expand("a1m");
    CHECK(is_admissible(p, p.parse_word("a1m ._1 a1p")));
    CHECK_FALSE(is_admissible(p, p.parse_word("a1m a1p")));
    CHECK(is_admissible(p, p.parse_word("._1")));
    CHECK(is_admissible(p, p.parse_word("._1 a2m")));
    CHECK_FALSE(is_admissible(p, p.parse_word("._1 a2p")));
    CHECK_FALSE(is_admissible(p, p.parse_word("._1 ._1")));
}

TEST_CASE("zero steps behave like the base shift") {
    auto p = d2();
    for (std::size_t len = 1; len <= 4; ++len)
        for (const auto& w : t::all_words(p, len)) CHECK(is_admissible_expanded(p, w) == t::oracle_admissible(p.base(), w));
}

TEST_CASE("property: expansion oracle equivalence") {
    for (const auto& name : {"d2.json", "markov-dyck-3cycle.json"}) {
        auto base = from_file(name);
        auto language = t::oracle_base_language(base, 6);
        for (auto sigma : base.alphabet()) {
            auto [q, step] = with_expansion(base, sigma);
            for (std::size_t len = 1; len <= 5; ++len) {
                INFO(name << " sigma " << base.name(sigma) << " length " << len);
                REQUIRE(as_set(enumerate_words(q, len)) == t::oracle_image_subwords(q, len, language));
            }
        }
    }
}

TEST_CASE("property: images of admissible words are admissible and de-expand back") {
    auto base = d2();
    for (auto sigma : base.alphabet()) {
        auto [q, step] = with_expansion(base, sigma);
        for (const auto& w : enumerate_words_upto(base, 4)) {
            auto img = expand_word(w, step);
            REQUIRE(is_admissible(q, img));
            auto back = deexpand_word(img, step);
            REQUIRE(back);
            REQUIRE(back->core == w);
            REQUIRE_FALSE(back->implied_sigma);
        }
    }
}

TEST_CASE("nested steps") {
    auto base = d2();
    auto steps = io::steps_from_json(io::read_json_file(t::data_file("steps-nested.json")));
    auto p = apply_expansion_sequence(base.base(), steps);
    CHECK(p.symbol_count() == 6);
    CHECK(p.format(p.alphabet()) == "._1 ._2 a1m a1p a2m a2p");
    CHECK(is_admissible(p, p.parse_word("a1m ._1 ._2 a1p")));
    CHECK_FALSE(is_admissible(p, p.parse_word("a1m ._1 a1p")));
    auto language = t::oracle_base_language(base, 6);
    for (std::size_t len = 1; len <= 4; ++len) {
        INFO("length " << len);
        CHECK(as_set(enumerate_words(p, len)) == t::oracle_image_subwords(p, len, language));
    }
    std::vector<StepRequest> bad{{"a1m", std::nullopt}, {"._2", std::nullopt}};
    CHECK_THROWS_AS(apply_expansion_sequence(base.base(), bad), std::invalid_argument);
}

TEST_CASE("expanding two symbols in either order agrees up to bullet renaming") {
    auto base = d2();
    std::vector<StepRequest> ab{{"a1m", std::nullopt}, {"a2p", std::nullopt}};
    std::vector<StepRequest> ba{{"a2p", std::nullopt}, {"a1m", std::nullopt}};
    auto p = apply_expansion_sequence(base.base(), ab);
    auto q = apply_expansion_sequence(base.base(), ba);
    auto rename = [&](const Word& w) {
        Word out;
        for (auto s : w) {
            auto n = p.name(s);
            out.push_back(n == "._1" ? sym(q, "._2") : n == "._2" ? sym(q, "._1") : sym(q, n));
        }
        return out;
    };
    for (std::size_t len = 1; len <= 5; ++len) {
        std::set<Word> mapped;
        for (const auto& w : enumerate_words(p, len)) mapped.insert(rename(w));
        INFO("length " << len);
        CHECK(mapped == as_set(enumerate_words(q, len)));
    }
}

TEST_CASE("expand_orbit") {
    auto p = d2();
    auto [q, step] = with_expansion(p, sym(p, "a1m"));
    auto one = expand_orbit(q, make_orbit(p, p.parse_word("a1m")), step);
    CHECK(q.format(one.period_word) == "._1 a1m");
    CHECK(one.period() == 2);
    auto plain = make_orbit(p, p.parse_word("a2m a2p"));
    CHECK(expand_orbit(q, plain, step) == plain);
    CHECK(is_periodic_admissible(q, one.period_word) == PeriodicVerdict::yes);
    CHECK(is_periodic_admissible(q, q.parse_word("a1m a1p")) == PeriodicVerdict::no);
}

TEST_CASE("property: period arithmetic and injectivity of expand_orbit") {
    auto p = d2();
    auto orbits = enumerate_periodic_orbits(p, 4).orbits;
    for (auto sigma : p.alphabet()) {
        auto [q, step] = with_expansion(p, sigma);
        std::set<Word> images;
        for (const auto& o : orbits) {
            auto img = expand_orbit(q, o, step);
            auto count = static_cast<std::size_t>(std::ranges::count(o.period_word, sigma));
            REQUIRE(img.period() == o.period() + count);
            REQUIRE(is_periodic_admissible(q, img.period_word) == PeriodicVerdict::yes);
            images.insert(img.period_word);
        }
        REQUIRE(images.size() == orbits.size());
    }
}

TEST_CASE("unit windows are images of base windows") {
    auto p = d2();
    auto [q, step] = with_expansion(p, sym(p, "a1m"));
    for (std::size_t units = 1; units <= 3; ++units) {
        std::set<Word> images;
        for (const auto& w : enumerate_words(p, units)) images.insert(expand_word(w, step));
        CHECK(as_set(unit_words(q, step, units)) == images);
    }
}

TEST_CASE("omega transport examples") {
    auto p = d2();
    auto a1m = sym(p, "a1m");
    CHECK(verify_omega_transport(p, a1m, p.parse_word("a2m"), 2, 2).equal);
    CHECK(verify_omega_transport(p, a1m, p.parse_word("a1m"), 2, 2).equal);
    for (const auto& a : enumerate_words_upto(p, 2)) CHECK(verify_omega_transport(p, a1m, a, 1, 1).equal);

    auto shifted = verify_omega_transport(p, a1m, p.parse_word("a1p"), 2, 2, HorizonAlignment::shifted);
    CHECK_FALSE(shifted.equal);
    REQUIRE(shifted.witness);
    CHECK(p.format(*shifted.witness) == "a1p a1m");
    CHECK_FALSE(shifted.witness_in_image);
}

TEST_CASE("omega transport batch on D2") {
    auto p = d2();
    for (auto sigma : p.alphabet()) {
        auto r = verify_omega_transport_batch(p, sigma, 3, 2, 2, HorizonAlignment::units);
        CHECK(r.lemma == "21");
        CHECK(r.checked == 66);
        CHECK(r.passed());
    }
}

TEST_CASE("context transport examples") {
    auto p = d2();
    auto a1p = sym(p, "a1p");
    auto same = verify_context_transport(p, a1p, p.parse_word("a1m a1p"), p.parse_word("a2m a2p"), 2);
    CHECK(same.base_equal);
    CHECK(same.expanded_equal);
    auto diff = verify_context_transport(p, a1p, p.parse_word("a1m"), p.parse_word("a2m"), 1);
    CHECK_FALSE(diff.base_equal);
    CHECK_FALSE(diff.expanded_equal);
    CHECK(diff.base_witness);
    auto refl = verify_context_transport(p, a1p, p.parse_word("a2p a1m"), p.parse_word("a2p a1m"), 2);
    CHECK(refl.base_equal);
    CHECK(refl.expanded_equal);
    CHECK_THROWS_AS(verify_context_transport(p, a1p, p.parse_word("a1m a2p"), p.parse_word("a1m"), 1),
                    InadmissibleWord);

    // Symbol horizons h against h + 1 disagree here; unit horizons agree.
    auto a1m = sym(p, "a1m");
    auto lit = verify_context_transport(p, a1m, p.parse_word("a1m"), p.parse_word("a1m a1m"), 1,
                                        HorizonAlignment::shifted);
    CHECK(lit.base_equal);
    CHECK_FALSE(lit.agree());
    CHECK(verify_context_transport(p, a1m, p.parse_word("a1m"), p.parse_word("a1m a1m"), 1).agree());
}

TEST_CASE("context transport batch on D2") {
    auto p = d2();
    auto r = verify_context_transport_batch(p, sym(p, "a2m"), 3, 1);
    CHECK(r.lemma == "22");
    CHECK(r.checked == 66 * 67 / 2);
    CHECK(r.passed());
}

TEST_CASE("window inclusion") {
    auto p = d2();
    auto a1m = sym(p, "a1m");
    auto orbit = make_orbit(p, p.parse_word("a1m a1p"));
    auto res = verify_window_inclusion(p, a1m, orbit, 1, 2, 2);
    CHECK(res.status == InclusionStatus::passed);
    auto [q, step] = with_expansion(p, a1m);
    CHECK(q.format(res.image.period_word) == "._1 a1p a1m");

    auto plain = make_orbit(p, p.parse_word("a2m a2p"));
    auto same = verify_window_inclusion(p, a1m, plain, 1, 2, 2);
    CHECK(same.image == plain);
    if (same.status != InclusionStatus::precondition_failed) CHECK(an_window_check(q, plain, 2, 2, 2));

    auto batch = verify_window_inclusion_batch(p, a1m, 3, 1, 2, 2);
    CHECK(batch.lemma == "31");
    CHECK(batch.passed());
    CHECK(batch.checked + batch.skipped == enumerate_periodic_orbits(p, 3).orbits.size());
}

TEST_CASE("report JSON") {
    auto p = d2();
    auto r = verify_window_inclusion_batch(p, sym(p, "a2p"), 2, 1, 2, 2);
    auto j = io::report_to_json(r);
    CHECK(j["lemma"] == "31");
    CHECK(j["checked"] == r.checked);
    CHECK(j["skipped"] == r.skipped);
    CHECK(j["counterexamples"].is_array());
    CHECK(j["params"]["sigma"] == "a2p");
}
