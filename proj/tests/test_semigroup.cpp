#include <catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"
#include "rgsd/io.hpp"

using namespace rgsd;
using rgsd::testing::random_edge_word;
using rgsd::testing::random_graph_data;
using rgsd::testing::random_nonzero_biased_word;

namespace {

std::vector<EdgeRef> word(const RGraph& g, std::initializer_list<std::string_view> ids) {
    std::vector<EdgeRef> w;
    for (auto id : ids) w.push_back(*g.find_edge(id));
    return w;
}

Element gen(const RGraph& g, std::string_view id) { return generator(g, *g.find_edge(id)); }

std::vector<RGraph> sample_graphs(std::mt19937_64& rng) {
    std::vector<RGraph> out{build_dyck(2), build_product_dyck_full(2)};
    for (int i = 0; i < 3; ++i) out.emplace_back(random_graph_data(rng, 3, 2));
    return out;
}

} // namespace

TEST_CASE("idempotents") {
    auto d2 = build_dyck(2);
    auto one = idempotent(d2, "p");
    CHECK(multiply(d2, one, one) == one);
    CHECK(multiply(d2, one, gen(d2, "a1m")) == gen(d2, "a1m"));
    CHECK(multiply(d2, gen(d2, "a1m"), one) == gen(d2, "a1m"));
    CHECK(multiply(d2, one, gen(d2, "a1p")) == gen(d2, "a1p"));
    CHECK_THROWS_AS(idempotent(d2, "nowhere"), std::out_of_range);

    Digraph two{{"p", "q"}, {{"e1", "p", "q"}, {"e2", "q", "p"}}};
    auto md = build_markov_dyck(two);
    CHECK(multiply(md, idempotent(md, "p"), idempotent(md, "q")).is_zero());
}

TEST_CASE("reduce_word examples on D2") {
    auto d2 = build_dyck(2);
    auto p = *d2.find_vertex("p");
    CHECK(reduce_word(d2, word(d2, {"a1m", "a1p"})) == idempotent(d2, p));
    CHECK(reduce_word(d2, word(d2, {"a1m", "a2p"})).is_zero());
    auto x = reduce_word(d2, word(d2, {"a1p", "a1m"}));
    CHECK(x == Element::reduced(word(d2, {"a1p"}), p, word(d2, {"a1m"})));
    CHECK_THROWS_AS(reduce_word(d2, std::vector<EdgeRef>{}), std::invalid_argument);
    CHECK_THROWS_AS(reduce_word(d2, std::vector<EdgeRef>{EdgeRef(99)}), std::out_of_range);
}

TEST_CASE("multiply examples") {
    auto d2 = build_dyck(2);
    auto p = *d2.find_vertex("p");
    auto a1p = Element::reduced(word(d2, {"a1p"}), p, {});
    CHECK(multiply(d2, idempotent(d2, p), a1p) == a1p);

    auto minus = Element::reduced({}, p, word(d2, {"a1m", "a2m"}));
    auto plus = Element::reduced(word(d2, {"a2p", "a1p"}), p, {});
    CHECK(multiply(d2, minus, plus) == idempotent(d2, p));
    CHECK(multiply(d2, plus, minus) == Element::reduced(word(d2, {"a2p", "a1p"}), p, word(d2, {"a1m", "a2m"})));

    Digraph two{{"p", "q"}, {{"e1", "p", "q"}, {"e2", "q", "p"}}};
    auto md = build_markov_dyck(two);
    CHECK_FALSE(reduce_word(md, word(md, {"e1m", "e2m", "e1m"})).is_zero());
    CHECK(reduce_word(md, word(md, {"e1m", "e1m", "e1m"})).is_zero());
}

TEST_CASE("equality") {
    auto d2 = build_dyck(2);
    auto p = *d2.find_vertex("p");
    CHECK(equal(reduce_word(d2, word(d2, {"a1m", "a1p"})), idempotent(d2, p)));
    CHECK_FALSE(equal(idempotent(d2, p), Element::zero()));
    CHECK_FALSE(equal(Element::reduced(word(d2, {"a1p"}), p, {}), Element::reduced(word(d2, {"a2p"}), p, {})));
    CHECK(equal(Element::zero(), Element::zero()));
}

TEST_CASE("render and parse") {
    auto d2 = build_dyck(2);
    auto x = reduce_word(d2, word(d2, {"a2p", "a1p", "a1m"}));
    CHECK(render(d2, x) == "plus:[a2p,a1p] @p minus:[a1m]");
    CHECK(parse_element(d2, "plus:[a2p,a1p] @p minus:[a1m]") == x);
    CHECK(render(d2, Element::zero()) == "0");
    CHECK(parse_element(d2, " 0 ").is_zero());
    CHECK(render(d2, idempotent(d2, "p")) == "plus:[] @p minus:[]");
    CHECK_THROWS_AS(parse_element(d2, "plus:[a1m] @p minus:[]"), std::invalid_argument);
    CHECK_THROWS_AS(parse_element(d2, "plus:[zz] @p minus:[]"), std::invalid_argument);
    CHECK_THROWS_AS(parse_element(d2, "plus:[] @q minus:[]"), std::invalid_argument);
    CHECK_THROWS_AS(parse_element(d2, "plus:[] @p minus:[] extra"), std::invalid_argument);
}

TEST_CASE("rewriting strategies on fixed words") {
    auto d2 = build_dyck(2);
    auto w = word(d2, {"a2p", "a1m", "a2m", "a2p", "a1p", "a1m"});
    std::mt19937_64 rng(7);
    auto left = rewriting::reduce(d2, w, rewriting::Strategy::leftmost);
    CHECK(left == rewriting::reduce(d2, w, rewriting::Strategy::rightmost));
    CHECK(left == rewriting::reduce(d2, w, rewriting::Strategy::random, &rng));
    CHECK(left == reduce_word(d2, w));
    CHECK(render(d2, left) == "plus:[a2p] @p minus:[a1m]");
}

TEST_CASE("property: confluence of the rewriting strategies") {
    std::mt19937_64 rng(1);
    for (const auto& g : sample_graphs(rng)) {
        for (int i = 0; i < 300; ++i) {
            auto w = i % 2 ? random_edge_word(g, rng, 12) : random_nonzero_biased_word(g, rng, 12);
            auto left = rewriting::reduce(g, w, rewriting::Strategy::leftmost);
            REQUIRE(left == rewriting::reduce(g, w, rewriting::Strategy::rightmost));
            REQUIRE(left == rewriting::reduce(g, w, rewriting::Strategy::random, &rng));
            REQUIRE(left == reduce_word(g, w));
        }
    }
}

TEST_CASE("property: associativity and homomorphism") {
    std::mt19937_64 rng(2);
    for (const auto& g : sample_graphs(rng)) {
        for (int i = 0; i < 300; ++i) {
            auto u = random_nonzero_biased_word(g, rng, 6);
            auto v = random_nonzero_biased_word(g, rng, 6);
            auto t = random_nonzero_biased_word(g, rng, 6);
            auto x = reduce_word(g, u), y = reduce_word(g, v), z = reduce_word(g, t);
            REQUIRE(multiply(g, multiply(g, x, y), z) == multiply(g, x, multiply(g, y, z)));
            auto uv = u;
            uv.insert(uv.end(), v.begin(), v.end());
            REQUIRE(reduce_word(g, uv) == multiply(g, x, y));
            REQUIRE(well_formed(g, multiply(g, x, y)));
        }
    }
}

TEST_CASE("property: zero absorption and idempotent laws") {
    std::mt19937_64 rng(3);
    for (const auto& g : sample_graphs(rng)) {
        for (int i = 0; i < 100; ++i) {
            auto x = reduce_word(g, random_nonzero_biased_word(g, rng, 8));
            CHECK(multiply(g, Element::zero(), x).is_zero());
            CHECK(multiply(g, x, Element::zero()).is_zero());
        }
        for (auto e : g.edges()) {
            auto x = generator(g, e);
            CHECK(multiply(g, idempotent(g, g.source(e)), x) == x);
            CHECK(multiply(g, x, idempotent(g, g.target(e))) == x);
        }
        for (auto p : g.vertices()) {
            CHECK(multiply(g, idempotent(g, p), idempotent(g, p)) == idempotent(g, p));
            for (auto q : g.vertices())
                if (p != q) CHECK(multiply(g, idempotent(g, p), idempotent(g, q)).is_zero());
        }
        for (auto f : g.edges(Sign::minus))
            for (auto p : g.edges(Sign::plus)) {
                auto prod = multiply(g, generator(g, f), generator(g, p));
                if (g.related(f, p)) CHECK(prod == idempotent(g, g.source(f)));
                else CHECK(prod.is_zero());
            }
    }
}

TEST_CASE("property: render and parse round trip") {
    std::mt19937_64 rng(4);
    for (const auto& g : sample_graphs(rng)) {
        for (int i = 0; i < 100; ++i) {
            auto x = reduce_word(g, random_nonzero_biased_word(g, rng, 10));
            REQUIRE(parse_element(g, render(g, x)) == x);
        }
    }
}
