#include <catch_amalgamated.hpp>

#include "dehnq/dehnq.hpp"
#include "oracles.hpp"

using namespace dehnq;

TEST_CASE("quandle relation parses left-associated") {
    auto f = parse("quandle q\ngens a b\nrel a * b = a\n");
    REQUIRE(f.kind == Kind::quandle);
    REQUIRE(f.quandle_relations.size() == 1);
    const auto& r = f.quandle_relations.front();
    CHECK(r.lhs.base == 0);
    CHECK(r.lhs.tail == GroupWord{{1, 1}});
    CHECK(r.rhs.base == 0);
    CHECK(r.rhs.tail.empty());

    auto g = parse("quandle q\ngens a b c\nrel a * b *- c * a = c\n");
    CHECK(g.quandle_relations.front().lhs.tail == GroupWord{{1, 1}, {2, -1}, {0, 1}});
}

TEST_CASE("malformed relation reports the position of '='") {
    try {
        parse("quandle q\ngens a b\nrel a * = b\n");
        FAIL("no error raised");
    } catch (const SyntaxError& e) {
        CHECK(e.line == 3);
        CHECK(e.column == 9);
    }
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse("quandle q\ngens a b\nrel a * c = b\n"), UnknownGenerator);
    CHECK_THROWS_AS(parse("quandle q\nquandle r\n"), DuplicateSection);
    CHECK_THROWS_AS(parse("monoid m\ngens a b\ndelta : a b\ndelta : b a\n"), DuplicateSection);
    CHECK_THROWS_AS(parse("monoid m\nrel a = a\n"), SyntaxError);
    CHECK_THROWS_AS(parse("widget w\n"), SyntaxError);
    CHECK_THROWS_AS(builtin("no-such-entry"), UnknownBuiltin);
    CHECK_THROWS_AS(builtin("braid:x"), UnknownBuiltin);
}

TEST_CASE("B3 Artin file round-trips") {
    for (const auto& name : {"braid:3", "artin:A2"}) {
        auto f = builtin(name);
        auto text = print(f);
        CHECK(parse(text) == f);
        CHECK(print(parse(text)) == text);
    }
}

TEST_CASE("every catalog entry round-trips through print and parse") {
    for (const auto& name : builtin_names()) {
        INFO(name);
        auto f = builtin(name);
        CHECK(parse(print(f)) == f);
    }
}

TEST_CASE("group words parse with exponents") {
    Alphabet a{{"a", "b"}};
    CHECK(parse_word("a b^-1 a^2", a) == GroupWord{{0, 1}, {1, -1}, {0, 1}, {0, 1}});
    CHECK(parse_word("1", a).empty());
    CHECK(parse_word("", a).empty());
    CHECK_THROWS_AS(parse_word("a c", a), UnknownGenerator);
}

TEST_CASE("torus-knot:2,3 catalog entry") {
    auto m = builtin("torus-knot:2,3").monoid();
    REQUIRE(m.relations.size() == 1);
    CHECK(m.relations.front().lhs == PositiveWord{0, 0});
    CHECK(m.relations.front().rhs == PositiveWord{1, 1, 1});
    CHECK(m.complement->at(0, 1) == PositiveWord{0});
    CHECK(m.complement->at(1, 0) == PositiveWord{1, 1});
}

TEST_CASE("mixed:ex4 is the seven-relation monoid") {
    auto f = builtin("mixed:ex4");
    CHECK(f.gens.size() == 6);
    CHECK(f.monoid_relations.size() == 7);
    auto m = f.monoid();
    // (x1 x2 x3)^6 = (y1 y2 y3 y1 y2 y1)^3
    PositiveWord lhs, rhs;
    for (int i = 0; i < 6; ++i) lhs.insert(lhs.end(), {0, 1, 2});
    for (int i = 0; i < 3; ++i) rhs.insert(rhs.end(), {3, 4, 5, 3, 4, 3});
    CHECK(monoid_equal(lhs, rhs, *m.complement));
}

TEST_CASE("mcg:sphere6 contains the hyperelliptic relator") {
    auto g = builtin("mcg:sphere6").group();
    GroupWord iota = to_group(PositiveWord{0, 1, 2, 3, 4, 4, 3, 2, 1, 0});
    CHECK(std::find(g.relators.begin(), g.relators.end(), iota) != g.relators.end());
}

TEST_CASE("golden prefix and builtin prefix") {
    CHECK(builtin("builtin:braid:3") == builtin("braid:3"));
    CHECK(builtin("golden:braid:4").kind == Kind::quandle);
    CHECK(same_relation_set(builtin("golden:braid:4").quandle().relations, golden::braid(4).relations));
}

TEST_CASE("free and cyclic reduction") {
    GroupWord w{{0, 1}, {1, 1}, {1, -1}, {0, -1}, {2, 1}};
    CHECK(free_reduce(w) == GroupWord{{2, 1}});
    GroupWord c{{0, 1}, {1, 1}, {0, -1}};
    CHECK(cyclic_reduce(c) == GroupWord{{1, 1}});
    CHECK(cyclic_canonical(GroupWord{{1, 1}, {0, 1}}) == cyclic_canonical(GroupWord{{0, -1}, {1, -1}}));
}

TEST_CASE("conjugation_to_term represents w s w^-1") {
    std::mt19937 rng(5);
    for (int k = 0; k < 1000; ++k) {
        auto w = oracle::random_group_word(rng, 3, 8);
        int s = static_cast<int>(rng() % 3);
        auto t = conjugation_to_term(s, w);
        auto want = free_reduce(concat(concat(w, GroupWord{{s, 1}}), inverse(w)));
        CHECK(free_reduce(term_element(t)) == want);
    }
}

TEST_CASE("canonical relation ordering is independent of side order") {
    QuandleRelation r{{0, {{1, 1}}}, {2, {}}};
    QuandleRelation s{{2, {}}, {0, {{1, 1}}}};
    CHECK(canonical(r) == canonical(s));
    CHECK(is_trivial({{0, {{1, 1}, {1, -1}}}, {0, {}}}));
}
