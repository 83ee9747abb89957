#include <catch_amalgamated.hpp>

#include "dehnq/dehnq.hpp"
#include "oracles.hpp"

using namespace dehnq;

TEST_CASE("trefoil colorings") {
    auto t = golden::trefoil();
    CHECK(oracle::hom_count(t, core_quandle(3)) == 9);
    CHECK(hom_count(t, core_quandle(3)) == 9);
    CHECK(oracle::hom_count(t, core_quandle(5)) == 5);
    CHECK(hom_count(t, core_quandle(5)) == 5);
}

TEST_CASE("hom_count agrees with exhaustive search") {
    std::vector<QuandlePresentation> pres{golden::trefoil(), golden::braid(4), golden::dihedral(5), golden::dihedral(6),
                                          golden::torus_link(2, 4), golden::mixed_ex3()};
    std::vector<FiniteQuandle> targets;
    for (int n = 1; n <= 4; ++n)
        for (auto& q : all_quandles(n)) targets.push_back(q);
    targets.push_back(transposition_quandle(4));
    for (const auto& p : pres)
        for (const auto& t : targets) CHECK(hom_count(p, t) == oracle::hom_count(p, t));
}

TEST_CASE("quandle counts by order") {
    for (int n = 1; n <= 3; ++n) CHECK(static_cast<int>(all_quandles(n).size()) == oracle::count_quandles(n));
    std::vector<int> want{1, 1, 3, 7, 22};
    for (int n = 1; n <= 5; ++n) CHECK(static_cast<int>(all_quandles(n).size()) == want[static_cast<std::size_t>(n - 1)]);
    for (const auto& q : all_quandles(4)) CHECK(check_axioms(q).ok);
}

TEST_CASE("axiom check") {
    CHECK(check_axioms(core_quandle(5)).ok);
    CHECK(check_axioms(transposition_quandle(4)).ok);
    auto bad = from_table(2, {1, 1, 0, 0});
    CHECK_FALSE(check_axioms(bad).ok);
}

TEST_CASE("isomorphism search returns isomorphisms") {
    auto s3 = detail::adjacent_transpositions(2).images();
    auto conj = conjugation_dehn_quandle(s3, s3).quandle;
    auto t3 = transposition_quandle(3);
    auto f = quandle_isomorphic(conj, t3);
    REQUIRE(f);
    CHECK(oracle::is_isomorphism(conj, t3, *f));
    CHECK(quandle_isomorphic(core_quandle(3), t3).has_value());
    CHECK_FALSE(quandle_isomorphic(core_quandle(5), from_table(5, std::vector<int>{0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 2, 2, 2, 2, 2,
                                                                                  3, 3, 3, 3, 3, 4, 4, 4, 4, 4}))
                    .has_value());
}

TEST_CASE("dihedral Dehn quandles are cores") {
    for (int n = 1; n <= 12; ++n) {
        INFO(n);
        auto g = detail::dihedral_regular(n).images();
        auto q = conjugation_dehn_quandle(g, g).quandle;
        CHECK(q.n == n);
        CHECK(quandle_isomorphic(q, core_quandle(n)).has_value());
    }
}

TEST_CASE("enumeration of finite presentations") {
    for (int n : {3, 4, 5, 6, 7, 8}) {
        INFO(n);
        auto e = winker_enumerate(golden::dihedral(n), 1000, 1000000);
        CHECK(e.quandle.n == n);
        CHECK(check_axioms(e.quandle).ok);
        CHECK(quandle_isomorphic(e.quandle, core_quandle(n)).has_value());
    }
    auto t = winker_enumerate(golden::torus_link_quandle(2, 2), 100, 10000);
    CHECK(t.quandle.n == 2);
}

TEST_CASE("enumeration of an infinite quandle is exhausted") {
    CHECK_THROWS_AS(winker_enumerate(golden::trefoil(), 50, 5000), Exhausted);
}

TEST_CASE("enveloping group of the trefoil quandle") {
    auto g = enveloping_presentation(golden::trefoil());
    CHECK(g.gens.names == std::vector<std::string>{"e_a", "e_b"});
    auto rels = canonical_relators(g.relators);
    auto braid = canonical_relators({free_reduce(concat(to_group(PositiveWord{0, 1, 0}), inverse(to_group(PositiveWord{1, 0, 1}))))});
    CHECK(rels == braid);
}

TEST_CASE("group homomorphism check") {
    auto f = builtin("braid:4");
    CHECK(verify_group_hom(f.group(), f.quotients.front().images()).ok);
    auto ims = f.quotients.front().images();
    std::swap(ims[0], ims[1]);
    ims[2] = ims[1];
    CHECK_FALSE(verify_group_hom(f.group(), ims).ok);
}

TEST_CASE("matrix quotients become permutations") {
    auto f = builtin("mcg:genus1");
    for (const auto& q : f.quotients) {
        auto ims = q.images();
        CHECK(verify_group_hom(f.group(), ims).ok);
        CHECK(static_cast<int>(ims.front().size()) == q.modulus * q.modulus);
    }
}
