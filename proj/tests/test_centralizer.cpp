#include <catch_amalgamated.hpp>

#include "dehnq/dehnq.hpp"
#include "oracles.hpp"

using namespace dehnq;

namespace {

QuandlePresentation raw(const PresentationFile& f) {
    return emit_centralizer_presentation(f.group(), centralizer_data(f), conjugacy_data(f));
}

QuandlePresentation simplified(const PresentationFile& f) {
    return simplify_presentation(raw(f), simplify_options(f)).presentation;
}

}  // namespace

TEST_CASE("centralizer route on B3 and the genus-one mapping class group gives the trefoil") {
    auto b3 = builtin("braid:3");
    CHECK(same_relation_set(simplified(b3).relations, golden::trefoil(b3.gens).relations));
    auto m1 = builtin("mcg:genus1");
    CHECK(same_relation_set(simplified(m1).relations, golden::trefoil(m1.gens).relations));
}

TEST_CASE("centralizer route on B4 gives the closed form") {
    CHECK(same_relation_set(simplified(builtin("braid:4")).relations, golden::braid(4).relations));
}

TEST_CASE("dihedral groups") {
    for (int n : {4, 6, 8}) {
        INFO(n);
        CHECK(same_relation_set(simplified(builtin("dihedral:" + std::to_string(n))).relations, golden::dihedral(n).relations));
    }
    for (int n : {3, 5, 7}) {
        INFO(n);
        auto q = simplified(builtin("dihedral:" + std::to_string(n)));
        auto a = winker_enumerate(q, 100, 100000).quandle;
        auto b = winker_enumerate(golden::dihedral(n), 100, 100000).quandle;
        CHECK(quandle_isomorphic(a, b).has_value());
        CHECK(a.n == n);
    }
}

TEST_CASE("right-angled Artin groups and surface groups") {
    for (const auto& name : {"raag:3:1-2,2-3", "raag:4:1-2,2-3,3-4", "surface:2", "surface:3"}) {
        INFO(name);
        auto f = builtin(name);
        auto got = simplified(f);
        auto want = builtin(std::string("golden:") + name).quandle();
        for (auto t : {core_quandle(3), core_quandle(4), transposition_quandle(3)}) CHECK(hom_count(got, t) == hom_count(want, t));
    }
    CHECK(same_relation_set(simplified(builtin("raag:3:1-2,2-3")).relations, builtin("golden:raag:3:1-2,2-3").quandle().relations));
}

TEST_CASE("conjugacy data is verified in the declared quotients") {
    for (const auto& name : {"braid:3", "braid:4", "mcg:genus1", "mcg:genus2", "dihedral:5", "surface:2"}) {
        INFO(name);
        auto f = builtin(name);
        auto rep = verify_conjugacy_data(f.group(), centralizer_data(f), conjugacy_data(f), f.quotients);
        CHECK(rep.ok);
        CHECK(rep.quotients == static_cast<int>(f.quotients.size()));
    }
}

TEST_CASE("a wrong conjugator or centralizer is caught") {
    auto f = builtin("braid:4");
    auto c = centralizer_data(f);
    auto j = conjugacy_data(f);
    auto bad = j;
    bad.edges.front().word = {};
    CHECK_FALSE(verify_conjugacy_data(f.group(), c, bad, f.quotients).ok);
    auto badc = c;
    badc.words.begin()->second.push_back({{1, 1}});
    CHECK_FALSE(verify_conjugacy_data(f.group(), badc, j, f.quotients).ok);
}

TEST_CASE("malformed conjugacy data") {
    auto f = builtin("braid:4");
    auto j = conjugacy_data(f);
    j.edges.push_back({0, j.edges.back().t, {}});
    CHECK_THROWS_AS(emit_centralizer_presentation(f.group(), centralizer_data(f), j), InputError);
    CHECK_THROWS_AS(emit_centralizer_presentation(f.group(), CentralizerData{}, conjugacy_data(f)), MissingData);
}

TEST_CASE("raw centralizer relations hold in the quotients") {
    for (const auto& name : {"braid:5", "mcg:genus1", "mcg:genus2", "dihedral:6", "surface:2"}) {
        INFO(name);
        auto f = builtin(name);
        for (const auto& quo : f.quotients)
            for (const auto& r : raw(f).relations) CHECK(oracle::holds_in(r, quo.images()));
    }
}
