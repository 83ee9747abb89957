#include <catch_amalgamated.hpp>

#include "dehnq/dehnq.hpp"
#include "oracles.hpp"

using namespace dehnq;

namespace {

NestedTerm random_nested(std::mt19937& rng, int gens, int depth) {
    NestedTerm t{static_cast<int>(rng() % static_cast<unsigned>(gens)), {}};
    int k = depth > 0 ? static_cast<int>(rng() % 4) : 0;
    for (int i = 0; i < k; ++i) t.ops.push_back({random_nested(rng, gens, depth - 1), rng() % 2 ? 1 : -1});
    return t;
}

int nested_value(const NestedTerm& t, const std::vector<int>& a, const FiniteQuandle& q) {
    int x = a[static_cast<std::size_t>(t.base)];
    for (const auto& [arg, e] : t.ops) {
        int y = nested_value(arg, a, q);
        x = e > 0 ? q.op(x, y) : q.op_inv(x, y);
    }
    return x;
}

std::vector<std::string> verified_monoids() {
    std::vector<std::string> out;
    for (const auto& name : builtin_names()) {
        auto f = builtin(name);
        if (f.kind != Kind::monoid) continue;
        auto m = f.monoid();
        if (m.complement && check_conditions(m, Side::right).type != "none") out.push_back(name);
    }
    return out;
}

}  // namespace

TEST_CASE("left-association rewriting preserves values") {
    std::vector<FiniteQuandle> pool;
    for (int n = 1; n <= 6; ++n)
        for (auto& q : all_quandles(n)) pool.push_back(std::move(q));
    pool.push_back(transposition_quandle(4));
    std::mt19937 rng(42);
    int bad = 0;
    for (int k = 0; k < 10000; ++k) {
        const auto& q = pool[rng() % pool.size()];
        std::vector<int> a(4);
        for (auto& x : a) x = static_cast<int>(rng() % static_cast<unsigned>(q.n));
        auto t = random_nested(rng, 4, 3);
        bad += nested_value(t, a, q) != evaluate_term(rewrite_left_associated(t), a, q);
    }
    CHECK(bad == 0);
}

TEST_CASE("residues are coherent and both strategies agree") {
    for (const auto& name : verified_monoids()) {
        INFO(name);
        auto m = builtin(name).monoid();
        const auto& f = *m.complement;
        std::mt19937 rng(7);
        int bad = 0;
        for (int k = 0; k < 1000; ++k) {
            auto u = oracle::random_positive_word(rng, m.gens.size(), 6);
            auto v = oracle::random_positive_word(rng, m.gens.size(), 6);
            auto lhs = to_group(concat(u, residue(u, v, f)));
            auto rhs = to_group(concat(v, residue(v, u, f)));
            bad += !word_problem_trivial(concat(lhs, inverse(rhs)), f);
            auto w = concat(inverse(to_group(u)), to_group(v));
            bad += !(reverse_word(w, f, default_budget(), Strategy::leftmost) ==
                     reverse_word(w, f, default_budget(), Strategy::rightmost));
        }
        CHECK(bad == 0);
    }
}

TEST_CASE("reversing a word and its fraction represent the same element") {
    auto m = builtin("braid:4").monoid();
    const auto& f = *m.complement;
    std::mt19937 rng(3);
    for (int k = 0; k < 500; ++k) {
        auto w = oracle::random_group_word(rng, 3, 8);
        auto fr = reverse_word(w, f);
        auto back = concat(to_group(fr.num), inverse(to_group(fr.den)));
        CHECK(word_problem_trivial(concat(w, inverse(back)), f));
    }
}

TEST_CASE("random quandle presentations round-trip") {
    std::mt19937 rng(9);
    for (int k = 0; k < 200; ++k) {
        QuandlePresentation q{indexed_alphabet("x", 4), {}};
        int rels = static_cast<int>(rng() % 5);
        for (int i = 0; i < rels; ++i) {
            QuandleTerm l{static_cast<int>(rng() % 4), oracle::random_group_word(rng, 4, 5)};
            QuandleTerm r{static_cast<int>(rng() % 4), oracle::random_group_word(rng, 4, 3)};
            q.relations.push_back({l, r});
        }
        auto f = quandle_file("random", q);
        CHECK(parse(print(f)) == f);
    }
}

TEST_CASE("coloring counts are invariant under relabeling relations") {
    auto q = golden::braid(5);
    auto r = q;
    std::reverse(r.relations.begin(), r.relations.end());
    for (auto t : {core_quandle(3), core_quandle(5), transposition_quandle(4)}) CHECK(hom_count(q, t) == hom_count(r, t));
}
