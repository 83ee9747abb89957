// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "dehnq/dehnq.hpp"

using namespace dehnq;

namespace {

// Pinned thresholds and expected values.
constexpr double kSecondsPerCriterion = 60.0;
constexpr double kSecondsGenus2 = 300.0;
constexpr std::uint64_t kTrefoilCore3 = 9;
constexpr std::uint64_t kTrefoilCore5 = 5;
constexpr std::size_t kTorusKnotDivisors = 5;
constexpr std::size_t kBraid3Divisors = 6;
constexpr int kReversingPairs = 1000;
constexpr int kMaxWordLength = 6;
constexpr int kRewriteCases = 10000;
constexpr int kMaxCatalogOrder = 6;

struct Outcome {
    bool pass = true;
    std::vector<std::string> notes;

    void check(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            notes.push_back("violated: " + what);
        }
    }
    void note(const std::string& s) { notes.push_back(s); }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

QuandlePresentation garside_simplified(const PresentationFile& f) {
    return simplify_presentation(emit_right_presentation(f.monoid()), simplify_options(f)).presentation;
}

QuandlePresentation centralizer_raw(const PresentationFile& f) {
    return emit_centralizer_presentation(f.group(), centralizer_data(f), conjugacy_data(f));
}

QuandlePresentation centralizer_simplified(const PresentationFile& f) {
    return simplify_presentation(centralizer_raw(f), simplify_options(f)).presentation;
}

// Closed-form braid relations written out as text.
QuandlePresentation braid_expected(int n) {
    std::ostringstream t;
    t << "quandle expected\ngens";
    for (int i = 1; i < n; ++i) t << " s" << i;
    t << "\n";
    for (int i = 1; i + 1 < n; ++i) t << "rel s" << i << " * s" << i + 1 << " * s" << i << " = s" << i + 1 << "\n";
    t << "rel s2 * s1 * s2 = s1\n";
    for (int i = 1; i < n; ++i)
        for (int j = i + 2; j < n; ++j) t << "rel s" << i << " * s" << j << " = s" << i << "\n";
    return parse(t.str()).quandle();
}

Outcome criterion1() {
    Outcome o;
    for (int n : {3, 4, 5}) {
        auto f = builtin("braid:" + std::to_string(n));
        auto got = garside_simplified(f);
        o.check(same_relation_set(got.relations, braid_expected(n).relations), "braid:" + std::to_string(n) + " relation set");
        o.note("braid:" + std::to_string(n) + " -> " + std::to_string(got.relations.size()) + " relations");
    }
    return o;
}

Outcome criterion2() {
    Outcome o;
    for (int n : {3, 5, 7, 4, 6, 8}) {
        auto e = winker_enumerate(golden::dihedral(n), 1000, 1000000);
        o.check(e.quandle.n == n, "order of dihedral presentation " + std::to_string(n));
        o.check(quandle_isomorphic(e.quandle, core_quandle(n)).has_value(), "isomorphic to Core(Z" + std::to_string(n) + ")");
    }
    return o;
}

Outcome criterion3() {
    Outcome o;
    for (int n = 1; n <= 12; ++n) {
        auto g = detail::dihedral_regular(n).images();
        auto q = conjugation_dehn_quandle(g, g).quandle;
        o.check(q.n == n && quandle_isomorphic(q, core_quandle(n)).has_value(), "D" + std::to_string(n));
    }
    return o;
}

// Exhaustive count over all generator assignments; inverse translations found by search.
std::uint64_t oracle_hom_count(const QuandlePresentation& p, const FiniteQuandle& t) {
    int k = p.gens.size(), n = t.n;
    auto value = [&](const QuandleTerm& term, const std::vector<int>& a) {
        int x = a[static_cast<std::size_t>(term.base)];
        for (const auto& l : term.tail) {
            int y = a[static_cast<std::size_t>(l.gen)];
            if (l.sign > 0) {
                x = t.table[static_cast<std::size_t>(x * n + y)];
            } else {
                int z = 0;
                while (t.table[static_cast<std::size_t>(z * n + y)] != x) ++z;
                x = z;
            }
        }
        return x;
    };
    std::uint64_t count = 0;
    std::vector<int> a(static_cast<std::size_t>(k), 0);
    while (true) {
        bool ok = true;
        for (const auto& r : p.relations)
            if (value(r.lhs, a) != value(r.rhs, a)) {
                ok = false;
                break;
            }
        count += ok;
        int i = 0;
        while (i < k && ++a[static_cast<std::size_t>(i)] == n) a[static_cast<std::size_t>(i++)] = 0;
        if (i == k) break;
    }
    return count;
}

Outcome criterion4() {
    Outcome o;
    auto tre = builtin("trefoil").quandle();
    for (auto [n, want] : {std::pair{3, kTrefoilCore3}, std::pair{5, kTrefoilCore5}}) {
        auto q = core_quandle(n);
        auto oracle = oracle_hom_count(tre, q);
        auto main = hom_count(tre, q);
        o.check(oracle == want, "oracle Core(Z" + std::to_string(n) + ") = " + std::to_string(oracle));
        o.check(main == oracle, "hom_count Core(Z" + std::to_string(n) + ") = " + std::to_string(main));
    }
    return o;
}

std::vector<FiniteQuandle> route_targets() {
    std::vector<FiniteQuandle> t;
    for (int n = 1; n <= 8; ++n) t.push_back(core_quandle(n));
    t.push_back(transposition_quandle(3));
    t.push_back(transposition_quandle(4));
    return t;
}

std::vector<std::uint64_t> hom_vector(const QuandlePresentation& p, const std::vector<FiniteQuandle>& targets) {
    std::vector<std::uint64_t> v;
    for (const auto& t : targets) v.push_back(hom_count(p, t));
    return v;
}

std::string show(const std::vector<std::uint64_t>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
    return s + "]";
}

Outcome criterion5() {
    Outcome o;
    auto targets = route_targets();
    for (int n : {3, 4}) {
        auto f = builtin("braid:" + std::to_string(n));
        auto a = hom_vector(garside_simplified(f), targets);
        auto b = hom_vector(centralizer_simplified(f), targets);
        o.check(a == b, "B" + std::to_string(n) + " routes " + show(a) + " vs " + show(b));
    }
    for (auto [n, m] : {std::pair{2, 3}, std::pair{3, 2}, std::pair{2, 4}}) {
        std::string tag = std::to_string(n) + "," + std::to_string(m);
        auto a = hom_vector(emit_right_presentation(builtin("torus-link:" + tag).monoid()), targets);
        auto b = hom_vector(golden::torus_link_quandle(n, m), targets);
        o.check(a == b, "T(" + tag + ") " + show(a) + " vs " + show(b));
    }
    auto t0 = std::chrono::steady_clock::now();
    auto a = hom_vector(golden::genus2(), targets);
    auto b = hom_vector(golden::d06(), targets);
    o.check(a == b, "genus 2 vs D06 " + show(a) + " vs " + show(b));
    o.check(seconds_since(t0) < kSecondsGenus2, "genus-2 comparison time");
    o.note("genus 2 / D06 vector " + show(a));
    return o;
}

Outcome criterion6() {
    Outcome o;
    auto b4 = check_conditions(builtin("braid:4").monoid(), Side::right);
    for (auto k : {"(ii)", "(iii)", "(iv)"}) o.check(b4.get(k) == Status::pass, std::string("braid:4 ") + k);
    o.check(b4.delta_witness == Status::pass && b4.type == "R9", "braid:4 type " + b4.type);
    auto tk = check_conditions(builtin("torus-knot:2,3").monoid(), Side::right);
    o.check(tk.get("(ii)") == Status::pass && tk.get("(iii)") == Status::pass && tk.get("(iv)") == Status::fail,
            "torus-knot:2,3 items");
    o.check(tk.type == "R8", "torus-knot:2,3 type " + tk.type);
    auto e3 = check_conditions(builtin("mixed:ex3").monoid(), Side::right);
    o.check(e3.type == "R8", "mixed:ex3 type " + e3.type);
    auto e4 = check_conditions(builtin("mixed:ex4").monoid(), Side::right);
    o.check(e4.type == "R9", "mixed:ex4 type " + e4.type);
    return o;
}

// Every word equal to w in the monoid, found by substituting relation sides anywhere.
std::set<PositiveWord> word_class(const PositiveWord& w, const MonoidPresentation& m) {
    std::set<PositiveWord> seen{w};
    std::vector<PositiveWord> todo{w};
    while (!todo.empty()) {
        auto x = todo.back();
        todo.pop_back();
        for (const auto& r : m.relations)
            for (const auto& [from, to] : {std::pair{r.lhs, r.rhs}, std::pair{r.rhs, r.lhs}})
                for (std::size_t i = 0; i + from.size() <= x.size(); ++i) {
                    if (!std::equal(from.begin(), from.end(), x.begin() + static_cast<long>(i))) continue;
                    PositiveWord y(x.begin(), x.begin() + static_cast<long>(i));
                    y.insert(y.end(), to.begin(), to.end());
                    y.insert(y.end(), x.begin() + static_cast<long>(i + from.size()), x.end());
                    if (seen.insert(y).second) todo.push_back(y);
                }
    }
    return seen;
}

PositiveWord class_key(const PositiveWord& w, const MonoidPresentation& m) { return *word_class(w, m).begin(); }

// Classes of prefixes (or suffixes) of the words representing delta.
std::set<PositiveWord> oracle_divisors(const MonoidPresentation& m, bool right) {
    std::set<PositiveWord> out;
    for (const auto& w : word_class(*m.delta, m))
        for (std::size_t k = 0; k <= w.size(); ++k) {
            PositiveWord d = right ? PositiveWord(w.end() - static_cast<long>(k), w.end())
                                   : PositiveWord(w.begin(), w.begin() + static_cast<long>(k));
            out.insert(class_key(d, m));
        }
    return out;
}

Outcome criterion7() {
    Outcome o;
    for (auto [name, want] : {std::pair{"torus-knot:2,3", kTorusKnotDivisors}, std::pair{"braid:3", kBraid3Divisors}}) {
        auto m = builtin(name).monoid();
        const auto& f = right_complement(m);
        auto left_oracle = oracle_divisors(m, false);
        auto right_oracle = oracle_divisors(m, true);
        o.check(left_oracle.size() == want, std::string(name) + " oracle count " + std::to_string(left_oracle.size()));
        auto left = enumerate_divisors(m, *m.delta);
        auto right = enumerate_right_divisors(m, *m.delta);
        std::set<PositiveWord> lk, rk;
        for (const auto& d : left) lk.insert(class_key(d, m));
        for (const auto& d : right) rk.insert(class_key(d, m));
        o.check(left.size() == want && lk == left_oracle, std::string(name) + " left divisors");
        o.check(right.size() == want && rk == right_oracle, std::string(name) + " right divisors");
        o.check(lk == rk, std::string(name) + " left set = right set");
        std::set<PositiveWord> image;
        for (const auto& d : left) image.insert(class_key(garside_automorphism(d, *m.delta, f), m));
        o.check(image == lk, std::string(name) + " phi is a bijection of divisors");
        o.check(garside_automorphism({}, *m.delta, f).empty(), std::string(name) + " phi fixes 1");
        o.check(class_key(garside_automorphism(*m.delta, *m.delta, f), m) == class_key(*m.delta, m),
                std::string(name) + " phi fixes delta");
    }
    return o;
}

Perm term_value(const QuandleTerm& t, const std::vector<Perm>& images) {
    return evaluate_word(term_element(t), images, static_cast<int>(images.front().size()));
}

int violations(const QuandlePresentation& q, const std::vector<Quotient>& quotients) {
    int bad = 0;
    for (const auto& quo : quotients) {
        auto ims = quo.images();
        for (const auto& r : q.relations) bad += term_value(r.lhs, ims) != term_value(r.rhs, ims);
    }
    return bad;
}

Outcome criterion8() {
    Outcome o;
    int checked = 0;
    std::vector<std::string> unswept;
    for (const auto& name : builtin_names()) {
        auto f = builtin(name);
        std::vector<std::pair<std::string, QuandlePresentation>> emitted;
        std::vector<Quotient> quotients = f.quotients;
        if (f.kind == Kind::monoid) {
            try {
                auto m = f.monoid();
                auto right = emit_right_presentation(m);
                emitted.push_back({"right", right});
                emitted.push_back({"right simplified", simplify_presentation(right, simplify_options(f)).presentation});
                emitted.push_back({"left", emit_left_presentation(m)});
            } catch (const Error& e) {
                o.note(name + ": Garside route not applicable (" + e.what() + ")");
            }
        }
        if (!f.centralizers.empty()) {
            auto raw = centralizer_raw(f);
            emitted.push_back({"centralizer", raw});
            emitted.push_back({"centralizer simplified", simplify_presentation(raw, simplify_options(f)).presentation});
        }
        if (f.kind == Kind::quandle && name.rfind("golden:", 0) == 0) {
            quotients = builtin(name.substr(7)).quotients;
            emitted.push_back({"golden", f.quandle()});
        }
        if (emitted.empty()) continue;
        if (quotients.empty()) {
            unswept.push_back(name);
            continue;
        }
        for (const auto& [route, q] : emitted) {
            int bad = violations(q, quotients);
            o.check(bad == 0, name + " " + route + ": " + std::to_string(bad) + " violations");
            checked += static_cast<int>(q.relations.size() * quotients.size());
        }
    }
    o.note(std::to_string(checked) + " relation/quotient evaluations");
    if (!unswept.empty()) {
        std::string s = "no declared quotient:";
        for (const auto& n : unswept) s += " " + n;
        o.note(s);
    }
    return o;
}

Outcome criterion9() {
    Outcome o;
    std::mt19937 rng(20261014);
    int monoids = 0;
    for (const auto& name : builtin_names()) {
        auto f = builtin(name);
        if (f.kind != Kind::monoid) continue;
        auto m = f.monoid();
        if (!m.complement || check_conditions(m, Side::right).type == "none") continue;
        ++monoids;
        const auto& fc = *m.complement;
        std::uniform_int_distribution<int> len(0, kMaxWordLength), gen(0, m.gens.size() - 1);
        auto word = [&] {
            PositiveWord w(static_cast<std::size_t>(len(rng)));
            for (auto& x : w) x = gen(rng);
            return w;
        };
        int bad = 0;
        for (int k = 0; k < kReversingPairs; ++k) {
            auto u = word(), v = word();
            try {
                auto uv = residue(u, v, fc), vu = residue(v, u, fc);
                auto lhs = to_group(concat(u, uv)), rhs = to_group(concat(v, vu));
                if (!word_problem_trivial(concat(lhs, inverse(rhs)), fc)) ++bad;
                auto w = concat(inverse(to_group(u)), to_group(v));
                if (!(reverse_word(w, fc, default_budget(), Strategy::leftmost) ==
                      reverse_word(w, fc, default_budget(), Strategy::rightmost)))
                    ++bad;
            } catch (const BudgetExceeded&) {
                ++bad;
            }
        }
        o.check(bad == 0, name + ": " + std::to_string(bad) + " violations");
    }
    o.note(std::to_string(monoids) + " monoids x " + std::to_string(kReversingPairs) + " pairs");
    return o;
}

// The enveloping-group relator set as displayed: far commutators, braid relations, [e_j, iota] for all j.
std::vector<GroupWord> d06_env_expected() {
    auto rels = detail::braid_relators(5);
    auto iota = detail::gw(detail::iota_word());
    for (int j = 0; j < 5; ++j) rels.push_back(detail::commutator({{j, 1}}, iota));
    return canonical_relators(rels);
}

Outcome criterion10() {
    Outcome o;
    auto got = canonical_relators(enveloping_presentation(golden::d06()).relators);
    auto want = d06_env_expected();
    auto core = canonical_relators(detail::braid_relators(5));
    bool core_ok = std::includes(got.begin(), got.end(), core.begin(), core.end());
    o.note(std::string("far and braid relators present: ") + (core_ok ? "yes" : "no"));
    o.note("relators: got " + std::to_string(got.size()) + ", displayed set " + std::to_string(want.size()));
    // Diagnostics in B6: the extra displayed relators follow from braid relations, and the long
    // relator is conjugate to [e_1, iota]^(+-1).
    auto b6 = builtin("braid:6").monoid();
    const auto& f = *b6.complement;
    auto iota = detail::gw(detail::iota_word());
    bool others = true;
    for (int j = 1; j < 5; ++j) others = others && word_problem_trivial(detail::commutator({{j, 1}}, iota), f);
    o.note(std::string("[e_j, iota] trivial from braid relations for j = 2..5: ") + (others ? "yes" : "no"));
    GroupWord longrel;
    for (const auto& r : got)
        if (!std::binary_search(core.begin(), core.end(), r)) longrel = r;
    auto c1 = detail::commutator({{0, 1}}, iota);
    std::optional<GroupWord> conj;
    std::vector<GroupWord> layer{{}};
    for (int len = 0; len <= 2 && !conj; ++len) {
        std::vector<GroupWord> next;
        for (const auto& c : layer) {
            for (const auto& k : {c1, inverse(c1)})
                if (!conj && word_problem_trivial(concat(concat(concat(c, k), inverse(c)), inverse(longrel)), f)) conj = c;
            for (int g = 0; g < 5; ++g)
                for (int e : {1, -1}) next.push_back(concat(c, GroupWord{{g, e}}));
        }
        layer = std::move(next);
    }
    o.note(std::string("long relator conjugate to [e_1, iota]^(+-1) in B6: ") +
           (conj ? "yes, by " + print_word(*conj, Alphabet{{"s1", "s2", "s3", "s4", "s5"}}) : "not found"));
    o.check(got == want, "exact equality with the displayed relator set");
    return o;
}

struct NestedGen {
    std::mt19937& rng;
    int gens;

    NestedTerm make(int depth) {
        std::uniform_int_distribution<int> g(0, gens - 1), ops(0, depth > 0 ? 3 : 0), sign(0, 1);
        NestedTerm t{g(rng), {}};
        int k = ops(rng);
        for (int i = 0; i < k; ++i) t.ops.push_back({make(depth - 1), sign(rng) ? 1 : -1});
        return t;
    }
};

int nested_value(const NestedTerm& t, const std::vector<int>& a, const FiniteQuandle& q) {
    int x = a[static_cast<std::size_t>(t.base)];
    for (const auto& [arg, e] : t.ops) {
        int y = nested_value(arg, a, q);
        x = e > 0 ? q.op(x, y) : q.op_inv(x, y);
    }
    return x;
}

Outcome criterion11() {
    Outcome o;
    std::vector<FiniteQuandle> pool;
    for (int n = 1; n <= kMaxCatalogOrder; ++n)
        for (auto& q : all_quandles(n)) pool.push_back(std::move(q));
    std::mt19937 rng(11);
    constexpr int gens = 4;
    NestedGen make{rng, gens};
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    int bad = 0;
    for (int k = 0; k < kRewriteCases; ++k) {
        const auto& q = pool[pick(rng)];
        std::uniform_int_distribution<int> elt(0, q.n - 1);
        std::vector<int> a(gens);
        for (auto& x : a) x = elt(rng);
        auto t = make.make(3);
        bad += nested_value(t, a, q) != evaluate_term(rewrite_left_associated(t), a, q);
    }
    o.check(bad == 0, std::to_string(bad) + " mismatches");
    o.note(std::to_string(kRewriteCases) + " cases over " + std::to_string(pool.size()) + " quandles of order <= " +
           std::to_string(kMaxCatalogOrder));
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"1 Garside route on braid monoids", criterion1},
        {"2 core quandles of both parities", criterion2},
        {"3 dihedral Dehn quandles", criterion3},
        {"4 trefoil coloring counts", criterion4},
        {"5 route consistency", criterion5},
        {"6 condition classification", criterion6},
        {"7 divisors and phi", criterion7},
        {"8 soundness sweep", criterion8},
        {"9 reversing properties", criterion9},
        {"10 enveloping group of D06", criterion10},
        {"11 left-association rewriting", criterion11},
    };
    int failed = 0;
    for (const auto& [label, run] : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o.check(false, std::string("exception: ") + e.what());
        }
        double dt = seconds_since(t0);
        double limit = label.rfind("5 ", 0) == 0 ? kSecondsGenus2 : kSecondsPerCriterion;
        o.check(dt < limit, "time limit");
        failed += !o.pass;
        std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << label << "  (" << dt << " s)\n";
        for (const auto& n : o.notes) std::cout << "      " << n << "\n";
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria pass\n";
    return failed == 0 ? 0 : 1;
}
