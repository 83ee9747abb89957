#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "finite.hpp"
#include "io.hpp"
#include "reversing.hpp"

namespace dehnq {

struct SimplifyOptions {
    std::size_t max_candidates = 2000;   // products tried per coset search
    std::size_t max_nodes = 50000;       // search-tree nodes per coset search
    int max_length = 6;
    std::uint64_t budget = 20000;  // reversing steps per word-problem call
    std::optional<MonoidPresentation> solver;
    std::size_t enumerate_elements = 64;
    std::size_t enumerate_steps = 20000;
    std::vector<QuandleRelation> hints;
    std::vector<std::vector<Perm>> filters;  // generator images of finite quotients of the group
    std::function<void(const QuandleRelation&, bool)> on_attempt;  // called after each drop attempt
};

struct Derivation {
    QuandleRelation relation;
    std::string method;  // "trivial", "duplicate", "rewrite", "coset", "enumeration", "hint"
    std::string detail;
};

struct SimplifyResult {
    QuandlePresentation presentation;
    std::vector<Derivation> log;
};

namespace detail {

inline GroupWord relation_relator(const QuandleRelation& r) {
    return free_reduce(concat(term_element(r.lhs), inverse(term_element(r.rhs))));
}

// Decides equality in the enveloping group of a relation set, answering false when unsure.
class EnvOracle {
public:
    EnvOracle(int n, const std::vector<QuandleRelation>& rels, const SimplifyOptions& opt) : n_(n), opt_(opt) {
        std::set<GroupWord> canon;
        for (const auto& r : rels) {
            auto w = cyclic_reduce(relation_relator(r));
            if (w.empty()) continue;
            relators_.push_back(w);
            canon.insert(cyclic_canonical(w));
            for (const GroupWord& c : {w, inverse(w)})
                for (std::size_t k = 0; k < c.size(); ++k) {
                    GroupWord rot(c.begin() + static_cast<long>(k), c.end());
                    rot.insert(rot.end(), c.begin(), c.begin() + static_cast<long>(k));
                    rotations_.push_back(rot);
                }
        }
        std::sort(rotations_.begin(), rotations_.end());
        rotations_.erase(std::unique(rotations_.begin(), rotations_.end()), rotations_.end());
        by_first_.assign(static_cast<std::size_t>(2 * n), {});
        for (const auto& rho : rotations_) by_first_[slot(rho.front())].push_back(&rho);
        if (opt.solver && opt.solver->complement && opt.solver->gens.size() == n) {
            solver_sound_ = true;
            for (const auto& r : group_of(*opt.solver).relators) {
                auto c = cyclic_canonical(r);
                if (!c.empty() && !canon.count(c)) solver_sound_ = false;
            }
        }
        GroupPresentation env{indexed_alphabet("e", n), relators_};
        for (const auto& f : opt.filters)
            if (static_cast<int>(f.size()) == n && verify_group_hom(env, f).ok) filters_.push_back(f);
    }

    bool solver_sound() const { return solver_sound_; }

    std::vector<Perm> image(const GroupWord& w) const {
        std::vector<Perm> out;
        for (const auto& f : filters_) out.push_back(evaluate_word(w, f, static_cast<int>(f.front().size())));
        return out;
    }

    bool trivial(const GroupWord& w) const {
        auto c = cyclic_reduce(w);
        if (c.empty()) return true;
        for (const auto& p : image(c))
            if (!is_identity(p)) return false;
        if (dehn_trivial(c)) return true;
        if (!solver_sound_) return false;
        try {
            return word_problem_trivial(c, *opt_.solver->complement, opt_.budget);
        } catch (const BudgetExceeded&) {
            return false;
        }
    }

    bool equal(const GroupWord& u, const GroupWord& v) const { return trivial(concat(u, inverse(v))); }

private:
    int n_;
    const SimplifyOptions& opt_;
    std::vector<GroupWord> relators_, rotations_;
    std::vector<std::vector<const GroupWord*>> by_first_;
    std::vector<std::vector<Perm>> filters_;
    bool solver_sound_ = false;

    static std::size_t slot(const Letter& l) { return static_cast<std::size_t>(2 * l.gen + (l.sign > 0 ? 0 : 1)); }

    // Greedy Dehn reduction: replace more than half of a relator by the inverse of the rest.
    bool dehn_trivial(GroupWord w) const {
        bool progress = true;
        while (!w.empty() && progress) {
            progress = false;
            for (std::size_t i = 0; i < w.size() && !progress; ++i)
                for (const GroupWord* rp : by_first_[slot(w[i])]) {
                    const auto& rho = *rp;
                    std::size_t k = 0;
                    while (k < rho.size() && k < w.size() && w[(i + k) % w.size()] == rho[k]) ++k;
                    if (2 * k <= rho.size()) continue;
                    GroupWord next = inverse(GroupWord(rho.begin() + static_cast<long>(k), rho.end()));
                    for (std::size_t j = k; j < w.size(); ++j) next.push_back(w[(i + j) % w.size()]);
                    w = cyclic_reduce(next);
                    progress = true;
                    break;
                }
        }
        return w.empty();
    }
};

// Orbit data of the presented quandle as a left set over the enveloping group.
struct Orbits {
    std::vector<int> root;
    std::vector<GroupWord> c;                   // c[a] . root = a
    std::map<int, std::vector<GroupWord>> pool;  // root -> generators of its stabilizer
};

inline Orbits orbits(int n, const std::vector<QuandleRelation>& rels, const EnvOracle& env) {
    Orbits o;
    o.root.assign(static_cast<std::size_t>(n), -1);
    o.c.assign(static_cast<std::size_t>(n), {});
    std::vector<std::vector<std::pair<std::size_t, bool>>> adj(static_cast<std::size_t>(n));
    for (std::size_t k = 0; k < rels.size(); ++k) {
        adj[static_cast<std::size_t>(rels[k].lhs.base)].push_back({k, true});
        adj[static_cast<std::size_t>(rels[k].rhs.base)].push_back({k, false});
    }
    std::vector<bool> tree(rels.size(), false);
    for (int s = 0; s < n; ++s) {
        if (o.root[static_cast<std::size_t>(s)] >= 0) continue;
        o.root[static_cast<std::size_t>(s)] = s;
        std::vector<int> queue{s};
        for (std::size_t q = 0; q < queue.size(); ++q) {
            int a = queue[q];
            for (auto [k, from_lhs] : adj[static_cast<std::size_t>(a)]) {
                const auto& r = rels[k];
                int b = from_lhs ? r.rhs.base : r.lhs.base;
                if (o.root[static_cast<std::size_t>(b)] >= 0) continue;
                // W.a = V.b gives c_b = V^-1 W c_a.
                auto w = conj_word(from_lhs ? r.lhs.tail : r.rhs.tail);
                auto v = conj_word(from_lhs ? r.rhs.tail : r.lhs.tail);
                o.c[static_cast<std::size_t>(b)] = free_reduce(concat(concat(inverse(v), w), o.c[static_cast<std::size_t>(a)]));
                o.root[static_cast<std::size_t>(b)] = s;
                tree[k] = true;
                queue.push_back(b);
            }
        }
    }
    for (int s = 0; s < n; ++s)
        if (o.root[static_cast<std::size_t>(s)] == s) o.pool[s] = {{{s, 1}}};
    for (std::size_t k = 0; k < rels.size(); ++k) {
        if (tree[k]) continue;
        const auto& r = rels[k];
        auto a = static_cast<std::size_t>(r.lhs.base), b = static_cast<std::size_t>(r.rhs.base);
        auto g = free_reduce(concat(concat(inverse(o.c[b]), concat(inverse(conj_word(r.rhs.tail)), conj_word(r.lhs.tail))), o.c[a]));
        if (env.trivial(g)) continue;
        auto& p = o.pool[o.root[a]];
        bool dup = false;
        for (const auto& h : p)
            if (env.equal(g, h) || env.equal(g, inverse(h))) {
                dup = true;
                break;
            }
        if (!dup) p.push_back(g);
    }
    return o;
}

// Iterative deepening over products of stabilizer generators; true once g is matched.
inline std::optional<std::string> coset_search(const GroupWord& g, const std::vector<GroupWord>& pool,
                                               const EnvOracle& env, const SimplifyOptions& opt) {
    if (env.trivial(g)) return std::string("identity");
    std::vector<GroupWord> letters;
    for (const auto& h : pool) {
        letters.push_back(h);
        letters.push_back(inverse(h));
    }
    auto target = env.image(g);
    std::vector<std::vector<Perm>> limg;
    for (const auto& l : letters) limg.push_back(env.image(l));
    std::size_t tried = 0;
    std::vector<std::size_t> pick;
    std::optional<std::string> found;
    auto mult = [](std::vector<Perm> a, const std::vector<Perm>& b) {
        for (std::size_t i = 0; i < a.size(); ++i) a[i] = compose(a[i], b[i]);
        return a;
    };
    std::size_t nodes = 0;
    auto rec = [&](auto&& self, int depth, const GroupWord& prod, const std::vector<Perm>& img) -> bool {
        if (++nodes > opt.max_nodes) return true;
        if (depth == 0) {
            if (img != target) return false;
            if (++tried > opt.max_candidates) return true;
            if (env.equal(g, prod)) {
                std::ostringstream d;
                d << "product of " << pick.size() << " stabilizer generators:";
                for (auto i : pick) d << " " << (i % 2 ? "-" : "+") << i / 2;
                found = d.str();
                return true;
            }
            return false;
        }
        for (std::size_t i = 0; i < letters.size(); ++i) {
            if (!pick.empty() && (pick.back() ^ 1U) == i) continue;
            pick.push_back(i);
            bool stop = self(self, depth - 1, free_reduce(concat(prod, letters[i])), mult(img, limg[i]));
            pick.pop_back();
            if (stop) return true;
        }
        return false;
    };
    std::vector<Perm> id;
    for (const auto& p : target) id.push_back(identity_perm(static_cast<int>(p.size())));
    for (int len = 1; len <= opt.max_length && !found && tried <= opt.max_candidates && nodes <= opt.max_nodes; ++len)
        rec(rec, len, {}, id);
    return found;
}

inline std::optional<std::string> coset_certificate(int n, const QuandleRelation& r,
                                                    const std::vector<QuandleRelation>& rest, const SimplifyOptions& opt) {
    EnvOracle env(n, rest, opt);
    auto o = orbits(n, rest, env);
    auto a = static_cast<std::size_t>(r.lhs.base), b = static_cast<std::size_t>(r.rhs.base);
    if (o.root[a] != o.root[b]) return std::nullopt;
    auto g = free_reduce(concat(concat(inverse(o.c[b]), concat(inverse(conj_word(r.rhs.tail)), conj_word(r.lhs.tail))), o.c[a]));
    auto res = coset_search(g, o.pool[o.root[a]], env, opt);
    if (!res) return std::nullopt;
    return *res + (env.solver_sound() ? " (monoid solver)" : " (Dehn reduction)");
}

inline std::optional<std::string> enumeration_certificate(const QuandlePresentation& q, const QuandleRelation& r,
                                                          const SimplifyOptions& opt) {
    try {
        auto e = winker_enumerate(q, opt.enumerate_elements, opt.enumerate_steps);
        if (!relation_holds(r, e.generator_images, e.quandle)) return std::nullopt;
        return "holds in the enumerated quandle of order " + std::to_string(e.quandle.n);
    } catch (const Exhausted&) {
        return std::nullopt;
    }
}

// Uses each relation, oriented from the longer tail to the shorter, to shorten prefixes of the others.
// Rewrites are applied one at a time so every step keeps the presented quandle.
inline bool rewrite_prefixes(std::vector<QuandleRelation>& rels, std::vector<Derivation>& log) {
    bool any = false;
    for (std::size_t i = 0; i < rels.size(); ++i)
        for (std::size_t j = 0; j < rels.size(); ++j) {
            if (i == j) continue;
            auto from = rels[j].lhs, to = rels[j].rhs;
            if (from.tail.size() < to.tail.size()) std::swap(from, to);
            if (from.tail.size() == to.tail.size()) continue;
            auto before = rels[i];
            bool hit = false;
            for (QuandleTerm* t : {&rels[i].lhs, &rels[i].rhs}) {
                if (t->base != from.base || t->tail.size() < from.tail.size()) continue;
                if (!std::equal(from.tail.begin(), from.tail.end(), t->tail.begin())) continue;
                QuandleTerm next = to;
                next.tail.insert(next.tail.end(), t->tail.begin() + static_cast<long>(from.tail.size()), t->tail.end());
                *t = normalize_term(next);
                hit = true;
            }
            if (!hit) continue;
            rels[i] = canonical(rels[i]);
            log.push_back({before, "rewrite", "prefix rewritten by another relation"});
            any = true;
        }
    return any;
}

// Sound rewrites: trailing letters common to both sides, and b * ... * c^e = b when b * c = b is present
// (always for c = b).
inline std::vector<QuandleRelation> canonicalize(int n, std::vector<QuandleRelation> rels, std::vector<Derivation>& log) {
    bool changed = true;
    while (changed) {
        changed = false;
        std::set<std::pair<int, int>> fixes;  // b * c = b
        for (int b = 0; b < n; ++b) fixes.insert({b, b});
        for (const auto& r : rels) {
            auto c = canonical(r);
            for (const auto& [x, y] : {std::pair{c.lhs, c.rhs}, std::pair{c.rhs, c.lhs}})
                if (y.tail.empty() && x.base == y.base && x.tail.size() == 1) fixes.insert({x.base, x.tail[0].gen});
        }
        std::vector<QuandleRelation> out;
        std::set<QuandleRelation> seen;
        for (const auto& r0 : rels) {
            auto r = canonical(r0);
            auto before = r;
            while (!r.lhs.tail.empty() && !r.rhs.tail.empty() && r.lhs.tail.back() == r.rhs.tail.back()) {
                r.lhs.tail.pop_back();
                r.rhs.tail.pop_back();
            }
            for (int side = 0; side < 2; ++side) {
                auto& x = side ? r.rhs : r.lhs;
                const auto& y = side ? r.lhs : r.rhs;
                if (!y.tail.empty()) continue;
                while (!x.tail.empty() && fixes.count({y.base, x.tail.back().gen}) &&
                       !(x.base == y.base && x.tail.size() == 1)) {
                    x.tail.pop_back();
                }
            }
            r = canonical(r);
            if (!(r == before)) {
                log.push_back({before, "rewrite", "cancelled trailing letters"});
                changed = true;
            }
            if (is_trivial(r)) {
                log.push_back({before, "trivial", "sides agree after normalization"});
                continue;
            }
            if (!seen.insert(r).second) {
                log.push_back({before, "duplicate", "repeats an earlier relation"});
                continue;
            }
            out.push_back(r);
        }
        rels = std::move(out);
        if (!changed) changed = rewrite_prefixes(rels, log);
    }
    return rels;
}

// Relations between two compound terms first, then longer tails, larger base, lexicographic.
inline bool drop_order(const QuandleRelation& a, const QuandleRelation& b) {
    auto key = [](const QuandleRelation& r) {
        bool bare = r.lhs.tail.empty() || r.rhs.tail.empty();
        int base = std::max(r.lhs.base, r.rhs.base);
        auto len = r.lhs.tail.size() + r.rhs.tail.size();
        return std::tuple(bare, -static_cast<long>(len), -base);
    };
    if (key(a) != key(b)) return key(a) < key(b);
    return a < b;
}

}  // namespace detail

// Drops relations proved derivable from the others; everything else is kept.
inline SimplifyResult simplify_presentation(const QuandlePresentation& q, const SimplifyOptions& opt = {}) {
    SimplifyResult res;
    int n = q.gens.size();
    auto rels = detail::canonicalize(n, q.relations, res.log);
    bool finite = false;
    try {
        winker_enumerate(q, opt.enumerate_elements, opt.enumerate_steps);
        finite = true;
    } catch (const Exhausted&) {
    }
    auto derive = [&](const QuandleRelation& r, const std::vector<QuandleRelation>& rest) -> std::optional<Derivation> {
        if (finite) {
            if (auto d = detail::enumeration_certificate({q.gens, rest}, r, opt)) return Derivation{r, "enumeration", *d};
        }
        if (auto d = detail::coset_certificate(n, r, rest, opt)) return Derivation{r, "coset", *d};
        return std::nullopt;
    };
    for (const auto& h0 : opt.hints) {
        auto h = canonical(h0);
        if (is_trivial(h) || std::find(rels.begin(), rels.end(), h) != rels.end()) continue;
        if (auto d = derive(h, rels)) {
            d->method = "hint";
            res.log.push_back(*d);
            rels.push_back(h);
        }
    }
    auto order = rels;
    std::sort(order.begin(), order.end(), detail::drop_order);
    for (const auto& r : order) {
        std::vector<QuandleRelation> rest;
        for (const auto& x : rels)
            if (!(x == r)) rest.push_back(x);
        auto d = derive(r, rest);
        if (opt.on_attempt) opt.on_attempt(r, d.has_value());
        if (d) {
            res.log.push_back(*d);
            rels = std::move(rest);
        }
    }
    res.presentation = {q.gens, rels};
    return res;
}

// (s*t)_k for an alternating left-associated product of length k, else the plain form.
inline std::string print_compact(const QuandleTerm& t, const Alphabet& a) {
    if (t.tail.size() >= 2 && std::all_of(t.tail.begin(), t.tail.end(), [](const Letter& l) { return l.sign > 0; })) {
        int s = t.base, u = t.tail[0].gen;
        bool alt = s != u;
        for (std::size_t i = 0; i < t.tail.size() && alt; ++i) alt = t.tail[i].gen == (i % 2 == 0 ? u : s);
        if (alt) return "(" + a.name(s) + "*" + a.name(u) + ")_" + std::to_string(t.tail.size() + 1);
    }
    return print_term(t, a);
}

inline std::string print_compact(const QuandleRelation& r, const Alphabet& a) {
    return print_compact(r.lhs, a) + " = " + print_compact(r.rhs, a);
}

}  // namespace dehnq
