#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "core.hpp"

namespace dehnq {

// w = num * den^-1 after reversing.
struct Fraction {
    PositiveWord num, den;
    friend bool operator==(const Fraction&, const Fraction&) = default;
};

enum class Strategy { leftmost, rightmost };

namespace detail {

inline bool neg_pos(const GroupWord& w, std::size_t k) {
    return w[k].sign < 0 && w[k + 1].sign > 0;
}

inline GroupWord reversal_step(const Complement& f, int s, int t) {
    GroupWord rep = to_group(f.at(s, t));
    auto back = inverse(to_group(f.at(t, s)));
    rep.insert(rep.end(), back.begin(), back.end());
    return rep;
}

}  // namespace detail

// Right reversing: rewrite s^-1 t into f(s,t) f(t,s)^-1 until no negative letter precedes a positive one.
inline Fraction reverse_word(GroupWord w, const Complement& f, std::uint64_t budget = default_budget(),
                             Strategy strategy = Strategy::leftmost) {
    std::uint64_t steps = 0;
    auto apply = [&](std::size_t k) -> std::size_t {
        if (++steps > budget) throw BudgetExceeded("reversing exceeded " + std::to_string(budget) + " steps");
        int s = w[k].gen, t = w[k + 1].gen;
        auto it = w.begin() + static_cast<long>(k);
        if (s == t) {
            w.erase(it, it + 2);
            return 0;
        }
        auto rep = detail::reversal_step(f, s, t);
        it = w.erase(it, it + 2);
        w.insert(it, rep.begin(), rep.end());
        return rep.size();
    };
    if (strategy == Strategy::leftmost) {
        std::size_t i = 0;
        while (w.size() >= 2) {
            std::size_t k = i;
            while (k + 1 < w.size() && !detail::neg_pos(w, k)) ++k;
            if (k + 1 >= w.size()) break;
            apply(k);
            i = k == 0 ? 0 : k - 1;
        }
    } else {
        std::size_t i = w.size() < 2 ? 0 : w.size() - 2;
        while (w.size() >= 2) {
            if (i > w.size() - 2) i = w.size() - 2;
            std::size_t k = i + 1;
            bool found = false;
            while (k-- > 0)
                if (detail::neg_pos(w, k)) {
                    found = true;
                    break;
                }
            if (!found) break;
            std::size_t len = apply(k);
            i = k + len;
        }
    }
    Fraction out;
    std::size_t p = 0;
    while (p < w.size() && w[p].sign > 0) out.num.push_back(w[p++].gen);
    for (std::size_t q = w.size(); q > p; --q) out.den.push_back(w[q - 1].gen);
    return out;
}

// u \ v: the N with u N = lcm(u, v).
inline PositiveWord residue(const PositiveWord& u, const PositiveWord& v, const Complement& f,
                            std::uint64_t budget = default_budget()) {
    return reverse_word(concat(inverse(to_group(u)), to_group(v)), f, budget).num;
}

inline bool left_divides(const PositiveWord& u, const PositiveWord& v, const Complement& f,
                         std::uint64_t budget = default_budget()) {
    return reverse_word(concat(inverse(to_group(u)), to_group(v)), f, budget).den.empty();
}

// Decides w = 1 in the group of fractions: w ~ N D^-1, then N^-1 D must reverse to nothing.
inline bool word_problem_trivial(const GroupWord& w, const Complement& f, std::uint64_t budget = default_budget()) {
    auto fr = reverse_word(free_reduce(w), f, budget);
    if (fr.num.empty() && fr.den.empty()) return true;
    auto back = reverse_word(concat(inverse(to_group(fr.num)), to_group(fr.den)), f, budget);
    return back.num.empty() && back.den.empty();
}

inline bool monoid_equal(const PositiveWord& u, const PositiveWord& v, const Complement& f,
                         std::uint64_t budget = default_budget()) {
    if (u == v) return true;
    auto fr = reverse_word(concat(inverse(to_group(u)), to_group(v)), f, budget);
    return fr.num.empty() && fr.den.empty();
}

inline PositiveWord lcm_of_atoms(const MonoidPresentation& m, std::uint64_t budget = default_budget()) {
    if (!m.complement) throw MissingData("complement");
    PositiveWord x{0};
    for (int t = 1; t < m.gens.size(); ++t) x = concat(x, residue(x, {t}, *m.complement, budget));
    return x;
}

// Complement read off relations s.. = t.. with one relation per pair of distinct leading letters.
// Pairs without a relation stay unset.
inline std::optional<Complement> induce_partial_complement(int n, const std::vector<MonoidRelation>& rels,
                                                           bool from_left) {
    Complement c(n);
    for (const auto& r : rels) {
        if (r.lhs.empty() || r.rhs.empty()) return std::nullopt;
        PositiveWord a = r.lhs, b = r.rhs;
        int s, t;
        if (!from_left) {
            s = a.front();
            t = b.front();
            a.erase(a.begin());
            b.erase(b.begin());
        } else {
            s = a.back();
            t = b.back();
            a.pop_back();
            b.pop_back();
        }
        if (s == t) return std::nullopt;
        if (!from_left) {
            if (c.has(s, t) || c.has(t, s)) return std::nullopt;
            c.set(s, t, a);
            c.set(t, s, b);
        } else {
            // g(t,s) s = g(s,t) t, so the side ending in s supplies g(t,s).
            if (c.has(s, t) || c.has(t, s)) return std::nullopt;
            c.set(t, s, a);
            c.set(s, t, b);
        }
    }
    return c;
}

inline std::optional<Complement> induce_complement(int n, const std::vector<MonoidRelation>& rels, bool from_left) {
    auto c = induce_partial_complement(n, rels, from_left);
    if (!c || !c->total()) return std::nullopt;
    return c;
}

inline const Complement& right_complement(const MonoidPresentation& m) {
    if (!m.complement) throw MissingData("right complement");
    return *m.complement;
}

// The opposite monoid: relations read backwards, complements exchanged.
inline MonoidPresentation mirror(const MonoidPresentation& m) {
    MonoidPresentation r;
    r.gens = m.gens;
    for (const auto& rel : m.relations) r.relations.push_back({reversed(rel.lhs), reversed(rel.rhs)});
    int n = m.gens.size();
    auto flip = [n](const Complement& c) {
        Complement out(n);
        for (int s = 0; s < n; ++s)
            for (int t = 0; t < n; ++t)
                if (s != t && c.has(t, s)) out.set(s, t, reversed(c.at(t, s)));
        return out;
    };
    if (m.left_complement) r.complement = flip(*m.left_complement);
    if (m.complement) r.left_complement = flip(*m.complement);
    if (m.delta) r.delta = reversed(*m.delta);
    return r;
}

inline bool right_divides(const PositiveWord& u, const PositiveWord& v, const MonoidPresentation& m,
                          std::uint64_t budget = default_budget()) {
    if (!m.left_complement) throw MissingData("left complement");
    auto r = mirror(m);
    return left_divides(reversed(u), reversed(v), *r.complement, budget);
}

// Left divisors of delta, one shortlex-least representative per element.
inline std::vector<PositiveWord> enumerate_divisors(const MonoidPresentation& m, const PositiveWord& delta,
                                                    std::uint64_t budget = default_budget(),
                                                    std::size_t max_divisors = 100000) {
    const auto& f = right_complement(m);
    std::vector<PositiveWord> all{{}};
    std::vector<PositiveWord> frontier{{}};
    while (!frontier.empty()) {
        std::vector<PositiveWord> next;
        for (const auto& x : frontier)
            for (int s = 0; s < m.gens.size(); ++s) {
                auto y = x;
                y.push_back(s);
                if (!left_divides(y, delta, f, budget)) continue;
                // Not homogeneous in general, so an element may reappear at another length.
                auto same = [&](const PositiveWord& z) { return monoid_equal(y, z, f, budget); };
                if (std::none_of(next.begin(), next.end(), same) && std::none_of(all.begin(), all.end(), same))
                    next.push_back(y);
            }
        std::sort(next.begin(), next.end());
        all.insert(all.end(), next.begin(), next.end());
        if (all.size() > max_divisors) throw BudgetExceeded("more than " + std::to_string(max_divisors) + " divisors");
        frontier = std::move(next);
    }
    return all;
}

inline std::vector<PositiveWord> enumerate_right_divisors(const MonoidPresentation& m, const PositiveWord& delta,
                                                          std::uint64_t budget = default_budget()) {
    auto r = mirror(m);
    if (!r.complement) throw MissingData("left complement");
    auto divs = enumerate_divisors(r, reversed(delta), budget);
    for (auto& d : divs) d = reversed(d);
    return divs;
}

// phi(x) = (x \ delta) \ delta, so that x delta = delta phi(x).
inline PositiveWord garside_automorphism(const PositiveWord& x, const PositiveWord& delta, const Complement& f,
                                         std::uint64_t budget = default_budget()) {
    return residue(residue(x, delta, f, budget), delta, f, budget);
}

inline std::optional<int> as_generator(const PositiveWord& w, int n, const Complement& f,
                                       std::uint64_t budget = default_budget()) {
    if (w.size() == 1) return w.front();
    for (int g = 0; g < n; ++g)
        if (monoid_equal(w, {g}, f, budget)) return g;
    return std::nullopt;
}

enum class Side { right, left };

enum class Status { pass, fail, vacuous, unknown };

inline const char* status_name(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::vacuous: return "vacuous";
        default: return "unknown";
    }
}

struct ConditionReport {
    Side side = Side::right;
    std::vector<std::pair<std::string, Status>> items;
    Status delta_witness = Status::unknown;
    std::string type;  // "R9", "R8", "L9", "L8" or "none"

    Status get(const std::string& key) const {
        for (const auto& [k, v] : items)
            if (k == key) return v;
        return Status::unknown;
    }
};

namespace detail {

inline Status homogeneous(const MonoidPresentation& m) {
    std::vector<MonoidRelation> rels = m.relations;
    if (rels.empty() && m.complement)
        for (int s = 0; s < m.gens.size(); ++s)
            for (int t = s + 1; t < m.gens.size(); ++t)
                rels.push_back({concat(PositiveWord{s}, m.complement->at(s, t)),
                                concat(PositiveWord{t}, m.complement->at(t, s))});
    for (const auto& r : rels)
        if (r.lhs.size() != r.rhs.size()) return Status::fail;
    return Status::pass;
}

inline ConditionReport right_conditions(const MonoidPresentation& m, std::uint64_t budget) {
    const auto& f = right_complement(m);
    int n = m.gens.size();
    Status c1 = Status::vacuous, c2 = Status::pass, c3 = Status::pass;
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t) {
            if (s == t) continue;
            if (left_divides({s}, {t}, f, budget)) {
                auto alpha = concat(f.at(s, t), PositiveWord{s});
                Status here = as_generator(alpha, n, f, budget) ? Status::pass : Status::fail;
                if (c1 != Status::fail) c1 = here;
            }
            auto fst = f.at(s, t);
            auto join = concat(PositiveWord{s}, fst);
            if (!left_divides(fst, join, f, budget)) {
                c2 = Status::fail;
                c3 = Status::fail;
                continue;
            }
            if (!as_generator(residue(fst, join, f, budget), n, f, budget)) c3 = Status::fail;
        }
    ConditionReport rep;
    rep.side = Side::right;
    rep.items = {{"(i)", c1}, {"(ii)", c2}, {"(iii)", c3}, {"(iv)", homogeneous(m)}};
    if (m.delta) {
        rep.delta_witness = Status::pass;
        for (int s = 0; s < n; ++s) {
            auto ph = garside_automorphism({s}, *m.delta, f, budget);
            auto g = as_generator(ph, n, f, budget);
            if (!g || !monoid_equal(concat(PositiveWord{s}, *m.delta), concat(*m.delta, PositiveWord{*g}), f, budget))
                rep.delta_witness = Status::fail;
        }
    }
    return rep;
}

}  // namespace detail

// Conditions (i)-(iv) on the right, or their mirrors (vi)-(ix) on the left.
inline ConditionReport check_conditions(const MonoidPresentation& m, Side side, std::uint64_t budget = default_budget()) {
    ConditionReport rep;
    if (side == Side::right) {
        rep = detail::right_conditions(m, budget);
    } else {
        auto r = mirror(m);
        if (!r.complement) throw MissingData("left complement");
        rep = detail::right_conditions(r, budget);
        rep.side = Side::left;
        const char* names[] = {"(vi)", "(vii)", "(viii)", "(ix)"};
        for (std::size_t i = 0; i < rep.items.size(); ++i) rep.items[i].first = names[i];
    }
    bool two = rep.items[1].second == Status::pass;
    bool three = rep.items[2].second == Status::pass;
    bool four = rep.items[3].second == Status::pass;
    const char* p = side == Side::right ? "R" : "L";
    if (two && four)
        rep.type = std::string(p) + "9";
    else if (two && three)
        rep.type = std::string(p) + "8";
    else
        rep.type = "none";
    return rep;
}

}  // namespace dehnq
