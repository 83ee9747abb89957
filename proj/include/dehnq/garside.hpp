#pragma once

#include <cmath>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "reversing.hpp"

namespace dehnq {

struct AlphaBetaTable {
    Side side = Side::right;
    int n = 0;
    std::vector<std::optional<int>> alpha_;
    std::vector<int> beta_;
    std::vector<PositiveWord> f_;  // f(s,t) on the right, g(s,t) = s/t on the left

    std::optional<int> alpha(int s, int t) const { return alpha_[idx(s, t)]; }
    int beta(int s, int t) const { return beta_[idx(s, t)]; }
    const PositiveWord& factor(int s, int t) const { return f_[idx(s, t)]; }
    std::size_t idx(int s, int t) const { return static_cast<std::size_t>(s * n + t); }
};

namespace detail {

inline AlphaBetaTable right_table(const MonoidPresentation& m, std::uint64_t budget, const Alphabet& names) {
    const auto& f = right_complement(m);
    AlphaBetaTable tab;
    tab.n = m.gens.size();
    auto sz = static_cast<std::size_t>(tab.n * tab.n);
    tab.alpha_.assign(sz, std::nullopt);
    tab.beta_.assign(sz, -1);
    tab.f_.assign(sz, {});
    auto pair_name = [&](int s, int t) { return "(" + names.name(s) + "," + names.name(t) + ")"; };
    for (int s = 0; s < tab.n; ++s)
        for (int t = 0; t < tab.n; ++t) {
            if (s == t) continue;
            auto fst = f.at(s, t);
            tab.f_[tab.idx(s, t)] = fst;
            auto join = concat(PositiveWord{s}, fst);
            if (!left_divides(fst, join, f, budget)) throw NotGarside("condition (ii) fails at " + pair_name(s, t));
            auto r = residue(fst, join, f, budget);
            std::vector<int> hits;
            for (int g = 0; g < tab.n; ++g)
                if (monoid_equal(r, {g}, f, budget)) hits.push_back(g);
            if (hits.empty()) throw NotGarside("beta is not a generator at " + pair_name(s, t));
            if (hits.size() > 1) throw NotGarside("beta is not unique at " + pair_name(s, t));
            tab.beta_[tab.idx(s, t)] = hits.front();
            if (left_divides({s}, {t}, f, budget)) {
                auto a = as_generator(concat(fst, PositiveWord{s}), tab.n, f, budget);
                if (!a) throw NotGarside("condition (i) fails at " + pair_name(s, t));
                tab.alpha_[tab.idx(s, t)] = *a;
            }
        }
    return tab;
}

}  // namespace detail

// alpha and beta for every ordered pair; the left table is read off the opposite monoid.
inline AlphaBetaTable compute_alpha_beta(const MonoidPresentation& m, Side side, std::uint64_t budget = default_budget()) {
    if (side == Side::right) return detail::right_table(m, budget, m.gens);
    auto r = mirror(m);
    if (!r.complement) throw MissingData("left complement");
    auto t = detail::right_table(r, budget, m.gens);
    AlphaBetaTable out = t;
    out.side = Side::left;
    for (int s = 0; s < t.n; ++s)
        for (int u = 0; u < t.n; ++u) {
            if (s == u) continue;
            out.alpha_[out.idx(s, u)] = t.alpha(u, s);
            out.beta_[out.idx(s, u)] = t.beta(u, s);
            out.f_[out.idx(s, u)] = reversed(t.factor(u, s));
        }
    return out;
}

// Family (3) relations, one per generator u and unordered pair s < t.
inline QuandleRelation triple_relation(const AlphaBetaTable& tab, int u, int s, int t) {
    if (tab.side == Side::right) {
        GroupWord a = to_group(reversed(tab.factor(s, t)));
        a.push_back({s, 1});
        GroupWord b = to_group(reversed(tab.factor(t, s)));
        b.push_back({t, 1});
        return {{u, a}, {u, b}};
    }
    GroupWord a{{t, 1}}, b{{s, 1}};
    auto ga = to_group(reversed(tab.factor(s, t)));
    auto gb = to_group(reversed(tab.factor(t, s)));
    a.insert(a.end(), ga.begin(), ga.end());
    b.insert(b.end(), gb.begin(), gb.end());
    return {{u, a}, {u, b}};
}

// Lazy range over the family (3) relations.
class TripleRelations {
public:
    explicit TripleRelations(const AlphaBetaTable& tab) : tab_(&tab) {}

    class iterator {
    public:
        iterator(const AlphaBetaTable* tab, int u, int s, int t) : tab_(tab), u_(u), s_(s), t_(t) {}
        QuandleRelation operator*() const { return triple_relation(*tab_, u_, s_, t_); }
        iterator& operator++() {
            if (++t_ >= tab_->n) {
                if (++s_ >= tab_->n - 1) {
                    s_ = 0;
                    ++u_;
                }
                t_ = s_ + 1;
            }
            return *this;
        }
        bool operator==(const iterator& o) const { return u_ == o.u_ && s_ == o.s_ && t_ == o.t_; }

    private:
        const AlphaBetaTable* tab_;
        int u_, s_, t_;
    };

    iterator begin() const { return tab_->n < 2 ? end() : iterator(tab_, 0, 0, 1); }
    iterator end() const { return iterator(tab_, tab_->n < 2 ? 0 : tab_->n, 0, 1); }

private:
    const AlphaBetaTable* tab_;
};

struct EmitOptions {
    bool triples = true;
};

inline QuandlePresentation emit_quandle_presentation(const MonoidPresentation& m, const AlphaBetaTable& tab,
                                                     EmitOptions opt = {}) {
    QuandlePresentation q{m.gens, {}};
    int n = tab.n;
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t) {
            if (s == t) continue;
            if (auto a = tab.alpha(s, t)) {
                if (tab.side == Side::right)
                    q.relations.push_back({{*a, {{s, 1}}}, {t, {}}});
                else
                    q.relations.push_back({{s, {{t, 1}}}, {*a, {}}});
            }
        }
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t) {
            if (s == t) continue;
            auto tail = to_group(reversed(tab.factor(s, t)));
            if (tab.side == Side::right)
                q.relations.push_back({{tab.beta(s, t), tail}, {s, {}}});
            else
                q.relations.push_back({{t, tail}, {tab.beta(s, t), {}}});
        }
    if (opt.triples)
        for (auto r : TripleRelations(tab)) q.relations.push_back(r);
    return q;
}

inline QuandlePresentation emit_right_presentation(const MonoidPresentation& m, std::uint64_t budget = default_budget(),
                                                   EmitOptions opt = {}) {
    return emit_quandle_presentation(m, compute_alpha_beta(m, Side::right, budget), opt);
}

inline QuandlePresentation emit_left_presentation(const MonoidPresentation& m, std::uint64_t budget = default_budget(),
                                                  EmitOptions opt = {}) {
    return emit_quandle_presentation(m, compute_alpha_beta(m, Side::left, budget), opt);
}

// Coxeter matrix with 0 standing for infinity; diagonal ignored.
using CoxeterMatrix = std::vector<std::vector<int>>;

inline bool is_spherical(const CoxeterMatrix& cm) {
    auto n = cm.size();
    std::vector<std::vector<double>> b(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) {
                b[i][j] = 1.0;
                continue;
            }
            int m = cm[i][j];
            if (m == 0) return false;
            b[i][j] = -std::cos(std::numbers::pi / m);
        }
    // Cholesky; positive definite iff spherical.
    for (std::size_t j = 0; j < n; ++j) {
        double d = b[j][j];
        for (std::size_t k = 0; k < j; ++k) d -= b[j][k] * b[j][k];
        if (d <= 1e-12) return false;
        b[j][j] = std::sqrt(d);
        for (std::size_t i = j + 1; i < n; ++i) {
            double v = b[i][j];
            for (std::size_t k = 0; k < j; ++k) v -= b[i][k] * b[j][k];
            b[i][j] = v / b[j][j];
        }
    }
    return true;
}

inline PositiveWord alternating(int s, int t, int len) {
    PositiveWord w;
    for (int i = 0; i < len; ++i) w.push_back(i % 2 == 0 ? s : t);
    return w;
}

inline MonoidPresentation artin_monoid(const CoxeterMatrix& cm, Alphabet gens) {
    MonoidPresentation m;
    m.gens = std::move(gens);
    int n = m.gens.size();
    for (int s = 0; s < n; ++s)
        for (int t = s + 1; t < n; ++t) {
            int k = cm[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)];
            if (k == 0) continue;
            m.relations.push_back({alternating(s, t, k), alternating(t, s, k)});
        }
    m.complement = induce_complement(n, m.relations, false);
    m.left_complement = induce_complement(n, m.relations, true);
    if (m.complement && is_spherical(cm)) m.delta = lcm_of_atoms(m);
    return m;
}

// Closed form for spherical Artin monoids: (s*t)_m = s for m even, (t*s)_m = s for m odd.
inline QuandlePresentation emit_spherical_artin_presentation(const CoxeterMatrix& cm, Alphabet gens,
                                                             bool conjectural = false) {
    int n = gens.size();
    if (!conjectural) {
        for (int s = 0; s < n; ++s)
            for (int t = 0; t < n; ++t)
                if (s != t && cm[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)] == 0)
                    throw InputError("m = infinity is outside the spherical closed form");
        if (!is_spherical(cm)) throw InputError("coxeter matrix is not of spherical type");
    }
    QuandlePresentation q{std::move(gens), {}};
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t) {
            if (s == t) continue;
            int k = cm[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)];
            if (k == 0) continue;
            auto w = k % 2 == 0 ? alternating(s, t, k) : alternating(t, s, k);
            QuandleTerm lhs{w.front(), to_group(PositiveWord(w.begin() + 1, w.end()))};
            q.relations.push_back({lhs, {s, {}}});
        }
    return q;
}

}  // namespace dehnq
