#pragma once

#include <array>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "core.hpp"

namespace dehnq {

// Permutations of {0..n-1}; (a*b)[i] = a[b[i]], so words compose like functions.
using Perm = std::vector<int>;

inline Perm identity_perm(int n) {
    Perm p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    return p;
}

inline Perm compose(const Perm& a, const Perm& b) {
    Perm c(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) c[i] = a[static_cast<std::size_t>(b[i])];
    return c;
}

inline Perm invert(const Perm& a) {
    Perm c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[static_cast<std::size_t>(a[i])] = static_cast<int>(i);
    return c;
}

inline Perm conjugate(const Perm& x, const Perm& y) { return compose(compose(y, x), invert(y)); }

inline bool is_identity(const Perm& p) {
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] != static_cast<int>(i)) return false;
    return true;
}

// Cycles written 1-based, e.g. "(1 2)(3 4 5)"; degree grows to fit.
inline Perm parse_cycles(const std::string& text, int degree = 0) {
    std::vector<std::vector<int>> cycles;
    std::size_t i = 0;
    int maxpt = degree;
    while (i < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        if (text[i] != '(') throw InputError("malformed cycle notation: " + text);
        ++i;
        std::vector<int> cyc;
        while (i < text.size() && text[i] != ')') {
            if (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',') {
                ++i;
                continue;
            }
            if (!std::isdigit(static_cast<unsigned char>(text[i]))) throw InputError("malformed cycle notation: " + text);
            int v = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) v = v * 10 + (text[i++] - '0');
            if (v < 1) throw InputError("cycle points start at 1");
            cyc.push_back(v - 1);
            maxpt = std::max(maxpt, v);
        }
        if (i >= text.size()) throw InputError("unterminated cycle: " + text);
        ++i;
        cycles.push_back(cyc);
    }
    Perm p = identity_perm(maxpt);
    for (const auto& c : cycles) {
        std::set<int> seen(c.begin(), c.end());
        if (seen.size() != c.size()) throw InputError("repeated point in cycle: " + text);
        for (std::size_t k = 0; k < c.size(); ++k)
            p[static_cast<std::size_t>(c[k])] = c[(k + 1) % c.size()];
    }
    return p;
}

inline Perm pad(Perm p, int degree) {
    while (static_cast<int>(p.size()) < degree) p.push_back(static_cast<int>(p.size()));
    return p;
}

inline std::string format_cycles(const Perm& p) {
    std::string out;
    std::vector<bool> seen(p.size(), false);
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i] || p[i] == static_cast<int>(i)) continue;
        out += "(";
        std::size_t j = i;
        bool first = true;
        while (!seen[j]) {
            seen[j] = true;
            if (!first) out += " ";
            out += std::to_string(j + 1);
            first = false;
            j = static_cast<std::size_t>(p[j]);
        }
        out += ")";
    }
    return out.empty() ? "()" : out;
}

// 2x2 matrices over Z/m acting on column vectors, as permutations of (Z/m)^2.
inline Perm matrix_perm(const std::array<long, 4>& a, int m) {
    Perm p(static_cast<std::size_t>(m * m));
    auto md = [m](long v) { return static_cast<int>(((v % m) + m) % m); };
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y) {
            int nx = md(a[0] * x + a[1] * y), ny = md(a[2] * x + a[3] * y);
            p[static_cast<std::size_t>(x * m + y)] = nx * m + ny;
        }
    return p;
}

inline Perm evaluate_word(const GroupWord& w, const std::vector<Perm>& images, int degree) {
    Perm acc = identity_perm(degree);
    for (const auto& l : w) {
        const Perm& g = images.at(static_cast<std::size_t>(l.gen));
        acc = compose(acc, l.sign > 0 ? g : invert(g));
    }
    return acc;
}

struct HomCheck {
    bool ok = true;
    std::string message;
};

inline HomCheck verify_group_hom(const GroupPresentation& g, const std::vector<Perm>& images) {
    if (static_cast<int>(images.size()) != g.gens.size()) return {false, "image count does not match generators"};
    int degree = 0;
    for (const auto& p : images) degree = std::max(degree, static_cast<int>(p.size()));
    std::vector<Perm> padded;
    for (const auto& p : images) padded.push_back(pad(p, degree));
    for (std::size_t i = 0; i < g.relators.size(); ++i)
        if (!is_identity(evaluate_word(g.relators[i], padded, degree)))
            return {false, "relator " + std::to_string(i + 1) + " is not sent to the identity"};
    return {};
}

struct FiniteQuandle {
    int n = 0;
    std::vector<int> table;  // x*y at x*n+y
    std::vector<int> inv;    // x*^-1 y

    int op(int x, int y) const { return table[static_cast<std::size_t>(x * n + y)]; }
    int op_inv(int x, int y) const { return inv[static_cast<std::size_t>(x * n + y)]; }
    int order() const { return n; }
    std::string name;
};

inline FiniteQuandle from_table(int n, std::vector<int> table, std::string name = {}) {
    FiniteQuandle q;
    q.n = n;
    q.table = std::move(table);
    q.inv.assign(q.table.size(), -1);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            int z = q.op(x, y);
            if (z < 0 || z >= n) throw InputError("quandle table entry out of range");
            q.inv[static_cast<std::size_t>(z * n + y)] = x;
        }
    q.name = std::move(name);
    return q;
}

inline FiniteQuandle core_quandle(int n) {
    if (n < 1) throw InputError("core quandle needs n >= 1");
    std::vector<int> t(static_cast<std::size_t>(n * n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) t[static_cast<std::size_t>(x * n + y)] = (((2 * y - x) % n) + n) % n;
    return from_table(n, t, "core:" + std::to_string(n));
}

struct ConjugationQuandle {
    FiniteQuandle quandle;
    std::vector<Perm> elements;
    std::vector<int> seed_index;
};

// Union of the conjugacy classes of the seeds under the group the generators span.
inline ConjugationQuandle conjugation_dehn_quandle(const std::vector<Perm>& generators, const std::vector<Perm>& seeds) {
    int degree = 0;
    for (const auto& p : generators) degree = std::max(degree, static_cast<int>(p.size()));
    for (const auto& p : seeds) degree = std::max(degree, static_cast<int>(p.size()));
    std::vector<Perm> gens, inv;
    for (const auto& p : generators) {
        gens.push_back(pad(p, degree));
        inv.push_back(invert(gens.back()));
    }
    ConjugationQuandle out;
    std::map<Perm, int> index;
    std::deque<int> queue;
    auto add = [&](const Perm& p) {
        auto [it, fresh] = index.emplace(p, static_cast<int>(out.elements.size()));
        if (fresh) {
            out.elements.push_back(p);
            queue.push_back(it->second);
        }
        return it->second;
    };
    for (const auto& s : seeds) out.seed_index.push_back(add(pad(s, degree)));
    while (!queue.empty()) {
        Perm x = out.elements[static_cast<std::size_t>(queue.front())];
        queue.pop_front();
        for (std::size_t k = 0; k < gens.size(); ++k) {
            add(conjugate(x, gens[k]));
            add(conjugate(x, inv[k]));
        }
    }
    int n = static_cast<int>(out.elements.size());
    std::vector<int> t(static_cast<std::size_t>(n * n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            t[static_cast<std::size_t>(x * n + y)] =
                index.at(conjugate(out.elements[static_cast<std::size_t>(x)], out.elements[static_cast<std::size_t>(y)]));
    out.quandle = from_table(n, t);
    return out;
}

// Transpositions of S_n.
inline FiniteQuandle transposition_quandle(int n) {
    std::vector<Perm> gens;
    for (int i = 0; i + 1 < n; ++i) gens.push_back(parse_cycles("(" + std::to_string(i + 1) + " " + std::to_string(i + 2) + ")", n));
    auto q = conjugation_dehn_quandle(gens, {gens.front()}).quandle;
    q.name = "conj:S" + std::to_string(n);
    return q;
}

struct AxiomReport {
    bool ok = true;
    std::string witness;
};

inline AxiomReport check_axioms(const FiniteQuandle& q) {
    int n = q.n;
    for (int x = 0; x < n; ++x)
        if (q.op(x, x) != x) return {false, "idempotence fails at x=" + std::to_string(x)};
    for (int y = 0; y < n; ++y) {
        std::vector<bool> hit(static_cast<std::size_t>(n), false);
        for (int x = 0; x < n; ++x) {
            int z = q.op(x, y);
            if (hit[static_cast<std::size_t>(z)])
                return {false, "right translation by " + std::to_string(y) + " is not bijective"};
            hit[static_cast<std::size_t>(z)] = true;
        }
    }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                if (q.op(q.op(x, y), z) != q.op(q.op(x, z), q.op(y, z)))
                    return {false, "self-distributivity fails at (x,y,z)=(" + std::to_string(x) + "," + std::to_string(y) +
                                       "," + std::to_string(z) + ")"};
    return {};
}

inline int evaluate_term(const QuandleTerm& t, const std::vector<int>& assign, const FiniteQuandle& q) {
    int x = assign[static_cast<std::size_t>(t.base)];
    for (const auto& l : t.tail) {
        int y = assign[static_cast<std::size_t>(l.gen)];
        x = l.sign > 0 ? q.op(x, y) : q.op_inv(x, y);
    }
    return x;
}

inline bool relation_holds(const QuandleRelation& r, const std::vector<int>& assign, const FiniteQuandle& q) {
    return evaluate_term(r.lhs, assign, q) == evaluate_term(r.rhs, assign, q);
}

// Number of quandle homomorphisms from the presented quandle to a finite one.
inline std::uint64_t hom_count(const QuandlePresentation& p, const FiniteQuandle& target) {
    int n = p.gens.size();
    if (n == 0) return 1;
    std::vector<int> occ(static_cast<std::size_t>(n), 0);
    for (const auto& r : p.relations)
        for (const auto* t : {&r.lhs, &r.rhs}) {
            ++occ[static_cast<std::size_t>(t->base)];
            for (const auto& l : t->tail) ++occ[static_cast<std::size_t>(l.gen)];
        }
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return occ[static_cast<std::size_t>(a)] > occ[static_cast<std::size_t>(b)]; });
    std::vector<int> pos(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
    std::vector<std::vector<const QuandleRelation*>> ready(static_cast<std::size_t>(n));
    for (const auto& r : p.relations) {
        int d = pos[static_cast<std::size_t>(r.lhs.base)];
        for (const auto* t : {&r.lhs, &r.rhs}) {
            d = std::max(d, pos[static_cast<std::size_t>(t->base)]);
            for (const auto& l : t->tail) d = std::max(d, pos[static_cast<std::size_t>(l.gen)]);
        }
        ready[static_cast<std::size_t>(d)].push_back(&r);
    }
    std::vector<int> assign(static_cast<std::size_t>(n), 0);
    std::uint64_t count = 0;
    auto rec = [&](auto&& self, int depth) -> void {
        if (depth == n) {
            ++count;
            return;
        }
        int g = order[static_cast<std::size_t>(depth)];
        for (int v = 0; v < target.n; ++v) {
            assign[static_cast<std::size_t>(g)] = v;
            bool ok = true;
            for (const auto* r : ready[static_cast<std::size_t>(depth)])
                if (!relation_holds(*r, assign, target)) {
                    ok = false;
                    break;
                }
            if (ok) self(self, depth + 1);
        }
    };
    rec(rec, 0);
    return count;
}

namespace detail {

inline std::vector<int> closure(const FiniteQuandle& q, std::vector<int> seed) {
    std::vector<bool> in(static_cast<std::size_t>(q.n), false);
    for (int s : seed) in[static_cast<std::size_t>(s)] = true;
    for (std::size_t i = 0; i < seed.size(); ++i)
        for (std::size_t j = 0; j < seed.size(); ++j)
            for (int z : {q.op(seed[i], seed[j]), q.op_inv(seed[i], seed[j])})
                if (!in[static_cast<std::size_t>(z)]) {
                    in[static_cast<std::size_t>(z)] = true;
                    seed.push_back(z);
                }
    return seed;
}

inline std::vector<std::vector<int>> profiles(const FiniteQuandle& q) {
    std::vector<std::vector<int>> out;
    for (int x = 0; x < q.n; ++x) {
        std::vector<int> cycles;
        std::vector<bool> seen(static_cast<std::size_t>(q.n), false);
        for (int y = 0; y < q.n; ++y) {
            if (seen[static_cast<std::size_t>(y)]) continue;
            int len = 0;
            for (int z = y; !seen[static_cast<std::size_t>(z)]; z = q.op(z, x)) {
                seen[static_cast<std::size_t>(z)] = true;
                ++len;
            }
            cycles.push_back(len);
        }
        std::sort(cycles.begin(), cycles.end());
        int fixes = 0;
        for (int y = 0; y < q.n; ++y)
            if (q.op(x, y) == x) ++fixes;
        cycles.push_back(-fixes);
        out.push_back(cycles);
    }
    return out;
}

}  // namespace detail

// An isomorphism a -> b as an index map, if one exists.
inline std::optional<std::vector<int>> quandle_isomorphic(const FiniteQuandle& a, const FiniteQuandle& b) {
    if (a.n != b.n) return std::nullopt;
    int n = a.n;
    if (n == 0) return std::vector<int>{};
    auto pa = detail::profiles(a), pb = detail::profiles(b);
    {
        auto sa = pa, sb = pb;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return std::nullopt;
    }
    std::vector<int> gens;
    std::vector<int> span;
    while (static_cast<int>(span.size()) < n) {
        std::vector<bool> in(static_cast<std::size_t>(n), false);
        for (int s : span) in[static_cast<std::size_t>(s)] = true;
        int pick = 0;
        while (in[static_cast<std::size_t>(pick)]) ++pick;
        gens.push_back(pick);
        span = detail::closure(a, gens);
    }
    std::vector<int> img(static_cast<std::size_t>(gens.size()), -1);
    std::optional<std::vector<int>> found;
    auto extend = [&](std::size_t k) -> std::optional<std::vector<int>> {
        std::vector<int> map(static_cast<std::size_t>(n), -1);
        std::vector<int> known;
        for (std::size_t i = 0; i < k; ++i) {
            int g = gens[i];
            if (map[static_cast<std::size_t>(g)] != -1 && map[static_cast<std::size_t>(g)] != img[i]) return std::nullopt;
            if (map[static_cast<std::size_t>(g)] == -1) known.push_back(g);
            map[static_cast<std::size_t>(g)] = img[i];
        }
        for (std::size_t i = 0; i < known.size(); ++i)
            for (std::size_t j = 0; j <= i; ++j)
                for (auto [x, y] : {std::pair{known[i], known[j]}, std::pair{known[j], known[i]}})
                    for (int sgn : {1, -1}) {
                        int z = sgn > 0 ? a.op(x, y) : a.op_inv(x, y);
                        int w = sgn > 0 ? b.op(map[static_cast<std::size_t>(x)], map[static_cast<std::size_t>(y)])
                                        : b.op_inv(map[static_cast<std::size_t>(x)], map[static_cast<std::size_t>(y)]);
                        if (map[static_cast<std::size_t>(z)] == -1) {
                            map[static_cast<std::size_t>(z)] = w;
                            known.push_back(z);
                        } else if (map[static_cast<std::size_t>(z)] != w) {
                            return std::nullopt;
                        }
                    }
        return map;
    };
    auto rec = [&](auto&& self, std::size_t k) -> void {
        if (found) return;
        if (k == gens.size()) {
            auto map = extend(k);
            if (!map) return;
            std::vector<bool> hit(static_cast<std::size_t>(n), false);
            for (int v : *map) {
                if (v < 0 || hit[static_cast<std::size_t>(v)]) return;
                hit[static_cast<std::size_t>(v)] = true;
            }
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y)
                    if ((*map)[static_cast<std::size_t>(a.op(x, y))] !=
                        b.op((*map)[static_cast<std::size_t>(x)], (*map)[static_cast<std::size_t>(y)]))
                        return;
            found = map;
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (pb[static_cast<std::size_t>(v)] != pa[static_cast<std::size_t>(gens[k])]) continue;
            img[k] = v;
            if (!extend(k + 1)) continue;
            self(self, k + 1);
            if (found) return;
        }
    };
    rec(rec, 0);
    return found;
}

// Every quandle of order n up to isomorphism, by backtracking over the table with distributivity pruning.
inline std::vector<FiniteQuandle> all_quandles(int n) {
    if (n < 1) return {};
    auto nn = static_cast<std::size_t>(n);
    std::vector<int> t(nn * nn, -1);
    auto at = [&](int x, int y) -> int& { return t[static_cast<std::size_t>(x * n + y)]; };
    for (int x = 0; x < n; ++x) at(x, x) = x;
    std::vector<std::vector<bool>> used(nn, std::vector<bool>(nn, false));  // used[y][v]: column y hits v
    for (int y = 0; y < n; ++y) used[static_cast<std::size_t>(y)][static_cast<std::size_t>(y)] = true;
    auto consistent = [&] {
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                int xy = at(x, y);
                if (xy < 0) continue;
                for (int z = 0; z < n; ++z) {
                    int l = at(xy, z), xz = at(x, z), yz = at(y, z);
                    if (l < 0 || xz < 0 || yz < 0) continue;
                    int r = at(xz, yz);
                    if (r >= 0 && r != l) return false;
                }
            }
        return true;
    };
    std::set<std::vector<int>> canon;
    std::vector<int> perm(nn);
    auto rec = [&](auto&& self, int cell) -> void {
        if (cell == n * n) {
            std::vector<int> best;
            std::iota(perm.begin(), perm.end(), 0);
            do {
                std::vector<int> img(nn * nn);
                for (int x = 0; x < n; ++x)
                    for (int y = 0; y < n; ++y)
                        img[static_cast<std::size_t>(perm[static_cast<std::size_t>(x)] * n + perm[static_cast<std::size_t>(y)])] =
                            perm[static_cast<std::size_t>(at(x, y))];
                if (best.empty() || img < best) best = img;
            } while (std::next_permutation(perm.begin(), perm.end()));
            canon.insert(best);
            return;
        }
        int y = cell / n, x = cell % n;  // column-major so each right translation completes in turn
        if (x == y) {
            self(self, cell + 1);
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (used[static_cast<std::size_t>(y)][static_cast<std::size_t>(v)]) continue;
            at(x, y) = v;
            used[static_cast<std::size_t>(y)][static_cast<std::size_t>(v)] = true;
            if (consistent()) self(self, cell + 1);
            used[static_cast<std::size_t>(y)][static_cast<std::size_t>(v)] = false;
            at(x, y) = -1;
        }
    };
    rec(rec, 0);
    std::vector<FiniteQuandle> out;
    int k = 0;
    for (const auto& c : canon) out.push_back(from_table(n, c, "Q" + std::to_string(n) + "." + std::to_string(++k)));
    return out;
}

struct Enumeration {
    FiniteQuandle quandle;
    std::vector<int> generator_images;
    std::vector<QuandleTerm> representatives;
};

namespace detail {

// Coset-table enumeration of the presented quandle as a set acted on by its enveloping group.
class QuandleEnumerator {
public:
    QuandleEnumerator(const QuandlePresentation& p, std::size_t max_records) : p_(p), cols_(2 * p.gens.size()), max_(max_records) {}

    Enumeration run(std::size_t max_elements) {
        int n = p_.gens.size();
        for (int b = 0; b < n; ++b) fresh();
        std::vector<GroupWord> relators;
        for (const auto& r : p_.relations) {
            GroupWord w = action_word(r.lhs);
            auto rhs = inverse(action_word(r.rhs));
            w.insert(w.end(), rhs.begin(), rhs.end());
            w = cyclic_reduce(w);
            if (!w.empty()) relators.push_back(w);
        }
        for (int b = 0; b < n; ++b) scan_and_fill(find(b), {{b, 1}});
        for (const auto& r : p_.relations) {
            int x = trace(find(r.lhs.base), r.lhs.tail);
            int y = trace(find(r.rhs.base), r.rhs.tail);
            coincidence(x, y);
        }
        for (std::size_t x = 0; x < table_.size(); ++x) {
            for (const auto& rel : relators) {
                if (!live(static_cast<int>(x))) break;
                scan_and_fill(static_cast<int>(x), rel);
            }
            if (!live(static_cast<int>(x))) continue;
            for (int c = 0; c < cols_; ++c) {
                if (!live(static_cast<int>(x))) break;
                if (table_[x][static_cast<std::size_t>(c)] < 0) define(static_cast<int>(x), c);
            }
        }
        return collect(max_elements);
    }

private:
    const QuandlePresentation& p_;
    int cols_;
    std::size_t max_;
    std::vector<std::vector<int>> table_;
    std::vector<int> parent_;

    static int col(const Letter& l) { return 2 * l.gen + (l.sign > 0 ? 0 : 1); }
    static int inv_col(int c) { return c ^ 1; }

    // x * (a * W) acts as W^-1 a W read left to right.
    static GroupWord action_word(const QuandleTerm& t) {
        GroupWord w = inverse(t.tail);
        w.push_back({t.base, 1});
        w.insert(w.end(), t.tail.begin(), t.tail.end());
        return free_reduce(w);
    }

    bool live(int x) const { return parent_[static_cast<std::size_t>(x)] == x; }
    int find(int x) {
        while (parent_[static_cast<std::size_t>(x)] != x) {
            parent_[static_cast<std::size_t>(x)] = parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(x)])];
            x = parent_[static_cast<std::size_t>(x)];
        }
        return x;
    }
    int fresh() {
        if (table_.size() >= max_) throw Exhausted("more than " + std::to_string(max_) + " records defined");
        table_.emplace_back(static_cast<std::size_t>(cols_), -1);
        parent_.push_back(static_cast<int>(parent_.size()));
        return static_cast<int>(table_.size() - 1);
    }
    int& entry(int x, int c) { return table_[static_cast<std::size_t>(x)][static_cast<std::size_t>(c)]; }
    int define(int x, int c) {
        int y = fresh();
        entry(x, c) = y;
        entry(y, inv_col(c)) = x;
        return y;
    }
    int trace(int x, const GroupWord& w) {
        for (const auto& l : w) {
            x = find(x);
            int c = col(l);
            int y = entry(x, c);
            x = y >= 0 ? y : define(x, c);
        }
        return find(x);
    }
    void scan_and_fill(int x, const GroupWord& w) {
        int f = x, b = x;
        long i = 0, j = static_cast<long>(w.size()) - 1;
        while (true) {
            while (i <= j && entry(f, col(w[static_cast<std::size_t>(i)])) >= 0) f = entry(f, col(w[static_cast<std::size_t>(i++)]));
            if (i > j) {
                coincidence(f, b);
                return;
            }
            while (j >= i && entry(b, inv_col(col(w[static_cast<std::size_t>(j)]))) >= 0)
                b = entry(b, inv_col(col(w[static_cast<std::size_t>(j--)])));
            if (j < i) {
                coincidence(f, b);
                return;
            }
            if (i == j) {
                int c = col(w[static_cast<std::size_t>(i)]);
                entry(f, c) = b;
                entry(b, inv_col(c)) = f;
                return;
            }
            define(f, col(w[static_cast<std::size_t>(i)]));
        }
    }
    void coincidence(int a, int b) {
        std::deque<int> queue;
        auto merge = [&](int u, int v) {
            u = find(u);
            v = find(v);
            if (u == v) return;
            if (u > v) std::swap(u, v);
            parent_[static_cast<std::size_t>(v)] = u;
            queue.push_back(v);
        };
        merge(a, b);
        while (!queue.empty()) {
            int e = queue.front();
            queue.pop_front();
            for (int c = 0; c < cols_; ++c) {
                int f = entry(e, c);
                if (f < 0) continue;
                entry(e, c) = -1;
                if (entry(f, inv_col(c)) == e) entry(f, inv_col(c)) = -1;
                int e1 = find(e), f1 = find(f);
                if (entry(e1, c) >= 0)
                    merge(f1, entry(e1, c));
                else if (entry(f1, inv_col(c)) >= 0)
                    merge(e1, entry(f1, inv_col(c)));
                else {
                    entry(e1, c) = f1;
                    entry(f1, inv_col(c)) = e1;
                }
            }
        }
    }

    Enumeration collect(std::size_t max_elements) {
        int n = p_.gens.size();
        std::vector<int> index(table_.size(), -1);
        std::vector<int> recs;
        std::vector<QuandleTerm> reps;
        Enumeration out;
        for (int b = 0; b < n; ++b) {
            int r = find(b);
            if (index[static_cast<std::size_t>(r)] < 0) {
                index[static_cast<std::size_t>(r)] = static_cast<int>(recs.size());
                recs.push_back(r);
                reps.push_back({b, {}});
            }
            out.generator_images.push_back(index[static_cast<std::size_t>(r)]);
        }
        for (std::size_t k = 0; k < recs.size(); ++k) {
            for (int c = 0; c < cols_; ++c) {
                int y = entry(recs[k], c);
                if (y < 0) throw std::logic_error("enumeration left an undefined entry");
                y = find(y);
                if (index[static_cast<std::size_t>(y)] >= 0) continue;
                if (recs.size() >= max_elements)
                    throw Exhausted("presented quandle has more than " + std::to_string(max_elements) + " elements");
                index[static_cast<std::size_t>(y)] = static_cast<int>(recs.size());
                recs.push_back(y);
                QuandleTerm t = reps[k];
                t.tail.push_back({c / 2, c % 2 == 0 ? 1 : -1});
                reps.push_back(t);
            }
        }
        int m = static_cast<int>(recs.size());
        auto act = [&](int x, const GroupWord& w) {
            int r = recs[static_cast<std::size_t>(x)];
            for (const auto& l : w) r = find(entry(r, col(l)));
            return index[static_cast<std::size_t>(r)];
        };
        std::vector<int> t(static_cast<std::size_t>(m * m));
        for (int y = 0; y < m; ++y) {
            auto w = action_word(reps[static_cast<std::size_t>(y)]);
            for (int x = 0; x < m; ++x) t[static_cast<std::size_t>(x * m + y)] = act(x, w);
        }
        out.quandle = from_table(m, t);
        out.representatives = reps;
        auto ax = check_axioms(out.quandle);
        if (!ax.ok) throw std::logic_error("enumerated table is not a quandle: " + ax.witness);
        for (const auto& r : p_.relations)
            if (!relation_holds(r, out.generator_images, out.quandle))
                throw std::logic_error("enumerated table violates a defining relation");
        return out;
    }
};

}  // namespace detail

// Exhausted is thrown rather than returning a table that has not closed.
inline Enumeration winker_enumerate(const QuandlePresentation& p, std::size_t max_elements, std::size_t max_steps) {
    detail::QuandleEnumerator e(p, max_steps);
    return e.run(max_elements);
}

inline GroupPresentation enveloping_presentation(const QuandlePresentation& q) {
    GroupPresentation g;
    for (const auto& n : q.gens.names) g.gens.names.push_back("e_" + n);
    for (const auto& r : q.relations) {
        auto w = free_reduce(concat(term_element(r.lhs), inverse(term_element(r.rhs))));
        if (!w.empty()) g.relators.push_back(w);
    }
    return g;
}

inline std::vector<GroupWord> canonical_relators(const std::vector<GroupWord>& rels) {
    std::vector<GroupWord> out;
    for (const auto& r : rels) {
        auto c = cyclic_canonical(r);
        if (!c.empty()) out.push_back(c);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace dehnq
