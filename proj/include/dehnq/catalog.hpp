#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "centralizer.hpp"
#include "garside.hpp"
#include "io.hpp"
#include "simplify.hpp"

namespace dehnq {

namespace detail {

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

// Accepts "4" as well as "n=4".
inline int param(const std::string& text, const std::string& whole) {
    auto v = text.substr(text.find('=') == std::string::npos ? 0 : text.find('=') + 1);
    try {
        std::size_t used = 0;
        int x = std::stoi(v, &used);
        if (used != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        throw UnknownBuiltin(whole);
    }
}

inline int mod1(int i, int n) { return ((i - 1) % n + n) % n; }  // 1-based index i mod n, as 0-based id

inline PositiveWord power(int g, int k) { return PositiveWord(static_cast<std::size_t>(k), g); }

inline PositiveWord repeat(const PositiveWord& w, int k) {
    PositiveWord out;
    for (int i = 0; i < k; ++i) out.insert(out.end(), w.begin(), w.end());
    return out;
}

// prod(x_i, x_{i+1}, ...; len) with cyclic indices.
inline PositiveWord cyclic_run(int first, int len, int n, int step = 1) {
    PositiveWord w;
    for (int k = 0; k < len; ++k) w.push_back(mod1(first + step * k, n));
    return w;
}

inline GroupWord gw(const PositiveWord& w) { return to_group(w); }

inline GroupWord commutator(const GroupWord& a, const GroupWord& b) {
    return free_reduce(concat(concat(a, b), concat(inverse(a), inverse(b))));
}

inline Perm transposition(int a, int b, int degree) {
    auto p = identity_perm(degree);
    std::swap(p[static_cast<std::size_t>(a)], p[static_cast<std::size_t>(b)]);
    return p;
}

inline Perm product(const std::vector<Perm>& ps) {
    Perm acc = identity_perm(static_cast<int>(ps.front().size()));
    for (const auto& p : ps) acc = compose(acc, p);
    return acc;
}

inline Quotient perm_quotient(const std::string& label, const std::vector<Perm>& images) {
    Quotient q;
    q.label = label;
    for (const auto& p : images) q.degree = std::max(q.degree, static_cast<int>(p.size()));
    for (const auto& p : images) q.perms.push_back(pad(p, q.degree));
    q.matrices.resize(images.size());
    return q;
}

inline Quotient matrix_quotient(int modulus, const std::vector<std::array<long, 4>>& images) {
    Quotient q;
    q.label = "matrix:" + std::to_string(modulus);
    q.modulus = modulus;
    q.perms.resize(images.size());
    for (const auto& m : images) q.matrices.push_back(m);
    return q;
}

inline PresentationFile monoid_file(const std::string& name, Alphabet gens, std::vector<MonoidRelation> rels) {
    PresentationFile f;
    f.kind = Kind::monoid;
    f.name = name;
    f.gens = std::move(gens);
    f.monoid_relations = std::move(rels);
    return f;
}

inline PresentationFile group_file(const std::string& name, Alphabet gens, std::vector<GroupWord> rels) {
    PresentationFile f;
    f.kind = Kind::group;
    f.name = name;
    f.gens = std::move(gens);
    f.relators = std::move(rels);
    return f;
}

inline QuandleRelation qrel(int base, const PositiveWord& tail, int rhs) { return {{base, gw(tail)}, {rhs, {}}}; }

// Symmetric-group images s_i -> (i i+1).
inline Quotient adjacent_transpositions(int count) {
    std::vector<Perm> ims;
    for (int i = 0; i < count; ++i) ims.push_back(transposition(i, i + 1, count + 1));
    return perm_quotient("perm", ims);
}

// Reflections x -> j - x mod k; returns an assignment using at least two reflections.
inline std::optional<Quotient> dihedral_search(const GroupPresentation& g, int max_k) {
    int n = g.gens.size();
    for (int k = 3; k <= max_k; ++k) {
        std::vector<Perm> refl;
        for (int j = 0; j < k; ++j) {
            Perm p(static_cast<std::size_t>(k));
            for (int x = 0; x < k; ++x) p[static_cast<std::size_t>(x)] = ((j - x) % k + k) % k;
            refl.push_back(p);
        }
        std::vector<int> choice(static_cast<std::size_t>(n), 0);
        std::optional<Quotient> found;
        auto rec = [&](auto&& self, int i) -> bool {
            if (i == n) {
                if (std::all_of(choice.begin(), choice.end(), [&](int c) { return c == choice.front(); })) return false;
                std::vector<Perm> ims;
                for (int c : choice) ims.push_back(refl[static_cast<std::size_t>(c)]);
                if (!verify_group_hom(g, ims).ok) return false;
                found = perm_quotient("perm:dihedral", ims);
                return true;
            }
            // The first image may be fixed: rotating every reflection preserves the relators.
            for (int c = 0; c < (i == 0 ? 1 : k); ++c) {
                choice[static_cast<std::size_t>(i)] = c;
                if (self(self, i + 1)) return true;
            }
            return false;
        };
        if (rec(rec, 0)) return found;
    }
    return std::nullopt;
}

inline void fill_artin_complements(PresentationFile& f) {
    int n = f.gens.size();
    f.complement = induce_complement(n, f.monoid_relations, false);
    f.left_complement = induce_complement(n, f.monoid_relations, true);
}

}  // namespace detail

inline CoxeterMatrix coxeter_chain(const std::vector<int>& edges) {
    auto n = edges.size() + 1;
    CoxeterMatrix m(n, std::vector<int>(n, 2));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    for (std::size_t i = 0; i < edges.size(); ++i) m[i][i + 1] = m[i + 1][i] = edges[i];
    return m;
}

// Types A_n, B_n (m12 = 4), D_n (s1, s2 both joined to s3), E6-E8, F4, G2, H3, H4, I2(m).
inline CoxeterMatrix coxeter_type(const std::string& type, const std::string& whole) {
    if (type.empty()) throw UnknownBuiltin(whole);
    char family = type[0];
    std::string rest = type.substr(1);
    auto rank = [&] {
        auto r = detail::param(rest, whole);
        if (r < 1) throw UnknownBuiltin(whole);
        return r;
    };
    switch (family) {
        case 'A': return coxeter_chain(std::vector<int>(static_cast<std::size_t>(rank() - 1), 3));
        case 'B': {
            int n = rank();
            if (n < 2) throw UnknownBuiltin(whole);
            std::vector<int> e(static_cast<std::size_t>(n - 1), 3);
            e[0] = 4;
            return coxeter_chain(e);
        }
        case 'D': {
            int n = rank();
            if (n < 4) throw UnknownBuiltin(whole);
            auto m = coxeter_chain(std::vector<int>(static_cast<std::size_t>(n - 1), 3));
            m[0][1] = m[1][0] = 2;
            m[0][2] = m[2][0] = 3;
            return m;
        }
        case 'E': {
            int n = rank();
            if (n < 6 || n > 8) throw UnknownBuiltin(whole);
            CoxeterMatrix m(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 2));
            for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
            auto join = [&](int a, int b) { m[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)] = m[static_cast<std::size_t>(b - 1)][static_cast<std::size_t>(a - 1)] = 3; };
            join(1, 3);
            join(2, 4);
            for (int i = 3; i < n; ++i) join(i, i + 1);
            return m;
        }
        case 'F':
            if (rest != "4") throw UnknownBuiltin(whole);
            return coxeter_chain({3, 4, 3});
        case 'G':
            if (rest != "2") throw UnknownBuiltin(whole);
            return coxeter_chain({6});
        case 'H':
            if (rest == "3") return coxeter_chain({5, 3});
            if (rest == "4") return coxeter_chain({5, 3, 3});
            throw UnknownBuiltin(whole);
        case 'I': {
            auto parts = detail::split(rest, ':');
            int m = -1;
            if (parts.size() == 2 && parts[0] == "2") m = detail::param(parts[1], whole);
            if (rest.size() > 3 && rest.rfind("2(", 0) == 0 && rest.back() == ')')
                m = detail::param(rest.substr(2, rest.size() - 3), whole);
            if (m < 2) throw UnknownBuiltin(whole);
            return coxeter_chain({m});
        }
        default: break;
    }
    // Upper triangle m12,m13,...,m1n,m23,...; "inf" or 0 for infinity.
    auto items = detail::split(type, ',');
    std::size_t n = 1;
    while (n * (n - 1) / 2 < items.size()) ++n;
    if (n * (n - 1) / 2 != items.size() || n < 2) throw UnknownBuiltin(whole);
    CoxeterMatrix m(n, std::vector<int>(n, 1));
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const auto& it = items[k++];
            int v = it == "inf" ? 0 : detail::param(it, whole);
            if (v == 1 || v < 0) throw UnknownBuiltin(whole);
            m[i][j] = m[j][i] = v;
        }
    return m;
}

namespace detail {

// Signed permutations on points 1..n, -1..-n stored as 0..n-1, n..2n-1.
inline Perm signed_swap(int a, int b, int n) {
    auto p = identity_perm(2 * n);
    std::swap(p[static_cast<std::size_t>(a)], p[static_cast<std::size_t>(b)]);
    std::swap(p[static_cast<std::size_t>(a + n)], p[static_cast<std::size_t>(b + n)]);
    return p;
}

inline std::optional<Quotient> coxeter_quotient(const std::string& type, int rank) {
    if (type.empty()) return std::nullopt;
    char family = type[0];
    std::vector<Perm> ims;
    if (family == 'A') return adjacent_transpositions(rank);
    if (family == 'B') {
        ims.push_back(transposition(0, rank, 2 * rank));
        for (int i = 1; i < rank; ++i) ims.push_back(signed_swap(i - 1, i, rank));
    } else if (family == 'D') {
        ims.push_back(product({transposition(0, rank + 1, 2 * rank), transposition(1, rank, 2 * rank)}));
        for (int i = 1; i < rank; ++i) ims.push_back(signed_swap(i - 1, i, rank));
    } else {
        return std::nullopt;
    }
    return perm_quotient("perm", ims);
}

// Regular representation of the dihedral group of order 2k on points (j, e), e in {0,1}.
inline Quotient dihedral_regular(int k) {
    Perm a(static_cast<std::size_t>(2 * k)), b(static_cast<std::size_t>(2 * k));
    for (int j = 0; j < k; ++j)
        for (int e = 0; e < 2; ++e) {
            auto at = static_cast<std::size_t>(j + k * e);
            a[at] = ((-j) % k + k) % k + k * (1 - e);
            b[at] = ((1 - j) % k + k) % k + k * (1 - e);
        }
    return perm_quotient("perm:regular", {a, b});
}

}  // namespace detail

inline PresentationFile artin_file(const std::string& name, const CoxeterMatrix& cm, const std::string& type = {}) {
    int n = static_cast<int>(cm.size());
    auto m = artin_monoid(cm, indexed_alphabet("s", n));
    auto f = detail::monoid_file(name, m.gens, m.relations);
    f.complement = m.complement;
    f.left_complement = m.left_complement;
    f.delta = m.delta;
    if (n == 2 && cm[0][1] > 0) {
        f.quotients.push_back(detail::dihedral_regular(cm[0][1]));
    } else if (auto q = detail::coxeter_quotient(type, n)) {
        f.quotients.push_back(*q);
    }
    return f;
}

inline PresentationFile braid_file(int n, const std::string& name) {
    if (n < 2) throw UnknownBuiltin(name);
    auto f = artin_file(name, coxeter_chain(std::vector<int>(static_cast<std::size_t>(n - 2), 3)), "A");
    if (n == 2) {
        f.gens = indexed_alphabet("s", 1);
        f.complement = Complement(1);
        f.left_complement = Complement(1);
        f.delta = PositiveWord{0};
        f.quotients = {detail::adjacent_transpositions(1)};
    }
    std::vector<GroupWord> cs{{{0, 1}}};
    for (int j = 2; j < n - 1; ++j) cs.push_back({{j, 1}});
    if (n >= 3) cs.push_back(detail::gw({1, 0, 0, 1}));
    f.centralizers[0] = cs;
    for (int i = 0; i + 2 < n; ++i) f.conjugators.push_back({i + 1, i, detail::gw({i, i + 1})});
    return f;
}

inline PresentationFile torus_knot_file(int p, int q, const std::string& name) {
    if (p < 2 || q < 2) throw UnknownBuiltin(name);
    Alphabet a{{"x", "y"}};
    auto f = detail::monoid_file(name, a, {{detail::power(0, p), detail::power(1, q)}});
    f.complement = Complement(2);
    f.complement->set(0, 1, detail::power(0, p - 1));
    f.complement->set(1, 0, detail::power(1, q - 1));
    f.left_complement = Complement(2);
    f.left_complement->set(0, 1, detail::power(1, q - 1));
    f.left_complement->set(1, 0, detail::power(0, p - 1));
    f.delta = detail::power(0, p);
    std::vector<int> xc, yc;
    for (int i = 0; i < p; ++i) xc.push_back(i);
    for (int i = 0; i < q; ++i) yc.push_back(p - 1 + i);
    auto cycle = [](const std::vector<int>& pts, int degree) {
        auto perm = identity_perm(degree);
        for (std::size_t i = 0; i < pts.size(); ++i)
            perm[static_cast<std::size_t>(pts[i])] = pts[(i + 1) % pts.size()];
        return perm;
    };
    int degree = p + q - 1;
    f.quotients.push_back(detail::perm_quotient("perm", {cycle(xc, degree), cycle(yc, degree)}));
    return f;
}

inline PresentationFile torus_link_file(int n, int m, const std::string& name) {
    if (n < 2 || m < 2) throw UnknownBuiltin(name);
    std::vector<MonoidRelation> rels;
    for (int i = 1; i < n; ++i) rels.push_back({detail::cyclic_run(i, m, n), detail::cyclic_run(i + 1, m, n)});
    auto f = detail::monoid_file(name, indexed_alphabet("x", n), rels);
    f.complement = Complement(n);
    f.left_complement = Complement(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            f.complement->set(i - 1, j - 1, detail::cyclic_run(i + 1, m - 1, n));
            f.left_complement->set(i - 1, j - 1, detail::cyclic_run(j - m + 1, m - 1, n));
        }
    f.delta = detail::cyclic_run(1, m, n);
    if (auto q = detail::dihedral_search(group_of(f.monoid()), 12)) f.quotients.push_back(*q);
    return f;
}

// x1^2 = x2^5 = y1y2y3y1 = y2y3y1y2 = y3y1y2y3.
inline PresentationFile mixed_ex3_file(const std::string& name) {
    Alphabet a{{"x1", "x2", "y1", "y2", "y3"}};
    auto y = [](int k) { return 2 + detail::mod1(k, 3); };
    auto yrun = [&](int first, int len) {
        PositiveWord w;
        for (int i = 0; i < len; ++i) w.push_back(y(first + i));
        return w;
    };
    std::vector<MonoidRelation> rels{{detail::power(0, 2), detail::power(1, 5)},
                                     {detail::power(1, 5), yrun(1, 4)},
                                     {yrun(1, 4), yrun(2, 4)},
                                     {yrun(2, 4), yrun(3, 4)}};
    auto f = detail::monoid_file(name, a, rels);
    const int p[2] = {2, 5};
    f.complement = Complement(5);
    f.left_complement = Complement(5);
    for (int s = 0; s < 5; ++s)
        for (int t = 0; t < 5; ++t) {
            if (s == t) continue;
            if (s < 2) {
                f.complement->set(s, t, detail::power(s, p[s] - 1));
            } else {
                f.complement->set(s, t, yrun(s - 2 + 2, 3));
            }
            if (t < 2) {
                f.left_complement->set(s, t, detail::power(t, p[t] - 1));
            } else {
                f.left_complement->set(s, t, yrun(t - 2 + 1, 3));
            }
        }
    f.delta = detail::power(0, 2);
    auto c = parse_cycles("(1 3 2)", 3);
    f.quotients.push_back(detail::perm_quotient(
        "perm", {c, c, parse_cycles("(1 2)", 3), parse_cycles("(1 3)", 3), parse_cycles("(2 3)", 3)}));
    return f;
}

// B3 and A3 Artin monoids glued along (x1x2x3)^6 = (y1y2y3y1y2y1)^3.
inline PresentationFile mixed_ex4_file(const std::string& name) {
    Alphabet a{{"x1", "x2", "x3", "y1", "y2", "y3"}};
    auto x = [](int i) { return detail::mod1(i, 3); };
    auto y = [](int i) { return 3 + detail::mod1(i, 3); };
    auto run = [](const std::function<int(int)>& g, int first, int last) {
        PositiveWord w;
        int step = last >= first ? 1 : -1;
        for (int i = first;; i += step) {
            w.push_back(g(i));
            if (i == last) break;
        }
        return w;
    };
    PositiveWord d1 = detail::repeat({0, 1, 2}, 6);
    PositiveWord d2 = detail::repeat({3, 4, 5, 3, 4, 3}, 3);
    std::vector<MonoidRelation> rels{{{0, 1, 0, 1}, {1, 0, 1, 0}}, {{1, 2, 1}, {2, 1, 2}}, {{0, 2}, {2, 0}},
                                     {{3, 4, 3}, {4, 3, 4}},       {{4, 5, 4}, {5, 4, 5}}, {{3, 5}, {5, 3}},
                                     {d1, d2}};
    auto f = detail::monoid_file(name, a, rels);
    std::vector<MonoidRelation> local(rels.begin(), rels.begin() + 6);
    auto right = induce_partial_complement(6, local, false);
    auto left = induce_partial_complement(6, local, true);
    f.complement = Complement(6);
    f.left_complement = Complement(6);
    for (int s = 0; s < 6; ++s)
        for (int t = 0; t < 6; ++t) {
            if (s == t) continue;
            bool sx = s < 3, tx = t < 3;
            if (sx == tx) {
                f.complement->set(s, t, right->at(s, t));
                f.left_complement->set(s, t, left->at(s, t));
                continue;
            }
            if (sx) {
                int i = s + 1;
                f.complement->set(s, t, run(x, i + 1, i + 17));
            } else {
                int k = s - 2;
                f.complement->set(s, t, k < 3 ? run(y, k + 17, k + 1) : run(y, 1, 17));
            }
            // g(s,t) t = Delta; Delta is (x_{i+1} x_{i+2} x_i)^6 or one of the A3 sixth powers.
            if (tx) {
                int i = t + 1;
                f.left_complement->set(s, t, run(x, i + 1, i + 17));
            } else {
                static const PositiveWord ending[3] = {detail::repeat({4, 5, 3}, 6), detail::repeat({3, 5, 4}, 6),
                                                       detail::repeat({4, 3, 5}, 6)};
                auto w = ending[t - 3];
                w.pop_back();
                f.left_complement->set(s, t, w);
            }
        }
    f.delta = d1;
    std::vector<Perm> ims{detail::transposition(0, 3, 9), detail::signed_swap(0, 1, 3), detail::signed_swap(1, 2, 3),
                          detail::transposition(6, 7, 9), detail::transposition(7, 8, 9), detail::transposition(6, 7, 9)};
    for (auto& p : ims) p = pad(p, 9);
    f.quotients.push_back(detail::perm_quotient("perm", ims));
    return f;
}

inline PresentationFile dihedral_file(int n, const std::string& name) {
    if (n < 1) throw UnknownBuiltin(name);
    Alphabet a{{"s1", "s2"}};
    GroupWord s1s2 = detail::gw({0, 1});
    GroupWord rot;
    for (int i = 0; i < n; ++i) rot = concat(rot, s1s2);
    auto f = detail::group_file(name, a, {detail::gw({0, 0}), detail::gw({1, 1}), rot});
    auto half = [&](int k) {
        GroupWord w;
        for (int i = 0; i < k; ++i) w = concat(w, s1s2);
        return w;
    };
    if (n % 2 == 1) {
        f.centralizers[0] = {detail::gw({0})};
        f.conjugators.push_back({1, 0, half((n - 1) / 2)});
    } else {
        f.centralizers[0] = {detail::gw({0}), half(n / 2)};
        f.centralizers[1] = {detail::gw({1}), half(n / 2)};
    }
    f.quotients.push_back(detail::dihedral_regular(n));
    return f;
}

// raag:N:1-2,2-3 lists the commuting pairs.
inline PresentationFile raag_file(const std::string& spec, const std::string& name) {
    auto parts = detail::split(spec, ':');
    if (parts.empty() || parts.size() > 2) throw UnknownBuiltin(name);
    int n = detail::param(parts[0], name);
    if (n < 1) throw UnknownBuiltin(name);
    std::vector<std::pair<int, int>> edges;
    if (parts.size() == 2 && !parts[1].empty())
        for (const auto& e : detail::split(parts[1], ',')) {
            auto ab = detail::split(e, '-');
            if (ab.size() != 2) throw UnknownBuiltin(name);
            int i = detail::param(ab[0], name), j = detail::param(ab[1], name);
            if (i < 1 || j < 1 || i > n || j > n || i == j) throw UnknownBuiltin(name);
            edges.emplace_back(std::min(i, j) - 1, std::max(i, j) - 1);
        }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    std::vector<GroupWord> rels;
    for (auto [i, j] : edges) rels.push_back(detail::commutator({{i, 1}}, {{j, 1}}));
    auto f = detail::group_file(name, indexed_alphabet("x", n), rels);
    for (int i = 0; i < n; ++i) {
        std::vector<GroupWord> ws{{{i, 1}}};
        for (auto [a, b] : edges) {
            if (a == i) ws.push_back({{b, 1}});
            if (b == i) ws.push_back({{a, 1}});
        }
        f.centralizers[i] = ws;
    }
    std::vector<Perm> ims;
    for (int i = 0; i < n; ++i) ims.push_back(detail::transposition(2 * i, 2 * i + 1, 2 * n));
    f.quotients.push_back(detail::perm_quotient("perm", ims));
    return f;
}

inline PresentationFile surface_file(int g, const std::string& name) {
    if (g < 1) throw UnknownBuiltin(name);
    Alphabet a;
    for (int i = 1; i <= g; ++i) {
        a.names.push_back("a" + std::to_string(i));
        a.names.push_back("b" + std::to_string(i));
    }
    GroupWord r;
    for (int i = 0; i < g; ++i) r = concat(r, detail::commutator({{2 * i, 1}}, {{2 * i + 1, 1}}));
    auto f = detail::group_file(name, a, {r});
    for (int s = 0; s < 2 * g; ++s) f.centralizers[s] = {{{s, 1}}};
    // Handles paired in S3 so that [a,b][b,a] cancels; an odd last handle maps both generators to one 3-cycle.
    auto t = parse_cycles("(1 2)", 3), c = parse_cycles("(1 2 3)", 3);
    std::vector<Perm> ims;
    for (int i = 0; i < g; ++i) {
        if (i + 1 == g && g % 2 == 1) {
            ims.push_back(c);
            ims.push_back(c);
        } else if (i % 2 == 0) {
            ims.push_back(t);
            ims.push_back(c);
        } else {
            ims.push_back(c);
            ims.push_back(t);
        }
    }
    auto q = detail::perm_quotient("perm", ims);
    if (verify_group_hom(f.group(), q.images()).ok) f.quotients.push_back(q);
    return f;
}

inline PresentationFile mcg_genus1_file(const std::string& name) {
    Alphabet a{{"Ta", "Tb"}};
    auto f = detail::group_file(name, a,
                                {free_reduce(concat(detail::gw({0, 1, 0}), inverse(detail::gw({1, 0, 1})))),
                                 detail::gw(detail::repeat({0, 1}, 6))});
    f.centralizers[0] = {detail::gw({0}), detail::gw({1, 0, 0, 1})};
    f.conjugators.push_back({1, 0, detail::gw({0, 1})});
    for (int m : {5, 6}) f.quotients.push_back(detail::matrix_quotient(m, {{1, 1, 0, 1}, {1, 0, -1, 1}}));
    f.solver = "braid:3";
    return f;
}

namespace detail {

inline std::vector<GroupWord> braid_relators(int n) {
    std::vector<GroupWord> rels;
    for (int i = 0; i < n; ++i)
        for (int j = i + 2; j < n; ++j) rels.push_back(commutator({{i, 1}}, {{j, 1}}));
    for (int i = 0; i + 1 < n; ++i)
        rels.push_back(free_reduce(concat(gw({i, i + 1, i}), inverse(gw({i + 1, i, i + 1})))));
    return rels;
}

inline PositiveWord iota_word() { return {0, 1, 2, 3, 4, 4, 3, 2, 1, 0}; }

}  // namespace detail

inline PresentationFile mcg_genus2_file(const std::string& name) {
    auto rels = detail::braid_relators(5);
    rels.push_back(detail::gw(detail::repeat({0, 1, 2, 3, 4}, 6)));
    rels.push_back(detail::gw(detail::repeat(detail::iota_word(), 2)));
    rels.push_back(detail::commutator({{0, 1}}, detail::gw(detail::iota_word())));
    auto f = detail::group_file(name, indexed_alphabet("a", 5), rels);
    f.centralizers[0] = {detail::gw({4, 3, 2, 1, 0, 0, 1, 2, 3, 4}), detail::gw({0}), detail::gw({2}), detail::gw({3}),
                         detail::gw({4})};
    for (int i = 0; i < 4; ++i) f.conjugators.push_back({i + 1, i, detail::gw({i, i + 1})});
    f.quotients.push_back(detail::adjacent_transpositions(5));
    f.solver = "braid:6";
    return f;
}

inline PresentationFile mcg_sphere6_file(const std::string& name) {
    auto rels = detail::braid_relators(5);
    rels.push_back(detail::gw(detail::repeat({0, 1, 2, 3, 4}, 6)));
    rels.push_back(detail::gw(detail::iota_word()));
    auto f = detail::group_file(name, indexed_alphabet("s", 5), rels);
    f.quotients.push_back(detail::adjacent_transpositions(5));
    return f;
}

// Quandle presentations stated in closed form.
namespace golden {

inline QuandlePresentation trefoil(Alphabet gens = Alphabet{{"a", "b"}}) {
    return {std::move(gens), {detail::qrel(0, {1, 0}, 1), detail::qrel(1, {0, 1}, 0)}};
}

// s_i*s_{i+1}*s_i = s_{i+1}, s2*s1*s2 = s1, s_i*s_j = s_i for i+2 <= j.
inline QuandlePresentation braid(int n) {
    QuandlePresentation q{indexed_alphabet("s", n - 1), {}};
    for (int i = 0; i + 2 < n; ++i) q.relations.push_back(detail::qrel(i, {i + 1, i}, i + 1));
    if (n >= 3) q.relations.push_back(detail::qrel(1, {0, 1}, 0));
    for (int i = 0; i < n - 1; ++i)
        for (int j = i + 2; j < n - 1; ++j) q.relations.push_back(detail::qrel(i, {j}, i));
    return q;
}

inline QuandlePresentation torus_knot(int p, int q) {
    return {Alphabet{{"x", "y"}}, {detail::qrel(0, detail::power(1, q), 0), detail::qrel(1, detail::power(0, p), 1)}};
}

// x_{i+m} * x_{i+m-1} * ... * x_{i+1} = x_i.
inline QuandlePresentation torus_link(int n, int m) {
    QuandlePresentation q{indexed_alphabet("x", n), {}};
    for (int i = 1; i <= n; ++i)
        q.relations.push_back(detail::qrel(detail::mod1(i + m, n), detail::cyclic_run(i + m - 1, m - 1, n, -1), detail::mod1(i, n)));
    return q;
}

// x_{m+i} * x_m * ... * x_1 = x_i.
inline QuandlePresentation torus_link_quandle(int n, int m) {
    QuandlePresentation q{indexed_alphabet("x", n), {}};
    for (int i = 1; i <= n; ++i)
        q.relations.push_back(detail::qrel(detail::mod1(m + i, n), detail::cyclic_run(m, m, n, -1), detail::mod1(i, n)));
    return q;
}

// Odd n: s2*s1*s1 = s2, s1*s2*s2 = s1, (s1*s2)_n = s2; even n: (s1*s2)_n = s1, (s2*s1)_n = s2.
inline QuandlePresentation dihedral(int n) {
    QuandlePresentation q{Alphabet{{"s1", "s2"}}, {detail::qrel(1, {0, 0}, 1), detail::qrel(0, {1, 1}, 0)}};
    auto alt = alternating(0, 1, n);
    auto alt2 = alternating(1, 0, n);
    if (n % 2 == 1) {
        q.relations.push_back(detail::qrel(0, PositiveWord(alt.begin() + 1, alt.end()), 1));
    } else {
        q.relations.push_back(detail::qrel(0, PositiveWord(alt.begin() + 1, alt.end()), 0));
        q.relations.push_back(detail::qrel(1, PositiveWord(alt2.begin() + 1, alt2.end()), 1));
    }
    return q;
}

inline QuandlePresentation mixed_ex3() {
    QuandlePresentation q{Alphabet{{"x1", "x2", "y1", "y2", "y3"}}, {}};
    auto y = [](int k) { return 2 + detail::mod1(k, 3); };
    const int p[2] = {2, 5};
    for (int k = 1; k <= 3; ++k) q.relations.push_back(detail::qrel(y(k + 4), {y(k + 3), y(k + 2), y(k + 1)}, y(k)));
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            if (i != j) q.relations.push_back(detail::qrel(i, detail::power(j, p[j]), i));
    for (int i = 0; i < 2; ++i) q.relations.push_back(detail::qrel(i, {y(1), y(3), y(2), y(1)}, i));
    for (int k = 1; k <= 3; ++k)
        for (int i = 0; i < 2; ++i) q.relations.push_back(detail::qrel(y(k + 4), detail::power(i, p[i]), y(k)));
    return q;
}

inline QuandlePresentation mixed_ex4() {
    QuandlePresentation q{Alphabet{{"x1", "x2", "x3", "y1", "y2", "y3"}}, {}};
    auto x = [](int i) { return detail::mod1(i, 3); };
    auto y = [](int i) { return 3 + detail::mod1(i, 3); };
    auto run = [](const std::function<int(int)>& g, int first, int last) {
        PositiveWord w;
        int step = last >= first ? 1 : -1;
        for (int i = first;; i += step) {
            w.push_back(g(i));
            if (i == last) break;
        }
        return w;
    };
    auto& r = q.relations;
    r.push_back(detail::qrel(x(1), {x(2), x(1), x(2)}, x(1)));
    r.push_back(detail::qrel(x(1), {x(3)}, x(1)));
    r.push_back(detail::qrel(x(2), {x(1), x(2), x(1)}, x(2)));
    r.push_back(detail::qrel(x(3), {x(2), x(3)}, x(2)));
    r.push_back(detail::qrel(x(3), {x(1)}, x(3)));
    r.push_back(detail::qrel(x(2), {x(3), x(2)}, x(3)));
    r.push_back(detail::qrel(y(2), {y(1), y(2)}, y(1)));
    r.push_back(detail::qrel(y(1), {y(3)}, y(1)));
    r.push_back(detail::qrel(y(1), {y(2), y(1)}, y(2)));
    r.push_back(detail::qrel(y(3), {y(2), y(3)}, y(2)));
    r.push_back(detail::qrel(y(3), {y(1)}, y(3)));
    r.push_back(detail::qrel(y(2), {y(3), y(2)}, y(3)));
    for (int i = 1; i <= 3; ++i) r.push_back(detail::qrel(x(i + 18), run(x, i + 17, i + 1), x(i)));
    r.push_back(detail::qrel(y(1), run(y, 2, 12), y(1)));
    r.push_back(detail::qrel(y(2), run(y, 3, 19), y(2)));
    r.push_back(detail::qrel(y(12), run(y, 11, 1), y(3)));
    for (int i = 1; i <= 3; ++i) r.push_back(detail::qrel(x(i), run(y, 2, 19), x(i)));
    r.push_back({{y(1), detail::gw(run(x, 18, 1))}, {y(1), detail::gw(run(y, 2, 7))}});
    r.push_back(detail::qrel(y(2), run(x, 18, 1), y(2)));
    r.push_back(detail::qrel(y(3), run(x, 18, 1), y(1)));
    return q;
}

// Genus-two twelve-relation set.
inline QuandlePresentation genus2() {
    QuandlePresentation q{indexed_alphabet("a", 5), {}};
    auto& r = q.relations;
    for (auto [i, j] : std::vector<std::pair<int, int>>{{0, 2}, {0, 3}, {0, 4}, {1, 3}, {1, 4}, {2, 4}})
        r.push_back(detail::qrel(i, {j}, i));
    r.push_back(detail::qrel(0, {1, 0}, 1));
    r.push_back(detail::qrel(1, {0, 1}, 0));
    r.push_back(detail::qrel(1, {2, 1}, 2));
    r.push_back(detail::qrel(2, {3, 2}, 3));
    r.push_back(detail::qrel(3, {4, 3}, 4));
    r.push_back(detail::qrel(0, {1, 2, 3, 4, 4, 3, 2, 1}, 0));
    return q;
}

// Cords of the six-punctured sphere.
inline QuandlePresentation d06() {
    QuandlePresentation q{indexed_alphabet("s", 5), {}};
    auto& r = q.relations;
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) {
            if (std::abs(i - j) >= 2) r.push_back(detail::qrel(i, {j}, i));
            if (std::abs(i - j) == 1) r.push_back(detail::qrel(i, {j, i}, j));
        }
    r.push_back({{0, detail::gw({1, 2, 3, 4})}, {4, detail::gw({3, 2, 1, 0})}});
    return q;
}

inline QuandlePresentation raag(const PresentationFile& g) {
    QuandlePresentation q{g.gens, {}};
    for (const auto& [s, ws] : g.centralizers)
        for (const auto& w : ws)
            if (w.size() == 1 && w[0].gen != s) q.relations.push_back({{s, w}, {s, {}}});
    return q;
}

// Both families of the centralizer route with no reduction applied.
inline QuandlePresentation surface(const PresentationFile& g) {
    QuandlePresentation q{g.gens, {}};
    for (int s = 0; s < g.gens.size(); ++s) q.relations.push_back({conjugation_to_term(s, g.relators.front()), {s, {}}});
    return q;
}

}  // namespace golden

namespace detail {

inline PresentationFile with_quandle(const std::string& name, const QuandlePresentation& q) { return quandle_file(name, q); }

inline std::pair<int, int> two_params(const std::string& text, const std::string& whole) {
    auto parts = split(text, ',');
    if (parts.size() != 2) throw UnknownBuiltin(whole);
    return {param(parts[0], whole), param(parts[1], whole)};
}

}  // namespace detail

// Catalog lookup by name, e.g. "braid:4", "torus-link:2,3", "golden:mcg:genus2".
inline PresentationFile builtin(const std::string& raw) {
    std::string name = raw.rfind("builtin:", 0) == 0 ? raw.substr(8) : raw;
    auto colon = name.find(':');
    std::string head = name.substr(0, colon);
    std::string arg = colon == std::string::npos ? "" : name.substr(colon + 1);
    if (head == "golden") {
        auto inner = builtin(arg);
        auto ih = arg.substr(0, arg.find(':'));
        auto iarg = arg.find(':') == std::string::npos ? "" : arg.substr(arg.find(':') + 1);
        QuandlePresentation q;
        if (ih == "braid") {
            q = golden::braid(detail::param(iarg, raw));
        } else if (ih == "artin" || ih == "i2") {
            CoxeterMatrix cm(static_cast<std::size_t>(inner.gens.size()),
                             std::vector<int>(static_cast<std::size_t>(inner.gens.size()), 0));
            for (int s = 0; s < inner.gens.size(); ++s) cm[static_cast<std::size_t>(s)][static_cast<std::size_t>(s)] = 1;
            for (const auto& r : inner.monoid_relations) {
                int s = r.lhs.front(), t = r.rhs.front();
                cm[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)] =
                    cm[static_cast<std::size_t>(t)][static_cast<std::size_t>(s)] = static_cast<int>(r.lhs.size());
            }
            q = emit_spherical_artin_presentation(cm, inner.gens, true);
        } else if (ih == "torus-knot") {
            auto [p, qq] = detail::two_params(iarg, raw);
            q = golden::torus_knot(p, qq);
        } else if (ih == "torus-link") {
            auto [n, m] = detail::two_params(iarg, raw);
            q = golden::torus_link(n, m);
        } else if (ih == "mixed" && iarg == "ex3") {
            q = golden::mixed_ex3();
        } else if (ih == "mixed" && iarg == "ex4") {
            q = golden::mixed_ex4();
        } else if (ih == "dihedral") {
            q = golden::dihedral(detail::param(iarg, raw));
        } else if (ih == "raag") {
            q = golden::raag(inner);
        } else if (ih == "surface") {
            q = golden::surface(inner);
        } else if (ih == "mcg" && iarg == "genus1") {
            q = golden::trefoil(inner.gens);
        } else if (ih == "mcg" && iarg == "genus2") {
            q = golden::genus2();
        } else if (ih == "mcg" && iarg == "sphere6") {
            q = golden::d06();
        } else {
            throw UnknownBuiltin(raw);
        }
        return detail::with_quandle(name, q);
    }
    if (head == "braid") return braid_file(detail::param(arg, raw), name);
    if (head == "artin") {
        auto cm = coxeter_type(arg, raw);
        return artin_file(name, cm, arg.substr(0, 1));
    }
    if (head == "i2") {
        int m = detail::param(arg, raw);
        if (m < 2) throw UnknownBuiltin(raw);
        return artin_file(name, coxeter_chain({m}), "I");
    }
    if (head == "torus-knot") {
        auto [p, q] = detail::two_params(arg, raw);
        return torus_knot_file(p, q, name);
    }
    if (head == "torus-link") {
        auto [n, m] = detail::two_params(arg, raw);
        return torus_link_file(n, m, name);
    }
    if (head == "mixed" && arg == "ex3") return mixed_ex3_file(name);
    if (head == "mixed" && arg == "ex4") return mixed_ex4_file(name);
    if (head == "dihedral") return dihedral_file(detail::param(arg, raw), name);
    if (head == "raag") return raag_file(arg, name);
    if (head == "surface") return surface_file(detail::param(arg, raw), name);
    if (head == "mcg" && arg == "genus1") return mcg_genus1_file(name);
    if (head == "mcg" && arg == "genus2") return mcg_genus2_file(name);
    if (head == "mcg" && arg == "sphere6") return mcg_sphere6_file(name);
    if (head == "trefoil" && arg.empty()) return detail::with_quandle(name, golden::trefoil());
    if (head == "d06" && arg.empty()) return detail::with_quandle(name, golden::d06());
    if (head == "q-torus-link") {
        auto [n, m] = detail::two_params(arg, raw);
        if (n < 2 || m < 2) throw UnknownBuiltin(raw);
        return detail::with_quandle(name, golden::torus_link_quandle(n, m));
    }
    throw UnknownBuiltin(raw);
}

// Representative names; parameters vary where a pattern is shown.
inline std::vector<std::string> builtin_names() {
    return {"braid:3",        "braid:4",          "braid:5",          "artin:A3",         "artin:B3",
            "artin:D4",       "artin:E6",         "artin:F4",         "artin:G2",         "artin:H3",
            "artin:I2:5",     "artin:3,2,3",      "i2:4",             "torus-knot:2,3",   "torus-knot:3,4",
            "torus-link:2,3", "torus-link:3,2",   "torus-link:2,4",   "mixed:ex3",        "mixed:ex4",
            "dihedral:3",     "dihedral:4",       "dihedral:5",       "dihedral:6",       "raag:3:1-2,2-3",
            "surface:2",      "mcg:genus1",       "mcg:genus2",       "mcg:sphere6",      "trefoil",
            "d06",            "q-torus-link:2,3", "golden:braid:4",   "golden:torus-link:2,3", "golden:mixed:ex3",
            "golden:mixed:ex4", "golden:dihedral:5", "golden:mcg:genus1", "golden:mcg:genus2", "golden:surface:2"};
}

// Solver monoid for the simplifier, generators renamed positionally.
inline std::optional<MonoidPresentation> builtin_solver(const PresentationFile& f) {
    std::optional<PresentationFile> src;
    if (f.solver) {
        src = builtin(*f.solver);
    } else if (f.kind == Kind::monoid) {
        src = f;
    }
    if (!src || src->kind != Kind::monoid) return std::nullopt;
    auto m = src->monoid();
    if (m.gens.size() != f.gens.size()) throw InputError("solver " + src->name + " has a different number of generators");
    m.gens = f.gens;
    if (!m.complement) return std::nullopt;
    return m;
}

// Simplifier options for a catalog file: declared quotients as filters, solver monoid if any.
inline SimplifyOptions simplify_options(const PresentationFile& f) {
    SimplifyOptions opt;
    for (const auto& q : f.quotients) opt.filters.push_back(q.images());
    opt.solver = builtin_solver(f);
    return opt;
}

// Finite targets: core:N, trivial:N, conj:sym:N, conj:NAME (first quotient of a catalog group).
inline FiniteQuandle builtin_target(const std::string& raw) {
    std::string name = raw.rfind("builtin:", 0) == 0 ? raw.substr(8) : raw;
    if (name.rfind("core:", 0) == 0) return core_quandle(detail::param(name.substr(5), raw));
    if (name.rfind("trivial:", 0) == 0) {
        int n = detail::param(name.substr(8), raw);
        if (n < 1) throw UnknownBuiltin(raw);
        std::vector<int> t(static_cast<std::size_t>(n * n));
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) t[static_cast<std::size_t>(x * n + y)] = x;
        return from_table(n, t, name);
    }
    if (name.rfind("conj:sym:", 0) == 0) {
        int n = detail::param(name.substr(9), raw);
        if (n < 2) throw UnknownBuiltin(raw);
        return transposition_quandle(n);
    }
    if (name.rfind("conj:", 0) == 0) {
        auto f = builtin(name.substr(5));
        if (f.quotients.empty()) throw MissingData(name.substr(5) + " declares no finite quotient");
        auto ims = f.quotients.front().images();
        auto q = conjugation_dehn_quandle(ims, ims).quandle;
        q.name = name;
        return q;
    }
    throw UnknownBuiltin(raw);
}

}  // namespace dehnq
