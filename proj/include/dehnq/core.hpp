#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dehnq {

// Exit codes shared by the library errors and the dq tool.
enum class ExitCode : int { ok = 0, verification = 1, budget = 2, input = 3 };

struct Error : std::runtime_error {
    ExitCode code;
    Error(ExitCode c, const std::string& what) : std::runtime_error(what), code(c) {}
};

struct ParseError : Error {
    int line, column;
    ParseError(int l, int c, const std::string& msg)
        : Error(ExitCode::input, std::to_string(l) + ":" + std::to_string(c) + ": " + msg),
          line(l), column(c) {}
};

struct SyntaxError : ParseError {
    SyntaxError(int l, int c, const std::string& msg) : ParseError(l, c, "syntax error: " + msg) {}
};

struct UnknownGenerator : ParseError {
    UnknownGenerator(int l, int c, const std::string& g) : ParseError(l, c, "unknown generator '" + g + "'") {}
};

struct DuplicateSection : ParseError {
    DuplicateSection(int l, int c, const std::string& what) : ParseError(l, c, "duplicate " + what) {}
};

struct UnknownBuiltin : Error {
    explicit UnknownBuiltin(const std::string& n) : Error(ExitCode::input, "unknown builtin '" + n + "'") {}
};

struct InputError : Error {
    explicit InputError(const std::string& msg) : Error(ExitCode::input, msg) {}
};

struct MissingData : Error {
    explicit MissingData(const std::string& msg) : Error(ExitCode::input, "missing data: " + msg) {}
};

struct BudgetExceeded : Error {
    explicit BudgetExceeded(const std::string& what)
        : Error(ExitCode::budget, "budget exhausted: " + what) {}
};

// Raised by the enumerator when the table did not close within its limits.
struct Exhausted : Error {
    explicit Exhausted(const std::string& what) : Error(ExitCode::budget, "exhausted: " + what) {}
};

struct VerificationFailure : Error {
    explicit VerificationFailure(const std::string& what) : Error(ExitCode::verification, what) {}
};

struct NotGarside : VerificationFailure {
    explicit NotGarside(const std::string& what) : VerificationFailure("not garside: " + what) {}
};

struct RelatorViolated : VerificationFailure {
    explicit RelatorViolated(const std::string& what) : VerificationFailure("relator violated: " + what) {}
};

struct ConjugatorMismatch : VerificationFailure {
    explicit ConjugatorMismatch(const std::string& what)
        : VerificationFailure("conjugator mismatch: " + what) {}
};

struct NotCentralizing : VerificationFailure {
    explicit NotCentralizing(const std::string& what)
        : VerificationFailure("centralizer element does not commute: " + what) {}
};

struct NotAHomomorphism : VerificationFailure {
    explicit NotAHomomorphism(const std::string& what)
        : VerificationFailure("not a homomorphism: " + what) {}
};

struct AxiomFailure : VerificationFailure {
    explicit AxiomFailure(const std::string& what) : VerificationFailure("quandle axiom fails: " + what) {}
};

// Reversing budget; DQ_BUDGET overrides the default of 1e5 steps.
inline std::uint64_t default_budget() {
    if (const char* env = std::getenv("DQ_BUDGET")) {
        char* end = nullptr;
        auto v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return 100000;
}

struct Letter {
    int gen = 0;
    int sign = 1;
    friend bool operator==(const Letter&, const Letter&) = default;
    friend auto operator<=>(const Letter&, const Letter&) = default;
};

using GroupWord = std::vector<Letter>;
using PositiveWord = std::vector<int>;

inline GroupWord to_group(const PositiveWord& w) {
    GroupWord out;
    out.reserve(w.size());
    for (int g : w) out.push_back({g, 1});
    return out;
}

inline bool is_positive(const GroupWord& w) {
    return std::all_of(w.begin(), w.end(), [](const Letter& l) { return l.sign > 0; });
}

inline PositiveWord to_positive(const GroupWord& w) {
    PositiveWord out;
    for (const auto& l : w) {
        if (l.sign < 0) throw InputError("negative letter in positive word");
        out.push_back(l.gen);
    }
    return out;
}

inline GroupWord inverse(const GroupWord& w) {
    GroupWord out(w.rbegin(), w.rend());
    for (auto& l : out) l.sign = -l.sign;
    return out;
}

inline PositiveWord reversed(PositiveWord w) {
    std::reverse(w.begin(), w.end());
    return w;
}

inline GroupWord free_reduce(const GroupWord& w) {
    GroupWord out;
    out.reserve(w.size());
    for (const auto& l : w) {
        if (!out.empty() && out.back().gen == l.gen && out.back().sign == -l.sign)
            out.pop_back();
        else
            out.push_back(l);
    }
    return out;
}

inline GroupWord cyclic_reduce(GroupWord w) {
    w = free_reduce(w);
    std::size_t i = 0, j = w.size();
    while (j - i >= 2 && w[i].gen == w[j - 1].gen && w[i].sign == -w[j - 1].sign) {
        ++i;
        --j;
    }
    return GroupWord(w.begin() + static_cast<long>(i), w.begin() + static_cast<long>(j));
}

template <class W>
W concat(W a, const W& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

// Least rotation of the cyclic reduction of w or of its inverse.
inline GroupWord cyclic_canonical(const GroupWord& w) {
    GroupWord best;
    bool have = false;
    for (const GroupWord& c : {cyclic_reduce(w), cyclic_reduce(inverse(w))}) {
        for (std::size_t r = 0; r < std::max<std::size_t>(c.size(), 1); ++r) {
            GroupWord rot(c.begin() + static_cast<long>(r), c.end());
            rot.insert(rot.end(), c.begin(), c.begin() + static_cast<long>(r));
            if (!have || rot < best) {
                best = rot;
                have = true;
            }
        }
    }
    return best;
}

struct Alphabet {
    std::vector<std::string> names;

    int size() const { return static_cast<int>(names.size()); }
    std::optional<int> find(const std::string& n) const {
        for (int i = 0; i < size(); ++i)
            if (names[static_cast<std::size_t>(i)] == n) return i;
        return std::nullopt;
    }
    int at(const std::string& n) const {
        auto i = find(n);
        if (!i) throw InputError("unknown generator '" + n + "'");
        return *i;
    }
    const std::string& name(int i) const { return names.at(static_cast<std::size_t>(i)); }
    friend bool operator==(const Alphabet&, const Alphabet&) = default;
};

inline Alphabet indexed_alphabet(const std::string& stem, int n, int first = 1) {
    Alphabet a;
    for (int i = 0; i < n; ++i) a.names.push_back(stem + std::to_string(i + first));
    return a;
}

// A left-associated product base *^{e1} t1 *^{e2} t2 ... with tail (t_i, e_i).
struct QuandleTerm {
    int base = 0;
    GroupWord tail;
    friend bool operator==(const QuandleTerm&, const QuandleTerm&) = default;
    friend auto operator<=>(const QuandleTerm&, const QuandleTerm&) = default;
};

struct QuandleRelation {
    QuandleTerm lhs, rhs;
    friend bool operator==(const QuandleRelation&, const QuandleRelation&) = default;
    friend auto operator<=>(const QuandleRelation&, const QuandleRelation&) = default;
};

struct QuandlePresentation {
    Alphabet gens;
    std::vector<QuandleRelation> relations;
};

// The term base * tail has value W base W^-1 in any conjugation quandle, W = conj_word(tail).
inline GroupWord conj_word(const GroupWord& tail) { return GroupWord(tail.rbegin(), tail.rend()); }

inline QuandleTerm conjugation_to_term(int base, const GroupWord& w) {
    return {base, GroupWord(w.rbegin(), w.rend())};
}

// Group element represented by a term: W a W^-1.
inline GroupWord term_element(const QuandleTerm& t) {
    GroupWord w = conj_word(t.tail);
    GroupWord out = w;
    out.push_back({t.base, 1});
    auto inv = inverse(w);
    out.insert(out.end(), inv.begin(), inv.end());
    return free_reduce(out);
}

// Free cancellation, then removal of leading base letters (x*x = x, x*^-1 x = x).
inline QuandleTerm normalize_term(const QuandleTerm& t) {
    QuandleTerm out{t.base, free_reduce(t.tail)};
    std::size_t k = 0;
    while (k < out.tail.size() && out.tail[k].gen == out.base) ++k;
    if (k) out.tail.erase(out.tail.begin(), out.tail.begin() + static_cast<long>(k));
    return out;
}

inline bool is_trivial(const QuandleRelation& r) {
    return normalize_term(r.lhs) == normalize_term(r.rhs);
}

// Normalized sides with the lexicographically smaller one first.
inline QuandleRelation canonical(const QuandleRelation& r) {
    QuandleRelation c{normalize_term(r.lhs), normalize_term(r.rhs)};
    if (c.rhs < c.lhs) std::swap(c.lhs, c.rhs);
    return c;
}

inline std::vector<QuandleRelation> canonical_set(const std::vector<QuandleRelation>& rels) {
    std::vector<QuandleRelation> out;
    for (const auto& r : rels)
        if (!is_trivial(r)) out.push_back(canonical(r));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

inline bool same_relation_set(const std::vector<QuandleRelation>& a, const std::vector<QuandleRelation>& b) {
    return canonical_set(a) == canonical_set(b);
}

struct MonoidRelation {
    PositiveWord lhs, rhs;
    friend bool operator==(const MonoidRelation&, const MonoidRelation&) = default;
};

// Partial map f(s,t) for s != t.
struct Complement {
    int n = 0;
    std::vector<std::optional<PositiveWord>> table;

    Complement() = default;
    explicit Complement(int size) : n(size), table(static_cast<std::size_t>(size * size)) {}
    bool has(int s, int t) const { return s == t || table[idx(s, t)].has_value(); }
    PositiveWord at(int s, int t) const {
        if (s == t) return {};
        const auto& v = table[idx(s, t)];
        if (!v) throw MissingData("complement entry missing for pair (" + std::to_string(s) + "," +
                                  std::to_string(t) + ")");
        return *v;
    }
    void set(int s, int t, PositiveWord w) { table[idx(s, t)] = std::move(w); }
    bool total() const {
        for (int s = 0; s < n; ++s)
            for (int t = 0; t < n; ++t)
                if (!has(s, t)) return false;
        return true;
    }
    friend bool operator==(const Complement&, const Complement&) = default;

private:
    std::size_t idx(int s, int t) const { return static_cast<std::size_t>(s * n + t); }
};

struct MonoidPresentation {
    Alphabet gens;
    std::vector<MonoidRelation> relations;
    std::optional<Complement> complement;       // right complement f
    std::optional<Complement> left_complement;  // g with g(s,t) t = g(t,s) s
    std::optional<PositiveWord> delta;
};

struct GroupPresentation {
    Alphabet gens;
    std::vector<GroupWord> relators;
};

inline GroupPresentation group_of(const MonoidPresentation& m) {
    GroupPresentation g{m.gens, {}};
    for (const auto& r : m.relations)
        g.relators.push_back(free_reduce(concat(to_group(r.lhs), inverse(to_group(r.rhs)))));
    if (m.relations.empty() && m.complement) {
        for (int s = 0; s < m.gens.size(); ++s)
            for (int t = s + 1; t < m.gens.size(); ++t) {
                PositiveWord a{s}, b{t};
                a = concat(a, m.complement->at(s, t));
                b = concat(b, m.complement->at(t, s));
                g.relators.push_back(free_reduce(concat(to_group(a), inverse(to_group(b)))));
            }
    }
    return g;
}

// A nested product head *^{e1} arg1 *^{e2} arg2 ... whose arguments are themselves nested.
struct NestedTerm {
    int base = 0;
    std::vector<std::pair<NestedTerm, int>> ops;
};

// Flattens via x *^e (b * T) = x *^-1 T' ... written as x * inverse(T) * b^e * T.
inline QuandleTerm rewrite_left_associated(const NestedTerm& t) {
    QuandleTerm out{t.base, {}};
    for (const auto& [arg, e] : t.ops) {
        QuandleTerm a = rewrite_left_associated(arg);
        auto inv = inverse(a.tail);
        out.tail.insert(out.tail.end(), inv.begin(), inv.end());
        out.tail.push_back({a.base, e});
        out.tail.insert(out.tail.end(), a.tail.begin(), a.tail.end());
    }
    out.tail = free_reduce(out.tail);
    return out;
}

}  // namespace dehnq
