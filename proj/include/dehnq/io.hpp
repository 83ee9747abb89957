#pragma once

#include <array>
#include <cctype>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "core.hpp"
#include "finite.hpp"
#include "reversing.hpp"

namespace dehnq {

enum class Kind { monoid, group, quandle };

inline const char* kind_name(Kind k) {
    switch (k) {
        case Kind::monoid: return "monoid";
        case Kind::group: return "group";
        default: return "quandle";
    }
}

// One finite quotient: permutation images, or 2x2 matrices over Z/modulus.
struct Quotient {
    std::string label;  // "perm", "perm:NAME" or "matrix:M"
    int modulus = 0;
    std::vector<std::optional<Perm>> perms;
    std::vector<std::optional<std::array<long, 4>>> matrices;
    int degree = 0;

    std::vector<Perm> images() const {
        std::vector<Perm> out;
        if (modulus > 0) {
            for (const auto& m : matrices) out.push_back(matrix_perm(*m, modulus));
        } else {
            for (const auto& p : perms) out.push_back(pad(*p, degree));
        }
        return out;
    }
    friend bool operator==(const Quotient&, const Quotient&) = default;
};

struct Conjugator {
    int t = 0, s = 0;
    GroupWord word;
    friend bool operator==(const Conjugator&, const Conjugator&) = default;
};

struct PresentationFile {
    Kind kind = Kind::quandle;
    std::string name;
    Alphabet gens;
    std::vector<MonoidRelation> monoid_relations;
    std::vector<GroupWord> relators;
    std::vector<QuandleRelation> quandle_relations;
    std::optional<Complement> complement, left_complement;
    std::optional<PositiveWord> delta;
    std::map<int, std::vector<GroupWord>> centralizers;
    std::vector<Conjugator> conjugators;
    std::vector<Quotient> quotients;
    std::optional<std::string> solver;

    friend bool operator==(const PresentationFile&, const PresentationFile&) = default;

    MonoidPresentation monoid() const {
        if (kind != Kind::monoid) throw InputError(name + " is not a monoid presentation");
        MonoidPresentation m{gens, monoid_relations, complement, left_complement, delta};
        if (!m.complement) m.complement = induce_complement(gens.size(), monoid_relations, false);
        if (!m.left_complement) m.left_complement = induce_complement(gens.size(), monoid_relations, true);
        return m;
    }
    GroupPresentation group() const {
        if (kind == Kind::monoid) return group_of(monoid());
        if (kind != Kind::group) throw InputError(name + " is not a group presentation");
        return {gens, relators};
    }
    QuandlePresentation quandle() const {
        if (kind != Kind::quandle) throw InputError(name + " is not a quandle presentation");
        return {gens, quandle_relations};
    }
};

namespace detail {

struct Token {
    enum Type { ident, number, sym, end } type = end;
    std::string text;
    int col = 0;
};

inline bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' || c == '.';
}

inline std::vector<Token> lex(const std::string& line, int lineno) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        char c = line[i];
        int col = static_cast<int>(i) + 1;
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j]))) ++j;
            if (j < line.size() && ident_char(line[j])) {
                while (j < line.size() && ident_char(line[j])) ++j;
                out.push_back({Token::ident, line.substr(i, j - i), col});
            } else {
                out.push_back({Token::number, line.substr(i, j - i), col});
            }
            i = j;
            continue;
        }
        if (out.empty() && line.compare(i, 15, "left-complement") == 0) {
            out.push_back({Token::ident, "left-complement", col});
            i += 15;
            continue;
        }
        if (ident_char(c)) {
            std::size_t j = i;
            while (j < line.size() && ident_char(line[j])) ++j;
            out.push_back({Token::ident, line.substr(i, j - i), col});
            i = j;
            continue;
        }
        if (c == '*' && i + 1 < line.size() && line[i + 1] == '-') {
            out.push_back({Token::sym, "*-", col});
            i += 2;
            continue;
        }
        if (c == '-' && i + 1 < line.size() && line[i + 1] == '>') {
            out.push_back({Token::sym, "->", col});
            i += 2;
            continue;
        }
        if (std::string("*=:|^-()[],").find(c) != std::string::npos) {
            out.push_back({Token::sym, std::string(1, c), col});
            ++i;
            continue;
        }
        throw SyntaxError(lineno, col, std::string("unexpected character '") + c + "'");
    }
    out.push_back({Token::end, "", static_cast<int>(line.size()) + 1});
    return out;
}

class LineParser {
public:
    LineParser(std::vector<Token> toks, int lineno, const Alphabet& gens) : t_(std::move(toks)), line_(lineno), gens_(gens) {}

    const Token& peek() const { return t_[pos_]; }
    Token next() { return t_[pos_ < t_.size() - 1 ? pos_++ : pos_]; }
    bool at_end() const { return peek().type == Token::end; }
    bool at_sym(const std::string& s) const { return peek().type == Token::sym && peek().text == s; }

    [[noreturn]] void fail(const std::string& msg) const { throw SyntaxError(line_, peek().col, msg); }

    void expect_sym(const std::string& s) {
        if (!at_sym(s)) fail("expected '" + s + "'");
        next();
    }
    void expect_end() {
        if (!at_end()) fail("unexpected '" + peek().text + "'");
    }
    int generator() {
        if (peek().type != Token::ident) fail("expected a generator");
        auto tok = next();
        auto g = gens_.find(tok.text);
        if (!g) throw UnknownGenerator(line_, tok.col, tok.text);
        return *g;
    }
    std::string identifier(const std::string& what) {
        if (peek().type != Token::ident) fail("expected " + what);
        return next().text;
    }
    int integer() {
        bool neg = false;
        if (at_sym("-")) {
            next();
            neg = true;
        }
        if (peek().type != Token::number) fail("expected an integer");
        int v = std::stoi(next().text);
        return neg ? -v : v;
    }
    // Letters with optional ^k; a lone 1 is the empty word.
    GroupWord word(bool allow_negative) {
        GroupWord w;
        if (peek().type == Token::number && peek().text == "1") {
            next();
            return w;
        }
        while (peek().type == Token::ident) {
            int g = generator();
            int e = 1;
            if (at_sym("^")) {
                next();
                int col = peek().col;
                e = integer();
                if (e == 0) throw SyntaxError(line_, col, "zero exponent");
                if (e < 0 && !allow_negative) throw SyntaxError(line_, col, "negative exponent in a positive word");
            }
            for (int k = 0; k < std::abs(e); ++k) w.push_back({g, e > 0 ? 1 : -1});
        }
        return w;
    }
    QuandleTerm term() {
        QuandleTerm t{generator(), {}};
        while (at_sym("*") || at_sym("*-")) {
            int sign = next().text == "*" ? 1 : -1;
            t.tail.push_back({generator(), sign});
        }
        return t;
    }
    int column() const { return peek().col; }
    std::string rest_raw(const std::string& line) const {
        return line.substr(static_cast<std::size_t>(peek().col - 1));
    }

private:
    std::vector<Token> t_;
    std::size_t pos_ = 0;
    int line_;
    const Alphabet& gens_;
};

inline std::string trim(const std::string& s) {
    auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

}  // namespace detail

// A group word over gens, e.g. "a b^-1 a"; "1" or "" is the empty word.
inline GroupWord parse_word(const std::string& text, const Alphabet& gens) {
    if (detail::trim(text).empty()) return {};
    detail::LineParser p(detail::lex(text, 1), 1, gens);
    auto w = p.word(true);
    p.expect_end();
    return w;
}

inline PresentationFile parse(const std::string& text) {
    PresentationFile f;
    bool have_header = false, have_gens = false;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw.substr(0, raw.find('#'));
        if (detail::trim(line).empty()) continue;
        auto toks = detail::lex(line, lineno);
        detail::LineParser p(toks, lineno, f.gens);
        int kwcol = p.column();
        std::string kw = p.identifier("a keyword");
        auto need_gens = [&] {
            if (!have_gens) throw SyntaxError(lineno, kwcol, "'gens' must come before '" + kw + "'");
        };
        if (kw == "monoid" || kw == "group" || kw == "quandle") {
            if (have_header) throw DuplicateSection(lineno, kwcol, "header");
            have_header = true;
            f.kind = kw == "monoid" ? Kind::monoid : kw == "group" ? Kind::group : Kind::quandle;
            auto pos = line.find(kw) + kw.size();
            f.name = detail::trim(line.substr(pos));
            if (f.name.empty()) throw SyntaxError(lineno, static_cast<int>(pos) + 1, "missing presentation name");
            continue;
        }
        if (!have_header) throw SyntaxError(lineno, kwcol, "file must start with monoid, group or quandle");
        if (kw == "gens") {
            if (have_gens) throw DuplicateSection(lineno, kwcol, "gens line");
            have_gens = true;
            while (!p.at_end()) {
                int col = p.column();
                auto name = p.identifier("a generator name");
                if (f.gens.find(name)) throw DuplicateSection(lineno, col, "generator '" + name + "'");
                f.gens.names.push_back(name);
            }
            continue;
        }
        need_gens();
        if (kw == "rel") {
            if (f.kind == Kind::quandle) {
                auto lhs = p.term();
                p.expect_sym("=");
                auto rhs = p.term();
                p.expect_end();
                f.quandle_relations.push_back({lhs, rhs});
            } else if (f.kind == Kind::monoid) {
                auto lhs = p.word(false);
                p.expect_sym("=");
                auto rhs = p.word(false);
                p.expect_end();
                f.monoid_relations.push_back({to_positive(lhs), to_positive(rhs)});
            } else {
                auto lhs = p.word(true);
                GroupWord rhs;
                if (p.at_sym("=")) {
                    p.next();
                    rhs = p.word(true);
                }
                p.expect_end();
                f.relators.push_back(concat(lhs, inverse(rhs)));
            }
        } else if (kw == "complement" || kw == "left-complement") {
            if (f.kind != Kind::monoid) throw SyntaxError(lineno, kwcol, kw + " only applies to monoids");
            int col = p.column();
            int s = p.generator();
            int t = p.generator();
            if (s == t) throw SyntaxError(lineno, col, "diagonal complement entries are implicit");
            p.expect_sym(":");
            auto w = to_positive(p.word(false));
            p.expect_end();
            auto& c = kw == "complement" ? f.complement : f.left_complement;
            if (!c) c = Complement(f.gens.size());
            if (c->has(s, t)) throw DuplicateSection(lineno, col, kw + " entry");
            c->set(s, t, w);
        } else if (kw == "delta") {
            if (f.delta) throw DuplicateSection(lineno, kwcol, "delta");
            p.expect_sym(":");
            f.delta = to_positive(p.word(false));
            p.expect_end();
        } else if (kw == "centralizer") {
            int col = p.column();
            int s = p.generator();
            if (f.centralizers.count(s)) throw DuplicateSection(lineno, col, "centralizer for " + f.gens.name(s));
            p.expect_sym(":");
            std::vector<GroupWord> ws{p.word(true)};
            while (p.at_sym("|")) {
                p.next();
                ws.push_back(p.word(true));
            }
            p.expect_end();
            f.centralizers[s] = ws;
        } else if (kw == "conjugator") {
            int col = p.column();
            int t = p.generator();
            int s = p.generator();
            p.expect_sym(":");
            auto w = p.word(true);
            p.expect_end();
            for (const auto& c : f.conjugators)
                if ((c.t == t && c.s == s) || (c.t == s && c.s == t))
                    throw DuplicateSection(lineno, col, "conjugator edge");
            f.conjugators.push_back({t, s, w});
        } else if (kw == "quotient") {
            int col = p.column();
            std::string label = p.identifier("perm or matrix");
            int modulus = 0;
            if (p.at_sym(":")) {
                p.next();
                if (label == "matrix") {
                    modulus = p.integer();
                    if (modulus < 2) throw SyntaxError(lineno, col, "matrix modulus must be at least 2");
                    label += ":" + std::to_string(modulus);
                } else {
                    label += ":" + p.identifier("a quotient label");
                }
            }
            if (label.rfind("perm", 0) != 0 && label.rfind("matrix:", 0) != 0)
                throw SyntaxError(lineno, col, "quotient kind must be perm or matrix:M");
            int gcol = p.column();
            int g = p.generator();
            p.expect_sym("->");
            Quotient* q = nullptr;
            for (auto& x : f.quotients)
                if (x.label == label) q = &x;
            if (!q) {
                Quotient fresh;
                fresh.label = label;
                fresh.modulus = modulus;
                fresh.perms.resize(static_cast<std::size_t>(f.gens.size()));
                fresh.matrices.resize(static_cast<std::size_t>(f.gens.size()));
                f.quotients.push_back(fresh);
                q = &f.quotients.back();
            }
            auto gi = static_cast<std::size_t>(g);
            if (q->perms[gi] || q->matrices[gi]) throw DuplicateSection(lineno, gcol, "quotient image");
            if (modulus > 0) {
                std::array<long, 4> m{};
                for (auto& v : m) v = p.integer();
                p.expect_end();
                q->matrices[gi] = m;
            } else {
                int rcol = p.column();
                try {
                    auto perm = parse_cycles(p.rest_raw(line));
                    q->degree = std::max(q->degree, static_cast<int>(perm.size()));
                    q->perms[gi] = perm;
                } catch (const InputError& e) {
                    throw SyntaxError(lineno, rcol, e.what());
                }
            }
        } else if (kw == "solver") {
            if (f.solver) throw DuplicateSection(lineno, kwcol, "solver");
            f.solver = detail::trim(p.rest_raw(line));
        } else {
            throw SyntaxError(lineno, kwcol, "unknown keyword '" + kw + "'");
        }
    }
    if (!have_header) throw SyntaxError(lineno + 1, 1, "empty presentation file");
    if (!have_gens) throw SyntaxError(lineno + 1, 1, "missing gens line");
    for (auto& q : f.quotients)
        for (int g = 0; g < f.gens.size(); ++g) {
            auto gi = static_cast<std::size_t>(g);
            if (!q.perms[gi] && !q.matrices[gi])
                throw MissingData("quotient " + q.label + " has no image for " + f.gens.name(g));
            if (q.perms[gi]) q.perms[gi] = pad(*q.perms[gi], q.degree);
        }
    return f;
}

inline std::string print_word(const GroupWord& w, const Alphabet& a) {
    if (w.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += " ";
        out += a.name(w[i].gen);
        if (w[i].sign < 0) out += "^-1";
    }
    return out;
}

inline std::string print_word(const PositiveWord& w, const Alphabet& a) { return print_word(to_group(w), a); }

inline std::string print_term(const QuandleTerm& t, const Alphabet& a) {
    std::string out = a.name(t.base);
    for (const auto& l : t.tail) out += (l.sign > 0 ? " * " : " *- ") + a.name(l.gen);
    return out;
}

inline std::string print_relation(const QuandleRelation& r, const Alphabet& a) {
    return print_term(r.lhs, a) + " = " + print_term(r.rhs, a);
}

inline std::string print(const PresentationFile& f) {
    std::ostringstream out;
    out << kind_name(f.kind) << " " << f.name << "\n";
    out << "gens";
    for (const auto& n : f.gens.names) out << " " << n;
    out << "\n";
    for (const auto& r : f.monoid_relations)
        out << "rel " << print_word(r.lhs, f.gens) << " = " << print_word(r.rhs, f.gens) << "\n";
    for (const auto& r : f.relators) out << "rel " << print_word(r, f.gens) << "\n";
    for (const auto& r : f.quandle_relations) out << "rel " << print_relation(r, f.gens) << "\n";
    auto comp = [&](const char* kw, const std::optional<Complement>& c) {
        if (!c) return;
        for (int s = 0; s < f.gens.size(); ++s)
            for (int t = 0; t < f.gens.size(); ++t)
                if (s != t && c->has(s, t))
                    out << kw << " " << f.gens.name(s) << " " << f.gens.name(t) << " : " << print_word(c->at(s, t), f.gens)
                        << "\n";
    };
    comp("complement", f.complement);
    comp("left-complement", f.left_complement);
    if (f.delta) out << "delta : " << print_word(*f.delta, f.gens) << "\n";
    for (const auto& [s, ws] : f.centralizers) {
        out << "centralizer " << f.gens.name(s) << " :";
        for (std::size_t i = 0; i < ws.size(); ++i) out << (i ? " | " : " ") << print_word(ws[i], f.gens);
        out << "\n";
    }
    for (const auto& c : f.conjugators)
        out << "conjugator " << f.gens.name(c.t) << " " << f.gens.name(c.s) << " : " << print_word(c.word, f.gens) << "\n";
    for (const auto& q : f.quotients)
        for (int g = 0; g < f.gens.size(); ++g) {
            auto gi = static_cast<std::size_t>(g);
            out << "quotient " << q.label << " " << f.gens.name(g) << " -> ";
            if (q.modulus > 0) {
                const auto& m = *q.matrices[gi];
                out << m[0] << " " << m[1] << " " << m[2] << " " << m[3] << "\n";
            } else {
                out << format_cycles(*q.perms[gi]) << "\n";
            }
        }
    if (f.solver) out << "solver " << *f.solver << "\n";
    return out.str();
}

inline PresentationFile quandle_file(const std::string& name, const QuandlePresentation& q) {
    PresentationFile f;
    f.kind = Kind::quandle;
    f.name = name;
    f.gens = q.gens;
    f.quandle_relations = q.relations;
    return f;
}

}  // namespace dehnq
