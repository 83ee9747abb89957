#pragma once

#include <map>
#include <string>
#include <vector>

#include "finite.hpp"
#include "io.hpp"

namespace dehnq {

struct CentralizerData {
    std::map<int, std::vector<GroupWord>> words;  // s -> A_s
};

// Tree edges t <- s carrying f(t,s) with f(t,s) s f(t,s)^-1 = t.
struct ConjugacyData {
    std::vector<Conjugator> edges;
};

struct ConjugacyClasses {
    std::vector<int> root_of;
    std::vector<int> roots;
};

inline ConjugacyClasses conjugacy_classes(int n, const CentralizerData& c, const ConjugacyData& j, const Alphabet& names) {
    std::vector<int> parent(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) parent[static_cast<std::size_t>(i)] = i;
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
        return x;
    };
    for (const auto& e : j.edges) {
        int a = find(e.t), b = find(e.s);
        if (a == b) throw InputError("conjugator edges contain a cycle through " + names.name(e.t));
        parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }
    ConjugacyClasses out;
    out.root_of.assign(static_cast<std::size_t>(n), -1);
    std::map<int, int> chosen;
    for (int s = 0; s < n; ++s)
        if (c.words.count(s) && !chosen.count(find(s))) chosen[find(s)] = s;
    for (int s = 0; s < n; ++s) {
        auto it = chosen.find(find(s));
        if (it == chosen.end()) throw MissingData("no centralizer data for the class of " + names.name(s));
        out.root_of[static_cast<std::size_t>(s)] = it->second;
    }
    for (const auto& [k, r] : chosen) out.roots.push_back(r);
    std::sort(out.roots.begin(), out.roots.end());
    return out;
}

inline QuandlePresentation emit_centralizer_presentation(const GroupPresentation& g, const CentralizerData& c,
                                                         const ConjugacyData& j) {
    int n = g.gens.size();
    auto classes = conjugacy_classes(n, c, j, g.gens);
    QuandlePresentation q{g.gens, {}};
    for (int s = 0; s < n; ++s)
        for (const auto& r : g.relators) q.relations.push_back({conjugation_to_term(s, r), {s, {}}});
    for (int s : classes.roots)
        for (const auto& w : c.words.at(s)) q.relations.push_back({conjugation_to_term(s, w), {s, {}}});
    for (const auto& e : j.edges) q.relations.push_back({conjugation_to_term(e.s, e.word), {e.t, {}}});
    return q;
}

struct VerificationReport {
    bool ok = true;
    int quotients = 0;
    std::vector<std::string> lines;

    std::string summary() const {
        return std::string(ok ? "verified" : "FAILED") + " in " + std::to_string(quotients) + " quotients";
    }
};

// Necessary conditions only: each check is made in the supplied finite quotients.
inline VerificationReport verify_conjugacy_data(const GroupPresentation& g, const CentralizerData& c,
                                                const ConjugacyData& j, const std::vector<Quotient>& quotients) {
    VerificationReport rep;
    for (const auto& q : quotients) {
        auto images = q.images();
        auto hom = verify_group_hom(g, images);
        if (!hom.ok) throw RelatorViolated(q.label + ": " + hom.message);
        int degree = static_cast<int>(images.front().size());
        auto eval = [&](const GroupWord& w) { return evaluate_word(w, images, degree); };
        for (const auto& e : j.edges) {
            auto f = eval(e.word);
            if (conjugate(images[static_cast<std::size_t>(e.s)], f) != images[static_cast<std::size_t>(e.t)]) {
                rep.ok = false;
                rep.lines.push_back(q.label + ": conjugator for " + g.gens.name(e.t) + " <- " + g.gens.name(e.s) +
                                    " does not conjugate");
            }
        }
        for (const auto& [s, ws] : c.words)
            for (const auto& w : ws) {
                auto x = eval(w);
                const auto& y = images[static_cast<std::size_t>(s)];
                if (compose(x, y) != compose(y, x)) {
                    rep.ok = false;
                    rep.lines.push_back(q.label + ": centralizer word " + print_word(w, g.gens) + " does not commute with " +
                                        g.gens.name(s));
                }
            }
        ++rep.quotients;
        rep.lines.push_back(q.label + ": relators trivial, conjugators and centralizers checked");
    }
    return rep;
}

inline CentralizerData centralizer_data(const PresentationFile& f) { return {f.centralizers}; }
inline ConjugacyData conjugacy_data(const PresentationFile& f) { return {f.conjugators}; }

}  // namespace dehnq
