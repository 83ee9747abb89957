// dq: command-line front end for the dehnq library.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "dehnq/dehnq.hpp"

using namespace dehnq;
using nlohmann::json;

namespace {

int code(ExitCode c) { return static_cast<int>(c); }

std::string read_text(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

PresentationFile load(const std::string& arg) {
    if (arg.rfind("builtin:", 0) == 0) return builtin(arg);
    return parse(read_text(arg));
}

// JSON {order, table} or text "order N" followed by N rows of N entries, 0-indexed.
FiniteQuandle load_quandle_table(const std::string& text, const std::string& name) {
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        json j = json::parse(text);
        int n = j.at("order").get<int>();
        std::vector<int> table;
        for (const auto& row : j.at("table"))
            for (const auto& v : row) table.push_back(v.get<int>());
        if (table.size() != static_cast<std::size_t>(n * n)) throw InputError(name + ": table is not order x order");
        return from_table(n, table, name);
    }
    std::istringstream in(text);
    std::string kw;
    int n = 0;
    if (!(in >> kw >> n) || kw != "order" || n < 1) throw InputError(name + ": expected 'order N'");
    std::vector<int> table(static_cast<std::size_t>(n * n));
    for (auto& v : table)
        if (!(in >> v)) throw InputError(name + ": table has fewer than N*N entries");
    return from_table(n, table, name);
}

FiniteQuandle load_target(const std::string& arg) {
    FiniteQuandle q = arg.rfind("builtin:", 0) == 0 ? builtin_target(arg) : load_quandle_table(read_text(arg), arg);
    auto ax = check_axioms(q);
    if (!ax.ok) throw AxiomFailure(ax.witness);
    return q;
}

json word_json(const GroupWord& w, const Alphabet& a) {
    json out = json::array();
    for (const auto& l : w) out.push_back({{"generator", a.name(l.gen)}, {"sign", l.sign}});
    return out;
}

json presentation_json(const QuandlePresentation& q) {
    json rels = json::array();
    for (const auto& r : q.relations) {
        rels.push_back({{"lhs", {{"base", q.gens.name(r.lhs.base)}, {"tail", word_json(r.lhs.tail, q.gens)}}},
                        {"rhs", {{"base", q.gens.name(r.rhs.base)}, {"tail", word_json(r.rhs.tail, q.gens)}}}});
    }
    return {{"generators", q.gens.names}, {"relations", rels}};
}

json quandle_json(const FiniteQuandle& q) {
    json rows = json::array();
    for (int x = 0; x < q.n; ++x) {
        json row = json::array();
        for (int y = 0; y < q.n; ++y) row.push_back(q.op(x, y));
        rows.push_back(row);
    }
    return {{"order", q.n}, {"table", rows}};
}

void emit(const std::string& name, const QuandlePresentation& q, bool as_json) {
    if (as_json) {
        std::cout << presentation_json(q).dump(2) << "\n";
        return;
    }
    std::cout << print(quandle_file(name, q));
    for (const auto& r : q.relations) std::cout << "# " << print_compact(r, q.gens) << "\n";
}

QuandlePresentation maybe_simplify(const PresentationFile& f, const QuandlePresentation& q, bool simplify) {
    if (!simplify) return q;
    auto res = simplify_presentation(q, simplify_options(f));
    for (const auto& d : res.log)
        std::cerr << "derived " << print_relation(d.relation, q.gens) << " [" << d.method << "] " << d.detail << "\n";
    std::cerr << q.relations.size() << " relations -> " << res.presentation.relations.size() << "\n";
    return res.presentation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Presentations of Dehn quandles from Garside monoids and centralizers"};
    app.require_subcommand(1);
    std::uint64_t budget_steps = default_budget();

    std::string file, side = "right", word, target, name, action;
    bool simplify = false, as_json = false;
    std::size_t max_elements = 1000, max_steps = 1000000;

    auto* garside = app.add_subcommand("garside-present", "quandle presentation from a Garside monoid");
    garside->add_option("FILE", file)->required();
    garside->add_option("--side", side)->check(CLI::IsMember({"right", "left"}));
    garside->add_flag("--simplify", simplify);
    garside->add_flag("--json", as_json);

    auto* central = app.add_subcommand("centralizer-present", "quandle presentation from centralizer data");
    central->add_option("FILE", file)->required();
    central->add_flag("--simplify", simplify);
    central->add_flag("--json", as_json);

    auto* conditions = app.add_subcommand("check-conditions", "report the Garside conditions and the monoid type");
    conditions->add_option("FILE", file)->required();
    conditions->add_option("--budget", budget_steps);
    conditions->add_option("--side", side)->check(CLI::IsMember({"right", "left"}));

    auto* reverse = app.add_subcommand("reverse", "right-reverse a signed word");
    reverse->add_option("FILE", file)->required();
    reverse->add_option("--word", word)->required();

    auto* divisors = app.add_subcommand("divisors", "left and right divisors of the Garside element");
    divisors->add_option("FILE", file)->required();

    auto* homs = app.add_subcommand("hom-count", "count quandle homomorphisms into a finite target");
    homs->add_option("QFILE", file)->required();
    homs->add_option("--target", target)->required();

    auto* enumerate = app.add_subcommand("enumerate", "enumerate a finitely presented quandle");
    enumerate->add_option("QFILE", file)->required();
    enumerate->add_option("--max-elements", max_elements);
    enumerate->add_option("--max-steps", max_steps);
    enumerate->add_flag("--json", as_json);

    auto* env = app.add_subcommand("env", "enveloping group presentation");
    env->add_option("QFILE", file)->required();

    auto* catalog = app.add_subcommand("builtin", "list or print catalog entries");
    catalog->add_option("ACTION", action)->required()->check(CLI::IsMember({"list", "emit"}));
    catalog->add_option("NAME", name);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? code(ExitCode::ok) : code(ExitCode::input);
    }

    try {
        Side s = side == "left" ? Side::left : Side::right;
        if (*garside) {
            auto f = load(file);
            auto m = f.monoid();
            auto q = s == Side::right ? emit_right_presentation(m, budget_steps) : emit_left_presentation(m, budget_steps);
            emit(f.name, maybe_simplify(f, q, simplify), as_json);
        } else if (*central) {
            auto f = load(file);
            auto g = f.group();
            auto c = centralizer_data(f);
            auto j = conjugacy_data(f);
            if (!f.quotients.empty()) {
                auto rep = verify_conjugacy_data(g, c, j, f.quotients);
                for (const auto& l : rep.lines) std::cerr << l << "\n";
                std::cerr << rep.summary() << "\n";
                if (!rep.ok) return code(ExitCode::verification);
            }
            emit(f.name, maybe_simplify(f, emit_centralizer_presentation(g, c, j), simplify), as_json);
        } else if (*conditions) {
            auto rep = check_conditions(load(file).monoid(), s, budget_steps);
            for (const auto& [k, v] : rep.items) std::cout << k << " " << status_name(v) << "\n";
            if (s == Side::right) std::cout << "delta-witness " << status_name(rep.delta_witness) << "\n";
            std::cout << "type " << rep.type << "\n";
        } else if (*reverse) {
            auto f = load(file);
            auto m = f.monoid();
            auto w = parse_word(word, m.gens);
            auto fr = reverse_word(w, right_complement(m), budget_steps);
            std::cout << "numerator " << print_word(fr.num, m.gens) << "\n";
            std::cout << "denominator " << print_word(fr.den, m.gens) << "\n";
            std::cout << "trivial " << (fr.num.empty() && fr.den.empty() ? "yes" : "no") << "\n";
        } else if (*divisors) {
            auto m = load(file).monoid();
            if (!m.delta) throw MissingData("no delta in " + file);
            auto left = enumerate_divisors(m, *m.delta, budget_steps, max_elements);
            auto right = enumerate_right_divisors(m, *m.delta, budget_steps);
            std::cout << "left " << left.size() << "\n";
            for (const auto& d : left) std::cout << "  " << print_word(d, m.gens) << "\n";
            std::cout << "right " << right.size() << "\n";
            for (const auto& d : right) std::cout << "  " << print_word(d, m.gens) << "\n";
        } else if (*homs) {
            auto q = load(file).quandle();
            std::cout << hom_count(q, load_target(target)) << "\n";
        } else if (*enumerate) {
            auto e = winker_enumerate(load(file).quandle(), max_elements, max_steps);
            if (as_json)
                std::cout << quandle_json(e.quandle).dump(2) << "\n";
            else
                std::cout << "order " << e.quandle.n << "\n";
        } else if (*env) {
            auto f = load(file);
            auto g = enveloping_presentation(f.quandle());
            PresentationFile out;
            out.kind = Kind::group;
            out.name = "env-" + f.name;
            out.gens = g.gens;
            out.relators = g.relators;
            std::cout << print(out);
        } else if (*catalog) {
            if (action == "list") {
                for (const auto& n : builtin_names()) std::cout << n << "\n";
            } else {
                if (name.empty()) throw InputError("builtin emit needs a NAME");
                std::cout << print(builtin(name));
            }
        }
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return code(e.code);
    } catch (const std::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return code(ExitCode::input);
    }
    return code(ExitCode::ok);
}
