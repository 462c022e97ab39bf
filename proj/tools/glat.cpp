#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "glat/beams.hpp"
#include "glat/cone.hpp"
#include "glat/error.hpp"
#include "glat/finlat.hpp"
#include "glat/germ.hpp"
#include "glat/guard.hpp"
#include "glat/latmod.hpp"
#include "glat/verify.hpp"
#include "glat/ybe.hpp"

using nlohmann::json;
namespace gm = glat::germ;
namespace lm = glat::latmod;

namespace {

// Bad arguments or unreadable input; exits with status 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Output {
    bool compact = false;
    std::string path;

    void write(const std::string& text) const {
        if (path.empty()) {
            std::cout << text;
            return;
        }
        std::ofstream f(path);
        if (!f) throw UsageError("cannot write " + path);
        f << text;
    }
    // Compact JSON under --json, indented otherwise.
    void emit(const json& j) const { write((compact ? j.dump() : j.dump(2)) + "\n"); }
};

json read_json(const std::string& arg) {
    std::string text = arg;
    if (arg.empty() || (arg[0] != '{' && arg[0] != '[')) {
        std::ifstream f(arg);
        if (!f) throw UsageError("cannot read " + arg);
        std::stringstream ss;
        ss << f.rdbuf();
        text = ss.str();
    }
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw UsageError("invalid JSON in " + arg + ": " + e.what());
    }
}

gm::GermTable load_germ(const std::string& arg) {
    if (auto t = glat::verify::named_germ(arg)) return *t;
    return gm::germ_from_json(read_json(arg));
}

// "x D", "x,D", "[x,D]" and "e" are all accepted. Commas inside parentheses
// belong to product element names such as "(x,e)".
gm::Word parse_word_arg(const gm::Germ& G, std::string s) {
    int depth = 0;
    for (char& c : s) {
        depth += (c == '(') - (c == ')');
        if (c == '[' || c == ']' || (c == ',' && depth == 0)) c = ' ';
    }
    std::istringstream is(s);
    std::vector<std::string> names;
    for (std::string t; is >> t;)
        if (t != "e") names.push_back(t);
    return gm::parse_word(G, names);
}

json word_json(const gm::Germ& G, const gm::Word& w) { return gm::word_names(G, w); }

lm::PLattice lattice_arg(const std::string& arg, int p, int delta, const std::string& gens) {
    if (!arg.empty()) return lm::plattice_from_json(read_json(arg));
    if (gens.empty()) throw UsageError("give a lattice JSON or --gens");
    json g = read_json(gens);
    std::vector<std::vector<lm::Rational>> vs;
    for (const auto& v : g) {
        std::vector<lm::Rational> row;
        for (const auto& x : v) {
            if (x.is_number_integer()) {
                row.push_back({x.get<lm::i64>(), 1});
                continue;
            }
            std::string s = x.get<std::string>();
            auto slash = s.find('/');
            if (slash == std::string::npos) throw UsageError("bad rational " + s);
            row.push_back({std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1))});
        }
        vs.push_back(row);
    }
    return lm::from_rational_generators({p, delta}, vs);
}

json classification_json(const glat::finlat::Lattice& L) {
    auto c = glat::finlat::classify(L);
    return {{"modular", c.modular},
            {"distributive", c.distributive},
            {"geometric", c.geometric},
            {"length", c.length},
            {"meetIrreducibles", c.meet_irreducibles},
            {"joinIrreducibles", c.join_irreducibles}};
}

json decomposition_json(const glat::finlat::Decomposition& d) {
    return {{"factors", d.factors}, {"generators", d.generators}, {"upwardClosed", d.upward_closed}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Garside germs, beams and lattices of p-local modules"};
    app.require_subcommand(1);
    app.fallthrough();

    Output out;
    std::string configPath;
    long long maxEnum = 0;
    app.add_flag("--json", out.compact, "compact machine-readable output");
    app.add_option("--config", configPath, "JSON config file; flags override it");
    app.add_option("--max-enum", maxEnum, "enumeration guard (also GLAT_MAX_ENUM)")->check(CLI::PositiveNumber);
    app.add_option("-o,--output", out.path, "write the result to a file");

    std::string file, word1, word2, gens, toKind, den, suite = "all", params;
    std::vector<std::string> letters;
    int p = 2, delta = 1, n = 1, level = -1;
    long long seed = -1;
    bool left = false, rigidity = false, listSuites = false;

    // lattice
    auto* lattice = app.add_subcommand("lattice", "finite lattices given as cover JSON");
    lattice->require_subcommand(1);
    std::string latticeCmd;
    for (const char* name : {"classify", "center", "decompose", "primary"}) {
        auto* s = lattice->add_subcommand(name);
        s->add_option("file", file, "lattice JSON")->required();
        s->callback([&latticeCmd, name] { latticeCmd = name; });
    }

    // latmod
    auto* latmod = app.add_subcommand("latmod", "lattices of p-local modules");
    latmod->require_subcommand(1);
    auto* lmProfile = latmod->add_subcommand("profile", "Smith data and index sequence");
    lmProfile->add_option("lattice", file, "lattice JSON");
    lmProfile->add_option("--gens", gens, "generators as a JSON list of vectors");
    auto* lmInterval = latmod->add_subcommand("interval", "the interval [p^n R^delta, R^delta]");
    auto* lmFrozen = latmod->add_subcommand("frozen", "p^n R^delta");
    for (auto* s : {lmProfile, lmInterval, lmFrozen}) {
        s->add_option("-p,--p", p, "prime")->check(CLI::PositiveNumber);
        s->add_option("-d,--delta", delta, "rank")->check(CLI::PositiveNumber);
    }
    for (auto* s : {lmInterval, lmFrozen}) s->add_option("-n,--n", n, "level")->check(CLI::NonNegativeNumber);

    // germ
    auto* germ = app.add_subcommand("germ", "Garside germs given as JSON or by name");
    germ->require_subcommand(1);
    auto* gValidate = germ->add_subcommand("validate");
    auto* gNf = germ->add_subcommand("nf", "normal form of a word");
    auto* gArrow = germ->add_subcommand("arrow", "g -> h in the negative cone");
    auto* gInterval = germ->add_subcommand("interval", "center, U/L/M counts and duality");
    auto* gFrozen = germ->add_subcommand("frozen", "Phi_n(z)");
    auto* gDecompose = germ->add_subcommand("decompose", "semibeam or beam components");
    for (auto* s : {gValidate, gNf, gArrow, gInterval, gFrozen, gDecompose})
        s->add_option("germ", file, "germ JSON file or builtin name")->required();
    gNf->add_option("letters", letters, "germ elements, leftmost factor first");
    gNf->add_flag("--left", left, "left-normal form instead");
    gArrow->add_option("source", word1, "the word g")->required();
    gArrow->add_option("target", word2, "the word h")->required();
    gFrozen->add_option("z", word1, "a dual atom of the center")->required();
    gFrozen->add_option("n", n)->required()->check(CLI::NonNegativeNumber);
    gDecompose->add_option("word", word1, "numerator")->required();
    gDecompose->add_option("--den", den, "denominator; decomposes den^-1 word into beams");
    gDecompose->add_option("-n,--n", level, "frame or shift level");
    gDecompose->add_flag("--rigidity", rigidity, "also report the semibeam permutation");

    // ybe
    auto* ybeCmd = app.add_subcommand("ybe", "involutive set-theoretic solutions");
    ybeCmd->require_subcommand(1);
    auto* yValidate = ybeCmd->add_subcommand("validate");
    auto* yEnumerate = ybeCmd->add_subcommand("enumerate");
    auto* yGerm = ybeCmd->add_subcommand("germ", "structure germ of a solution");
    auto* yConvert = ybeCmd->add_subcommand("convert");
    for (auto* s : {yValidate, yGerm, yConvert}) s->add_option("file", file, "solution JSON")->required();
    yEnumerate->add_option("-n,--n", n, "number of points")->required();
    yConvert->add_option("--to", toKind, "rmap, cycle or lalgebra")
        ->required()
        ->check(CLI::IsMember({"rmap", "cycle", "lalgebra"}));

    // verify
    auto* verifyCmd = app.add_subcommand("verify", "run verification suites");
    verifyCmd->add_option("--suite", suite, "suite name or all");
    verifyCmd->add_option("--params", params, "config JSON, inline or as a file");
    verifyCmd->add_option("--seed", seed, "seed for randomized suites");
    verifyCmd->add_flag("--list", listSuites, "list suite names");

    // export
    auto* exportCmd = app.add_subcommand("export", "Hasse diagrams");
    exportCmd->require_subcommand(1);
    auto* eDot = exportCmd->add_subcommand("dot");
    eDot->add_option("file", file, "lattice JSON, germ JSON or builtin germ name")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        glat::verify::Config cfg;
        if (!configPath.empty()) cfg = glat::verify::config_from_json(read_json(configPath));
        if (!params.empty()) {
            json merged = glat::verify::to_json(cfg);
            json extra = read_json(params);
            if (!extra.is_object()) throw UsageError("--params must be a JSON object");
            for (auto& [k, v] : extra.items()) merged[k] = v;
            cfg = glat::verify::config_from_json(merged);
        }
        if (maxEnum > 0) cfg.max_enum = std::size_t(maxEnum);
        if (seed >= 0) cfg.seed = std::uint64_t(seed);
        if (cfg.format == "json") out.compact = true;
        if (out.path.empty()) out.path = cfg.output;
        if (cfg.max_enum) glat::set_max_enum(*cfg.max_enum);

        if (lattice->parsed()) {
            auto L = glat::finlat::lattice_from_json(read_json(file));
            if (latticeCmd == "classify") out.emit(classification_json(L));
            if (latticeCmd == "center") {
                auto c = glat::finlat::center(L);
                json labels = json::array();
                for (int x : c) labels.push_back(L.label(x));
                out.emit({{"center", c}, {"labels", labels}});
            }
            if (latticeCmd == "decompose") out.emit(decomposition_json(glat::finlat::decompose(L)));
            if (latticeCmd == "primary") {
                bool mod = glat::finlat::is_modular(L);
                out.emit({{"modular", mod}, {"primary", mod && glat::finlat::is_primary(L)}});
            }
            return 0;
        }

        if (latmod->parsed()) {
            if (lmProfile->parsed()) {
                auto A = lattice_arg(file, p, delta, gens);
                out.emit({{"lattice", lm::to_json(A)}, {"profile", lm::to_json(lm::snf_profile(A))}});
            } else if (lmInterval->parsed()) {
                auto si = lm::strong_interval({p, delta}, n);
                json elems = json::array();
                for (const auto& A : si.elements) elems.push_back(lm::to_json(A));
                json j = glat::finlat::to_json(si.lattice);
                j["elements"] = elems;
                j["classification"] = classification_json(si.lattice);
                out.emit(j);
            } else {
                out.emit(lm::to_json(lm::frozen({p, delta}, n)));
            }
            return 0;
        }

        if (germ->parsed()) {
            auto table = load_germ(file);
            if (gValidate->parsed()) {
                auto r = gm::validate_germ(table);
                json j{{"ok", r.ok}, {"elements", table.size()}};
                if (!r.ok) j["witness"] = r.witness;
                out.emit(j);
                return r.ok ? 0 : 1;
            }
            gm::Germ G(table);
            if (gNf->parsed()) {
                std::string joined;
                for (const auto& l : letters) joined += l + " ";
                gm::Word w = parse_word_arg(G, joined);
                out.emit(word_json(G, left ? gm::left_normal_form(G, w) : gm::right_normal_form(G, w)));
            } else if (gArrow->parsed()) {
                out.emit(word_json(G, gm::arrow(G, parse_word_arg(G, word1), parse_word_arg(G, word2))));
            } else if (gInterval->parsed()) {
                json j = gm::to_json(G, gm::interval_analysis(G));
                j["lattice"] = glat::finlat::to_json(G.lattice());
                out.emit(j);
            } else if (gFrozen->parsed()) {
                gm::BeamStructure S(G);
                out.emit(word_json(G, S.frozen(G.id(word1), n)));
            } else {
                gm::BeamStructure S(G);
                gm::Word w = parse_word_arg(G, word1);
                json j;
                if (!den.empty()) {
                    auto b = S.beams(gm::make_fraction(G, parse_word_arg(G, den), w), level);
                    json comps = json::array();
                    for (const auto& f : b.components) comps.push_back(gm::to_json(G, f));
                    j = {{"n", b.n}, {"beams", comps}};
                } else {
                    auto s = S.semibeams(w, level);
                    json comps = json::array();
                    for (const auto& c : s.components) comps.push_back(word_json(G, c));
                    j = {{"n", s.n}, {"semibeams", comps}, {"meetOK", s.meet_ok}};
                    if (rigidity) j["rigidity"] = S.rigidity(w);
                }
                json atoms = json::array();
                for (int z : S.analysis().center_atoms) atoms.push_back(G.name(z));
                j["centerDualAtoms"] = atoms;
                out.emit(j);
            }
            return 0;
        }

        if (ybeCmd->parsed()) {
            namespace y = glat::ybe;
            if (yEnumerate->parsed()) {
                auto E = y::enumerate(n);
                json sols = json::array(), reps = json::array();
                for (const auto& R : E.solutions) sols.push_back(y::to_json(R));
                for (const auto& R : E.representatives) reps.push_back(y::to_json(R));
                out.emit({{"n", n},
                          {"count", E.solutions.size()},
                          {"classes", E.representatives.size()},
                          {"solutions", sols},
                          {"representatives", reps}});
                return 0;
            }
            json in = read_json(file);
            y::RMap R;
            if (in.contains("R")) {
                R = y::rmap_from_json(in);
            } else if (in.contains("op")) {
                R = y::to_rmap(y::cycle_set_from_json(in));
            } else if (in.contains("arrow")) {
                R = y::to_rmap(y::lalgebra_from_json(in));
            } else {
                throw UsageError("expected a solution, cycle set or L-algebra");
            }
            if (yValidate->parsed()) {
                auto r = y::validate(R);
                out.emit({{"bijective", r.bijective},
                          {"nondegenerate", r.nondegenerate},
                          {"involutive", r.involutive},
                          {"braid", r.braid},
                          {"ok", r.ok()}});
                return r.ok() ? 0 : 1;
            }
            if (yGerm->parsed()) {
                out.emit(gm::to_json(y::structure_germ(R)));
            } else if (toKind == "rmap") {
                out.emit(y::to_json(R));
            } else if (toKind == "cycle") {
                out.emit(y::to_json(y::to_cycle_set(R)));
            } else {
                out.emit(y::to_json(y::to_lalgebra(R)));
            }
            return 0;
        }

        if (verifyCmd->parsed()) {
            if (listSuites) {
                for (const auto& s : glat::verify::suite_names()) out.write(s + "\n");
                return 0;
            }
            std::vector<glat::verify::SuiteReport> reports;
            try {
                reports = glat::verify::run_suites(suite, cfg);
            } catch (const glat::UnknownSuite& e) {
                throw UsageError(e.what());
            }
            bool ok = true;
            json all = json::array();
            std::string text;
            for (const auto& r : reports) {
                ok &= r.passed();
                all.push_back(glat::verify::to_json(r));
                text += glat::verify::to_text(r);
            }
            if (out.compact)
                out.emit(reports.size() == 1 ? all[0] : all);
            else
                out.write(text);
            return ok ? 0 : 1;
        }

        if (exportCmd->parsed()) {
            std::string dot;
            if (auto t = glat::verify::named_germ(file)) {
                gm::Germ G(*t);
                dot = glat::finlat::to_dot(G.lattice(), "germ");
            } else {
                json j = read_json(file);
                if (j.contains("covers")) {
                    dot = glat::finlat::to_dot(glat::finlat::lattice_from_json(j));
                } else {
                    gm::Germ G(gm::germ_from_json(j));
                    dot = glat::finlat::to_dot(G.lattice(), "germ");
                }
            }
            if (out.compact)
                out.emit({{"dot", dot}});
            else
                out.write(dot);
            return 0;
        }
    } catch (const UsageError& e) {
        std::cerr << (out.compact ? json{{"error", "Usage"}, {"message", e.what()}}.dump() : std::string("usage: ") + e.what())
                  << "\n";
        return 2;
    } catch (const glat::Error& e) {
        std::cerr << (out.compact ? json{{"error", e.kind()}, {"message", e.what()}}.dump() : std::string(e.what()))
                  << "\n";
        return 1;
    } catch (const json::exception& e) {
        std::cerr << (out.compact ? json{{"error", "BadInput"}, {"message", e.what()}}.dump()
                               : std::string("BadInput: ") + e.what())
                  << "\n";
        return 1;
    }
    return 0;
}
