// nokw: Newton-Okounkov lattice data and Gromov widths of coadjoint orbits.
//
// Subcommands:
//   roots      positive roots, fundamental coroot pairings, dominance Hasse edges
//   width      Gromov width of a rational dominant weight, with minimizing roots
//   essential  essential exponent tuples of V(lambda) for a chosen enumeration
//   gamma      level-ell slice of the graded essential monoid (es of ell*lambda)
//   verify     machine-check the simplex constructions in exact arithmetic
//
// Output is a single canonical JSON document on stdout (keys sorted, exponent
// tuples ascending right-lexicographically, rationals as "p/q" strings);
// byte-identical across runs.  Timing goes to stderr.  Exit codes: 0 success,
// 1 verification failure, 2 invalid input, 3 internal invariant violation.

#include <chrono>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nokw/errors.hpp"
#include "nokw/essential.hpp"
#include "nokw/repmod.hpp"
#include "nokw/rootsys.hpp"
#include "nokw/weyl.hpp"
#include "nokw/widths.hpp"

using json = nlohmann::json;
using namespace nokw;

namespace {

constexpr const char* kSchemaVersion = "nok-width/1";

struct CommonOpts {
    std::string type;
    int rank = 0;
    std::string lambda;
    bool epsilon = false;
    bool pretty = false;
    long max_dim = 5000;
};

std::vector<Rat> parse_rational_vector(const std::string& text) {
    std::vector<Rat> out;
    std::string item;
    std::stringstream ss(text);
    while (std::getline(ss, item, ',')) out.push_back(rat_from_string(item));
    require_input(!out.empty(), "empty weight string");
    return out;
}

std::vector<int> parse_word(const std::string& text) {
    std::vector<int> out;
    std::string item;
    std::stringstream ss(text);
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stoi(item) - 1); // 1-based on the boundary
        } catch (const std::exception&) {
            throw invalid_input("word entries must be integers: '" + item + "'");
        }
    }
    require_input(!out.empty(), "empty word string");
    return out;
}

RootSystem make_system(const CommonOpts& o) {
    require_input(o.type.size() == 1, "--type expects a single series letter A..G");
    return RootSystem::make(o.type[0], o.rank);
}

/// Rational weight in fundamental coordinates, converting from epsilon
/// coordinates when requested.
std::vector<Rat> input_weight(const RootSystem& rs, const CommonOpts& o) {
    std::vector<Rat> q = parse_rational_vector(o.lambda);
    if (o.epsilon) {
        require_input(rs.type().series == 'A', "--epsilon applies to type A only");
        q = weight_from_epsilon_coords(q);
    }
    require_input(static_cast<int>(q.size()) == rs.rank(),
                  "weight length does not match the rank");
    return q;
}

/// Integral dominant weight for module-building commands.
Weight integral_weight(const RootSystem& rs, const CommonOpts& o) {
    std::vector<Rat> q = input_weight(rs, o);
    Weight lambda;
    for (const Rat& c : q) {
        require_input(is_integer(c), "this command requires an integral weight");
        lambda.coords.push_back(to_long(c));
    }
    require_input(rs.is_dominant(lambda), "weight must be dominant");
    return lambda;
}

void guard_dimension(const RootSystem& rs, const Weight& lambda, long max_dim) {
    const Int dim = rs.weyl_dim(lambda);
    require_input(dim <= Int(max_dim),
                  "module dimension " + dim.get_str() + " exceeds --max-dim " +
                      std::to_string(max_dim));
}

json rat_json(const Rat& r) { return rat_to_string(r); }

json rat_vector_json(const std::vector<Rat>& v) {
    json a = json::array();
    for (const Rat& r : v) a.push_back(rat_json(r));
    return a;
}

json int_vector_json(const std::vector<int>& v) { return json(v); }

json long_vector_json(const std::vector<long>& v) { return json(v); }

json roots_json(const std::vector<RootVec>& roots) {
    json a = json::array();
    for (const RootVec& b : roots) a.push_back(int_vector_json(b.coords));
    return a;
}

json one_based_json(const std::vector<int>& v) {
    json a = json::array();
    for (int i : v) a.push_back(i + 1);
    return a;
}

json tuples_json(const std::vector<ExponentTuple>& tuples) {
    json a = json::array();
    for (const auto& t : tuples) a.push_back(int_vector_json(t));
    return a;
}

const char* kind_string(EnumKind k) {
    switch (k) {
    case EnumKind::good: return "good";
    case EnumKind::word_prefix: return "word-prefix";
    case EnumKind::word_suffix: return "word-suffix";
    case EnumKind::telescope: return "telescope";
    }
    throw internal_error("unreachable enumeration kind");
}

json enumeration_json(const Enumeration& e) {
    json out;
    out["kind"] = kind_string(e.kind);
    out["support"] = one_based_json(e.supp);
    out["roots"] = roots_json(e.roots);
    if (!e.word.empty()) out["word"] = one_based_json(e.word);
    if (!e.relabeling.empty()) out["relabeling"] = one_based_json(e.relabeling);
    if (!e.shells.empty()) out["shells"] = json(e.shells);
    return out;
}

json simplex_report_json(const SimplexReport& rep) {
    json out;
    out["construction"] = simplex_kind_name(rep.spec.kind);
    out["lambda"] = long_vector_json(rep.spec.lambda.coords);
    out["size"] = rep.spec.size;
    out["enumeration"] = enumeration_json(rep.spec.enumeration);
    out["vertices"] = tuples_json(rep.spec.vertices);
    json verdicts = json::array();
    for (const auto& [vtx, ok] : rep.vertex_verdicts)
        verdicts.push_back(json{{"essential", ok}, {"vertex", int_vector_json(vtx)}});
    out["vertex_verdicts"] = verdicts;
    json checks = json::array();
    for (const auto& c : rep.checks) checks.push_back(json{{"name", c.name}, {"passed", c.passed}});
    out["checks"] = checks;
    out["notes"] = json(rep.notes);
    out["verified"] = rep.verified;
    return out;
}

void emit(const json& doc, bool pretty) {
    if (pretty)
        std::cout << doc.dump(2) << "\n";
    else
        std::cout << doc.dump() << "\n";
}

json document(const std::string& command, json input, json output) {
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = command;
    doc["input"] = std::move(input);
    doc["output"] = std::move(output);
    return doc;
}

int cmd_roots(const CommonOpts& o) {
    RootSystem rs = make_system(o);
    json output;
    output["count"] = rs.num_positive();
    output["positive_roots"] = roots_json(rs.positive_roots());
    // Pairing matrix: row i lists <w_i, beta^> over the positive roots.
    json pairings = json::array();
    for (int i = 0; i < rs.rank(); ++i) {
        json row = json::array();
        for (const RootVec& beta : rs.positive_roots())
            row.push_back(rs.coroot_pairing(rs.fundamental_weight(i), beta));
        pairings.push_back(row);
    }
    output["fundamental_pairings"] = pairings;
    json hasse = json::array();
    for (const auto& [lo, hi] : rs.dominance_cover_edges())
        hasse.push_back(json::array({lo + 1, hi + 1}));
    output["dominance_cover_edges"] = hasse;
    output["symmetrizer"] = long_vector_json(rs.symmetrizer());

    emit(document("roots", json{{"rank", o.rank}, {"type", o.type}}, output), o.pretty);
    return 0;
}

int cmd_width(const CommonOpts& o) {
    RootSystem rs = make_system(o);
    std::vector<Rat> q = input_weight(rs, o);
    auto [lambda, scale] = normalize_rational_weight(q);
    require_input(rs.is_dominant(lambda), "weight must be dominant");
    const long k = gromov_width_formula(rs, lambda);

    json output;
    output["width"] = rat_json(Rat(k) / scale);
    output["integral_width"] = k;
    output["primitive_lambda"] = long_vector_json(lambda.coords);
    output["scale"] = rat_json(scale);
    output["minimizing_roots"] = roots_json(gromov_width_minimizers(rs, lambda));
    json input{{"lambda", rat_vector_json(q)}, {"rank", o.rank}, {"type", o.type}};
    if (o.epsilon) input["epsilon_input"] = o.lambda;
    emit(document("width", std::move(input), output), o.pretty);
    return 0;
}

Enumeration enumeration_for(const RootSystem& rs, const Weight& lambda,
                            const std::string& ordering, const std::string& word_text) {
    const std::vector<int> supp = rs.support(lambda);
    if (ordering == "good") {
        require_input(word_text.empty(), "--word applies only to --ordering word");
        return good_ordering(rs, supp);
    }
    if (ordering == "word") {
        require_input(!word_text.empty(), "--ordering word requires --word");
        return enumeration_from_word(rs, supp, parse_word(word_text), EnumKind::word_suffix);
    }
    if (ordering == "telescope") {
        require_input(word_text.empty(), "--word applies only to --ordering word");
        return telescope_enumeration(rs);
    }
    throw invalid_input("unknown ordering '" + ordering + "' (good|word|telescope)");
}

int cmd_essential(const CommonOpts& o, const std::string& ordering, const std::string& word_text,
                  long level, bool is_gamma) {
    RootSystem rs = make_system(o);
    Weight lambda = integral_weight(rs, o);
    require_input(!rs.is_zero(lambda) || !is_gamma, "gamma requires a nonzero weight");
    require_input(level >= 1, "--level must be a positive integer");

    Weight scaled = level * lambda;
    guard_dimension(rs, scaled, o.max_dim);
    Enumeration e = enumeration_for(rs, lambda, ordering, word_text);

    ModuleCache cache;
    EssentialSet es = essential_set(cache.get(rs, scaled), e);

    json output;
    output["enumeration"] = enumeration_json(e);
    output["lambda_at_level"] = long_vector_json(scaled.coords);
    if (is_gamma) output["level"] = level;
    output["size"] = static_cast<long>(es.size());
    output["weyl_dim"] = rs.weyl_dim(scaled).get_str();
    output["dimension_check"] =
        Int(static_cast<long>(es.size())) == rs.weyl_dim(scaled);
    output["tuples"] = tuples_json(es.tuples);

    json input{{"lambda", json(lambda.coords)}, {"ordering", ordering}, {"rank", o.rank},
               {"type", o.type}};
    if (!word_text.empty()) input["word"] = word_text;
    if (is_gamma) input["level"] = level;
    emit(document(is_gamma ? "gamma" : "essential", input, output), o.pretty);
    return 0;
}

int cmd_verify(const CommonOpts& o, const std::string& construction, const std::string& word_text) {
    RootSystem rs = make_system(o);
    std::vector<Rat> q = input_weight(rs, o);
    auto [lambda, scale] = normalize_rational_weight(q);
    require_input(rs.is_dominant(lambda), "weight must be dominant");
    guard_dimension(rs, lambda, o.max_dim);

    ConstructionRequest request;
    if (construction == "all")
        request = ConstructionRequest::all_applicable;
    else if (construction == "good")
        request = ConstructionRequest::good;
    else if (construction == "convex")
        request = ConstructionRequest::convex;
    else if (construction == "telescope")
        request = ConstructionRequest::telescope;
    else
        throw invalid_input("unknown construction '" + construction +
                            "' (good|convex|telescope|all)");

    ModuleCache cache;
    WidthReport rep;
    if (request == ConstructionRequest::convex && !word_text.empty()) {
        // User-supplied reduced word for the convex construction.
        rep.input = q;
        rep.lambda = lambda;
        rep.scale = scale;
        rep.integral_width = gromov_width_formula(rs, lambda);
        rep.width = Rat(rep.integral_width) / scale;
        rep.minimizers = gromov_width_minimizers(rs, lambda);
        rep.convex = verify_convex_ordering_theorem(cache, rs, parse_word(word_text), lambda);
        rep.verified = rep.convex->verified;
    } else {
        require_input(word_text.empty() || request == ConstructionRequest::convex,
                      "--word applies only to --construction convex");
        rep = width_report(cache, rs, q, request);
    }

    json output;
    output["width"] = rat_json(rep.width);
    output["integral_width"] = rep.integral_width;
    output["primitive_lambda"] = long_vector_json(rep.lambda.coords);
    output["scale"] = rat_json(rep.scale);
    output["minimizing_roots"] = roots_json(rep.minimizers);
    json constructions;
    if (rep.good) constructions["good-ordering"] = simplex_report_json(*rep.good);
    if (rep.convex) constructions["convex-ordering"] = simplex_report_json(*rep.convex);
    if (rep.telescope) constructions["telescope"] = simplex_report_json(*rep.telescope);
    output["constructions"] = std::move(constructions);
    output["notes"] = json(rep.notes);
    output["verified"] = rep.verified;

    json input{{"construction", construction}, {"lambda", rat_vector_json(q)}, {"rank", o.rank},
               {"type", o.type}};
    if (!word_text.empty()) input["word"] = word_text;
    emit(document("verify", input, output), o.pretty);
    return rep.verified ? 0 : 1;
}

void add_common(CLI::App* cmd, CommonOpts& o, bool with_lambda) {
    cmd->add_option("--type", o.type, "series letter A..G")->required();
    cmd->add_option("--rank", o.rank, "rank of the root system")->required();
    if (with_lambda) {
        cmd->add_option("--lambda", o.lambda,
                        "comma-separated rational weight in fundamental coordinates")
            ->required();
        cmd->add_flag("--epsilon", o.epsilon,
                      "interpret --lambda as type-A epsilon coordinates (rank+1 entries)");
    }
    cmd->add_flag("--pretty", o.pretty, "indent the JSON output");
    cmd->add_option("--max-dim", o.max_dim, "abort module builds beyond this dimension")
        ->default_val(5000);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Newton-Okounkov lattice data and Gromov widths of coadjoint orbits"};
    app.require_subcommand(1);

    CommonOpts roots_opts, width_opts, ess_opts, gamma_opts, verify_opts;
    std::string ess_ordering = "good", gamma_ordering = "good";
    std::string ess_word, gamma_word, verify_word;
    long gamma_level_arg = 1;
    std::string verify_construction = "all";

    CLI::App* roots_cmd = app.add_subcommand("roots", "positive roots and pairing data");
    add_common(roots_cmd, roots_opts, false);

    CLI::App* width_cmd = app.add_subcommand("width", "Gromov width of a coadjoint orbit");
    add_common(width_cmd, width_opts, true);

    CLI::App* ess_cmd = app.add_subcommand("essential", "essential exponent tuples of V(lambda)");
    add_common(ess_cmd, ess_opts, true);
    ess_cmd->add_option("--ordering", ess_ordering, "good|word|telescope")->default_val("good");
    ess_cmd->add_option("--word", ess_word, "comma-separated 1-based reduced word");

    CLI::App* gamma_cmd =
        app.add_subcommand("gamma", "level-ell slice of the graded essential monoid");
    add_common(gamma_cmd, gamma_opts, true);
    gamma_cmd->add_option("--ordering", gamma_ordering, "good|word|telescope")->default_val("good");
    gamma_cmd->add_option("--word", gamma_word, "comma-separated 1-based reduced word");
    gamma_cmd->add_option("--level", gamma_level_arg, "level ell >= 1")->default_val(1);

    CLI::App* verify_cmd =
        app.add_subcommand("verify", "machine-check the simplex constructions");
    add_common(verify_cmd, verify_opts, true);
    verify_cmd->add_option("--construction", verify_construction, "good|convex|telescope|all")
        ->default_val("all");
    verify_cmd->add_option("--word", verify_word,
                           "comma-separated 1-based reduced word (convex construction)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    const auto started = std::chrono::steady_clock::now();
    int code = 3;
    try {
        if (roots_cmd->parsed())
            code = cmd_roots(roots_opts);
        else if (width_cmd->parsed())
            code = cmd_width(width_opts);
        else if (ess_cmd->parsed())
            code = cmd_essential(ess_opts, ess_ordering, ess_word, 1, false);
        else if (gamma_cmd->parsed())
            code = cmd_essential(gamma_opts, gamma_ordering, gamma_word, gamma_level_arg, true);
        else if (verify_cmd->parsed())
            code = cmd_verify(verify_opts, verify_construction, verify_word);
    } catch (const invalid_input& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const verification_failure& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return 1;
    } catch (const internal_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }

    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - started)
                             .count();
    std::cerr << "elapsed_ms=" << elapsed << "\n";
    return code;
}
