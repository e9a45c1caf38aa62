// Command-line front end: exact divisor-class, Hurwitz-count, and Schubert
// computations with machine-readable output.
//
// Exit codes: 0 all checks passed, 1 check failure, 2 usage error,
// 3 resource limit exceeded.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "prym/counts.hpp"
#include "prym/divisor.hpp"
#include "prym/hurwitz.hpp"
#include "prym/schubert.hpp"
#include "prym/verify.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResourceLimit = 3;

struct GlobalOptions {
    int threads = 1;
    int oracle_bound = 7;
    std::string format = "table";
    std::vector<std::string> constants;
    std::string constants_file;
};

prym::OracleConfig oracle_config(const GlobalOptions& options) {
    return prym::OracleConfig{options.oracle_bound, options.threads};
}

prym::ExternalConstants parse_constants(const GlobalOptions& options) {
    prym::ExternalConstants constants;
    std::vector<std::string> entries = options.constants;
    if (!options.constants_file.empty()) {
        std::ifstream in(options.constants_file);
        if (!in) throw prym::invalid_input("cannot open constants file: " + options.constants_file);
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty() || line[0] == '#') continue;
            entries.push_back(line);
        }
    }
    for (const std::string& entry : entries) {
        std::istringstream list(entry);
        std::string item;
        while (std::getline(list, item, ',')) {
            if (item.empty()) continue;
            const size_t eq = item.find('=');
            if (eq == std::string::npos)
                throw prym::invalid_input("constants must be key=value: " + item);
            const std::string key = item.substr(0, eq);
            const prym::Integer value(item.substr(eq + 1));
            if (key == "b33")
                constants.b33 = value;
            else if (key == "N34")
                constants.n3_4 = value;
            else
                throw prym::invalid_input("unknown constant key (expected b33 or N34): " + key);
        }
    }
    return constants;
}

int emit_report(prym::RunReport report, const GlobalOptions& options) {
    if (options.format == "json")
        std::cout << report.to_json().dump(2) << "\n";
    else
        std::cout << report.to_table();
    return report.all_pass() ? kExitPass : kExitCheckFailure;
}

int cmd_divisor(long i, const GlobalOptions& options) {
    const prym::PicardClass solved = prym::solve_divisor_class(i);
    const prym::PicardClass closed = prym::theorem1_class(i);
    if (options.format == "json")
        std::cout << solved.to_json().dump(2) << "\n";
    else
        std::cout << solved.to_table();
    if (!(solved == closed)) {
        std::cerr << "divisor: exact solve disagrees with the closed forms at i = " << i << "\n";
        return kExitCheckFailure;
    }
    return kExitPass;
}

int cmd_hurwitz(const std::string& literal, bool oracle, bool characters, bool classes,
                bool weighted, bool transitive, const GlobalOptions& options) {
    const prym::HurwitzProblem problem = prym::HurwitzProblem::parse(literal);
    const prym::OracleConfig config = oracle_config(options);
    if (!oracle && !characters && !classes && !weighted && !transitive) oracle = true;

    nlohmann::ordered_json out;
    out["problem"] = problem.to_string();
    bool match = true;

    std::optional<prym::TupleCounts> oracle_counts;
    if (oracle || (transitive && !characters))
        oracle_counts = prym::count_tuples_oracle(problem, config);
    if (oracle) out["oracle"] = prym::to_string(oracle_counts->all);
    if (characters) out["characters"] = prym::to_string(prym::count_tuples_frobenius(problem));
    if (oracle && characters) {
        match = out["oracle"] == out["characters"];
        out["match"] = match;
    }
    if (transitive) {
        out["transitive"] =
            prym::to_string(characters ? prym::transitive_count_characters(problem)
                                       : oracle_counts->transitive);
    }
    if (weighted) {
        const prym::Backend backend =
            characters && !oracle ? prym::Backend::characters : prym::Backend::oracle;
        out["weighted"] =
            prym::to_string(prym::connected_weighted_count(problem, backend, config));
    }
    if (classes)
        out["classes"] = prym::to_string(prym::count_cover_classes(problem, config));

    if (options.format == "json") {
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& [key, value] : out.items()) {
            if (value.is_string())
                std::cout << key << ": " << value.get<std::string>() << "\n";
            else
                std::cout << key << ": " << value.dump() << "\n";
        }
    }
    return match ? kExitPass : kExitCheckFailure;
}

int cmd_schubert(const std::string& literal, const GlobalOptions& options) {
    const prym::IntegralSpec spec = prym::parse_integral(literal);
    long degree = spec.seed.first + spec.seed.second;
    for (const auto& [k, mult] : spec.factors) degree += k * mult;

    const prym::Integer pieri = prym::top_intersection(spec.d, spec.factors, spec.seed);
    nlohmann::ordered_json out;
    out["ambient"] = "Gr(2," + std::to_string(spec.d + 1) + ")";
    out["pieri"] = prym::to_string(pieri);

    // The closed form applies when the non-seed part is a pure sigma_1 power.
    const bool pure = std::all_of(spec.factors.begin(), spec.factors.end(),
                                  [](const auto& f) { return f.first == 1; });
    bool match = true;
    if (pure && degree == 2 * spec.d - 2) {
        const prym::Integer closed =
            prym::integral_closed_form(spec.d, spec.seed.first, spec.seed.second);
        out["closed_form"] = prym::to_string(closed);
        match = closed == pieri;
        out["match"] = match;
    }
    if (options.format == "json") {
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& [key, value] : out.items()) {
            if (value.is_string())
                std::cout << key << ": " << value.get<std::string>() << "\n";
            else
                std::cout << key << ": " << value.dump() << "\n";
        }
    }
    return match ? kExitPass : kExitCheckFailure;
}

int cmd_counts(const std::string& op, long i, long s, long k, long d, long g,
               const std::string& identity_name, const GlobalOptions& options) {
    nlohmann::ordered_json out;
    out["op"] = op;
    bool pass = true;
    if (op == "a") {
        out["value"] = prym::to_string(prym::a_count(d, g));
    } else if (op == "e") {
        out["value"] = prym::to_string(prym::e_count(d, g));
    } else if (op == "pencil-closed") {
        out["value"] = prym::to_string(prym::pencil_count_closed(i, s));
    } else if (op == "pencil-schubert") {
        out["value"] = prym::to_string(prym::pencil_count_via_schubert(i, s));
    } else if (op == "pencil-dual") {
        const prym::Rational closed = prym::pencil_count_closed(i, s);
        const prym::Rational schubert = prym::pencil_count_via_schubert(i, s);
        out["closed"] = prym::to_string(closed);
        out["schubert"] = prym::to_string(schubert);
        pass = closed == schubert;
        out["match"] = pass;
    } else if (op == "elliptic-degree") {
        const prym::EllipticDegreeParts parts = prym::elliptic_degree_parts(k);
        out["value"] = parts.total();
        out["cases"] = {parts.case_i, parts.case_ii, parts.case_iii};
    } else if (op == "elliptic-marked") {
        out["value"] = prym::elliptic_marked_count(i, s);
    } else if (op == "elliptic-unramified") {
        const prym::EllipticUnramifiedSplit split = prym::elliptic_unramified_split(i, s);
        out["value"] = split.total;
        out["cases"] = {split.near_point, split.collapsed};
    } else if (op == "prym-triple") {
        const prym::TripleCases cases = prym::prym_triple_cases(i);
        out["value"] = prym::to_string(cases.total_closed);
        out["cases"] = {prym::to_string(cases.case_i_sum), prym::to_string(cases.case_ii_sum)};
    } else if (op == "prym-pointed") {
        out["value"] = prym::to_string(prym::prym_pointed_count(i));
    } else if (op == "prym-unramified") {
        const prym::PrymUnramifiedCases cases = prym::prym_unramified_cases(i);
        out["value"] = prym::to_string(cases.total_closed);
        out["cases"] = {prym::to_string(cases.case_i.raw), prym::to_string(cases.case_ii.raw),
                        prym::to_string(cases.case_iii.raw)};
    } else if (op == "pencil-pair") {
        out["value"] = prym::to_string(prym::pencil_pair_count(i, k));
    } else if (op == "identity") {
        const prym::IdentityResult r = prym::verify_identity(identity_name, i);
        out["name"] = r.name;
        out["lhs"] = prym::to_string(r.lhs);
        out["rhs"] = prym::to_string(r.rhs);
        out["pass"] = r.pass;
        pass = r.pass;
    } else {
        throw prym::invalid_input("unknown counts op: " + op);
    }
    if (options.format == "json") {
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& [key, value] : out.items()) {
            if (value.is_string())
                std::cout << key << ": " << value.get<std::string>() << "\n";
            else
                std::cout << key << ": " << value.dump() << "\n";
        }
    }
    return pass ? kExitPass : kExitCheckFailure;
}

int cmd_verify(const std::string& suite, long i_max, const GlobalOptions& options) {
    const auto names = prym::suite_names();
    if (std::find(names.begin(), names.end(), suite) == names.end())
        throw prym::invalid_input("unknown suite: " + suite);

    prym::RunReport report;
    report.command = "verify " + suite;
    report.config["suite"] = suite;
    report.config["i_max"] = i_max > 0 ? std::to_string(i_max) : "default";
    report.config["threads"] = std::to_string(options.threads);
    report.config["oracle_bound"] = std::to_string(options.oracle_bound);
    const prym::ExternalConstants constants = parse_constants(options);
    report.config["constants"] =
        std::string(constants.b33 ? "b33 " : "") + (constants.n3_4 ? "N34" : "");

    const auto start = std::chrono::steady_clock::now();
    report.checks = prym::run_suite(suite, i_max, oracle_config(options), constants);
    report.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return emit_report(std::move(report), options);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact enumerative computations for Prym curves: Hurwitz counts, "
                 "Schubert integrals, and the divisor-class system"};
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::help);

    GlobalOptions options;
    auto add_common = [&options](CLI::App* sub) {
        sub->add_option("--threads", options.threads, "worker threads for enumerations")
            ->check(CLI::Range(1, 64));
        sub->add_option("--oracle-bound", options.oracle_bound,
                        "maximum degree for brute-force enumeration");
        sub->add_option("--format", options.format, "output format")
            ->check(CLI::IsMember({"table", "json"}));
        sub->add_option("--constants", options.constants,
                        "external constants as key=value[,key=value] (keys: b33, N34)");
        sub->add_option("--constants-file", options.constants_file,
                        "file with one key=value per line");
    };

    long divisor_i = 0;
    CLI::App* divisor = app.add_subcommand("divisor", "solve the divisor-class system");
    divisor->add_option("--i", divisor_i, "level i (the genus is 2i)")->required();
    add_common(divisor);

    std::string hurwitz_literal;
    bool flag_oracle = false, flag_characters = false, flag_classes = false,
         flag_weighted = false, flag_transitive = false;
    CLI::App* hurwitz = app.add_subcommand("hurwitz", "count monodromy tuples");
    hurwitz->add_option("problem", hurwitz_literal,
                        "problem literal, e.g. \"d=4; g=0; profiles=2,2|2,2|3,1\"")
        ->required();
    hurwitz->add_flag("--oracle", flag_oracle, "brute-force count");
    hurwitz->add_flag("--characters", flag_characters, "character-sum count");
    hurwitz->add_flag("--classes", flag_classes, "cover classes up to conjugation");
    hurwitz->add_flag("--weighted", flag_weighted, "connected weighted count");
    hurwitz->add_flag("--transitive", flag_transitive, "transitive tuple count");
    add_common(hurwitz);

    std::string schubert_literal;
    CLI::App* schubert = app.add_subcommand("schubert", "two-row Schubert integrals");
    schubert->add_option("integral", schubert_literal,
                         "integral literal, e.g. \"Gr(2,6); seed=3,1; times=1^4\"")
        ->required();
    add_common(schubert);

    std::string counts_op, identity_name;
    long counts_i = 2, counts_s = 0, counts_k = 2, counts_d = 0, counts_g = 0;
    CLI::App* counts = app.add_subcommand("counts", "named enumerative counts");
    counts->add_option("--op", counts_op,
                       "one of: a, e, pencil-closed, pencil-schubert, pencil-dual, "
                       "elliptic-degree, elliptic-marked, elliptic-unramified, prym-triple, "
                       "prym-pointed, prym-unramified, pencil-pair, identity")
        ->required();
    counts->add_option("--i", counts_i, "level i");
    counts->add_option("--s", counts_s, "fiber parameter s");
    counts->add_option("--k", counts_k, "degree parameter k");
    counts->add_option("--d", counts_d, "degree argument (ops a, e)");
    counts->add_option("--g", counts_g, "genus argument (ops a, e)");
    counts->add_option("--name", identity_name, "identity label (op identity)");
    add_common(counts);

    std::string suite;
    long i_max = 0;
    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", suite,
                       "identities | propositions | schubert | hurwitz-oracle | divisor | "
                       "genus6 | all")
        ->required();
    verify->add_option("--i-max", i_max, "sweep bound (suite-specific default)");
    add_common(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (divisor->parsed()) {
            if (divisor_i < 2) throw prym::invalid_input("--i must be at least 2");
            return cmd_divisor(divisor_i, options);
        }
        if (hurwitz->parsed())
            return cmd_hurwitz(hurwitz_literal, flag_oracle, flag_characters, flag_classes,
                               flag_weighted, flag_transitive, options);
        if (schubert->parsed()) return cmd_schubert(schubert_literal, options);
        if (counts->parsed())
            return cmd_counts(counts_op, counts_i, counts_s, counts_k, counts_d, counts_g,
                              identity_name, options);
        if (verify->parsed()) return cmd_verify(suite, i_max, options);
    } catch (const prym::resource_limit& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return kExitResourceLimit;
    } catch (const prym::invalid_input& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const prym::missing_constant& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const prym::missing_identity& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailure;
    }
    return kExitUsage;
}
