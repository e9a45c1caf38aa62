#pragma once

#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "prym/divisor.hpp"
#include "prym/hurwitz.hpp"

namespace prym {

/// One verification item: a named comparison of an expected and an actual
/// value, both rendered exactly.
struct Check {
    std::string name;
    std::string expected;
    std::string actual;
    bool pass = false;
    bool skipped = false;
};

Check make_check(std::string name, std::string expected, std::string actual);

struct RunReport {
    std::string command;
    std::map<std::string, std::string> config;
    std::vector<Check> checks;
    double wall_seconds = 0.0;

    bool all_pass() const;
    size_t failures() const;
    nlohmann::ordered_json to_json() const;
    std::string to_table() const;
};

/// Every catalog identity for 2 <= i <= i_max.
std::vector<Check> identity_suite(long i_max);

/// Closed-form integrals against the iterated-Pieri route for every two-row
/// class with d <= d_max, plus the Catalan-value specialization.
std::vector<Check> schubert_suite(int d_max);

/// Dual-path pencil counts (1 <= d <= 12 worth of levels by default), the
/// degree-12 elliptic count with its 4+4+4 decomposition and oracle-checked
/// uniqueness claims, the two-pointed elliptic counts with their splits, and
/// the case decompositions of the generic-curve counts.
std::vector<Check> propositions_suite(long i_max, const OracleConfig& config);

/// The documented oracle sweep. Problems are enumerated canonically (degree
/// ascending, then base genus, then profile count, then profile multisets in
/// partition order), kept when the enumeration cost estimate
///   (d!^2 if genus 1) * (product of profile class sizes) / (largest class)
/// is at most cost_cap, and thinned to at most max_problems by a uniform
/// stride. Every kept problem must satisfy: character count = oracle count
/// (unfiltered) and both connected-weighted routes agree.
struct SweepLimits {
    int max_degree = 5;
    int max_profiles = 5;
    long cost_cap = 1'000'000;
    int max_problems = 1024;
};
std::vector<HurwitzProblem> oracle_sweep_problems(const SweepLimits& limits = {});
std::vector<Check> hurwitz_oracle_suite(const SweepLimits& limits, const OracleConfig& config);

/// Exact solve against the closed forms for 2 <= i <= i_max, the right-hand
/// side recompositions, and the residual checks.
std::vector<Check> divisor_suite(long i_max);

/// The named genus-6 facts (optionally including the level-2 bridge check).
std::vector<Check> genus6_suite(const ExternalConstants& constants = {});

/// Suite registry used by the CLI: identities, propositions, schubert,
/// hurwitz-oracle, divisor, genus6, all.
std::vector<std::string> suite_names();
std::vector<Check> run_suite(const std::string& name, long i_max, const OracleConfig& config,
                             const ExternalConstants& constants);

}  // namespace prym
