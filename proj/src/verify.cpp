#include "prym/verify.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "prym/counts.hpp"
#include "prym/schubert.hpp"

namespace prym {

Check make_check(std::string name, std::string expected, std::string actual) {
    Check c;
    c.name = std::move(name);
    c.expected = std::move(expected);
    c.actual = std::move(actual);
    c.pass = c.expected == c.actual;
    return c;
}

bool RunReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

size_t RunReport::failures() const {
    return static_cast<size_t>(
        std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.pass; }));
}

nlohmann::ordered_json RunReport::to_json() const {
    nlohmann::ordered_json out;
    out["command"] = command;
    out["config"] = config;
    nlohmann::ordered_json items = nlohmann::ordered_json::array();
    for (const Check& c : checks) {
        nlohmann::ordered_json item;
        item["name"] = c.name;
        item["expected"] = c.expected;
        item["actual"] = c.actual;
        item["pass"] = c.pass;
        if (c.skipped) item["skipped"] = true;
        items.push_back(std::move(item));
    }
    out["checks"] = std::move(items);
    out["wall_seconds"] = wall_seconds;
    out["pass"] = all_pass();
    return out;
}

std::string RunReport::to_table() const {
    std::ostringstream out;
    out << "# " << command << "\n";
    for (const auto& [key, value] : config) out << "#   " << key << " = " << value << "\n";
    for (const Check& c : checks) {
        out << (c.skipped ? "[skip] " : c.pass ? "[ ok ] " : "[FAIL] ") << c.name;
        if (!c.pass) out << "  expected " << c.expected << ", got " << c.actual;
        else if (c.skipped) out << "  " << c.actual;
        out << "\n";
    }
    out << (all_pass() ? "all checks passed" : std::to_string(failures()) + " check(s) FAILED")
        << " (" << checks.size() << " total, " << wall_seconds << " s)\n";
    return out.str();
}

std::vector<Check> identity_suite(long i_max) {
    std::vector<Check> checks;
    for (const std::string& name : identity_catalog()) {
        bool all = true;
        long first_bad = -1;
        for (long i = 2; i <= i_max; ++i) {
            const IdentityResult r = verify_identity(name, i);
            if (!r.pass) {
                all = false;
                first_bad = i;
                break;
            }
        }
        checks.push_back(make_check(name + " (2 <= i <= " + std::to_string(i_max) + ")",
                                    "both sides equal",
                                    all ? "both sides equal"
                                        : "mismatch at i = " + std::to_string(first_bad)));
    }
    return checks;
}

std::vector<Check> schubert_suite(int d_max) {
    std::vector<Check> checks;
    bool all = true;
    std::string detail = "equal";
    for (int d = 1; d <= d_max && all; ++d)
        for (long l0 = 0; l0 <= d - 1 && all; ++l0)
            for (long l1 = 0; l1 <= l0 && all; ++l1) {
                const Integer closed = integral_closed_form(d, l0, l1);
                const Integer pieri = top_intersection(
                    d, {{1, 2 * d - 2 - l0 - l1}}, std::make_pair(l0, l1));
                if (closed != pieri) {
                    all = false;
                    detail = "mismatch at d=" + std::to_string(d) + " (" + std::to_string(l0) +
                             "," + std::to_string(l1) + "): " + to_string(closed) + " vs " +
                             to_string(pieri);
                }
            }
    checks.push_back(make_check("two-row integral, closed form = iterated Pieri (d <= " +
                                    std::to_string(d_max) + ")",
                                "equal", detail));

    bool catalan = true;
    for (int d = 1; d <= d_max; ++d) {
        const Integer expected = factorial(2 * d - 2) / (factorial(d - 1) * factorial(d));
        if (integral_closed_form(d, 0, 0) != expected ||
            top_intersection(d, {{1, 2 * d - 2}}) != expected)
            catalan = false;
    }
    checks.push_back(make_check("sigma_1^(2d-2) integral equals the Catalan value (d <= " +
                                    std::to_string(d_max) + ")",
                                "equal", catalan ? "equal" : "mismatch"));
    return checks;
}

namespace {

std::string rational_text(const Rational& q) { return to_string(q); }

Check sweep_check(const std::string& name, bool ok, const std::string& bad_detail) {
    return make_check(name, "agree", ok ? "agree" : bad_detail);
}

}  // namespace

std::vector<Check> propositions_suite(long i_max, const OracleConfig& config) {
    std::vector<Check> checks;

    // Dual-path pencil counts.
    {
        bool all = true;
        std::string detail = "equal";
        const long dual_max = std::min<long>(i_max, 12);
        for (long i = 2; i <= dual_max && all; ++i)
            for (long s = 0; s <= i - 1 && all; ++s) {
                if (pencil_count_closed(i, s) != pencil_count_via_schubert(i, s)) {
                    all = false;
                    detail = "mismatch at (i,s) = (" + std::to_string(i) + "," +
                             std::to_string(s) + ")";
                }
            }
        checks.push_back(make_check("pencil count, closed sum = Schubert route (i <= " +
                                        std::to_string(dual_max) + ")",
                                    "equal", detail));
    }

    // Degree-12 elliptic count, decomposition and uniqueness claims.
    {
        bool all = true;
        std::string detail = "12 = 4+4+4";
        for (long k = 2; k <= 8 && all; ++k) {
            const EllipticDegreeParts parts = elliptic_degree_parts(k);
            if (parts.total() != 12 || parts.case_i != 4 || parts.case_ii != 4 ||
                parts.case_iii != 4) {
                all = false;
                detail = "broken decomposition at k = " + std::to_string(k);
            }
        }
        checks.push_back(
            make_check("elliptic pencil degree = 12 with 4+4+4 split (2 <= k <= 8)",
                        "12 = 4+4+4", detail));

        bool unique = true;
        std::string unique_detail = "all class counts = 1";
        for (long k = 2; k <= 3 && unique; ++k)
            for (const DegenerationScenario& s : elliptic_degree_scenarios(k))
                if (!verify_scenario_covers(s, config)) {
                    unique = false;
                    unique_detail = "scenario " + s.label + " at k = " + std::to_string(k);
                }
        checks.push_back(make_check("elliptic scenario uniqueness via the cover oracle (k <= 3)",
                                    "all class counts = 1", unique_detail));
    }

    // Two-pointed elliptic counts.
    {
        bool all = true;
        std::string detail = "as stated";
        const long marked_max = std::min<long>(i_max, 20);
        for (long i = 2; i <= marked_max && all; ++i) {
            for (long s = 0; s <= i - 1 && all; ++s) {
                const long expected = s == i - 1 ? 6 : 12;
                if (elliptic_marked_count(i, s) != expected) {
                    all = false;
                    detail = "marked count off at (i,s)=(" + std::to_string(i) + "," +
                             std::to_string(s) + ")";
                }
            }
            for (long s = 0; s <= i - 2 && all; ++s) {
                const EllipticUnramifiedSplit split = elliptic_unramified_split(i, s);
                if (split.total != 12 * (2 * i - 2 * s - 1) ||
                    split.near_point + split.collapsed != split.total) {
                    all = false;
                    detail = "unramified split off at (i,s)=(" + std::to_string(i) + "," +
                             std::to_string(s) + ")";
                }
            }
        }
        checks.push_back(make_check("two-pointed elliptic counts and splits (i <= " +
                                        std::to_string(marked_max) + ")",
                                    "as stated", detail));
    }

    // Case decompositions of the generic-curve counts.
    {
        bool all = true;
        std::string detail = "decompositions equal closed forms";
        for (long i = 2; i <= i_max && all; ++i) {
            const TripleCases t = prym_triple_cases(i);
            const PointedParts p = prym_pointed_parts(i);
            const PrymUnramifiedCases u = prym_unramified_cases(i);
            const bool ok =
                t.case_i_sum == t.case_i_closed && t.case_ii_sum == t.case_ii_closed &&
                t.case_i_sum + t.case_ii_sum == Rational(t.total_closed) &&
                p.sum_form == Rational(p.closed) && u.case_i.raw == u.case_i.closed &&
                u.case_ii.raw == u.case_ii.closed && u.case_iii.raw == u.case_iii.closed &&
                u.case_i.raw + u.case_ii.raw + u.case_iii.raw == Rational(u.total_closed);
            if (!ok) {
                all = false;
                detail = "drift at i = " + std::to_string(i);
            }
        }
        checks.push_back(make_check("generic-curve count case decompositions (i <= " +
                                        std::to_string(i_max) + ")",
                                    "decompositions equal closed forms", detail));
    }

    // The pencil-sum total feeding the d1-row right-hand side.
    {
        bool all = true;
        std::string detail = "equal";
        const long sum_max = std::min<long>(i_max, 100);
        for (long i = 2; i <= sum_max && all; ++i) {
            Rational sum(0);
            for (long s = 0; s <= i - 1; ++s) sum += Rational(2) * pencil_count_closed(i, s);
            const Rational closed =
                Rational(Integer(16) * (i - 1) * (12 * i * i - 3 * i + 1) *
                         safe_binomial(2 * i - 1, i));
            if (sum != closed) {
                all = false;
                detail = "mismatch at i = " + std::to_string(i) + ": " + rational_text(sum);
            }
        }
        checks.push_back(make_check("pencil-count total = 16(i-1)(12i^2-3i+1)C(2i-1,i) (i <= " +
                                        std::to_string(sum_max) + ")",
                                    "equal", detail));
    }
    return checks;
}

std::vector<HurwitzProblem> oracle_sweep_problems(const SweepLimits& limits) {
    std::vector<HurwitzProblem> kept;
    for (int d = 2; d <= limits.max_degree; ++d) {
        const std::vector<Partition> types = partitions_of(d);
        std::vector<Integer> sizes;
        for (const Partition& mu : types) sizes.push_back(conjugacy_class_size(mu));
        const Integer genus_factor = factorial(d) * factorial(d);
        for (int genus = 0; genus <= 1; ++genus) {
            for (int n = 0; n <= limits.max_profiles; ++n) {
                // multisets of n profiles, nondecreasing index vectors
                std::vector<size_t> pick(static_cast<size_t>(n), 0);
                std::function<void(size_t, size_t)> rec = [&](size_t pos, size_t from) {
                    if (pos == pick.size()) {
                        Integer cost = genus == 1 ? genus_factor : Integer(1);
                        Integer largest = 1;
                        for (size_t t = 0; t < pick.size(); ++t) {
                            cost *= sizes[pick[t]];
                            largest = std::max(largest, sizes[pick[t]]);
                        }
                        cost /= largest;
                        if (cost > limits.cost_cap) return;
                        std::vector<Partition> profiles;
                        for (size_t t = 0; t < pick.size(); ++t) profiles.push_back(types[pick[t]]);
                        kept.emplace_back(d, genus, std::move(profiles));
                        return;
                    }
                    for (size_t idx = from; idx < types.size(); ++idx) {
                        pick[pos] = idx;
                        rec(pos + 1, idx);
                    }
                };
                rec(0, 0);
            }
        }
    }
    if (static_cast<int>(kept.size()) <= limits.max_problems) return kept;
    std::vector<HurwitzProblem> thinned;
    thinned.reserve(static_cast<size_t>(limits.max_problems));
    const size_t total = kept.size();
    for (int k = 0; k < limits.max_problems; ++k)
        thinned.push_back(kept[static_cast<size_t>(k) * total /
                               static_cast<size_t>(limits.max_problems)]);
    return thinned;
}

std::vector<Check> hurwitz_oracle_suite(const SweepLimits& limits, const OracleConfig& config) {
    const std::vector<HurwitzProblem> problems = oracle_sweep_problems(limits);
    bool counts_ok = true, weighted_ok = true, parity_ok = true;
    std::string counts_detail = "agree", weighted_detail = "agree", parity_detail = "all zero";

    for (const HurwitzProblem& p : problems) {
        const TupleCounts oracle = count_tuples_oracle(p, config);
        const Integer frobenius = count_tuples_frobenius(p);
        if (oracle.all != frobenius && counts_ok) {
            counts_ok = false;
            counts_detail = p.to_string() + ": oracle " + to_string(oracle.all) +
                            ", characters " + to_string(frobenius);
        }
        const Integer char_transitive = transitive_count_characters(p);
        if (char_transitive != oracle.transitive && weighted_ok) {
            weighted_ok = false;
            weighted_detail = p.to_string() + ": oracle " + to_string(oracle.transitive) +
                              ", characters " + to_string(char_transitive);
        }
        if (p.base_genus == 0) {
            long total_ram = 0;
            for (const Partition& mu : p.profiles) total_ram += p.degree - mu.length();
            if ((total_ram & 1L) && oracle.all != 0 && parity_ok) {
                parity_ok = false;
                parity_detail = p.to_string();
            }
        }
    }
    std::vector<Check> checks;
    const std::string scope = " over " + std::to_string(problems.size()) + " problems";
    checks.push_back(sweep_check("character count = oracle count (unfiltered)" + scope,
                                 counts_ok, counts_detail));
    checks.push_back(sweep_check("connected-weighted counts agree on both routes" + scope,
                                 weighted_ok, weighted_detail));
    checks.push_back(make_check("odd total ramification forces zero (genus 0)" + scope,
                                "all zero", parity_ok ? "all zero" : parity_detail));
    return checks;
}

std::vector<Check> divisor_suite(long i_max) {
    std::vector<Check> checks;
    bool solve_ok = true, residual_ok = true, reduced_ok = true, rhs_ok = true;
    std::string solve_detail = "equal", residual_detail = "all zero",
                reduced_detail = "satisfied", rhs_detail = "equal";

    for (long i = 2; i <= i_max; ++i) {
        const PicardClass solved = solve_divisor_class(i);
        const PicardClass closed = theorem1_class(i);
        if (!(solved == closed) && solve_ok) {
            solve_ok = false;
            solve_detail = "mismatch at i = " + std::to_string(i);
        }
        for (const Rational& r : system_residuals(i, closed))
            if (r != 0 && residual_ok) {
                residual_ok = false;
                residual_detail = "nonzero residual at i = " + std::to_string(i);
            }
        for (const RecomposedRhs& r : rhs_case_recomposition(i))
            if (r.from_cases != r.closed_form && rhs_ok) {
                rhs_ok = false;
                rhs_detail = "row " + r.row + " at i = " + std::to_string(i);
            }

        // The reduced form of the seven equations, kept as an independent
        // regression fixture against transcription drift in the assembled system.
        const Rational a = closed.positive_coefficient("lambda");
        const Rational b0p = closed.positive_coefficient("d0p");
        const Rational b0pp = closed.positive_coefficient("d0pp");
        const Rational b0ram = closed.positive_coefficient("d0ram");
        const Rational b1 = closed.positive_coefficient("d1");
        const Rational bgm1 = closed.positive_coefficient("dgm1");
        const Rational b1gm1 = closed.positive_coefficient("d1gm1");
        const bool reduced =
            a - 4 * b0p - 4 * b0ram + b1gm1 == 0 && a - 12 * b0p + bgm1 == 0 &&
            a - 4 * b0pp - 4 * b0ram + b1 == 0 && b1gm1 == Rational(12 * i + 12) &&
            bgm1 == Rational(12 * (3 * i + 1)) &&
            b1 == Rational(4 * (12 * i * i - i + 1)) &&
            Rational(4 * (2 * i - 1)) * b0p - b1gm1 - bgm1 ==
                Rational(Integer(24) * (2 * i - 1) * (i - 1) + Integer(72) * (i - 1));
        if (!reduced && reduced_ok) {
            reduced_ok = false;
            reduced_detail = "violated at i = " + std::to_string(i);
        }
    }
    const std::string scope = " (2 <= i <= " + std::to_string(i_max) + ")";
    checks.push_back(make_check("exact solve = closed-form coefficients" + scope, "equal",
                                solve_detail));
    checks.push_back(make_check("assembled-system residuals at the closed forms" + scope,
                                "all zero", residual_detail));
    checks.push_back(make_check("right-hand sides from case decompositions" + scope, "equal",
                                rhs_detail));
    checks.push_back(make_check("reduced seven-equation fixture" + scope, "satisfied",
                                reduced_detail));
    return checks;
}

std::vector<Check> genus6_suite(const ExternalConstants& constants) {
    std::vector<Check> checks;
    for (const GenusSixCheck& g : genus6_checks(constants)) {
        Check c;
        c.name = g.name;
        c.expected = g.expected;
        c.actual = g.actual;
        c.pass = g.pass;
        c.skipped = g.skipped;
        checks.push_back(std::move(c));
    }
    return checks;
}

std::vector<std::string> suite_names() {
    return {"identities", "propositions", "schubert", "hurwitz-oracle",
            "divisor",    "genus6",       "all"};
}

std::vector<Check> run_suite(const std::string& name, long i_max, const OracleConfig& config,
                             const ExternalConstants& constants) {
    if (name == "identities") return identity_suite(i_max > 0 ? i_max : 200);
    if (name == "schubert") return schubert_suite(12);
    if (name == "propositions") return propositions_suite(i_max > 0 ? i_max : 200, config);
    if (name == "hurwitz-oracle") return hurwitz_oracle_suite(SweepLimits{}, config);
    if (name == "divisor") return divisor_suite(i_max > 0 ? i_max : 50);
    if (name == "genus6") return genus6_suite(constants);
    if (name == "all") {
        std::vector<Check> all;
        for (const char* suite :
             {"identities", "propositions", "schubert", "hurwitz-oracle", "divisor", "genus6"}) {
            std::vector<Check> part = run_suite(suite, i_max, config, constants);
            all.insert(all.end(), part.begin(), part.end());
        }
        return all;
    }
    throw invalid_input("unknown suite: " + name);
}

}  // namespace prym
