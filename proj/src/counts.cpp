#include "prym/counts.hpp"

#include <functional>
#include <map>

#include "prym/schubert.hpp"

namespace prym {

namespace {

void require_level(long i) {
    if (i < 2) throw invalid_input("level i must be at least 2, got " + std::to_string(i));
}

std::vector<int> all_parts(long count, int value) {
    return std::vector<int>(static_cast<size_t>(count), value);
}

// (2,...,2) of size 2m
Partition even_profile(long m) { return Partition(all_parts(m, 2)); }

// (3,1,...,1) of size n >= 3
Partition triple_profile(long n) {
    std::vector<int> parts = all_parts(n - 3, 1);
    parts.push_back(3);
    return Partition(std::move(parts));
}

}  // namespace

Integer four_point_count(long a, long b, long c, long d) {
    if (c == 2 && d == 2 && a == b && a >= 1) return Integer(2) * (a * a - 1);
    if (c == 3 && d == 2 && b >= 2 && b % 2 == 0) {
        if (a == b + 1) return Integer(4) * (b + 2) * (b - 1);
        if (a == b - 1) return Integer(4) * (b - 2) * (b + 1);
    }
    throw missing_constant("no stated value for the four-point count N_{" +
                           std::to_string(a) + "," + std::to_string(b) + "," +
                           std::to_string(c) + "," + std::to_string(d) + "}");
}

Rational a_count(long d, long g) {
    return Rational(2 * d - g - 1) * factorial_ratio(g, {d, g - d + 1});
}

Rational e_count(long d, long g) {
    return Rational(8) * factorial_ratio(g, {d - 3, g - d + 2}) -
           Rational(8) * factorial_ratio(g, {d, g - d - 1});
}

Rational pencil_count_closed(long i, long s) {
    require_level(i);
    if (s < 0 || s > i - 1)
        throw invalid_input("s must lie in [0, i-1], got " + std::to_string(s));
    const long m = 2 * i - 2 * s;  // the high ramification order
    const Integer lo = safe_binomial(2 * i - 1, s - 1);
    const Integer mid = safe_binomial(2 * i - 1, s);
    const Integer hi = safe_binomial(2 * i - 1, s + 1);
    Integer total = 0;
    total += Integer(8) * (i - s - 1) * (m - 1) * (m + 1) * mid;
    total += Integer(8) * (i - s + 1) * (m - 1) * (m + 1) * lo;
    total += Integer(8) * (s - 1) * (m + 2) * (m - 1) * (m + 1) * lo;
    total += Integer(8) * s * m * (m - 1) * (m + 1) * mid;
    total += Integer(8) * (s + 1) * (m - 2) * (m - 1) * (m + 1) * hi;
    return Rational(total);
}

Rational pencil_count_via_schubert(long i, long s) {
    require_level(i);
    if (s < 0 || s > i - 1)
        throw invalid_input("s must lie in [0, i-1], got " + std::to_string(s));
    const long g = 2 * i - 1;
    const int d = static_cast<int>(2 * i - s);  // ambient: Gr(2, 2i-s+1)
    const long m = 2 * i - 2 * s;
    const Integer simple_orderings = factorial(3 * g - 2);

    // Both marked conditions in one box of the distribution. The two
    // admissible vanishing sequences contribute one Schubert integral each,
    // every other box carries the four-point factor N_{2,2,2,2} = 6.
    const Integer six_boxes = int_pow(four_point_count(2, 2, 2, 2), static_cast<unsigned long>(g - 1));
    Rational same_box =
        Rational(integral_closed_form(d, m, 0) * six_boxes * four_point_count(m + 1, m, 3, 2)) +
        Rational(integral_closed_form(d, m - 1, 1) * six_boxes * four_point_count(m - 1, m, 3, 2));
    const Rational same_box_distributions =
        Rational(Integer(2 * i - 1) * simple_orderings) / Rational(six_boxes);
    same_box *= same_box_distributions / Rational(simple_orderings);

    // Marked conditions in two different boxes: one sigma_2 * sigma_{m-1}
    // integral, computed along the Pieri route.
    const Integer six_rest = int_pow(four_point_count(2, 2, 2, 2), static_cast<unsigned long>(g - 2));
    const Integer split_integral = top_intersection(
        d, {{1, g - 2}, {2, 1}}, std::make_pair(m - 1, 0L));
    Rational split = Rational(split_integral * six_rest * Integer(16) * Integer(2) *
                              Integer(4 * (i - s) * (i - s) - 1));
    const Rational split_distributions =
        Rational(Integer(g) * Integer(g - 1) * simple_orderings) /
        Rational(Integer(4) * six_rest);
    split *= split_distributions / Rational(simple_orderings);

    return same_box + split;
}

Rational DegenerationScenario::contribution() const {
    Rational product(1);
    for (const ScenarioPart& part : components) {
        if (std::holds_alternative<CoverComponent>(part))
            product *= Rational(std::get<CoverComponent>(part).expected_classes);
        else
            product *= std::get<NamedCount>(part).value;
    }
    return Rational(multiplicity) * product / Rational(prym_division) * count_weight;
}

bool verify_scenario_covers(const DegenerationScenario& s, const OracleConfig& config) {
    for (const ScenarioPart& part : s.components) {
        if (!std::holds_alternative<CoverComponent>(part)) continue;
        const CoverComponent& component = std::get<CoverComponent>(part);
        if (count_cover_classes(component.problem, config) !=
            component.expected_classes)
            return false;
    }
    return true;
}

std::vector<DegenerationScenario> elliptic_degree_scenarios(long k) {
    if (k < 2) throw invalid_input("elliptic degree requires k >= 2");
    std::vector<DegenerationScenario> out;

    // Both special fibers over the component carrying the order-(2k-1) point.
    {
        DegenerationScenario s;
        s.label = "node-order-(k-1,k-1)";
        s.multiplicity = 2;
        s.components = {
            CoverComponent{HurwitzProblem(
                static_cast<int>(2 * k - 1), 0,
                {Partition({static_cast<int>(2 * k - 1)}), triple_profile(2 * k - 1),
                 Partition({static_cast<int>(k - 1), static_cast<int>(k - 1), 1})})},
            CoverComponent{HurwitzProblem(
                static_cast<int>(2 * k - 2), 0,
                {even_profile(k - 1), even_profile(k - 1),
                 Partition({static_cast<int>(k - 1), static_cast<int>(k - 1)})})}};
        out.push_back(std::move(s));
    }
    {
        DegenerationScenario s;
        s.label = "node-order-(k,k)";
        s.multiplicity = 2;
        s.components = {
            CoverComponent{HurwitzProblem(
                static_cast<int>(2 * k), 0,
                {Partition({static_cast<int>(2 * k - 1), 1}), triple_profile(2 * k),
                 Partition({static_cast<int>(k), static_cast<int>(k)})})},
            CoverComponent{HurwitzProblem(
                static_cast<int>(2 * k), 0,
                {even_profile(k), even_profile(k),
                 Partition({static_cast<int>(k), static_cast<int>(k)})})}};
        out.push_back(std::move(s));
    }

    // One even fiber moves to the collapsing component; the node sits under a
    // (1,3,2,...,2) fiber. The remaining case is its mirror image.
    std::vector<int> mixed = all_parts(k - 2, 2);
    mixed.push_back(3);
    mixed.push_back(1);
    const Partition mixed_profile{std::vector<int>(mixed)};
    for (const char* label : {"even-fiber-split-q2", "even-fiber-split-q3"}) {
        DegenerationScenario s;
        s.label = label;
        s.multiplicity = 4;  // smoothing orders 1 + 3
        s.components = {
            CoverComponent{HurwitzProblem(
                static_cast<int>(2 * k), 0,
                {Partition({static_cast<int>(2 * k - 1), 1}), even_profile(k), mixed_profile})},
            CoverComponent{HurwitzProblem(
                4, 0, {Partition({3, 1}), Partition({3, 1}), Partition({2, 2})})}};
        out.push_back(std::move(s));
    }
    return out;
}

EllipticDegreeParts elliptic_degree_parts(long k) {
    const auto scenarios = elliptic_degree_scenarios(k);
    EllipticDegreeParts parts;
    parts.case_i = static_cast<long>(to_integer(scenarios[0].contribution() +
                                                scenarios[1].contribution()).get_si());
    parts.case_ii = static_cast<long>(to_integer(scenarios[2].contribution()).get_si());
    parts.case_iii = static_cast<long>(to_integer(scenarios[3].contribution()).get_si());
    return parts;
}

long elliptic_degree(long k) { return elliptic_degree_parts(k).total(); }

long elliptic_marked_count(long i, long s) {
    require_level(i);
    if (s < 0 || s > i - 1)
        throw invalid_input("s must lie in [0, i-1], got " + std::to_string(s));
    return s == i - 1 ? 6 : 12;
}

EllipticUnramifiedSplit elliptic_unramified_split(long i, long s) {
    require_level(i);
    if (s < 0 || s > i - 2)
        throw invalid_input("s must lie in [0, i-2], got " + std::to_string(s));
    EllipticUnramifiedSplit split{6 * (4 * i - 4 * s - 5), 6 * 3, 12 * (2 * i - 2 * s - 1)};
    if (split.near_point + split.collapsed != split.total)
        throw std::logic_error("elliptic unramified split out of balance");
    return split;
}

long elliptic_unramified_count(long i, long s) {
    return elliptic_unramified_split(i, s).total;
}

std::vector<DegenerationScenario> prym_triple_scenarios(long i) {
    require_level(i);
    const long g = 2 * i - 2;
    std::vector<DegenerationScenario> out;
    // Triple point on the elliptic tail: the twelve tail pencils reduce to
    // four under the 2-torsion condition, and the tail is not fixed by the
    // elliptic involution, so the cover smooths in two ways.
    for (long s = 0; s <= i - 2; ++s) {
        DegenerationScenario sc;
        sc.label = "triple-on-tail/s=" + std::to_string(s);
        sc.multiplicity = 2;
        sc.prym_division = 3;
        sc.components = {NamedCount{"tail-pencils", Rational(12)},
                         NamedCount{"spine-pencils", a_count(2 * i - 1 - s, g)}};
        out.push_back(std::move(sc));
    }
    // Triple point on the spine: the tail carries a fully ramified node
    // fiber (six pencils, again cut down by 3), fixed by the involution.
    for (long s = 0; s <= i - 1; ++s) {
        DegenerationScenario sc;
        sc.label = "triple-on-spine/s=" + std::to_string(s);
        sc.multiplicity = 1;
        sc.prym_division = 3;
        sc.components = {NamedCount{"tail-pencils", Rational(6)},
                         NamedCount{"spine-pencils", e_count(2 * i - s, g)}};
        out.push_back(std::move(sc));
    }
    return out;
}

TripleCases prym_triple_cases(long i) {
    require_level(i);
    TripleCases cases;
    cases.case_i_sum = 0;
    cases.case_ii_sum = 0;
    for (const DegenerationScenario& sc : prym_triple_scenarios(i)) {
        if (sc.label.rfind("triple-on-tail", 0) == 0)
            cases.case_i_sum += sc.contribution();
        else
            cases.case_ii_sum += sc.contribution();
    }
    cases.case_i_closed = Rational(Integer(8) * safe_binomial(2 * i - 2, i));
    cases.case_ii_closed = Rational(Integer(16) * (3 * i - 2) * safe_binomial(2 * i - 2, i));
    cases.total_closed = Integer(24) * (i - 1) * safe_binomial(2 * i - 1, i);
    return cases;
}

Integer prym_triple_count(long i) {
    require_level(i);
    return Integer(24) * (i - 1) * safe_binomial(2 * i - 1, i);
}

PointedParts prym_pointed_parts(long i) {
    require_level(i);
    Rational sum(0);
    for (long s = 0; s <= i - 1; ++s) sum += a_count(2 * i - s - 1, 2 * i - 2);
    PointedParts parts;
    parts.sum_form = Rational(4) * sum - Rational(2) * a_count(i, 2 * i - 2);
    parts.closed = Integer(2) * safe_binomial(2 * i - 1, i);
    return parts;
}

Integer prym_pointed_count(long i) { return prym_pointed_parts(i).closed; }

PrymUnramifiedCases prym_unramified_cases(long i) {
    require_level(i);
    PrymUnramifiedCases cases;

    Rational raw1(0);
    for (long s = 1; s <= i - 2; ++s)
        raw1 += Rational(Integer(8) * (4 * i - 4 * s - 1) * safe_binomial(2 * i - 2, s - 1));
    cases.case_i.raw = raw1;
    cases.case_i.closed =
        Rational(Integer(4) * (4 * i - 3) * safe_binomial(2 * i - 2, i - 1) -
                 Integer(24) * safe_binomial(2 * i - 2, i) - pow2(static_cast<unsigned long>(2 * i)));

    Rational raw2(0);
    for (long s = 0; s <= i - 2; ++s)
        raw2 += Rational(Integer(4 * i - 4 * s - 2) * (2 * i - 2 * s - 1) *
                         safe_binomial(2 * i - 1, s));
    cases.case_ii.raw = Rational(2) / Rational(2 * i - 1) * raw2;
    cases.case_ii.closed = Rational(pow2(static_cast<unsigned long>(2 * i))) -
                           Rational(Integer(4) * safe_binomial(2 * i - 1, i)) / Rational(2 * i - 1);

    Rational raw3(0);
    for (long s = 0; s <= i - 1; ++s)
        raw3 += Rational(Integer(2 * i - 2 * s - 1) * safe_binomial(2 * i - 1, s));
    cases.case_iii.raw = Rational(Integer(24) * (i - 1)) / Rational(2 * i - 1) * raw3;
    cases.case_iii.closed = Rational(Integer(24) * (i - 1) * safe_binomial(2 * i - 2, i - 1));

    cases.total_closed = Integer(20) * (i - 1) * safe_binomial(2 * i - 1, i);
    return cases;
}

Integer prym_unramified_count(long i) { return prym_unramified_cases(i).total_closed; }

Rational pencil_pair_count(long i, long k) {
    require_level(i);
    if (k < 1 || k > i - 1)
        throw invalid_input("k must lie in [1, i-1], got " + std::to_string(k));
    const long g = 2 * i - 2;
    if (k == 1) return Rational(2) * a_count(i + 1, g) + e_count(i + 1, g);
    return Rational(2) * a_count(i + k - 1, g) + Rational(2) * a_count(i + k, g) +
           e_count(i + k, g);
}

// ---------------------------------------------------------------------------
// Identity catalog
// ---------------------------------------------------------------------------

namespace {

using IdentitySides = std::pair<std::function<Rational(long)>, std::function<Rational(long)>>;

const std::map<std::string, IdentitySides>& catalog_map() {
    static const std::map<std::string, IdentitySides> catalog = [] {
        std::map<std::string, IdentitySides> m;

        m["id-3.2-caseI"] = {[](long i) -> Rational {
                                 Rational sum(0);
                                 for (long s = 0; s <= i - 2; ++s)
                                     sum += Rational(4) * a_count(2 * i - 1 - s, 2 * i - 2);
                                 return Rational(2) * sum;
                             },
                             [](long i) -> Rational { return Rational(Integer(8) * safe_binomial(2 * i - 2, i)); }};

        m["id-3.2-caseII"] = {[](long i) -> Rational {
                                  Rational sum(0);
                                  for (long s = 0; s <= i - 1; ++s)
                                      sum += Rational(2) * e_count(2 * i - s, 2 * i - 2);
                                  return sum;
                              },
                              [](long i) -> Rational {
                                  return Rational(Integer(16) * (3 * i - 2) *
                                                  safe_binomial(2 * i - 2, i));
                              }};

        m["id-3.3"] = {[](long i) -> Rational { return prym_pointed_parts(i).sum_form; },
                       [](long i) -> Rational { return Rational(Integer(2) * safe_binomial(2 * i - 1, i)); }};

        m["id-3.5-caseI"] = {[](long i) -> Rational { return prym_unramified_cases(i).case_i.raw; },
                             [](long i) -> Rational { return prym_unramified_cases(i).case_i.closed; }};
        m["id-3.5-caseII"] = {[](long i) -> Rational { return prym_unramified_cases(i).case_ii.raw; },
                              [](long i) -> Rational { return prym_unramified_cases(i).case_ii.closed; }};
        m["id-3.5-caseIII"] = {[](long i) -> Rational { return prym_unramified_cases(i).case_iii.raw; },
                               [](long i) -> Rational { return prym_unramified_cases(i).case_iii.closed; }};

        m["id-3.6-total"] = {[](long i) -> Rational {
                                 Rational sum(0);
                                 for (long s = 0; s <= i - 2; ++s)
                                     sum += Rational(4) * a_count(2 * i - s - 1, 2 * i - 2);
                                 for (long s = 0; s <= i - 1; ++s)
                                     sum += Rational(4) * a_count(2 * i - s, 2 * i - 2) +
                                            Rational(2) * e_count(2 * i - s, 2 * i - 2);
                                 return sum;
                             },
                             [](long i) -> Rational {
                                 return Rational(Integer(24) * (i - 1) *
                                                 safe_binomial(2 * i - 1, i));
                             }};

        // The five quartic binomial sums behind the pencil-count total.
        m["id-5.3-1"] = {[](long i) -> Rational {
                             Rational sum(0);
                             for (long s = 0; s <= i - 1; ++s)
                                 sum += Rational(Integer(2 * i - 2 * s - 1) * (2 * i - 2 * s + 1) *
                                                 (i - s - 1) * safe_binomial(2 * i - 1, s));
                             return sum;
                         },
                         [](long i) -> Rational {
                             return (Rational(i) - make_rational(1, 2)) *
                                        Rational(pow2(static_cast<unsigned long>(2 * i - 2))) +
                                    (Rational(2 * i * i) - make_rational(5 * i, 2)) *
                                        Rational(safe_binomial(2 * i - 1, i));
                         }};
        m["id-5.3-2"] = {[](long i) -> Rational {
                             Rational sum(0);
                             for (long s = 0; s <= i - 1; ++s)
                                 sum += Rational(Integer(2 * i - 2 * s - 1) * (2 * i - 2 * s + 1) *
                                                 (i - s + 1) * safe_binomial(2 * i - 1, s - 1));
                             return sum;
                         },
                         [](long i) -> Rational {
                             return (Rational(2 * i * i) - make_rational(5 * i, 2) + Rational(1)) *
                                        Rational(safe_binomial(2 * i - 1, i)) -
                                    (Rational(i) - make_rational(1, 2)) *
                                        Rational(pow2(static_cast<unsigned long>(2 * i - 2)));
                         }};
        m["id-5.3-3"] = {[](long i) -> Rational {
                             Rational sum(0);
                             for (long s = 0; s <= i - 1; ++s)
                                 sum += Rational(Integer(2 * i - 2 * s + 2) * (s - 1) *
                                                 (2 * i - 2 * s - 1) * (2 * i - 2 * s + 1) *
                                                 safe_binomial(2 * i - 1, s - 1));
                             return sum;
                         },
                         [](long i) -> Rational {
                             return Rational(Integer(4 * i * i * i - 5 * i * i + 3 * i - 2) *
                                             safe_binomial(2 * i - 1, i)) -
                                    Rational(Integer(8 * i * i - 12 * i + 4) *
                                             pow2(static_cast<unsigned long>(2 * i - 2)));
                         }};
        m["id-5.3-4"] = {[](long i) -> Rational {
                             Rational sum(0);
                             for (long s = 0; s <= i - 1; ++s)
                                 sum += Rational(Integer(s) * (2 * i - 2 * s) * (2 * i - 2 * s - 1) *
                                                 (2 * i - 2 * s + 1) * safe_binomial(2 * i - 1, s));
                             return sum;
                         },
                         [](long i) -> Rational {
                             return Rational(Integer(4 * i * i * i - 9 * i * i + 5 * i) *
                                             safe_binomial(2 * i - 1, i));
                         }};
        m["id-5.3-5"] = {[](long i) -> Rational {
                             Rational sum(0);
                             for (long s = 0; s <= i - 1; ++s)
                                 sum += Rational(Integer(s + 1) * (2 * i - 2 * s - 2) *
                                                 (2 * i - 2 * s - 1) * (2 * i - 2 * s + 1) *
                                                 safe_binomial(2 * i - 1, s + 1));
                             return sum;
                         },
                         [](long i) -> Rational {
                             return Rational(Integer(4 * i * i * i - 5 * i * i + i) *
                                             safe_binomial(2 * i - 1, i)) +
                                    Rational(Integer(8 * i * i - 12 * i + 4) *
                                             pow2(static_cast<unsigned long>(2 * i - 2)));
                         }};

        m["id-5.3-caseII"] = {[](long i) -> Rational {
                                  Rational sum(0);
                                  for (long s = 0; s <= i - 1; ++s)
                                      sum += Rational(Integer(i - s - 1) * (2 * i - 2 * s - 1) *
                                                      (i - s) * safe_binomial(2 * i - 1, s));
                                  return Rational(32) * sum;
                              },
                              [](long i) -> Rational {
                                  return Rational(Integer(32) * i * (i - 1) *
                                                  safe_binomial(2 * i - 1, i));
                              }};

        m["remark-3.1"] = {[](long i) -> Rational { return pencil_count_closed(i, i - 1); },
                           [](long i) -> Rational {
                               return Rational(Integer(24) * (6 * i - 4) *
                                               safe_binomial(2 * i - 1, i + 1));
                           }};
        return m;
    }();
    return catalog;
}

}  // namespace

const std::vector<std::string>& identity_catalog() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, sides] : catalog_map()) out.push_back(name);
        return out;
    }();
    return names;
}

IdentityResult verify_identity(const std::string& name, long i) {
    require_level(i);
    const auto& catalog = catalog_map();
    const auto it = catalog.find(name);
    if (it == catalog.end()) throw missing_identity("unknown identity: " + name);
    IdentityResult result;
    result.name = name;
    result.lhs = it->second.first(i);
    result.rhs = it->second.second(i);
    result.pass = result.lhs == result.rhs;
    return result;
}

}  // namespace prym
