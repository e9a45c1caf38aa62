#pragma once

#include <string>
#include <variant>
#include <vector>

#include "prym/hurwitz.hpp"
#include "prym/rational.hpp"

namespace prym {

// ---------------------------------------------------------------------------
// Tabulated auxiliary constants
// ---------------------------------------------------------------------------

/// Four-point pencil count N_{a,b,c,d} (number of P^1-covers with four
/// prescribed ramification conditions). Only the families with stated values
/// are available:
///   N_{k,k,2,2}   = 2(k^2-1)          (includes N_{2,2,2,2} = 6)
///   N_{m+1,m,3,2} = 4(m+2)(m-1)       for even m >= 2
///   N_{m-1,m,3,2} = 4(m-2)(m+1)       for even m >= 2
/// Anything else throws missing_constant.
Integer four_point_count(long a, long b, long c, long d);

/// Stated auxiliary values consumed by the genus-6 checks.
inline constexpr long kPointedPencilCountDeg4Genus5 = 120;   // b(4,5)
inline constexpr long kTriplePointCountGenus5 = 2040;        // N_3(5)

// ---------------------------------------------------------------------------
// The two closed-form building blocks
// ---------------------------------------------------------------------------

/// a(d,g) = (2d-g-1) * g! / (d! (g-d+1)!), with negative factorials
/// annihilating the value.
Rational a_count(long d, long g);

/// e(d,g) = 8 g!/((d-3)!(g-d+2)!) - 8 g!/(d!(g-d-1)!), same convention.
Rational e_count(long d, long g);

// ---------------------------------------------------------------------------
// Pencil counts with a triple point and a (2i-2s)-fold point (two routes)
// ---------------------------------------------------------------------------

/// Closed five-term binomial sum for the number of pencils on a generic
/// genus 2i-1 curve with a triple point and a point of order 2i-2s.
/// Requires i >= 2 and 0 <= s <= i-1.
Rational pencil_count_closed(long i, long s);

/// Same count recomposed from its degeneration: vanishing-sequence cases
/// evaluated through Schubert integrals, four-point constants, and the
/// box-distribution factors. Must equal pencil_count_closed.
Rational pencil_count_via_schubert(long i, long s);

// ---------------------------------------------------------------------------
// Degeneration scenarios
// ---------------------------------------------------------------------------

/// A closed-form factor entering a boundary scenario.
struct NamedCount {
    std::string name;
    Rational value;
};

/// A cover subproblem whose class count (uniqueness) the proof asserts.
struct CoverComponent {
    HurwitzProblem problem;
    long expected_classes = 1;
};

using ScenarioPart = std::variant<CoverComponent, NamedCount>;

/// One boundary case of a degeneration argument: the contribution is
/// multiplicity * (product of component values) / prym_division * weight,
/// where cover components contribute their asserted class count.
struct DegenerationScenario {
    std::string label;
    std::vector<ScenarioPart> components;
    long multiplicity = 1;
    long prym_division = 1;  // 3 when a nontrivial elliptic 2-torsion choice is imposed
    Rational count_weight = Rational(1);

    Rational contribution() const;
};

/// Checks every cover component of a scenario against the enumeration
/// oracle; throws resource_limit if a component degree exceeds the bound.
bool verify_scenario_covers(const DegenerationScenario& s, const OracleConfig& config = {});

// ---------------------------------------------------------------------------
// Elliptic-base counts
// ---------------------------------------------------------------------------

/// Boundary scenarios behind the degree-12 elliptic pencil count with
/// profiles (2k-1,1), (2,...,2), (2,...,2), (3,1,...,1). k >= 2.
std::vector<DegenerationScenario> elliptic_degree_scenarios(long k);

struct EllipticDegreeParts {
    long case_i = 0;
    long case_ii = 0;
    long case_iii = 0;
    long total() const { return case_i + case_ii + case_iii; }
};
EllipticDegreeParts elliptic_degree_parts(long k);
long elliptic_degree(long k);  ///< always 12

/// Count for a 2-pointed generic elliptic curve with both marked points
/// ramified: 6 if s = i-1, else 12. Requires 0 <= s <= i-1.
long elliptic_marked_count(long i, long s);

/// Count when the second marked point is unramified: 12(2i-2s-1), split as
/// 6(4i-4s-5) from the non-collapsing position plus 18 from the collapsing
/// one. Requires 0 <= s <= i-2.
struct EllipticUnramifiedSplit {
    long near_point;
    long collapsed;
    long total;
};
EllipticUnramifiedSplit elliptic_unramified_split(long i, long s);
long elliptic_unramified_count(long i, long s);

// ---------------------------------------------------------------------------
// Prym pencil counts on the generic curve (i >= 2 throughout)
// ---------------------------------------------------------------------------

/// Boundary scenarios behind the triple-point count, one per position of the
/// triple point and per fiber parameter s. Multiplicities and the division
/// by 3 (the nontrivial 2-torsion choice on the elliptic tail) enter here as
/// scenario data.
std::vector<DegenerationScenario> prym_triple_scenarios(long i);

/// Degree-2i pencils with two fully even fibers inducing the 2-torsion class
/// and one triple point: 24(i-1) C(2i-1,i), with the two boundary cases
/// recomputed from their a/e-sums.
struct TripleCases {
    Rational case_i_sum, case_i_closed;    // 2 * sum 4 a(2i-1-s, 2i-2) = 8 C(2i-2,i)
    Rational case_ii_sum, case_ii_closed;  // sum 2 e(2i-s, 2i-2) = 16(3i-2) C(2i-2,i)
    Integer total_closed;                  // 24(i-1) C(2i-1,i)
};
TripleCases prym_triple_cases(long i);
Integer prym_triple_count(long i);

/// Same setup with a marked simple ramification point instead of the triple
/// point: 2 C(2i-1,i), with the a-sum route 4 sum a(2i-s-1,2i-2) - 2 a(i,2i-2).
struct PointedParts {
    Rational sum_form;
    Integer closed;
};
PointedParts prym_pointed_parts(long i);
Integer prym_pointed_count(long i);

/// Marked unramified point in a simple fiber: 20(i-1) C(2i-1,i), three
/// boundary cases each with a raw sum and a stated closed form.
struct UnramifiedCase {
    Rational raw, closed;
};
struct PrymUnramifiedCases {
    UnramifiedCase case_i, case_ii, case_iii;
    Integer total_closed;
};
PrymUnramifiedCases prym_unramified_cases(long i);
Integer prym_unramified_count(long i);

/// Pairs (pencil, point) on a generic 2-pointed genus 2i-2 curve with a
/// triple point and k-fold vanishing at both marked points; piecewise in k.
/// Requires 1 <= k <= i-1.
Rational pencil_pair_count(long i, long k);

// ---------------------------------------------------------------------------
// Identity catalog
// ---------------------------------------------------------------------------

struct IdentityResult {
    std::string name;
    Rational lhs, rhs;
    bool pass = false;
};

/// Stable catalog labels, in a fixed reporting order.
const std::vector<std::string>& identity_catalog();

/// Evaluates both sides of a catalog identity exactly. Unknown names throw
/// missing_identity; i >= 2 is required.
IdentityResult verify_identity(const std::string& name, long i);

}  // namespace prym
