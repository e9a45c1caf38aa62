#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "prym/counts.hpp"

using namespace prym;

TEST_CASE("a and e evaluate with the vanishing convention") {
    CHECK(a_count(2, 2) == Rational(1));
    CHECK(a_count(3, 2) == Rational(1));
    CHECK(a_count(4, 2) == Rational(0));  // (g-d+1)! = (-1)! kills the term
    CHECK(e_count(4, 2) == Rational(16));
    CHECK(e_count(3, 2) == Rational(16));
}

TEST_CASE("stated e-sum specialization") {
    Rational sum(0);
    const long i = 2;
    for (long s = 0; s <= i - 1; ++s) sum += Rational(2) * e_count(2 * i - s, 2 * i - 2);
    CHECK(sum == Rational(64));
    CHECK(sum == Rational(Integer(16) * (3 * i - 2) * safe_binomial(2 * i - 2, i)));
}

TEST_CASE("four-point counts cover exactly the stated families") {
    CHECK(four_point_count(2, 2, 2, 2) == 6);
    CHECK(four_point_count(5, 5, 2, 2) == 48);
    CHECK(four_point_count(5, 4, 3, 2) == 72);    // = 8(i-s+1)(2i-2s-1) at m = 4
    CHECK(four_point_count(3, 4, 3, 2) == 40);    // = 8(i-s-1)(2i-2s+1) at m = 4
    CHECK_THROWS_AS(four_point_count(5, 3, 3, 2), missing_constant);
    CHECK_THROWS_AS(four_point_count(4, 3, 3, 2), missing_constant);
    CHECK_THROWS_AS(four_point_count(2, 2, 2, 3), missing_constant);
}

TEST_CASE("pencil counts at stated values") {
    CHECK(pencil_count_closed(2, 1) == Rational(192));
    CHECK(pencil_count_closed(2, 0) == Rational(840));
    CHECK(pencil_count_closed(3, 2) == Rational(1680));
    CHECK(pencil_count_closed(3, 2) ==
          Rational(Integer(24) * 14 * safe_binomial(5, 4)));
    CHECK_THROWS_AS(pencil_count_closed(2, 2), invalid_input);
    CHECK_THROWS_AS(pencil_count_closed(1, 0), invalid_input);
}

TEST_CASE("both pencil-count routes agree") {
    CHECK(pencil_count_via_schubert(2, 1) == Rational(192));
    CHECK(pencil_count_via_schubert(2, 0) == Rational(840));
    for (long i = 2; i <= 8; ++i)
        for (long s = 0; s <= i - 1; ++s)
            CHECK(pencil_count_closed(i, s) == pencil_count_via_schubert(i, s));
}

TEST_CASE("remark specialization at the top fiber parameter") {
    for (long i : {2L, 3L, 10L, 50L, 200L})
        CHECK(pencil_count_closed(i, i - 1) ==
              Rational(Integer(24) * (6 * i - 4) * safe_binomial(2 * i - 1, i + 1)));
}

TEST_CASE("elliptic pencil degree is 12 = 4+4+4") {
    for (long k = 2; k <= 8; ++k) {
        const EllipticDegreeParts parts = elliptic_degree_parts(k);
        CHECK(parts.case_i == 4);
        CHECK(parts.case_ii == 4);
        CHECK(parts.case_iii == 4);
        CHECK(elliptic_degree(k) == 12);
    }
    CHECK_THROWS_AS(elliptic_degree(1), invalid_input);
}

TEST_CASE("elliptic scenario uniqueness claims hold under the oracle") {
    for (long k = 2; k <= 3; ++k)
        for (const DegenerationScenario& s : elliptic_degree_scenarios(k))
            CHECK(verify_scenario_covers(s));
}

TEST_CASE("scenario contributions multiply components, weight, and division") {
    DegenerationScenario s;
    s.label = "sample";
    s.multiplicity = 2;
    s.prym_division = 3;
    s.count_weight = make_rational(1, 2);
    s.components = {NamedCount{"x", Rational(12)}, NamedCount{"y", Rational(5)}};
    CHECK(s.contribution() == Rational(20));
}

TEST_CASE("two-pointed elliptic counts") {
    CHECK(elliptic_marked_count(3, 2) == 6);
    CHECK(elliptic_marked_count(3, 0) == 12);
    CHECK_THROWS_AS(elliptic_marked_count(3, 3), invalid_input);

    const EllipticUnramifiedSplit split = elliptic_unramified_split(3, 0);
    CHECK(split.total == 60);
    CHECK(split.near_point == 42);
    CHECK(split.collapsed == 18);
    CHECK_THROWS_AS(elliptic_unramified_split(3, 2), invalid_input);
    for (long i = 2; i <= 20; ++i)
        for (long s = 0; s <= i - 2; ++s)
            CHECK(elliptic_unramified_count(i, s) == 12 * (2 * i - 2 * s - 1));
}

TEST_CASE("triple-point count and its two-case recomposition") {
    const TripleCases two = prym_triple_cases(2);
    CHECK(two.case_i_sum == Rational(8));
    CHECK(two.case_ii_sum == Rational(64));
    CHECK(two.total_closed == 72);
    const TripleCases three = prym_triple_cases(3);
    CHECK(three.case_i_sum == Rational(32));
    CHECK(three.case_ii_sum == Rational(448));
    CHECK(three.total_closed == 480);
    CHECK(prym_triple_count(4) == 2520);
    for (long i = 2; i <= 60; ++i) {
        const TripleCases cases = prym_triple_cases(i);
        CHECK(cases.case_i_sum == cases.case_i_closed);
        CHECK(cases.case_ii_sum == cases.case_ii_closed);
        CHECK(cases.case_i_sum + cases.case_ii_sum == Rational(cases.total_closed));
    }
}

TEST_CASE("pointed count and its a-sum") {
    CHECK(prym_pointed_count(2) == 6);
    CHECK(prym_pointed_count(3) == 20);
    CHECK(prym_pointed_count(5) == 252);
    for (long i = 2; i <= 60; ++i) {
        const PointedParts parts = prym_pointed_parts(i);
        CHECK(parts.sum_form == Rational(parts.closed));
    }
}

TEST_CASE("unramified-marked count and its three cases") {
    const PrymUnramifiedCases two = prym_unramified_cases(2);
    CHECK(two.case_i.raw == Rational(0));
    CHECK(two.case_i.closed == Rational(0));
    CHECK(two.case_ii.raw == Rational(12));
    CHECK(two.case_iii.raw == Rational(48));
    CHECK(two.total_closed == 60);
    CHECK(prym_unramified_count(3) == 400);
    for (long i = 2; i <= 60; ++i) {
        const PrymUnramifiedCases cases = prym_unramified_cases(i);
        CHECK(cases.case_i.raw == cases.case_i.closed);
        CHECK(cases.case_ii.raw == cases.case_ii.closed);
        CHECK(cases.case_iii.raw == cases.case_iii.closed);
        CHECK(cases.case_i.raw + cases.case_ii.raw + cases.case_iii.raw ==
              Rational(cases.total_closed));
    }
}

TEST_CASE("pencil-pair counts") {
    CHECK(pencil_pair_count(2, 1) == Rational(18));
    CHECK(pencil_pair_count(3, 1) ==
          Rational(2) * a_count(4, 4) + e_count(4, 4));
    CHECK(pencil_pair_count(3, 2) ==
          Rational(2) * a_count(4, 4) + Rational(2) * a_count(5, 4) + e_count(5, 4));
    CHECK_THROWS_AS(pencil_pair_count(3, 0), invalid_input);
    CHECK_THROWS_AS(pencil_pair_count(3, 3), invalid_input);
}

TEST_CASE("identity catalog holds at the stated spot values") {
    CHECK(verify_identity("id-5.3-1", 2).lhs == Rational(15));
    CHECK(verify_identity("id-5.3-1", 2).rhs == Rational(15));
    CHECK(verify_identity("id-3.6-total", 2).lhs == Rational(72));
    CHECK(verify_identity("id-3.6-total", 2).rhs == Rational(72));
    CHECK(verify_identity("id-5.3-caseII", 2).lhs == Rational(192));
    CHECK(verify_identity("id-5.3-caseII", 2).rhs == Rational(192));
    CHECK(verify_identity("remark-3.1", 2).pass);
    CHECK_THROWS_AS(verify_identity("id-0.0", 2), missing_identity);
    CHECK_THROWS_AS(verify_identity("id-3.3", 1), invalid_input);
}

TEST_CASE("identity catalog passes on a sweep") {
    REQUIRE(identity_catalog().size() == 14);
    for (const std::string& name : identity_catalog())
        for (long i = 2; i <= 40; ++i) {
            const IdentityResult r = verify_identity(name, i);
            CHECK_MESSAGE(r.pass, name, " at i=", i, ": ", to_string(r.lhs), " vs ",
                          to_string(r.rhs));
        }
}
