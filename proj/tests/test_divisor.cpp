#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "prym/divisor.hpp"

using namespace prym;

namespace {

const TestCurveRow& row_named(const std::vector<TestCurveRow>& rows, const std::string& name) {
    for (const TestCurveRow& row : rows)
        if (row.name == name) return row;
    throw std::logic_error("missing row " + name);
}

}  // namespace

TEST_CASE("test-curve rows at i = 2") {
    const auto rows = test_curve_rows(2);
    REQUIRE(rows.size() == 9);

    const TestCurveRow& a = row_named(rows, "Agm1");
    CHECK(a.pairing_or_zero("lambda") == Rational(1));
    CHECK(a.pairing_or_zero("d0p") == Rational(12));
    CHECK(a.pairing_or_zero("dgm1") == Rational(-1));
    CHECK(a.pairing_or_zero("d0pp") == Rational(0));

    const TestCurveRow& bp = row_named(rows, "Bp");
    CHECK(bp.pairing_or_zero("d0p") == Rational(-756));
    CHECK(bp.pairing_or_zero("dgm1") == Rational(63));
    CHECK(bp.pairing_or_zero("d1gm1") == Rational(63));
    CHECK(bp.pairing_or_zero("lambda") == Rational(0));

    const TestCurveRow& bpp = row_named(rows, "Bpp");
    CHECK(bpp.pairing_or_zero("d0pp") == Rational(-6));
    CHECK(bpp.pairing_or_zero("d1") == Rational(1));

    for (long i = 2; i <= 8; ++i)
        CHECK(row_named(test_curve_rows(i), "Cgm1_1gm1").pairing_or_zero("d1gm1") ==
              Rational(4 - 4 * i));
}

TEST_CASE("normalized right-hand sides at i = 2") {
    const auto rhs = rhs_values(2);
    REQUIRE(rhs.size() == 7);
    CHECK(rhs.at("A1") == Rational(0));
    CHECK(rhs.at("Agm1") == Rational(0));
    CHECK(rhs.at("A1gm1") == Rational(0));
    CHECK(rhs.at("Cgm1_1gm1") == Rational(144));
    CHECK(rhs.at("Cgm1_gm1") == Rational(24 * 14));
    CHECK(rhs.at("Cgm1_1") == Rational(16 * 47));
    CHECK(rhs.at("Bp") == Rational(63 * 144));
}

TEST_CASE("right-hand-side recompositions match stated totals") {
    for (const RecomposedRhs& r : rhs_case_recomposition(2)) {
        CHECK(r.from_cases == r.closed_form);
        if (r.row == "Bp") {
            CHECK(r.from_cases == Rational(27216));
            CHECK(r.cases.size() == 3);
            CHECK(r.cases[0].second == Rational(13608));
            CHECK(r.cases[1].second + r.cases[2].second == Rational(13608));
        }
        if (r.row == "Cgm1_1gm1") CHECK(r.from_cases == Rational(432));
    }
    for (long i = 2; i <= 50; ++i)
        for (const RecomposedRhs& r : rhs_case_recomposition(i))
            CHECK(r.from_cases == r.closed_form);
}

TEST_CASE("exact solve at i = 2") {
    const PicardClass cls = solve_divisor_class(2);
    CHECK(cls.positive_coefficient("lambda") == Rational(180));
    CHECK(cls.positive_coefficient("d0p") == Rational(22));
    CHECK(cls.positive_coefficient("d0pp") == Rational(60));
    CHECK(cls.positive_coefficient("d0ram") == Rational(32));
    CHECK(cls.positive_coefficient("d1") == Rational(188));
    CHECK(cls.positive_coefficient("dgm1") == Rational(84));
    CHECK(cls.positive_coefficient("d1gm1") == Rational(36));
    CHECK_THROWS_AS(cls.positive_coefficient("d2"), invalid_input);
}

TEST_CASE("exact solve at i = 3 carries the denominator 2i-1") {
    const PicardClass cls = solve_divisor_class(3);
    CHECK(cls.positive_coefficient("lambda") == make_rational(1056, 5));
    CHECK(cls.positive_coefficient("d0p") == make_rational(138, 5));
    CHECK(cls.positive_coefficient("d0pp") == make_rational(608, 5));
    CHECK(cls.positive_coefficient("d0ram") == make_rational(186, 5));
    CHECK(cls.positive_coefficient("d1") == Rational(424));
    CHECK(cls.positive_coefficient("dgm1") == Rational(120));
    CHECK(cls.positive_coefficient("d1gm1") == Rational(48));
}

TEST_CASE("solver equals the closed forms across the sweep") {
    for (long i = 2; i <= 50; ++i) {
        CHECK(solve_divisor_class(i) == theorem1_class(i));
        for (const Rational& r : system_residuals(i, theorem1_class(i)))
            CHECK(r == Rational(0));
    }
}

TEST_CASE("scaled genus-6 coefficients") {
    const PicardClass cls = theorem1_class(3);
    CHECK(cls.scaled_positive("lambda") == Rational(2112));
    CHECK(cls.scaled_positive("d0p") == Rational(276));
    CHECK(cls.scaled_positive("d0ram") == Rational(372));
    CHECK(cls.scaled_positive("d0pp") == Rational(1216));
    CHECK(cls.scaled_positive("d1") == Rational(4240));
}

TEST_CASE("JSON rendering carries explicit signs and the symbolic prefactor") {
    const nlohmann::ordered_json json = solve_divisor_class(3).to_json();
    CHECK(json["i"] == 3);
    CHECK(json["prefactor"] == "(6i-4)!*binom(2i-1,i)");
    CHECK(json["lambda"] == "1056/5");
    CHECK(json["d0p"] == "-138/5");
    CHECK(json["d0pp"] == "-608/5");
    CHECK(json["d0ram"] == "-186/5");
    CHECK(json["d1"] == "-424");
    CHECK(json["dgm1"] == "-120");
    CHECK(json["d1gm1"] == "-48");
    const auto keys = {"i", "prefactor", "lambda", "d0p", "d0pp", "d0ram", "d1", "dgm1", "d1gm1"};
    size_t idx = 0;
    for (const auto& item : json.items()) {
        CHECK(item.key() == *(keys.begin() + idx));
        ++idx;
    }
}

TEST_CASE("genus-6 arithmetic facts") {
    const auto checks = genus6_checks();
    REQUIRE(checks.size() == 6);
    for (const GenusSixCheck& check : checks) {
        INFO(check.name, ": expected ", check.expected, ", got ", check.actual);
        CHECK(check.pass);
    }
    CHECK(checks[0].actual == "(341328, 42744, 85488)");
    CHECK(checks[3].name == "marked-pencil-count");
    CHECK(checks[3].actual == "1560");
    CHECK(checks[5].skipped);
}

TEST_CASE("level-2 bridge check runs only with supplied constants") {
    ExternalConstants consistent;
    consistent.b33 = 40;
    consistent.n3_4 = 6;  // 4*40 + 2*6 = 172
    const auto checks = genus6_checks(consistent);
    CHECK(!checks.back().skipped);
    CHECK(checks.back().pass);

    ExternalConstants inconsistent;
    inconsistent.b33 = 1;
    inconsistent.n3_4 = 1;
    CHECK(!genus6_checks(inconsistent).back().pass);
}

TEST_CASE("picard class validation") {
    std::map<std::string, Rational> coeffs;
    for (const auto& label : kBasisLabels) coeffs[label] = Rational(1);
    CHECK_NOTHROW(PicardClass(2, coeffs));
    coeffs.erase("d1");
    CHECK_THROWS_AS(PicardClass(2, coeffs), invalid_input);
    coeffs["bogus"] = Rational(1);
    CHECK_THROWS_AS(PicardClass(2, coeffs), invalid_input);
}
