#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "prym/hurwitz.hpp"

using namespace prym;

namespace {

HurwitzProblem problem(int d, int g, std::vector<Partition> profiles) {
    return HurwitzProblem(d, g, std::move(profiles));
}

}  // namespace

TEST_CASE("problem literals") {
    const HurwitzProblem p = HurwitzProblem::parse("d=4; g=0; profiles=2,2|2,2|3,1");
    CHECK(p.degree == 4);
    CHECK(p.base_genus == 0);
    REQUIRE(p.profiles.size() == 3);
    CHECK(p.profiles[2] == Partition({3, 1}));
    CHECK(p.to_string() == "d=4; g=0; profiles=2,2|2,2|3,1");

    CHECK(HurwitzProblem::parse("d=2; g=1; profiles=").profiles.empty());
    CHECK(HurwitzProblem::parse("d=2; g=1").profiles.empty());
    CHECK_THROWS_AS(HurwitzProblem::parse("g=0; profiles=2"), invalid_input);
    CHECK_THROWS_AS(HurwitzProblem::parse("d=3; g=0; profiles=2,2"), invalid_input);
    CHECK_THROWS_AS(HurwitzProblem::parse("d=3; g=2; profiles=3"), invalid_input);
}

TEST_CASE("double cover of the line") {
    const auto p = problem(2, 0, {Partition({2}), Partition({2})});
    CHECK(count_tuples_bruteforce(p, true) == 1);
    CHECK(count_tuples_bruteforce(p, false) == 1);
    CHECK(count_tuples_frobenius(p) == 1);
    CHECK(count_cover_classes(p) == 1);
    CHECK(connected_weighted_count(p, Backend::oracle) == make_rational(1, 2));
    CHECK(connected_weighted_count(p, Backend::characters) == make_rational(1, 2));
}

TEST_CASE("cyclic triple covers") {
    const auto p = problem(3, 0, {Partition({3}), Partition({3}), Partition({3})});
    CHECK(count_tuples_bruteforce(p, true) == 2);
    CHECK(count_tuples_frobenius(p) == 2);
    CHECK(count_cover_classes(p) == 1);
    CHECK(connected_weighted_count(p, Backend::oracle) == make_rational(1, 3));
}

TEST_CASE("unramified marked fiber keeps uniqueness") {
    const auto p = problem(3, 0, {Partition({3}), Partition({3}), Partition({1, 1, 1})});
    CHECK(count_cover_classes(p) == 1);
}

TEST_CASE("elliptic base with no profiles") {
    const auto p = problem(2, 1, {});
    CHECK(count_tuples_bruteforce(p, false) == 4);
    CHECK(count_tuples_bruteforce(p, true) == 3);
    CHECK(count_tuples_frobenius(p) == 4);
    CHECK(transitive_count_characters(p) == 3);
}

TEST_CASE("four fully even fibers on four sheets") {
    const Partition even({2, 2});
    const auto p = problem(4, 0, {even, even, even, even});
    CHECK(count_tuples_frobenius(p) == 21);
    CHECK(count_tuples_bruteforce(p, false) == 21);
    CHECK(count_tuples_bruteforce(p, true) == 18);
    CHECK(connected_weighted_count(p, Backend::oracle) == make_rational(3, 4));
    CHECK(connected_weighted_count(p, Backend::characters) == make_rational(3, 4));
}

TEST_CASE("degree bound is enforced and reported") {
    const auto p = problem(9, 0, {Partition({2, 1, 1, 1, 1, 1, 1, 1})});
    CHECK_THROWS_AS(count_tuples_bruteforce(p, false), resource_limit);
    try {
        count_tuples_bruteforce(p, false);
    } catch (const resource_limit& e) {
        CHECK(e.bound() == 7);
        CHECK(std::string(e.what()).find("7") != std::string::npos);
    }
    // character path has no degree bound
    CHECK(count_tuples_frobenius(p) >= 0);
}

TEST_CASE("parity obstruction forces zero counts over genus 0") {
    const auto p = problem(3, 0, {Partition({2, 1}), Partition({3}), Partition({3})});
    CHECK(count_tuples_frobenius(p) == 0);
    CHECK(count_tuples_bruteforce(p, false) == 0);
}

TEST_CASE("character path equals the oracle on a dense mini sweep") {
    for (int d = 2; d <= 4; ++d) {
        const auto types = partitions_of(d);
        for (int genus = 0; genus <= 1; ++genus) {
            for (size_t i = 0; i < types.size(); ++i)
                for (size_t j = i; j < types.size(); ++j)
                    for (size_t k = j; k < types.size(); ++k) {
                        if (genus == 1 && d > 3) continue;
                        const auto p = problem(d, genus, {types[i], types[j], types[k]});
                        const TupleCounts counts = count_tuples_oracle(p);
                        CHECK(counts.all == count_tuples_frobenius(p));
                        CHECK(counts.transitive == transitive_count_characters(p));
                    }
        }
    }
}

TEST_CASE("orbit sizes and stabilizers multiply to the group order") {
    const std::vector<HurwitzProblem> cases = {
        problem(3, 0, {Partition({3}), Partition({3}), Partition({3})}),
        problem(4, 0, {Partition({2, 2}), Partition({2, 2}), Partition({2, 2})}),
        problem(4, 0, {Partition({3, 1}), Partition({3, 1}), Partition({2, 2})}),
        problem(2, 1, {}),
    };
    for (const auto& p : cases) {
        Integer transitive = 0;
        for (const CoverClassOrbit& orbit : cover_class_orbits(p)) {
            CHECK(orbit.size * orbit.stabilizer_order == factorial(p.degree));
            transitive += orbit.size;
        }
        CHECK(transitive == count_tuples_bruteforce(p, true));
    }
}

TEST_CASE("sharded enumeration matches the serial count") {
    const auto p = problem(4, 0,
                           {Partition({2, 2}), Partition({2, 2}), Partition({2, 2}),
                            Partition({2, 2})});
    const TupleCounts serial = count_tuples_oracle(p, OracleConfig{7, 1});
    const TupleCounts sharded = count_tuples_oracle(p, OracleConfig{7, 4});
    CHECK(serial.all == sharded.all);
    CHECK(serial.transitive == sharded.transitive);
}

TEST_CASE("single and empty profile lists") {
    CHECK(count_tuples_bruteforce(problem(3, 0, {Partition({1, 1, 1})}), false) == 1);
    CHECK(count_tuples_bruteforce(problem(3, 0, {Partition({3})}), false) == 0);
    CHECK(count_tuples_bruteforce(problem(1, 0, {}), true) == 1);
    CHECK(count_tuples_bruteforce(problem(3, 0, {}), true) == 0);
    CHECK(count_tuples_frobenius(problem(3, 0, {})) == 1);
}
