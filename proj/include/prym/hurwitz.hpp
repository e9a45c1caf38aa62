#pragma once

#include <string>
#include <vector>

#include "prym/partition.hpp"

namespace prym {

/// A monodromy-count instance: covers of a genus-0 or genus-1 base with one
/// prescribed ramification profile per marked branch point. A problem with no
/// solutions (e.g. parity-obstructed) simply counts 0; no consistency is
/// enforced beyond profile sizes.
struct HurwitzProblem {
    int degree = 1;
    int base_genus = 0;
    std::vector<Partition> profiles;

    HurwitzProblem() = default;
    HurwitzProblem(int d, int genus, std::vector<Partition> profs);

    /// Literal syntax: "d=4; g=0; profiles=2,2|2,2|3,1" (profiles separated
    /// by '|', parts by ','; the profiles field may be omitted or empty).
    static HurwitzProblem parse(const std::string& literal);

    std::string to_string() const;
};

/// Enumeration limits. The brute-force paths refuse degrees above
/// `degree_bound`; the hard cap on the bound itself is kMaxOracleDegree.
struct OracleConfig {
    int degree_bound = 7;
    int threads = 1;
};

inline constexpr int kMaxOracleDegree = 9;

struct TupleCounts {
    Integer all;         ///< tuples satisfying the product relation
    Integer transitive;  ///< those generating a transitive subgroup
};

/// Exhaustive enumeration of monodromy tuples: 2g handle permutations plus
/// one permutation per profile with the prescribed cycle type, subject to
/// (product of handle commutators) * (product of profile permutations) = id.
/// Counts both the unfiltered and the transitive tuples in one pass.
/// Throws resource_limit when degree exceeds the configured bound.
TupleCounts count_tuples_oracle(const HurwitzProblem& p, const OracleConfig& config = {});

Integer count_tuples_bruteforce(const HurwitzProblem& p, bool require_transitive,
                                const OracleConfig& config = {});

/// Character-sum count of all tuples (transitive or not); agrees with
/// count_tuples_bruteforce(p, false) wherever the oracle applies.
Integer count_tuples_frobenius(const HurwitzProblem& p);

/// Transitive tuple count on the character path, obtained from the unfiltered
/// counts by removing disconnected contributions: subtract, over every way to
/// split the sheets into the block of sheet 1 and its complement and to
/// distribute each profile's parts across the split, the product of a
/// transitive count and an unfiltered count.
Integer transitive_count_characters(const HurwitzProblem& p);

enum class Backend { oracle, characters };

/// Transitive tuple count divided by degree! (automorphism-weighted count of
/// connected covers).
Rational connected_weighted_count(const HurwitzProblem& p, Backend backend,
                                  const OracleConfig& config = {});

/// Number of orbits of transitive tuples under simultaneous conjugation.
Integer count_cover_classes(const HurwitzProblem& p, const OracleConfig& config = {});

/// Orbit sizes under simultaneous conjugation, largest first, together with
/// the order of the stabilizer of one representative per orbit.
struct CoverClassOrbit {
    Integer size;
    Integer stabilizer_order;
};
std::vector<CoverClassOrbit> cover_class_orbits(const HurwitzProblem& p,
                                                const OracleConfig& config = {});

}  // namespace prym
