#pragma once

#include <vector>

#include "prym/partition.hpp"

namespace prym {

/// Irreducible-character lookup: shape labels the irreducible, cycle_type the
/// conjugacy class. Both must partition the same integer.
struct CharacterQuery {
    Partition shape;
    Partition cycle_type;
};

/// chi^shape(cycle_type), exact, via the Murnaghan-Nakayama rule.
/// invalid_input if the sizes disagree.
Integer character_value(const CharacterQuery& q);

/// f^shape = chi^shape(identity), via the hook-length formula. This is an
/// independent route from character_value and is cross-checked in tests.
Integer dimension(const Partition& shape);

/// Full character table of S_d, computed lazily per degree and memoized.
/// Rows and columns are both indexed by partitions_of(d) order. Safe for
/// concurrent lookups; construction is serialized.
class CharacterTable {
  public:
    static const CharacterTable& of_degree(int d);

    int degree() const { return degree_; }
    const std::vector<Partition>& labels() const { return labels_; }
    const Integer& value(int shape_index, int class_index) const {
        return values_[static_cast<size_t>(shape_index)][static_cast<size_t>(class_index)];
    }
    const Integer& value(const Partition& shape, const Partition& cycle_type) const;
    int index_of(const Partition& p) const;

  private:
    explicit CharacterTable(int d);

    int degree_;
    std::vector<Partition> labels_;
    std::vector<std::vector<Integer>> values_;
};

}  // namespace prym
