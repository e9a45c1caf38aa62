#pragma once

#include <compare>
#include <string>
#include <vector>

#include "prym/rational.hpp"

namespace prym {

/// Integer partition with weakly decreasing positive parts. Used as a cycle
/// type, a ramification profile, and a two-row Schubert index source.
/// Canonicalized (sorted) on construction; the empty partition has size 0.
class Partition {
  public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts);

    /// Comma-separated decreasing parts, e.g. "3,1,1". "" parses to the
    /// empty partition.
    static Partition parse(const std::string& text);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }              ///< the partitioned integer
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int part(int j) const { return parts_[static_cast<size_t>(j)]; }

    /// Multiplicity of a given part value.
    int multiplicity(int value) const;

    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

  private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// All partitions of n, each exactly once, in reverse-lexicographic order:
/// (4),(3,1),(2,2),(2,1,1),(1,1,1,1).
std::vector<Partition> partitions_of(int n);

/// z(p) = prod_j m_j! * j^(m_j). The conjugacy class of cycle type p in S_d
/// has d!/z(p) elements.
Integer centralizer_order(const Partition& p);

/// d!/z(p) for p a partition of d.
Integer conjugacy_class_size(const Partition& p);

}  // namespace prym
