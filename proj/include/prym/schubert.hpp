#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "prym/rational.hpp"

namespace prym {

/// Two-row Schubert class sigma_{lam0,lam1} on Gr(2, d+1), with
/// 0 <= lam1 <= lam0 <= d-1. The ambient parameter is d.
struct SchubertClass {
    long lam0 = 0;
    long lam1 = 0;
    int ambient = 1;

    SchubertClass() = default;
    SchubertClass(long l0, long l1, int d);

    long degree() const { return lam0 + lam1; }
    friend bool operator==(const SchubertClass&, const SchubertClass&) = default;
};

/// Formal integer combination of Schubert classes with a common ambient.
/// Terms outside the ambient rectangle are dropped (cohomology vanishing);
/// zero coefficients are never stored.
class ClassSum {
  public:
    explicit ClassSum(int ambient) : ambient_(ambient) {}
    ClassSum(const SchubertClass& c, Integer coefficient = 1);

    static ClassSum unit(int ambient);  ///< sigma_{0,0}

    int ambient() const { return ambient_; }
    const std::map<std::pair<long, long>, Integer>& terms() const { return terms_; }
    Integer coefficient(long lam0, long lam1) const;
    void add(long lam0, long lam1, const Integer& coefficient);
    bool empty() const { return terms_.empty(); }

    friend bool operator==(const ClassSum&, const ClassSum&) = default;

  private:
    int ambient_;
    std::map<std::pair<long, long>, Integer> terms_;
};

/// Pieri multiplication by the special class sigma_k: each sigma_{a,b} maps
/// to the sum of sigma_{a',b'} with a'+b' = a+b+k and a' >= a >= b' >= b,
/// truncated to the ambient rectangle.
ClassSum pieri_multiply(const ClassSum& c, int k);

/// The closed two-row integral on Gr(2, d+1):
///   (2d-2-lam0-lam1)! / ((d-1-lam0)! (d-lam1)!) * (lam0+1-lam1)
/// evaluated with the negative-factorial-to-zero convention, so classes
/// outside the ambient rectangle integrate to 0. Requires a valid two-row
/// shape (lam0 >= lam1 >= 0) and d >= 1.
Integer integral_closed_form(int d, long lam0, long lam1);

/// Coefficient of the point class after multiplying the seed (default
/// sigma_{0,0}) by every listed special-class factor sigma_k, repeated
/// `multiplicity` times. Degree mismatches yield 0.
Integer top_intersection(int d, const std::vector<std::pair<int, long>>& factors,
                         std::optional<std::pair<long, long>> seed = std::nullopt);

/// Parsed form of the CLI literal "Gr(2,6); seed=3,1; times=1^4",
/// meaning the integral of sigma_1^4 * sigma_{3,1} on Gr(2,6).
struct IntegralSpec {
    int d = 1;  ///< the Grassmannian is Gr(2, d+1)
    std::pair<long, long> seed{0, 0};
    std::vector<std::pair<int, long>> factors;
};

IntegralSpec parse_integral(const std::string& literal);

}  // namespace prym
