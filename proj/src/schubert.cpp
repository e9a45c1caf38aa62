#include "prym/schubert.hpp"

#include <algorithm>
#include <sstream>

namespace prym {

SchubertClass::SchubertClass(long l0, long l1, int d) : lam0(l0), lam1(l1), ambient(d) {
    if (d < 1 || l1 < 0 || l0 < l1 || l0 > d - 1)
        throw invalid_input("invalid Schubert class (" + std::to_string(l0) + "," +
                            std::to_string(l1) + ") on Gr(2," + std::to_string(d + 1) + ")");
}

ClassSum::ClassSum(const SchubertClass& c, Integer coefficient) : ambient_(c.ambient) {
    add(c.lam0, c.lam1, coefficient);
}

ClassSum ClassSum::unit(int ambient) {
    ClassSum s(ambient);
    s.add(0, 0, 1);
    return s;
}

Integer ClassSum::coefficient(long lam0, long lam1) const {
    auto it = terms_.find({lam0, lam1});
    return it == terms_.end() ? Integer(0) : it->second;
}

void ClassSum::add(long lam0, long lam1, const Integer& coefficient) {
    if (coefficient == 0) return;
    if (lam1 < 0 || lam0 < lam1 || lam0 > ambient_ - 1) return;  // vanishing
    auto [it, inserted] = terms_.try_emplace({lam0, lam1}, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second == 0) terms_.erase(it);
    }
}

ClassSum pieri_multiply(const ClassSum& c, int k) {
    if (k < 1) throw invalid_input("pieri_multiply requires k >= 1");
    ClassSum out(c.ambient());
    for (const auto& [index, coefficient] : c.terms()) {
        const auto [a, b] = index;
        for (long b2 = b; b2 <= a; ++b2) {
            const long a2 = a + b + k - b2;
            if (a2 < a) break;  // b2 beyond this point only shrinks a2 further
            out.add(a2, b2, coefficient);
        }
    }
    return out;
}

Integer integral_closed_form(int d, long lam0, long lam1) {
    if (d < 1 || lam1 < 0 || lam0 < lam1)
        throw invalid_input("invalid two-row index (" + std::to_string(lam0) + "," +
                            std::to_string(lam1) + ") for Gr(2," + std::to_string(d + 1) + ")");
    const Rational base =
        factorial_ratio(2 * d - 2 - lam0 - lam1, {d - 1 - lam0, d - lam1});
    return to_integer(base * Rational(lam0 + 1 - lam1));
}

Integer top_intersection(int d, const std::vector<std::pair<int, long>>& factors,
                         std::optional<std::pair<long, long>> seed) {
    if (d < 1) throw invalid_input("top_intersection requires d >= 1");
    ClassSum sum = ClassSum::unit(d);
    if (seed) {
        const auto [l0, l1] = *seed;
        if (l1 < 0 || l0 < l1)
            throw invalid_input("invalid seed class");
        sum = ClassSum(d);
        sum.add(l0, l1, 1);  // out-of-rectangle seeds vanish, hence integrate to 0
    }
    for (const auto& [k, multiplicity] : factors) {
        if (multiplicity < 0) throw invalid_input("negative factor multiplicity");
        for (long t = 0; t < multiplicity; ++t) {
            sum = pieri_multiply(sum, k);
            if (sum.empty()) return 0;
        }
    }
    return sum.coefficient(d - 1, d - 1);
}

namespace {

std::string strip(const std::string& s) {
    const size_t b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    const size_t e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

long parse_long(const std::string& s) {
    size_t used = 0;
    long v = 0;
    try {
        v = std::stol(s, &used);
    } catch (const std::exception&) {
        throw invalid_input("bad integer in Schubert literal: " + s);
    }
    if (used != s.size()) throw invalid_input("bad integer in Schubert literal: " + s);
    return v;
}

}  // namespace

IntegralSpec parse_integral(const std::string& literal) {
    IntegralSpec spec;
    bool saw_ambient = false;
    std::istringstream in(literal);
    std::string field;
    while (std::getline(in, field, ';')) {
        field = strip(field);
        if (field.empty()) continue;
        if (field.rfind("Gr", 0) == 0) {
            // "Gr(2,n)"
            const size_t open = field.find('(');
            const size_t comma = field.find(',');
            const size_t close = field.find(')');
            if (open == std::string::npos || comma == std::string::npos ||
                close == std::string::npos || comma < open || close < comma)
                throw invalid_input("bad Grassmannian literal: " + field);
            const long k = parse_long(strip(field.substr(open + 1, comma - open - 1)));
            const long n = parse_long(strip(field.substr(comma + 1, close - comma - 1)));
            if (k != 2) throw invalid_input("only Gr(2,n) is supported");
            if (n < 2) throw invalid_input("bad Grassmannian literal: " + field);
            spec.d = static_cast<int>(n - 1);
            saw_ambient = true;
        } else if (field.rfind("seed=", 0) == 0) {
            const std::string value = field.substr(5);
            const size_t comma = value.find(',');
            if (comma == std::string::npos) {
                spec.seed = {parse_long(strip(value)), 0};
            } else {
                spec.seed = {parse_long(strip(value.substr(0, comma))),
                             parse_long(strip(value.substr(comma + 1)))};
            }
        } else if (field.rfind("times=", 0) == 0) {
            std::istringstream factors(field.substr(6));
            std::string item;
            while (std::getline(factors, item, '*')) {
                item = strip(item);
                if (item.empty()) throw invalid_input("empty factor in: " + field);
                const size_t caret = item.find('^');
                int k;
                long mult = 1;
                if (caret == std::string::npos) {
                    k = static_cast<int>(parse_long(item));
                } else {
                    k = static_cast<int>(parse_long(strip(item.substr(0, caret))));
                    mult = parse_long(strip(item.substr(caret + 1)));
                }
                if (k < 1 || mult < 0)
                    throw invalid_input("bad factor in Schubert literal: " + item);
                spec.factors.emplace_back(k, mult);
            }
        } else {
            throw invalid_input("unknown field in Schubert literal: " + field);
        }
    }
    if (!saw_ambient) throw invalid_input("Schubert literal missing Gr(2,n)");
    return spec;
}

}  // namespace prym
