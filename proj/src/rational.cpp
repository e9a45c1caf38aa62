#include "prym/rational.hpp"

#include <cctype>

namespace prym {

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw invalid_input("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Integer factorial(long n) {
    if (n < 0) throw invalid_input("factorial of negative integer");
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

Integer safe_binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return r;
}

Integer pow2(unsigned long e) {
    Integer r = 1;
    mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), e);
    return r;
}

Integer int_pow(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

Rational factorial_ratio(long a, std::initializer_list<long> denominators) {
    if (a < 0) return 0;
    for (long b : denominators)
        if (b < 0) return 0;
    Rational r(factorial(a));
    for (long b : denominators) r /= Rational(factorial(b));
    return r;
}

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& q) { return q.get_str(); }

Rational rational_from_string(const std::string& text) {
    if (text.empty()) throw invalid_input("empty rational literal");
    for (char c : text) {
        if (!std::isdigit(static_cast<unsigned char>(c)) && c != '-' && c != '/')
            throw invalid_input("bad rational literal: " + text);
    }
    Rational q;
    if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0)
        throw invalid_input("bad rational literal: " + text);
    if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0)
        throw invalid_input("rational literal with zero denominator: " + text);
    q.canonicalize();
    return q;
}

bool is_integral(const Rational& q) { return q.get_den() == 1; }

Integer to_integer(const Rational& q) {
    if (!is_integral(q))
        throw invalid_input("rational " + to_string(q) + " is not an integer");
    return q.get_num();
}

}  // namespace prym
