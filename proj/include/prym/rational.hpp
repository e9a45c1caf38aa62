#pragma once

#include <gmpxx.h>

#include <string>

#include "prym/errors.hpp"

namespace prym {

// All arithmetic in this project is exact. Integer and Rational are backed by
// GMP; a Rational is kept canonical (lowest terms, positive denominator)
// by construction and by every operation.
using Integer = mpz_class;
using Rational = mpq_class;

/// num/den reduced to canonical form. den must be nonzero.
Rational make_rational(const Integer& num, const Integer& den);

/// n! for n >= 0; invalid_input for n < 0.
Integer factorial(long n);

/// C(n, k), with the convention that out-of-range arguments give 0:
/// returns 0 whenever k < 0, n < 0 or k > n.
Integer safe_binomial(long n, long k);

/// 2^e.
Integer pow2(unsigned long e);

/// base^e.
Integer int_pow(const Integer& base, unsigned long e);

/// a! / (b1! * b2! * ...) as an exact rational. Evaluates to 0 when any
/// factorial argument is negative (the vanishing convention used by every
/// count formula in this project).
Rational factorial_ratio(long a, std::initializer_list<long> denominators);

std::string to_string(const Integer& z);

/// Canonical text form: "p/q" in lowest terms, or "p" when q == 1.
std::string to_string(const Rational& q);

/// Parses the canonical text form (also accepts non-reduced "p/q").
Rational rational_from_string(const std::string& text);

bool is_integral(const Rational& q);

/// Exact conversion; invalid_input if q has a nontrivial denominator.
Integer to_integer(const Rational& q);

}  // namespace prym
