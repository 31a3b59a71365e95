#pragma once

#include <cstdint>
#include <map>
#include <optional>

#include <gmpxx.h>

namespace cdlevel {

using Int = mpz_class;
using Rational = mpq_class;

bool is_perfect_square(const Int& n);

/// Exact square root of a nonnegative rational, if it is a square.
std::optional<Rational> exact_sqrt(const Rational& q);

/// 2-adic valuation of n > 0.
unsigned two_adic_valuation(uint64_t n);

struct Factorization {
    std::map<Int, unsigned> primes; // prime -> exponent, |n| = prod p^e when complete
    bool complete = true;
};

/// Factor |n| by trial division up to trial_bound; the remaining cofactor is
/// accepted when it is a probable prime or the square of one, otherwise the
/// result is marked incomplete. n must be nonzero.
Factorization factor_integer(Int n, uint64_t trial_bound);

/// Signed square-free part of a nonzero rational: the unique square-free
/// integer d with q = d * r^2, r rational. Empty when factoring exceeds the
/// trial bound.
std::optional<Int> squarefree_part(const Rational& q, uint64_t trial_bound);

/// Legendre symbol (a|p) for an odd prime p; 0 when p | a.
int legendre_symbol(const Int& a, const Int& p);

/// Hilbert symbols over the reals and over Q_p (p = 2 allowed). a, b nonzero.
int hilbert_symbol_inf(const Int& a, const Int& b);
int hilbert_symbol_p(const Int& a, const Int& b, const Int& p);

/// base^exp, saturating at cap (returns cap + 1 on overflow past cap).
uint64_t pow_saturating(uint64_t base, unsigned exp, uint64_t cap);

} // namespace cdlevel
