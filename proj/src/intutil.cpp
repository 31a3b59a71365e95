#include "cdlevel/intutil.hpp"

#include "cdlevel/errors.hpp"

namespace cdlevel {

bool is_perfect_square(const Int& n) {
    if (sgn(n) < 0) return false;
    return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

std::optional<Rational> exact_sqrt(const Rational& q) {
    if (sgn(q) < 0) return std::nullopt;
    if (sgn(q) == 0) return Rational(0);
    const Int& num = q.get_num();
    const Int& den = q.get_den();
    if (!is_perfect_square(num) || !is_perfect_square(den)) return std::nullopt;
    Int rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    return Rational(rn, rd);
}

unsigned two_adic_valuation(uint64_t n) {
    if (n == 0) fail(Errc::ZeroInput, "two_adic_valuation(0)");
    unsigned v = 0;
    while ((n & 1) == 0) {
        n >>= 1;
        ++v;
    }
    return v;
}

Factorization factor_integer(Int n, uint64_t trial_bound) {
    if (sgn(n) == 0) fail(Errc::ZeroInput, "factor_integer(0)");
    Factorization out;
    n = abs(n);
    auto take = [&](const Int& p) {
        unsigned e = 0;
        while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
            mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
            ++e;
        }
        if (e) out.primes[p] += e;
    };
    take(Int(2));
    for (uint64_t d = 3; d <= trial_bound && Int(d) * d <= n; d += 2) take(Int(d));
    if (n > 1) {
        if (mpz_probab_prime_p(n.get_mpz_t(), 40)) {
            out.primes[n] += 1;
        } else if (is_perfect_square(n)) {
            Int r;
            mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
            if (mpz_probab_prime_p(r.get_mpz_t(), 40)) {
                out.primes[r] += 2;
            } else {
                out.complete = false;
            }
        } else {
            out.complete = false;
        }
    }
    return out;
}

std::optional<Int> squarefree_part(const Rational& q, uint64_t trial_bound) {
    if (sgn(q) == 0) fail(Errc::ZeroInput, "squarefree_part(0)");
    // num/den is reduced, so the square-free parts of num and den are coprime.
    Int prod = q.get_num() * q.get_den();
    Factorization f = factor_integer(prod, trial_bound);
    if (!f.complete) return std::nullopt;
    Int d = sgn(prod) < 0 ? Int(-1) : Int(1);
    for (const auto& [p, e] : f.primes)
        if (e % 2 == 1) d *= p;
    return d;
}

int legendre_symbol(const Int& a, const Int& p) {
    return mpz_legendre(a.get_mpz_t(), p.get_mpz_t());
}

int hilbert_symbol_inf(const Int& a, const Int& b) {
    return (sgn(a) < 0 && sgn(b) < 0) ? -1 : 1;
}

namespace {

// strips p from n, returning the valuation
unsigned strip(Int& n, const Int& p) {
    unsigned v = 0;
    while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
        mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
        ++v;
    }
    return v;
}

// (u-1)/2 mod 2 for odd u
unsigned eps2(const Int& u) {
    unsigned r = static_cast<unsigned>(mpz_fdiv_ui(u.get_mpz_t(), 4));
    return r == 3 ? 1 : 0;
}

// (u^2-1)/8 mod 2 for odd u
unsigned omega2(const Int& u) {
    unsigned r = static_cast<unsigned>(mpz_fdiv_ui(u.get_mpz_t(), 8));
    return (r == 3 || r == 5) ? 1 : 0;
}

} // namespace

int hilbert_symbol_p(const Int& a, const Int& b, const Int& p) {
    if (sgn(a) == 0 || sgn(b) == 0) fail(Errc::ZeroInput, "hilbert_symbol_p with zero argument");
    Int u = a, w = b;
    unsigned alpha = strip(u, p);
    unsigned beta = strip(w, p);
    if (p == 2) {
        unsigned e = eps2(u) * eps2(w) + alpha * omega2(w) + beta * omega2(u);
        return (e % 2) ? -1 : 1;
    }
    int s = 1;
    if ((alpha * beta) % 2 == 1 && legendre_symbol(Int(-1), p) == -1) s = -s;
    if (beta % 2 == 1 && legendre_symbol(u, p) == -1) s = -s;
    if (alpha % 2 == 1 && legendre_symbol(w, p) == -1) s = -s;
    return s;
}

uint64_t pow_saturating(uint64_t base, unsigned exp, uint64_t cap) {
    uint64_t r = 1;
    for (unsigned i = 0; i < exp; ++i) {
        if (base != 0 && r > cap / base) return cap + 1;
        r *= base;
        if (r > cap) return cap + 1;
    }
    return r;
}

} // namespace cdlevel
