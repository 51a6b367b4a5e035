#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "tambara/errors.hpp"

namespace tambara {

using Int = mpz_class;
using IntVec = std::vector<Int>;

inline Int ipow(const Int& base, unsigned long exp)
{
    Int out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
    return out;
}

inline Int ipow(long base, unsigned long exp)
{
    return ipow(Int(base), exp);
}

// p^e as an unsigned long exponent; the exponent itself must fit.
inline unsigned long upow(unsigned long base, unsigned e)
{
    unsigned long out = 1;
    for (unsigned i = 0; i < e; ++i)
        out *= base;
    return out;
}

/* Exact quotient n / d. Throws InternalError when d does not divide n,
 * since a non-integral result always means a transcription bug upstream. */
inline Int exact_div(const Int& n, const Int& d, const char* what)
{
    if (d == 0 || !mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()))
        throw InternalError(std::string("non-exact division in ") + what + ": " +
                            n.get_str() + " / " + d.get_str());
    Int q;
    mpz_divexact(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    return q;
}

inline bool divides(const Int& d, const Int& n)
{
    if (d == 0)
        return n == 0;
    return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

// Floor division, remainder in [0, |d|).
inline Int floor_div(const Int& n, const Int& d)
{
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    return q;
}

inline Int gcd(const Int& a, const Int& b)
{
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int lcm(const Int& a, const Int& b)
{
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

// g = s*a + t*b with g = gcd(a, b) >= 0.
inline void gcdext(const Int& a, const Int& b, Int& g, Int& s, Int& t)
{
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}

/* Deterministic primality by trial division. Inputs here are small
 * (group primes and the handful of auxiliary primes of a spectrum). */
inline bool is_prime(const Int& n)
{
    if (n < 2)
        return false;
    if (n < 4)
        return true;
    if (divides(Int(2), n))
        return false;
    for (Int d = 3; d * d <= n; d += 2)
        if (divides(d, n))
            return false;
    return true;
}

inline bool is_zero(const IntVec& v)
{
    for (const auto& x : v)
        if (x != 0)
            return false;
    return true;
}

} // namespace tambara
