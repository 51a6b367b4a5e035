#pragma once

#include <random>

#include "tambara/ring.hpp"

namespace tambara::testing {

inline Element random_element(std::mt19937_64& rng, const GroupParams& P, unsigned level,
                              int lo = -9, int hi = 9)
{
    std::uniform_int_distribution<int> d(lo, hi);
    IntVec c(level + 1);
    for (auto& x : c)
        x = d(rng);
    return Element(P, level, std::move(c));
}

inline unsigned random_level(std::mt19937_64& rng, unsigned max)
{
    return std::uniform_int_distribution<unsigned>(0, max)(rng);
}

inline Element X(const GroupParams& P, unsigned k, unsigned i) { return Element::basis(P, k, i); }
inline Element F(const GroupParams& P, unsigned k, unsigned i) { return Element::f_basis(P, k, i); }
inline Element C(const GroupParams& P, unsigned k, long n) { return Element::constant(P, k, Int(n)); }

} // namespace tambara::testing
