#pragma once

// Norm maps by counting sections.
//
// For a = sum m_i X_{k,i} with m_i >= 0 take the H_l-set
//   A = sum_i m_i (H_l/H_i)  ->  H_l/H_k .
// jnd^l_k(a) is the H_l-set S of sections of that projection.  Writing
// c(H_j) for the number of sections whose stabilizer is exactly H_j, the
// X_{l,j}-coefficient of jnd^l_k(a) is c(H_j) / |H_l : H_j|.
//
// Two routes are provided: c_census() uses the closed count of sections
// fixed by H_j and peels off larger stabilizers top-down, and
// enumerate_sections() literally walks every section.

#include <cstdlib>
#include <string>
#include <vector>

#include "tambara/errors.hpp"
#include "tambara/integer.hpp"
#include "tambara/ring.hpp"

namespace tambara {

struct SectionCensus {
    GroupParams params;
    unsigned source = 0;
    unsigned target = 0;
    IntVec m;
    IntVec c; // c[j] = #sections with stabilizer exactly H_j, 0 <= j <= target

    friend bool operator==(const SectionCensus&, const SectionCensus&) = default;
};

inline constexpr unsigned long long default_enumeration_cap = 1000000ULL;

namespace detail {

inline void require_nonneg(const IntVec& m)
{
    for (const auto& x : m)
        if (x < 0)
            throw NegativeCoefficient("section counting needs m_i >= 0, got " + x.get_str());
}

inline void check_census_levels(const GroupParams& P, unsigned k, unsigned l, const IntVec& m)
{
    P.check_level(l);
    if (k > l)
        throw LevelError("census: source level above target");
    if (m.size() != k + 1)
        throw LevelError("census: expected " + std::to_string(k + 1) + " coefficients");
}

} // namespace detail

/// |K\G/H| = |G : KH| inside a cyclic group of rank `group_level`.
inline Int orbit_count_in(const GroupParams& P, unsigned group_level, unsigned j, unsigned k)
{
    if (j > group_level || k > group_level)
        throw LevelError("orbit_count: subgroup level above group level");
    return P.pow(group_level - std::max(j, k));
}

/// |K\G/H| with K = H_j, H = H_k, G = H_r.
inline Int orbit_count(const GroupParams& P, unsigned j, unsigned k)
{
    return orbit_count_in(P, P.r, j, k);
}

/// Number of sections of A -> H_l/H_k fixed by H_j.
inline Int fixed_sections(const GroupParams& P, unsigned k, unsigned l, const IntVec& m, unsigned j)
{
    detail::check_census_levels(P, k, l, m);
    detail::require_nonneg(m);
    if (j > l)
        throw LevelError("fixed_sections: K above G");
    Int base = 0;
    for (unsigned i = std::min(j, k); i <= k; ++i)
        base += m[i] * P.pow(k - i);
    return ipow(base, upow(P.p, l - std::max(j, k)));
}

inline SectionCensus c_census(const GroupParams& P, unsigned k, unsigned l, const IntVec& m)
{
    detail::check_census_levels(P, k, l, m);
    detail::require_nonneg(m);
    SectionCensus out{P, k, l, m, IntVec(l + 1, Int(0))};
    Int above = 0; // sum of c(H_t) for t > j
    for (int j = static_cast<int>(l); j >= 0; --j) {
        out.c[j] = fixed_sections(P, k, l, m, static_cast<unsigned>(j)) - above;
        above += out.c[j];
    }
    return out;
}

inline Element census_to_element(const SectionCensus& s)
{
    IntVec x(s.target + 1);
    for (unsigned j = 0; j <= s.target; ++j)
        x[j] = exact_div(s.c[j], s.params.pow(s.target - j), "section census orbit count");
    return Element(s.params, s.target, std::move(x));
}

inline Element jnd_oracle(const Element& a, unsigned target)
{
    if (target < a.level())
        throw LevelError("jnd_oracle: target below source");
    return census_to_element(c_census(a.params(), a.level(), target, a.coeffs()));
}

/**
 * Brute-force census.  Model: G = Z/p^l, H_i = p^{l-i} Z/p^l, so
 * G/H_i = Z/p^{l-i} and the projection G/H_i -> G/H_k is reduction mod
 * p^{l-k}.  A section picks, for every coset x of H_k, an element
 * (i, copy, y) of A with y = x mod p^{l-k}.  g acts on sections by
 * (g.s)(x) = g s(x - g).  Throws TooLarge past `cap` sections.
 */
inline SectionCensus enumerate_sections(const Element& a, unsigned target,
                                        unsigned long long cap = default_enumeration_cap)
{
    const auto& P = a.params();
    const unsigned k = a.level(), l = target;
    detail::check_census_levels(P, k, l, a.coeffs());
    detail::require_nonneg(a.coeffs());

    Int fiber_size = 0;
    for (unsigned i = 0; i <= k; ++i)
        fiber_size += a[i] * P.pow(k - i);
    const unsigned long cosets = upow(P.p, l - k);
    Int total = ipow(fiber_size, cosets);
    if (total > Int(std::to_string(cap)))
        throw TooLarge("enumerate_sections: " + total.get_str() + " sections exceed cap " +
                       std::to_string(cap));

    SectionCensus out{P, k, l, a.coeffs(), IntVec(l + 1, Int(0))};
    if (total == 0)
        return out;

    // Fiber over coset x: list of (orbit type i, copy, y in Z/p^{l-i}).
    struct Point {
        unsigned i;
        unsigned long copy;
        unsigned long y;
    };
    const unsigned long quot = cosets; // |G/H_k|
    std::vector<std::vector<Point>> fiber(quot);
    for (unsigned i = 0; i <= k; ++i) {
        const unsigned long mod_i = upow(P.p, l - i);
        const unsigned long copies = a[i].get_ui();
        for (unsigned long cp = 0; cp < copies; ++cp)
            for (unsigned long y = 0; y < mod_i; ++y)
                fiber[y % quot].push_back({i, cp, y});
    }
    const std::size_t width = fiber[0].size();

    auto index_of = [&](unsigned long x, const Point& q) {
        // position of q in fiber[x]; fibers are small, linear scan is fine
        const auto& f = fiber[x];
        for (std::size_t t = 0; t < f.size(); ++t)
            if (f[t].i == q.i && f[t].copy == q.copy && f[t].y == q.y)
                return t;
        throw InternalError("enumerate_sections: point not in fiber");
    };

    // shift[g][x][t]: index in fiber[(x+g)%quot] of g * fiber[x][t], for g = p^{l-j}
    const unsigned long group_order = upow(P.p, l);
    std::vector<std::vector<std::vector<std::size_t>>> shift(l + 1);
    for (unsigned j = 0; j <= l; ++j) {
        const unsigned long g = (upow(P.p, l - j)) % group_order;
        shift[j].assign(quot, std::vector<std::size_t>(width));
        for (unsigned long x = 0; x < quot; ++x)
            for (std::size_t t = 0; t < width; ++t) {
                const Point& q = fiber[x][t];
                const unsigned long mod_i = upow(P.p, l - q.i);
                Point moved{q.i, q.copy, (q.y + g) % mod_i};
                shift[j][x][t] = index_of((x + g) % quot, moved);
            }
    }

    std::vector<std::size_t> choice(quot, 0);
    const unsigned long long n = total.get_ui();
    for (unsigned long long it = 0; it < n; ++it) {
        // stabilizer = largest H_j whose generator p^{l-j} fixes s
        unsigned stab = 0;
        for (int j = static_cast<int>(l); j >= 0; --j) {
            const unsigned long g = upow(P.p, l - j) % group_order;
            bool fixed = true;
            for (unsigned long x = 0; x < quot && fixed; ++x)
                fixed = choice[(x + g) % quot] == shift[j][x][choice[x]];
            if (fixed) {
                stab = static_cast<unsigned>(j);
                break;
            }
        }
        out.c[stab] += 1;
        for (unsigned long x = 0; x < quot; ++x) {
            if (++choice[x] < width)
                break;
            choice[x] = 0;
        }
    }
    return out;
}

/// Reads TAMBARA_MAX_ORACLE, falling back to the default cap.
inline unsigned long long enumeration_cap_from_env()
{
    if (const char* v = std::getenv("TAMBARA_MAX_ORACLE")) {
        char* end = nullptr;
        unsigned long long cap = std::strtoull(v, &end, 10);
        if (end != v && *end == '\0')
            return cap;
    }
    return default_enumeration_cap;
}

} // namespace tambara
