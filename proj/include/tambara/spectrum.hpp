#pragma once

/**
 * @file spectrum.hpp
 * @brief The prime spectrum of the Burnside Tambara functor on Z/p^r.
 *
 * Points are built only through L_op / S_op from a level-0 base ideal:
 *   - Lp          : L^r applied to (p)
 *   - Li0(i)      : L^i applied to the zero ideal of Omega_{H_{r-i}}
 *   - LiSq(i, q)  : L^i S^{r-i} applied to (q), q a prime != p
 */

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "tambara/ideals.hpp"
#include "tambara/primality.hpp"

namespace tambara {

enum class PointKind { Lp, Li0, LiSq };

struct SpectrumPoint {
    PointKind kind;
    unsigned i = 0; // unused for Lp
    Int q;          // LiSq only
    IdealSequence seq;
    TambaraReport tambara;
};

inline std::string label(const SpectrumPoint& pt, unsigned r, unsigned long p)
{
    std::ostringstream os;
    switch (pt.kind) {
    case PointKind::Lp: os << "L^" << r << "(" << p << ")"; break;
    case PointKind::Li0: os << "L^" << pt.i << "(0)"; break;
    case PointKind::LiSq: os << "L^" << pt.i << " S^" << (r - pt.i) << "(" << pt.q.get_str() << ")"; break;
    }
    return os.str();
}

inline const char* kind_name(PointKind k)
{
    switch (k) {
    case PointKind::Lp: return "Lp";
    case PointKind::Li0: return "Li0";
    case PointKind::LiSq: return "LiSq";
    }
    return "?";
}

inline std::vector<Int> validate_prime_set(const GroupParams& P, std::vector<Int> qs)
{
    for (const auto& q : qs) {
        if (q == P.p)
            throw BadPrimeSet("q = " + q.get_str() + " coincides with p");
        if (!is_prime(q))
            throw BadPrimeSet("q = " + q.get_str() + " is not prime");
    }
    std::sort(qs.begin(), qs.end());
    qs.erase(std::unique(qs.begin(), qs.end()), qs.end());
    return qs;
}

inline std::vector<SpectrumPoint> enumerate_spectrum(const GroupParams& P, std::vector<Int> qs,
                                                     int bound = default_sample_bound)
{
    qs = validate_prime_set(P, std::move(qs));
    const unsigned r = P.r;
    std::vector<SpectrumPoint> pts;
    auto push = [&](PointKind kind, unsigned i, Int q, IdealSequence seq) {
        auto rep = check_tambara(seq, bound);
        if (rep.status != TambaraStatus::Certified)
            throw InternalError("spectrum point " + std::string(kind_name(kind)) +
                                " is not certified: " +
                                (rep.details.empty() ? "" : rep.details.front()));
        pts.push_back(SpectrumPoint{kind, i, std::move(q), std::move(seq), std::move(rep)});
    };

    push(PointKind::Lp, r, Int(0),
         apply_ops(IdealSequence::base(P, Int(P.p)), std::string(r, 'L'), bound));
    for (unsigned i = 0; i <= r; ++i) {
        IdealSequence seq = IdealSequence::zero(P, r - i);
        push(PointKind::Li0, i, Int(0), apply_ops(seq, std::string(i, 'L'), bound));
    }
    for (const auto& q : qs) {
        for (unsigned i = 0; i <= r; ++i) {
            bool cert = false;
            auto seq = apply_ops(IdealSequence::base(P, q),
                                 std::string(r - i, 'S') + std::string(i, 'L'), bound, &cert);
            if (!cert)
                throw InternalError("S step for q = " + q.get_str() + " was not closed-form");
            push(PointKind::LiSq, i, q, std::move(seq));
        }
    }
    for (std::size_t a = 0; a < pts.size(); ++a)
        for (std::size_t b = a + 1; b < pts.size(); ++b)
            if (pts[a].seq == pts[b].seq)
                throw InternalError("spectrum points " + label(pts[a], r, P.p) + " and " +
                                    label(pts[b], r, P.p) + " coincide");
    return pts;
}

struct Poset {
    std::vector<std::vector<bool>> below; // below[a][b]: point a strictly inside point b
    std::vector<std::pair<std::size_t, std::size_t>> covers;
};

/// Pairwise inclusions and the covering edges (a, b) meaning a is covered by b.
inline Poset inclusion_poset(const std::vector<SpectrumPoint>& pts)
{
    const std::size_t n = pts.size();
    Poset P;
    P.below.assign(n, std::vector<bool>(n, false));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (a != b && includes(pts[b].seq, pts[a].seq))
                P.below[a][b] = true;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            if (!P.below[a][b])
                continue;
            bool between = false;
            for (std::size_t c = 0; c < n && !between; ++c)
                between = P.below[a][c] && P.below[c][b];
            if (!between)
                P.covers.emplace_back(a, b);
        }
    std::sort(P.covers.begin(), P.covers.end());
    return P;
}

/// Length (edge count) of the longest chain.
inline unsigned dimension(const std::vector<SpectrumPoint>& pts, const Poset& poset)
{
    const std::size_t n = pts.size();
    std::vector<int> depth(n, -1);
    // depth[a] = longest chain starting at a going upward
    auto go = [&](auto&& self, std::size_t a) -> int {
        if (depth[a] >= 0)
            return depth[a];
        int best = 0;
        for (std::size_t b = 0; b < n; ++b)
            if (poset.below[a][b])
                best = std::max(best, 1 + self(self, b));
        return depth[a] = best;
    };
    int best = 0;
    for (std::size_t a = 0; a < n; ++a)
        best = std::max(best, go(go, a));
    return static_cast<unsigned>(best);
}

inline unsigned dimension(const std::vector<SpectrumPoint>& pts)
{
    return dimension(pts, inclusion_poset(pts));
}

/**
 * Non-inclusions that must hold among the classified points:
 *   L^j(0) not in L^i S^{r-i}(q) for j > i,
 *   L^r(p) and L^r(q) incomparable.
 * Also checks L^i(0) strictly inside L^i S^{r-i}(q) and L^r(0) inside L^r(p).
 * Returns human-readable failures (empty when everything holds).
 */
inline std::vector<std::string> check_expected_relations(const GroupParams& G,
                                                         const std::vector<SpectrumPoint>& pts,
                                                         const Poset& poset)
{
    std::vector<std::string> bad;
    auto find = [&](PointKind k, unsigned i, const Int& q) -> std::size_t {
        for (std::size_t t = 0; t < pts.size(); ++t)
            if (pts[t].kind == k && (k == PointKind::Lp || pts[t].i == i) &&
                (k != PointKind::LiSq || pts[t].q == q))
                return t;
        throw InternalError("missing spectrum point");
    };
    const unsigned r = G.r;
    const std::size_t lp = find(PointKind::Lp, r, 0);
    if (!poset.below[find(PointKind::Li0, r, 0)][lp])
        bad.push_back("L^r(0) is not inside L^r(p)");
    std::set<Int> qs;
    for (const auto& pt : pts)
        if (pt.kind == PointKind::LiSq)
            qs.insert(pt.q);
    for (const auto& q : qs) {
        const std::size_t lq = find(PointKind::LiSq, r, q);
        if (poset.below[lp][lq] || poset.below[lq][lp])
            bad.push_back("L^r(p) and L^r(" + q.get_str() + ") are comparable");
        for (unsigned i = 0; i <= r; ++i) {
            const std::size_t s = find(PointKind::LiSq, i, q);
            if (!poset.below[find(PointKind::Li0, i, 0)][s])
                bad.push_back("L^" + std::to_string(i) + "(0) not strictly inside L^" +
                              std::to_string(i) + " S^" + std::to_string(r - i) + "(" +
                              q.get_str() + ")");
            for (unsigned j = i + 1; j <= r; ++j)
                if (poset.below[find(PointKind::Li0, j, 0)][s])
                    bad.push_back("L^" + std::to_string(j) + "(0) inside L^" + std::to_string(i) +
                                  " S^" + std::to_string(r - i) + "(" + q.get_str() + ")");
        }
    }
    return bad;
}

/// Graphviz rendering of the covering relation, smaller ideals at the bottom.
inline std::string to_dot(const GroupParams& G, const std::vector<SpectrumPoint>& pts,
                          const Poset& poset)
{
    std::ostringstream os;
    os << "digraph spec {\n  rankdir=BT;\n";
    for (std::size_t a = 0; a < pts.size(); ++a)
        os << "  n" << a << " [label=\"" << label(pts[a], G.r, G.p) << "\"];\n";
    for (const auto& [a, b] : poset.covers)
        os << "  n" << a << " -> n" << b << ";\n";
    os << "}\n";
    return os.str();
}

} // namespace tambara
