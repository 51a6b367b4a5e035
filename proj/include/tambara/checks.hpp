#pragma once

// Batch consistency checks shared by the command line tool and the
// acceptance runner.  Each check returns a named pass/fail record whose
// detail names the first counterexample.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "tambara/ideals.hpp"
#include "tambara/jnd_oracle.hpp"
#include "tambara/lattice.hpp"
#include "tambara/primality.hpp"
#include "tambara/ring.hpp"
#include "tambara/spectrum.hpp"

namespace tambara {

struct CheckResult {
    std::string name;
    bool ok = true;
    std::string detail;
    unsigned long long cases = 0;

    void fail(const std::string& why)
    {
        if (ok)
            detail = why;
        ok = false;
    }
};

namespace check_detail {

inline Element random_element(std::mt19937_64& rng, const GroupParams& P, unsigned level, int lo,
                              int hi)
{
    std::uniform_int_distribution<int> d(lo, hi);
    IntVec c(level + 1);
    for (auto& x : c)
        x = d(rng);
    return Element(P, level, std::move(c));
}

inline IntVec random_vec(std::mt19937_64& rng, std::size_t n, int lo, int hi)
{
    std::uniform_int_distribution<int> d(lo, hi);
    IntVec v(n);
    for (auto& x : v)
        x = d(rng);
    return v;
}

inline std::string seq_text(const IdealSequence& s)
{
    std::ostringstream os;
    os << "[";
    for (unsigned k = 0; k <= s.top(); ++k) {
        if (k)
            os << ", ";
        if (auto d = recognize_J(s[k]))
            os << to_string(*d);
        else
            os << "<" << s[k].lattice().rank() << "-dim lattice>";
    }
    os << "]";
    return os.str();
}

/// All words of length n over {L, S} with at least one S.
inline std::vector<std::string> words_with_s(unsigned n)
{
    std::vector<std::string> out;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::string w;
        for (unsigned t = 0; t < n; ++t)
            w += (mask >> t & 1u) ? 'S' : 'L';
        out.push_back(w);
    }
    return out;
}

} // namespace check_detail

/// Count 1 + (r+1)(1+|Q|), dimension r+1, certified points, expected (non-)inclusions.
inline CheckResult check_spectrum_law(const GroupParams& G, const std::vector<Int>& qs, int bound)
{
    CheckResult res{"spectrum count and dimension"};
    auto pts = enumerate_spectrum(G, qs, bound);
    const std::size_t nq = validate_prime_set(G, qs).size();
    const std::size_t want = 1 + (G.r + 1) * (1 + nq);
    res.cases = pts.size();
    if (pts.size() != want)
        res.fail("expected " + std::to_string(want) + " points, got " + std::to_string(pts.size()));
    Poset poset = inclusion_poset(pts);
    const unsigned dim = dimension(pts, poset);
    if (dim != G.r + 1)
        res.fail("dimension " + std::to_string(dim) + ", expected " + std::to_string(G.r + 1));
    for (const auto& pt : pts)
        if (pt.tambara.status != TambaraStatus::Certified)
            res.fail(label(pt, G.r, G.p) + " is not certified");
    for (const auto& msg : check_expected_relations(G, pts, poset))
        res.fail(msg);
    return res;
}

/// No spectrum point admits a witness at the given bound.
inline CheckResult check_points_prime(const GroupParams& G, const std::vector<Int>& qs, int bound)
{
    CheckResult res{"spectrum points survive the falsifier"};
    for (const auto& pt : enumerate_spectrum(G, qs, bound)) {
        PrimeReport rep = falsify_prime(pt.seq, bound);
        res.cases += rep.b_checked;
        if (rep.status != PrimeStatus::NoWitnessFound)
            res.fail(label(pt, G.r, G.p) + ": " + to_string(rep.status));
    }
    return res;
}

/**
 * Sequences built from (p) by a word with at least one S are not prime:
 * the falsifier finds a verified witness, and a = b = p works at the first
 * level produced by S.
 */
inline CheckResult check_p_siblings(const GroupParams& G, int bound)
{
    CheckResult res{"p-fiber siblings are not prime"};
    const auto& P = G;
    for (unsigned n = 1; n <= G.r; ++n)
        for (const auto& w : check_detail::words_with_s(n)) {
            auto seq = apply_ops(IdealSequence::base(P, Int(P.p)), w, bound);
            ++res.cases;
            PrimeReport rep = falsify_prime(seq, bound);
            if (rep.status != PrimeStatus::Witness || !verify_witness(seq, *rep.witness))
                res.fail("word " + w + ": no verified witness at bound " + std::to_string(bound));
            const unsigned k = static_cast<unsigned>(w.find('S')) + 1;
            const Element pk = Element::constant(P, k, Int(P.p));
            if (!verify_witness(seq, Witness{k, k, pk, pk}))
                res.fail("word " + w + ": a = b = p does not witness at level " +
                         std::to_string(k));
        }
    return res;
}

/**
 * [0, ..., 0, (n F_{l,l-1})] is not prime for n >= 2: b = n at level 0 and
 * a = F_{l,l-1} witness P(l).  The lattice decision for that b must find a
 * witness too, and the falsifier must find one at bound max(bound, n).
 */
inline CheckResult check_zero_fiber(const GroupParams& G, int bound, long nmin = 2, long nmax = 5)
{
    CheckResult res{"0-fiber sequences (nF) are not prime"};
    for (unsigned l = 1; l <= G.r; ++l)
        for (long n = nmin; n <= nmax; ++n) {
            auto seq = IdealSequence::zero(G, l - 1).extended(ideal_from_generators(
                G, l, {scale(Int(n), Element::f_basis(G, l, l - 1))}));
            ++res.cases;
            const std::string tag = "l=" + std::to_string(l) + " n=" + std::to_string(n);
            if (!check_tambara(seq, bound).ok()) {
                res.fail(tag + ": not an ideal sequence");
                continue;
            }
            const Element b = Element::constant(G, 0, Int(n));
            if (!verify_witness(seq, Witness{l, 0, b, Element::f_basis(G, l, l - 1)}))
                res.fail(tag + ": a = F, b = n does not verify");
            PkOutcome out = check_Pk_for_b(seq, l, 0, b);
            if (out.holds || !verify_witness(seq, *out.witness))
                res.fail(tag + ": lattice decision found no witness for b = n");
            PrimeReport rep = falsify_prime(seq, std::max<int>(bound, static_cast<int>(n)));
            if (rep.status != PrimeStatus::Witness)
                res.fail(tag + ": falsifier found no witness");
        }
    return res;
}

/// Closed-form norm against census formula on a coefficient grid, plus brute force under the cap.
inline CheckResult check_oracle_grid(unsigned long p, unsigned max_level, int max_coeff,
                                     unsigned long long cap)
{
    CheckResult res{"norm closed form vs section census"};
    GroupParams P(p, max_level);
    unsigned long long brute = 0;
    for (unsigned k = 0; k <= max_level; ++k) {
        IntVec m(k + 1, Int(0));
        while (true) {
            Element a(P, k, m);
            for (unsigned l = k; l <= max_level; ++l) {
                ++res.cases;
                const Element closed = jnd(a, l);
                if (!(closed == jnd_oracle(a, l)))
                    res.fail("jnd^" + std::to_string(l) + "_" + std::to_string(k) + "(" +
                             to_string(a) + ")");
                try {
                    SectionCensus s = enumerate_sections(a, l, cap);
                    ++brute;
                    if (!(census_to_element(s) == closed))
                        res.fail("enumeration disagrees at " + to_string(a) + " -> " +
                                 std::to_string(l));
                } catch (const TooLarge&) {
                }
            }
            std::size_t t = 0;
            for (; t <= k; ++t) {
                if (++m[t] <= max_coeff)
                    break;
                m[t] = 0;
            }
            if (t > k)
                break;
        }
    }
    if (res.ok)
        res.detail = std::to_string(res.cases) + " grid points, " + std::to_string(brute) +
                     " also enumerated";
    return res;
}

/// Randomized structure-map laws; `cases` per law.
inline CheckResult check_structure_laws(unsigned long p, unsigned max_level, int cases, int amp,
                                        std::uint64_t seed)
{
    CheckResult out{"structure-map laws"};
    GroupParams P(p, max_level);
    std::mt19937_64 rng(seed);
    auto lvl = [&](unsigned lo, unsigned hi) {
        return std::uniform_int_distribution<unsigned>(lo, hi)(rng);
    };
    auto rnd = [&](unsigned k) { return check_detail::random_element(rng, P, k, -amp, amp); };
    struct Law {
        const char* name;
        std::function<bool()> run;
    };
    const std::vector<Law> laws = {
        {"res multiplicative",
         [&] {
             unsigned l = lvl(1, max_level), k = lvl(0, l - 1);
             Element a = rnd(l), b = rnd(l);
             return res(a * b, k) == res(a, k) * res(b, k) &&
                    res(a + b, k) == res(a, k) + res(b, k) && res(one(P, l), k) == one(P, k);
         }},
        {"ind additive",
         [&] {
             unsigned l = lvl(1, max_level), k = lvl(0, l - 1);
             Element a = rnd(k), b = rnd(k);
             return ind(a + b, l) == ind(a, l) + ind(b, l);
         }},
        {"jnd multiplicative",
         [&] {
             unsigned l = lvl(1, max_level), k = lvl(0, l - 1);
             Element a = rnd(k), b = rnd(k);
             return jnd(a * b, l) == jnd(a, l) * jnd(b, l) && jnd(one(P, k), l) == one(P, l);
         }},
        {"res o ind = p",
         [&] {
             unsigned k = lvl(0, max_level - 1);
             Element a = rnd(k);
             return res(ind(a, k + 1), k) == scale(Int(p), a);
         }},
        {"res o jnd = p-th power",
         [&] {
             unsigned k = lvl(0, max_level - 1);
             Element a = rnd(k);
             return res(jnd(a, k + 1), k) == power(a, p);
         }},
        {"transitivity",
         [&] {
             unsigned l = lvl(0, max_level), m = lvl(0, l), k = lvl(0, m);
             Element top = rnd(l), bot = rnd(k);
             return res(top, k) == res(res(top, m), k) && ind(bot, l) == ind(ind(bot, m), l) &&
                    jnd(bot, l) == jnd(jnd(bot, m), l);
         }},
    };
    if (max_level == 0) {
        out.detail = "no level pairs at rank 0";
        return out;
    }
    for (const auto& law : laws)
        for (int t = 0; t < cases; ++t) {
            ++out.cases;
            if (!law.run()) {
                out.fail(std::string(law.name) + " fails at case " + std::to_string(t));
                break;
            }
        }
    return out;
}

/// Whenever a closed form for L or S is used, it equals the res-preimage or the generated ideal.
inline CheckResult check_closed_forms_sound(const GroupParams& G, const std::vector<Int>& qs,
                                            unsigned emax = 2)
{
    CheckResult res{"closed forms of L and S match direct computation"};
    std::vector<Int> xs{0, 1};
    for (const auto& q : qs)
        xs.push_back(q);
    for (unsigned e = 0; e <= emax; ++e)
        xs.push_back(G.pow(e + 1));
    for (unsigned l = 0; l < G.r; ++l)
        for (unsigned k = 0; k <= l; ++k)
            for (const auto& x : xs) {
                Ideal J = J_ideal(G, l, k, x);
                ++res.cases;
                const std::string tag = to_string(JDescriptor{l, k, x});
                if (auto L = closed_form_L(J); L && !(*L == L_ideal(J)))
                    res.fail("L closed form wrong at " + tag);
                if (auto S = closed_form_S(J); S && !(*S == S_generated(J, 1)))
                    res.fail("S closed form wrong at " + tag);
            }
    return res;
}

/// Index of consecutive J ideals is q, resp. p, so nothing fits between them.
inline CheckResult check_covering(unsigned long p, const std::vector<Int>& qs, unsigned max_level,
                                  unsigned emax)
{
    CheckResult res{"covering indices"};
    GroupParams P(p, max_level);
    for (unsigned l = 1; l <= max_level; ++l) {
        for (const auto& q : qs)
            for (unsigned k = 0; k < l; ++k) {
                ++res.cases;
                auto idx = index(J_ideal(P, l, k + 1, q).lattice(), J_ideal(P, l, k, q).lattice());
                if (!idx || *idx != q || !is_prime(*idx))
                    res.fail("index of J[" + std::to_string(l) + "," + std::to_string(k + 1) +
                             "](" + q.get_str() + ") is not " + q.get_str());
            }
        for (unsigned e = 0; e <= emax; ++e) {
            ++res.cases;
            auto idx = index(J_ideal(P, l, 0, P.pow(e + 2)).lattice(),
                             J_ideal(P, l, 0, P.pow(e + 1)).lattice());
            if (!idx || *idx != Int(p))
                res.fail("index of J[" + std::to_string(l) + ",0](p^" + std::to_string(e + 2) +
                         ") is not p");
        }
    }
    return res;
}

/// Every {L,S} word from (p) with s letters S ends at J_{l,0}(p^{s+1}), with S from generation.
inline CheckResult check_path_independence(unsigned long p, unsigned max_level)
{
    CheckResult res{"S/L path independence over (p)"};
    GroupParams P(p, max_level);
    for (unsigned l = 1; l <= max_level; ++l)
        for (unsigned mask = 0; mask < (1u << l); ++mask) {
            Ideal cur = J_ideal(P, 0, 0, Int(p));
            unsigned s = 0;
            std::string w;
            for (unsigned t = 0; t < l; ++t) {
                const bool S = mask >> t & 1u;
                s += S;
                w += S ? 'S' : 'L';
                cur = S ? S_generated(cur, 1) : L_ideal(cur);
            }
            ++res.cases;
            if (!(cur == J_ideal(P, l, 0, P.pow(s + 1))))
                res.fail("word " + w + " does not reach J[" + std::to_string(l) + ",0](p^" +
                         std::to_string(s + 1) + ")");
        }
    return res;
}

/// HNF is unchanged by shuffling and unimodular mixing of the generators.
inline CheckResult check_hnf_canonical(int cases, std::uint64_t seed)
{
    CheckResult res{"HNF canonical under generator shuffling"};
    std::mt19937_64 rng(seed);
    for (int t = 0; t < cases; ++t) {
        const std::size_t n = 1 + rng() % 6;
        const std::size_t count = 1 + rng() % (n + 3);
        std::vector<IntVec> g;
        for (std::size_t j = 0; j < count; ++j)
            g.push_back(check_detail::random_vec(rng, n, -20, 20));
        Lattice l = from_generators(n, g);
        auto h = g;
        std::shuffle(h.begin(), h.end(), rng);
        for (std::size_t j = 0; j + 1 < h.size(); ++j) {
            const Int q = static_cast<long>(rng() % 9) - 4;
            for (std::size_t c = 0; c < n; ++c)
                h[j][c] += q * h[j + 1][c];
        }
        ++res.cases;
        if (!(from_generators(n, h) == l)) {
            res.fail("case " + std::to_string(t) + " in Z^" + std::to_string(n));
            break;
        }
    }
    return res;
}

/// v lies in preimage(f, M) exactly when f(v) lies in M.
inline CheckResult check_preimage(int cases, std::uint64_t seed, int probes = 25)
{
    CheckResult res{"preimage membership"};
    std::mt19937_64 rng(seed);
    for (int t = 0; t < cases && res.ok; ++t) {
        const std::size_t n = 1 + rng() % 5, m = 1 + rng() % 5;
        std::vector<IntVec> cols;
        for (std::size_t j = 0; j < n; ++j)
            cols.push_back(check_detail::random_vec(rng, m, -6, 6));
        IntMap f = IntMap::from_columns(m, cols);
        std::vector<IntVec> g;
        for (std::size_t j = 0, c = 1 + rng() % (m + 1); j < c; ++j)
            g.push_back(check_detail::random_vec(rng, m, -9, 9));
        Lattice M = from_generators(m, g);
        Lattice pre = preimage(f, M);
        ++res.cases;
        for (int s = 0; s < probes; ++s) {
            IntVec v = check_detail::random_vec(rng, n, -8, 8);
            // also probe genuine members
            if (s % 2 == 0 && pre.rank() > 0) {
                IntVec mix(n, Int(0));
                for (const auto& row : pre.basis()) {
                    const Int c = static_cast<long>(rng() % 7) - 3;
                    for (std::size_t i = 0; i < n; ++i)
                        mix[i] += c * row[i];
                }
                v = mix;
            }
            if (pre.contains(v) != M.contains(f.apply(v))) {
                res.fail("case " + std::to_string(t));
                break;
            }
        }
    }
    return res;
}

/// index(A, C) = index(A, B) * index(B, C) along random full-rank chains A <= B <= C.
inline CheckResult check_index_chains(int cases, std::uint64_t seed)
{
    CheckResult res{"index multiplicative on chains"};
    std::mt19937_64 rng(seed);
    int done = 0;
    while (done < cases) {
        const std::size_t n = 1 + rng() % 4;
        std::vector<IntVec> gc;
        for (std::size_t j = 0; j < n + 1; ++j)
            gc.push_back(check_detail::random_vec(rng, n, -5, 5));
        Lattice C = from_generators(n, gc);
        if (C.rank() != n)
            continue;
        // B and A by adding random multiples of basis rows
        auto shrink = [&](const Lattice& L) {
            std::vector<IntVec> g;
            for (const auto& row : L.basis()) {
                IntVec r = row;
                const long k = 1 + static_cast<long>(rng() % 4);
                for (auto& x : r)
                    x *= k;
                g.push_back(r);
            }
            g.push_back(L.basis()[rng() % L.rank()]);
            return from_generators(n, g);
        };
        Lattice B = shrink(C), A = shrink(B);
        auto ab = index(A, B), bc = index(B, C), ac = index(A, C);
        ++done;
        ++res.cases;
        if (!ab || !bc || !ac || *ac != *ab * *bc) {
            res.fail("chain " + std::to_string(done));
            break;
        }
    }
    return res;
}

} // namespace tambara
