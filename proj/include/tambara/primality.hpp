#pragma once

// Primality of ideal sequences, level by level.
//
// [I_0..I_r] is prime iff for every k and every i <= k:
//   a in L_k(I_{k-1}),  b in L_i(I_{i-1}) \ I_i,  a * jnd^k_i(b) in I_k  =>  a in I_k
// with L_0(I_{-1}) = R_0.  For fixed b the set of admissible a with
// a * jnd(b) in I_k is a lattice, so the a-quantifier is decided exactly;
// the b-quantifier is swept over a bounded box.

#include <optional>
#include <string>
#include <vector>

#include "tambara/ideals.hpp"
#include "tambara/lattice.hpp"
#include "tambara/ring.hpp"

namespace tambara {

struct Witness {
    unsigned k = 0;
    unsigned i = 0;
    Element b;
    Element a;
};

/// L_k(I_{k-1}), with L_0 = R_0.
inline Ideal largest_over(const IdealSequence& seq, unsigned k)
{
    if (k == 0)
        return Ideal::unit(seq.params(), 0);
    return L_ideal(seq[k - 1]);
}

inline bool check_P0(const IdealSequence& seq)
{
    const Int n = constant_generator(seq[0]);
    return n == 0 || is_prime(n);
}

struct PkOutcome {
    bool holds = true;
    std::optional<Witness> witness;
};

inline PkOutcome check_Pk_for_b(const IdealSequence& seq, unsigned k, unsigned i, const Element& b)
{
    if (k > seq.top() || i > k)
        throw PreconditionViolated("check_Pk_for_b: need i <= k <= top");
    if (b.level() != i)
        throw PreconditionViolated("check_Pk_for_b: b must live at level " + std::to_string(i));
    if (!largest_over(seq, i).contains(b))
        throw PreconditionViolated("check_Pk_for_b: b is not in L_i(I_{i-1})");
    if (seq[i].contains(b))
        throw PreconditionViolated("check_Pk_for_b: b already lies in I_i");

    const Ideal& Ik = seq[k];
    const Element c = jnd(b, k);
    const Lattice admissible =
        intersect(largest_over(seq, k).lattice(), preimage(multiplication_map(c), Ik.lattice()));
    for (const auto& row : admissible.basis()) {
        if (!Ik.lattice().contains(row))
            return {false, Witness{k, i, b, Element(seq.params(), k, row)}};
    }
    return {true, std::nullopt};
}

/// Re-checks all four memberships of a witness from scratch.
inline bool verify_witness(const IdealSequence& seq, const Witness& w)
{
    if (w.k > seq.top() || w.i > w.k)
        return false;
    if (w.a.level() != w.k || w.b.level() != w.i)
        return false;
    if (!(w.a.params() == seq.params()) || !(w.b.params() == seq.params()))
        return false;
    if (!largest_over(seq, w.i).contains(w.b) || seq[w.i].contains(w.b))
        return false;
    if (!largest_over(seq, w.k).contains(w.a))
        return false;
    if (!seq[w.k].contains(mul(w.a, jnd(w.b, w.k))))
        return false;
    return !seq[w.k].contains(w.a);
}

enum class PrimeStatus { NoWitnessFound, Witness, Improper };

inline const char* to_string(PrimeStatus s)
{
    switch (s) {
    case PrimeStatus::NoWitnessFound: return "no_witness_found";
    case PrimeStatus::Witness: return "witness";
    case PrimeStatus::Improper: return "improper";
    }
    return "?";
}

struct PrimeReport {
    PrimeStatus status = PrimeStatus::NoWitnessFound;
    int bound = default_sample_bound;
    std::optional<Witness> witness;
    unsigned long long b_checked = 0;
};

namespace detail {

// Visits every element of R_i with F-coordinates (f_0..f_{i-1}, m_top) in
// [-bound, bound], lexicographically with f_0 most significant.  Stops when
// fn returns true.
template <class Fn>
bool for_each_bounded_f(const GroupParams& P, unsigned i, int bound, Fn&& fn)
{
    std::vector<int> v(i + 1, -bound);
    while (true) {
        FCoords c;
        c.level = i;
        c.m_top = v[i];
        for (unsigned t = 0; t < i; ++t)
            c.f.push_back(Int(v[t]));
        if (fn(from_f(P, c)))
            return true;
        int t = static_cast<int>(i);
        for (; t >= 0; --t) {
            if (++v[t] <= bound)
                break;
            v[t] = -bound;
        }
        if (t < 0)
            return false;
    }
}

} // namespace detail

/**
 * Sweeps k = 0..top, i = 0..k, and every b at level i with F-coordinates in
 * [-bound, bound] satisfying the preconditions of P(k).  Returns the first
 * witness found.  A clean sweep is evidence, not proof.
 */
inline PrimeReport falsify_prime(const IdealSequence& seq, int bound = default_sample_bound)
{
    if (bound < 1)
        throw PreconditionViolated("falsify_prime: bound must be >= 1");
    PrimeReport rep;
    rep.bound = bound;
    if (constant_generator(seq[0]) == 1) {
        rep.status = PrimeStatus::Improper;
        return rep;
    }
    const auto& P = seq.params();
    for (unsigned k = 0; k <= seq.top(); ++k) {
        for (unsigned i = 0; i <= k; ++i) {
            const Ideal over = largest_over(seq, i);
            const Ideal& Ii = seq[i];
            bool found = detail::for_each_bounded_f(P, i, bound, [&](const Element& b) {
                if (!over.contains(b) || Ii.contains(b))
                    return false;
                ++rep.b_checked;
                auto out = check_Pk_for_b(seq, k, i, b);
                if (out.holds)
                    return false;
                if (!verify_witness(seq, *out.witness))
                    throw InternalError("falsify_prime produced a witness that does not verify");
                rep.witness = out.witness;
                return true;
            });
            if (found) {
                rep.status = PrimeStatus::Witness;
                return rep;
            }
        }
    }
    return rep;
}

} // namespace tambara
