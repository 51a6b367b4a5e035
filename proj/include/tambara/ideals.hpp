#pragma once

/**
 * @file ideals.hpp
 * @brief Tambara ideals of the Burnside functor as ideal sequences.
 *
 * An ideal of Omega_{H_l} is a sequence [I_0, ..., I_l] of ring ideals
 * I_k of R_k such that for each 1 <= k <= l
 *
 *     ind(I_{k-1}) in I_k,   res(I_k) in I_{k-1},   jnd(I_{k-1}) in I_k.
 *
 * Ring ideals are stored as lattices in X-coordinates.  The L operator
 * appends the largest admissible next ideal (a res-preimage); the S
 * operator appends the smallest one (generated by ind- and jnd-images).
 *
 * S is known in closed form only on the J_{l,k}(x) family; elsewhere
 * S_op returns a generated lower bound and says so.
 */

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tambara/errors.hpp"
#include "tambara/integer.hpp"
#include "tambara/lattice.hpp"
#include "tambara/ring.hpp"

namespace tambara {

inline constexpr int default_sample_bound = 3;

// ---------------------------------------------------------------------------
// Linearizations of the structure maps.

inline IntMap multiplication_map(const Element& c)
{
    const unsigned k = c.level();
    std::vector<IntVec> cols;
    for (unsigned j = 0; j <= k; ++j)
        cols.push_back(mul(c, Element::basis(c.params(), k, j)).coeffs());
    return IntMap::from_columns(k + 1, cols);
}

inline IntMap res_map(const GroupParams& P, unsigned from, unsigned to)
{
    std::vector<IntVec> cols;
    for (unsigned j = 0; j <= from; ++j)
        cols.push_back(res(Element::basis(P, from, j), to).coeffs());
    return IntMap::from_columns(to + 1, cols);
}

inline IntMap ind_map(const GroupParams& P, unsigned from, unsigned to)
{
    std::vector<IntVec> cols;
    for (unsigned j = 0; j <= from; ++j)
        cols.push_back(ind(Element::basis(P, from, j), to).coeffs());
    return IntMap::from_columns(to + 1, cols);
}

// ---------------------------------------------------------------------------

class Ideal {
public:
    Ideal(GroupParams params, unsigned level, Lattice lat)
        : params_(params), level_(level), lat_(std::move(lat))
    {
        params_.check_level(level_);
        if (lat_.dim() != level_ + 1)
            throw DimensionMismatch("ideal at level " + std::to_string(level_) +
                                    " needs a lattice in Z^" + std::to_string(level_ + 1));
    }

    static Ideal zero(const GroupParams& P, unsigned level)
    {
        return Ideal(P, level, Lattice::zero(level + 1));
    }
    static Ideal unit(const GroupParams& P, unsigned level)
    {
        return Ideal(P, level, Lattice::full(level + 1));
    }

    const GroupParams& params() const { return params_; }
    unsigned level() const { return level_; }
    const Lattice& lattice() const { return lat_; }

    bool contains(const Element& a) const
    {
        if (a.level() != level_)
            throw LevelError("ideal membership: element at level " + std::to_string(a.level()) +
                             ", ideal at level " + std::to_string(level_));
        return lat_.contains(a.coeffs());
    }

    std::vector<Element> basis_elements() const
    {
        std::vector<Element> out;
        for (const auto& row : lat_.basis())
            out.emplace_back(params_, level_, row);
        return out;
    }

    /// X_{k,i} * b stays in the lattice for every basis row b.
    bool is_ring_ideal() const
    {
        for (const auto& b : basis_elements())
            for (unsigned i = 0; i <= level_; ++i)
                if (!contains(mul(Element::basis(params_, level_, i), b)))
                    return false;
        return true;
    }

    friend bool operator==(const Ideal& a, const Ideal& b)
    {
        return a.params_ == b.params_ && a.level_ == b.level_ && a.lat_ == b.lat_;
    }

private:
    GroupParams params_;
    unsigned level_;
    Lattice lat_;
};

inline bool includes(const Ideal& big, const Ideal& small)
{
    if (big.level() != small.level())
        throw LevelError("ideal inclusion across levels");
    return includes(big.lattice(), small.lattice());
}

/// Ring ideal of R_k generated by `gens`: the Z-span of X_{k,i} * g.
inline Ideal ideal_from_generators(const GroupParams& P, unsigned level,
                                   const std::vector<Element>& gens)
{
    P.check_level(level);
    std::vector<IntVec> span;
    for (const auto& g : gens) {
        if (g.level() != level)
            throw LevelError("ideal generator at level " + std::to_string(g.level()) +
                             ", expected " + std::to_string(level));
        for (unsigned i = 0; i <= level; ++i)
            span.push_back(mul(Element::basis(P, level, i), g).coeffs());
    }
    Ideal out(P, level, Lattice::from_generators(level + 1, span));
    if (!out.is_ring_ideal())
        throw InternalError("generated span is not multiplicatively closed");
    return out;
}

inline Ideal ideal_sum(const Ideal& a, const Ideal& b)
{
    if (a.level() != b.level())
        throw LevelError("ideal sum across levels");
    return Ideal(a.params(), a.level(), sum(a.lattice(), b.lattice()));
}

// ---------------------------------------------------------------------------
// J_{l,k}(x) = (x, F_{l,k}, ..., F_{l,l-1}), and (x) when k = l.

struct JDescriptor {
    unsigned level = 0;
    unsigned cut = 0;
    Int x; // >= 0

    friend bool operator==(const JDescriptor&, const JDescriptor&) = default;
};

inline std::string to_string(const JDescriptor& d)
{
    return "J[" + std::to_string(d.level) + "," + std::to_string(d.cut) + "](" + d.x.get_str() +
           ")";
}

inline Ideal J_ideal(const GroupParams& P, unsigned level, unsigned cut, const Int& x)
{
    P.check_level(level);
    if (cut > level)
        throw LevelError("J_ideal: cut " + std::to_string(cut) + " above level " +
                         std::to_string(level));
    std::vector<Element> gens{Element::constant(P, level, x)};
    for (unsigned i = cut; i < level; ++i)
        gens.push_back(Element::f_basis(P, level, i));
    return ideal_from_generators(P, level, gens);
}

/// Generator of I meet Z*1, normalized to be >= 0.
inline Int constant_generator(const Ideal& I)
{
    const unsigned k = I.level();
    IntVec unit(k + 1, Int(0));
    unit[k] = 1;
    Lattice line = Lattice::from_generators(k + 1, {unit});
    Lattice meet = intersect(I.lattice(), line);
    if (meet.is_zero())
        return 0;
    return abs(meet.basis()[0][k]);
}

/// Smallest cut k with J_{l,k}(x) = I, if any.
inline std::optional<JDescriptor> recognize_J(const Ideal& I)
{
    const Int x = constant_generator(I);
    for (unsigned cut = 0; cut <= I.level(); ++cut)
        if (J_ideal(I.params(), I.level(), cut, x) == I)
            return JDescriptor{I.level(), cut, x};
    return std::nullopt;
}

// x = p^{e+1} with e >= 0; returns e+1, or 0 if x is not such a power.
inline unsigned p_power_exponent(const Int& x, unsigned long p)
{
    if (x < p)
        return 0;
    Int y = x;
    unsigned e = 0;
    while (divides(Int(p), y)) {
        y /= p;
        ++e;
    }
    return y == 1 ? e : 0;
}

/**
 * S(I) at level+1 when I is a recognized member of the J family covered by
 * a closed form:
 *   x = 1                      : the unit ideal (jnd(1) = 1)
 *   x = 0 or x prime != p      : J_{l+1,k}(x) for k <= l-1, (x) for k = l
 *   x = p^{e+1}, cut 0         : J_{l+1,0}(p^{e+2}), when l >= 1 or e = 0
 * At level 0 with e >= 1 the norm image misses F_{1,0}: S((p^{e+1})) is
 * (p^{e+2}, p^e F_{1,0}), which is not a J ideal, so no closed form is given.
 */
inline std::optional<Ideal> closed_form_S(const Ideal& I)
{
    const auto& P = I.params();
    const unsigned l = I.level();
    if (l + 1 > P.r)
        throw RankExceeded("S: ideal already at top level " + std::to_string(P.r));
    auto d = recognize_J(I);
    if (!d)
        return std::nullopt;
    if (d->x == 1)
        return Ideal::unit(P, l + 1);
    if (d->x == 0 || (d->x != P.p && is_prime(d->x))) {
        if (d->cut == l)
            return J_ideal(P, l + 1, l + 1, d->x);
        return J_ideal(P, l + 1, d->cut, d->x);
    }
    if (d->cut == 0 && p_power_exponent(d->x, P.p) > 0) {
        if (l == 0 && d->x != P.p)
            return std::nullopt;
        return J_ideal(P, l + 1, 0, d->x * P.p);
    }
    return std::nullopt;
}

/// Closed form of L(J_{l,k}(x)) at level l+1 for the same family, used as a cross-check.
inline std::optional<Ideal> closed_form_L(const Ideal& I)
{
    const auto& P = I.params();
    const unsigned l = I.level();
    if (l + 1 > P.r)
        throw RankExceeded("L: ideal already at top level " + std::to_string(P.r));
    auto d = recognize_J(I);
    if (!d)
        return std::nullopt;
    if (d->x == 1)
        return Ideal::unit(P, l + 1);
    if (d->x == 0 || (d->x != P.p && is_prime(d->x)))
        return J_ideal(P, l + 1, d->cut, d->x);
    if (d->cut == 0 && p_power_exponent(d->x, P.p) > 0)
        return J_ideal(P, l + 1, 0, d->x);
    return std::nullopt;
}

namespace detail {

// Calls fn(w) for every w = sum c_j b_j with c_j in [-bound, bound].
template <class Fn>
void for_each_bounded_combination(const Ideal& I, int bound, Fn&& fn)
{
    const auto basis = I.basis_elements();
    const std::size_t n = basis.size();
    std::vector<int> c(n, -bound);
    while (true) {
        Element w = Element::zero(I.params(), I.level());
        for (std::size_t j = 0; j < n; ++j)
            if (c[j] != 0)
                w = add(w, scale(Int(c[j]), basis[j]));
        fn(w);
        std::size_t j = 0;
        for (; j < n; ++j) {
            if (++c[j] <= bound)
                break;
            c[j] = -bound;
        }
        if (j == n)
            break;
    }
}

} // namespace detail

/**
 * Ideal of R_{l+1} generated by ind(b) for the basis rows b of I and jnd(w)
 * for every w = sum c_j b_j with |c_j| <= bound.  Always contained in S(I).
 */
inline Ideal S_generated(const Ideal& I, int bound = default_sample_bound)
{
    const auto& P = I.params();
    const unsigned l = I.level();
    if (l + 1 > P.r)
        throw RankExceeded("S: ideal already at top level " + std::to_string(P.r));
    std::vector<Element> gens;
    for (const auto& b : I.basis_elements())
        gens.push_back(ind(b, l + 1));
    detail::for_each_bounded_combination(I, bound, [&](const Element& w) {
        if (!w.is_zero())
            gens.push_back(jnd(w, l + 1));
    });
    return ideal_from_generators(P, l + 1, gens);
}

/// L(I) = (res^{l+1}_l)^{-1}(I).
inline Ideal L_ideal(const Ideal& I)
{
    const auto& P = I.params();
    const unsigned l = I.level();
    if (l + 1 > P.r)
        throw RankExceeded("L: ideal already at top level " + std::to_string(P.r));
    Ideal out(P, l + 1, preimage(res_map(P, l + 1, l), I.lattice()));
    if (!out.is_ring_ideal())
        throw InternalError("res-preimage of an ideal is not an ideal");
    return out;
}

// ---------------------------------------------------------------------------

class IdealSequence {
public:
    explicit IdealSequence(std::vector<Ideal> ideals) : ideals_(std::move(ideals))
    {
        if (ideals_.empty())
            throw PreconditionViolated("ideal sequence must contain I_0");
        for (std::size_t k = 0; k < ideals_.size(); ++k) {
            if (ideals_[k].level() != k)
                throw PreconditionViolated("sequence entry " + std::to_string(k) +
                                           " is at level " +
                                           std::to_string(ideals_[k].level()));
            if (!(ideals_[k].params() == ideals_[0].params()))
                throw PreconditionViolated("sequence mixes groups");
        }
    }

    /// All-zero sequence [0, ..., 0] up to `top`.
    static IdealSequence zero(const GroupParams& P, unsigned top)
    {
        std::vector<Ideal> v;
        for (unsigned k = 0; k <= top; ++k)
            v.push_back(Ideal::zero(P, k));
        return IdealSequence(std::move(v));
    }

    /// [(n)] at level 0.
    static IdealSequence base(const GroupParams& P, const Int& n)
    {
        return IdealSequence({J_ideal(P, 0, 0, abs(n))});
    }

    const GroupParams& params() const { return ideals_[0].params(); }
    unsigned top() const { return static_cast<unsigned>(ideals_.size() - 1); }
    const Ideal& operator[](std::size_t k) const { return ideals_.at(k); }
    const std::vector<Ideal>& ideals() const { return ideals_; }

    IdealSequence extended(Ideal next) const
    {
        auto v = ideals_;
        v.push_back(std::move(next));
        return IdealSequence(std::move(v));
    }

    friend bool operator==(const IdealSequence&, const IdealSequence&) = default;

private:
    std::vector<Ideal> ideals_;
};

/// Levelwise inclusion a in b.
inline bool includes(const IdealSequence& b, const IdealSequence& a)
{
    if (a.top() != b.top())
        throw LevelError("sequence inclusion across different tops");
    for (unsigned k = 0; k <= a.top(); ++k)
        if (!includes(b[k], a[k]))
            return false;
    return true;
}

inline IdealSequence restrict(const IdealSequence& seq, unsigned i)
{
    if (i > seq.top())
        throw LevelError("restrict: level " + std::to_string(i) + " above top " +
                         std::to_string(seq.top()));
    return IdealSequence(std::vector<Ideal>(seq.ideals().begin(), seq.ideals().begin() + i + 1));
}

inline IdealSequence L_op(const IdealSequence& seq)
{
    return seq.extended(L_ideal(seq[seq.top()]));
}

struct SResult {
    IdealSequence seq;
    bool certified;
};

inline SResult S_op(const IdealSequence& seq, int bound = default_sample_bound)
{
    const Ideal& top = seq[seq.top()];
    if (auto closed = closed_form_S(top))
        return {seq.extended(*closed), true};
    return {seq.extended(S_generated(top, bound)), false};
}

/// Applies a word over {L, S} left to right, starting from `seq`.
inline IdealSequence apply_ops(IdealSequence seq, const std::string& ops,
                               int bound = default_sample_bound, bool* all_certified = nullptr)
{
    bool cert = true;
    for (char c : ops) {
        if (c == 'L' || c == 'l') {
            seq = L_op(seq);
        } else if (c == 'S' || c == 's') {
            auto r = S_op(seq, bound);
            cert = cert && r.certified;
            seq = std::move(r.seq);
        } else {
            throw PreconditionViolated(std::string("unknown operator '") + c + "'");
        }
    }
    if (all_certified)
        *all_certified = cert;
    return seq;
}

// ---------------------------------------------------------------------------

enum class TambaraStatus { Certified, Sampled, Violated };

inline const char* to_string(TambaraStatus s)
{
    switch (s) {
    case TambaraStatus::Certified: return "certified";
    case TambaraStatus::Sampled: return "sampled";
    case TambaraStatus::Violated: return "violated";
    }
    return "?";
}

struct TambaraReport {
    TambaraStatus status = TambaraStatus::Certified;
    std::vector<std::string> details;

    bool ok() const { return status != TambaraStatus::Violated; }
};

/**
 * Checks the ideal conditions on every level.  ind and res clauses are
 * linear and checked exactly.  The jnd clause is certified through the
 * closed form of S when I_{k-1} is a recognized J ideal (jnd(I_{k-1}) lies
 * in I_k iff S(I_{k-1}) does); otherwise it is checked on bounded
 * combinations of the basis of I_{k-1} and the result is marked sampled.
 */
inline TambaraReport check_tambara(const IdealSequence& seq, int bound = default_sample_bound)
{
    if (bound < 1)
        throw PreconditionViolated("check_tambara: bound must be >= 1");
    const auto& P = seq.params();
    TambaraReport rep;
    auto fail = [&](std::string msg) {
        rep.status = TambaraStatus::Violated;
        rep.details.push_back(std::move(msg));
    };
    for (unsigned k = 0; k <= seq.top(); ++k)
        if (!seq[k].is_ring_ideal())
            fail("I_" + std::to_string(k) + " is not a ring ideal");
    for (unsigned k = 1; k <= seq.top(); ++k) {
        const Ideal& lo = seq[k - 1];
        const Ideal& hi = seq[k];
        const std::string tag = "I(" + std::to_string(k) + ")";
        if (!includes(hi.lattice(), image(ind_map(P, k - 1, k), lo.lattice())))
            fail(tag + ": ind(I_" + std::to_string(k - 1) + ") not in I_" + std::to_string(k));
        if (!includes(lo.lattice(), image(res_map(P, k, k - 1), hi.lattice())))
            fail(tag + ": res(I_" + std::to_string(k) + ") not in I_" + std::to_string(k - 1));
        if (auto s = closed_form_S(lo)) {
            if (!includes(hi, *s))
                fail(tag + ": jnd(I_" + std::to_string(k - 1) + ") not in I_" +
                     std::to_string(k) + " (closed form)");
            continue;
        }
        bool violated = false;
        detail::for_each_bounded_combination(lo, bound, [&](const Element& w) {
            if (!violated && !hi.contains(jnd(w, k))) {
                violated = true;
                fail(tag + ": jnd(" + to_string(w) + ") not in I_" + std::to_string(k));
            }
        });
        if (!violated) {
            if (rep.status == TambaraStatus::Certified)
                rep.status = TambaraStatus::Sampled;
            rep.details.push_back(tag + ": jnd clause sampled with bound " +
                                  std::to_string(bound));
        }
    }
    return rep;
}

} // namespace tambara
