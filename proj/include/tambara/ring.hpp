#pragma once

/**
 * @file ring.hpp
 * @brief Level rings R_k of the Burnside Tambara functor on Z/p^r.
 *
 * R_k is the Burnside ring of the subgroup H_k (order p^k), written as the
 * free Z-module on X_{k,0}, ..., X_{k,k}, where X_{k,i} is the orbit
 * G/H_i -> G/H_k.  X_{k,k} is the unit.  Multiplication follows
 *
 *     X_{k,i} * X_{k,j} = p^{k - max(i,j)} X_{k, min(i,j)}.
 *
 * The three structure maps along the projection G/H_k -> G/H_l are
 *  - res  : R_l -> R_k  (ring homomorphism)
 *  - ind  : R_k -> R_l  (additive transfer)
 *  - jnd  : R_k -> R_l  (multiplicative transfer, the norm)
 *
 * An alternative basis {1, F_{l,0}, ..., F_{l,l-1}} with
 * F_{l,i} = X_{l,i} - p^{l-i} is exposed through FCoords.
 */

#include <cstddef>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "tambara/errors.hpp"
#include "tambara/integer.hpp"

namespace tambara {

/// G = Z/p^r with subgroup chain H_0 < H_1 < ... < H_r = G.
struct GroupParams {
    unsigned long p = 2;
    unsigned r = 0;

    GroupParams() = default;
    GroupParams(unsigned long p_, unsigned r_) : p(p_), r(r_)
    {
        if (!is_prime(Int(p)))
            throw BadParams("p = " + std::to_string(p) + " is not prime");
    }

    Int pow(unsigned e) const { return ipow(Int(p), e); }

    void check_level(unsigned level) const
    {
        if (level > r)
            throw LevelError("level " + std::to_string(level) + " exceeds rank " +
                             std::to_string(r));
    }

    friend bool operator==(const GroupParams&, const GroupParams&) = default;
};

class Element {
public:
    Element(GroupParams params, unsigned level, IntVec coeffs)
        : params_(params), level_(level), coeffs_(std::move(coeffs))
    {
        params_.check_level(level_);
        if (coeffs_.size() != level_ + 1)
            throw LevelError("element at level " + std::to_string(level_) + " needs " +
                             std::to_string(level_ + 1) + " coefficients, got " +
                             std::to_string(coeffs_.size()));
    }

    static Element zero(const GroupParams& params, unsigned level)
    {
        params.check_level(level);
        return Element(params, level, IntVec(level + 1, Int(0)));
    }

    static Element constant(const GroupParams& params, unsigned level, const Int& n)
    {
        params.check_level(level);
        IntVec c(level + 1, Int(0));
        c[level] = n;
        return Element(params, level, std::move(c));
    }

    static Element one(const GroupParams& params, unsigned level)
    {
        return constant(params, level, Int(1));
    }

    /// The basis orbit X_{level,i}.
    static Element basis(const GroupParams& params, unsigned level, unsigned i)
    {
        params.check_level(level);
        if (i > level)
            throw LevelError("X[" + std::to_string(level) + "," + std::to_string(i) +
                             "] has i > k");
        IntVec c(level + 1, Int(0));
        c[i] = 1;
        return Element(params, level, std::move(c));
    }

    /// F_{level,i} = X_{level,i} - p^{level-i}.
    static Element f_basis(const GroupParams& params, unsigned level, unsigned i)
    {
        Element x = basis(params, level, i);
        IntVec c = x.coeffs_;
        c[level] -= params.pow(level - i);
        return Element(params, level, std::move(c));
    }

    const GroupParams& params() const { return params_; }
    unsigned level() const { return level_; }
    const IntVec& coeffs() const { return coeffs_; }
    const Int& operator[](std::size_t i) const { return coeffs_[i]; }
    bool is_zero() const { return tambara::is_zero(coeffs_); }

    friend bool operator==(const Element& a, const Element& b)
    {
        return a.params_ == b.params_ && a.level_ == b.level_ && a.coeffs_ == b.coeffs_;
    }

private:
    GroupParams params_;
    unsigned level_;
    IntVec coeffs_;
};

namespace detail {

inline void require_same_level(const Element& a, const Element& b, const char* op)
{
    if (!(a.params() == b.params()))
        throw LevelError(std::string(op) + ": elements over different groups");
    if (a.level() != b.level())
        throw LevelError(std::string(op) + ": level mismatch " + std::to_string(a.level()) +
                         " vs " + std::to_string(b.level()));
}

} // namespace detail

inline Element add(const Element& a, const Element& b)
{
    detail::require_same_level(a, b, "add");
    IntVec c = a.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] += b[i];
    return Element(a.params(), a.level(), std::move(c));
}

inline Element neg(const Element& a)
{
    IntVec c = a.coeffs();
    for (auto& x : c)
        x = -x;
    return Element(a.params(), a.level(), std::move(c));
}

inline Element sub(const Element& a, const Element& b)
{
    return add(a, neg(b));
}

inline Element scale(const Int& n, const Element& a)
{
    IntVec c = a.coeffs();
    for (auto& x : c)
        x *= n;
    return Element(a.params(), a.level(), std::move(c));
}

inline Element mul(const Element& a, const Element& b)
{
    detail::require_same_level(a, b, "mul");
    const unsigned k = a.level();
    const auto& P = a.params();
    IntVec c(k + 1, Int(0));
    for (unsigned i = 0; i <= k; ++i) {
        if (a[i] == 0)
            continue;
        for (unsigned j = 0; j <= k; ++j) {
            if (b[j] == 0)
                continue;
            const unsigned lo = std::min(i, j), hi = std::max(i, j);
            c[lo] += a[i] * b[j] * P.pow(k - hi);
        }
    }
    return Element(P, k, std::move(c));
}

inline Element power(const Element& a, unsigned long e)
{
    Element out = Element::one(a.params(), a.level());
    Element base = a;
    while (e) {
        if (e & 1)
            out = mul(out, base);
        e >>= 1;
        if (e)
            base = mul(base, base);
    }
    return out;
}

inline Element operator+(const Element& a, const Element& b) { return add(a, b); }
inline Element operator-(const Element& a, const Element& b) { return sub(a, b); }
inline Element operator-(const Element& a) { return neg(a); }
inline Element operator*(const Element& a, const Element& b) { return mul(a, b); }
inline Element operator*(const Int& n, const Element& a) { return scale(n, a); }

inline Element one(const GroupParams& params, unsigned level) { return Element::one(params, level); }
inline Element zero(const GroupParams& params, unsigned level) { return Element::zero(params, level); }

/// Coordinates in the basis {1, F_{l,0}, ..., F_{l,l-1}}.
struct FCoords {
    unsigned level = 0;
    Int m_top;
    IntVec f;

    friend bool operator==(const FCoords&, const FCoords&) = default;
};

// sum m_i X_i = (m_k + sum_{i<k} m_i p^{k-i}) + sum_{i<k} m_i F_i
inline FCoords to_f(const Element& a)
{
    const unsigned k = a.level();
    FCoords out;
    out.level = k;
    out.m_top = a[k];
    out.f.assign(a.coeffs().begin(), a.coeffs().begin() + k);
    for (unsigned i = 0; i < k; ++i)
        out.m_top += a[i] * a.params().pow(k - i);
    return out;
}

inline Element from_f(const GroupParams& params, const FCoords& c)
{
    const unsigned k = c.level;
    if (c.f.size() != k)
        throw LevelError("F-coordinates at level " + std::to_string(k) + " need " +
                         std::to_string(k) + " entries");
    IntVec x(k + 1);
    Int top = c.m_top;
    for (unsigned i = 0; i < k; ++i) {
        x[i] = c.f[i];
        top -= c.f[i] * params.pow(k - i);
    }
    x[k] = top;
    return Element(params, k, std::move(x));
}

/// res^l_k: X_{l,i} -> p^{l-k} X_{k,i} for i <= k, p^{l-i} for i >= k.
inline Element res(const Element& a, unsigned target)
{
    const unsigned l = a.level();
    if (target > l)
        throw LevelError("res: target level " + std::to_string(target) + " above source " +
                         std::to_string(l));
    const auto& P = a.params();
    IntVec c(target + 1, Int(0));
    for (unsigned i = 0; i <= l; ++i) {
        if (i <= target)
            c[i] += P.pow(l - target) * a[i];
        else
            c[target] += P.pow(l - i) * a[i];
    }
    return Element(P, target, std::move(c));
}

/// ind^l_k: X_{k,i} -> X_{l,i}.
inline Element ind(const Element& a, unsigned target)
{
    const unsigned k = a.level();
    if (target < k)
        throw LevelError("ind: target level " + std::to_string(target) + " below source " +
                         std::to_string(k));
    a.params().check_level(target);
    IntVec c(target + 1, Int(0));
    for (unsigned i = 0; i <= k; ++i)
        c[i] = a[i];
    return Element(a.params(), target, std::move(c));
}

/**
 * jnd^l_k in closed form.  With m_0..m_k the X-coordinates of a:
 *
 *   coefficient of X_{l,l}          : m_k
 *   coefficient of X_{l,i}, k<=i<l  : (m_k^{p^{l-i}} - m_k^{p^{l-i-1}}) / p^{l-i}
 *   coefficient of X_{l,i}, i<k     : (T_i^{p^{l-k}} - T_{i+1}^{p^{l-k}}) / p^{l-i}
 *
 * where T_i = sum_{s=i}^{k} m_s p^{k-s}.  Every quotient is exact.
 */
inline Element jnd(const Element& a, unsigned target)
{
    const unsigned k = a.level();
    if (target < k)
        throw LevelError("jnd: target level " + std::to_string(target) + " below source " +
                         std::to_string(k));
    const auto& P = a.params();
    P.check_level(target);
    const unsigned l = target;
    IntVec c(l + 1, Int(0));
    const Int& mk = a[k];
    c[l] = mk;
    for (unsigned i = k; i < l; ++i) {
        Int num = ipow(mk, upow(P.p, l - i)) - ipow(mk, upow(P.p, l - i - 1));
        c[i] = exact_div(num, P.pow(l - i), "jnd (upper range)");
    }
    if (k > 0) {
        // tails[i] = T_i for i = 0..k, tails[k+1] = 0
        IntVec tails(k + 2, Int(0));
        for (int s = static_cast<int>(k); s >= 0; --s)
            tails[s] = tails[s + 1] + a[s] * P.pow(k - s);
        const unsigned long e = upow(P.p, l - k);
        Int prev = ipow(tails[k], e);
        for (int i = static_cast<int>(k) - 1; i >= 0; --i) {
            Int cur = ipow(tails[i], e);
            c[i] = exact_div(cur - prev, P.pow(l - i), "jnd (lower range)");
            prev = std::move(cur);
        }
    }
    return Element(P, l, std::move(c));
}

/**
 * Canonical text: signed combination of X[k,i] terms in increasing i, the
 * unit written as a bare integer, e.g. "3*X[2,0] - X[2,1] + 5".
 */
inline std::string to_string(const Element& a)
{
    std::ostringstream os;
    bool first = true;
    const unsigned k = a.level();
    for (unsigned i = 0; i <= k; ++i) {
        const Int& c = a[i];
        if (c == 0)
            continue;
        Int mag = abs(c);
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        if (i == k) {
            os << mag.get_str();
        } else {
            if (mag != 1)
                os << mag.get_str() << "*";
            os << "X[" << k << "," << i << "]";
        }
        first = false;
    }
    if (first)
        os << "0";
    return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const Element& a)
{
    return os << to_string(a);
}

} // namespace tambara
