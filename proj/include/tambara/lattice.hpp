#pragma once

/**
 * @file lattice.hpp
 * @brief Subgroups of Z^n in canonical Hermite normal form.
 *
 * Convention: row-style, upper triangular echelon form.  Pivot columns
 * strictly increase down the rows, every pivot is positive, and each entry
 * above a pivot lies in [0, pivot).  Zero rows are never stored, so the
 * zero lattice has rank 0.  Two lattices are equal iff their bases are
 * identical.
 *
 * Entries are arbitrary precision; dimensions are expected to be tiny.
 */

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tambara/errors.hpp"
#include "tambara/integer.hpp"

namespace tambara {

using Matrix = std::vector<IntVec>;

namespace hnf_detail {

struct Echelon {
    Matrix pivot_rows; // rows with a pivot among the leading columns
    Matrix rest;       // rows that vanish on the leading columns
};

inline void axpy(IntVec& dst, const Int& q, const IntVec& src)
{
    for (std::size_t t = 0; t < dst.size(); ++t)
        dst[t] -= q * src[t];
}

/* Integer row echelon form with pivots restricted to the first `lead`
 * columns.  Only unimodular row operations are used, so the row space of
 * the full rows is preserved, and `rest` spans exactly the row-space
 * vectors that vanish on the leading block. */
inline Echelon echelon(Matrix a, std::size_t lead)
{
    std::size_t r = 0;
    for (std::size_t c = 0; c < lead && r < a.size(); ++c) {
        for (std::size_t i = r + 1; i < a.size(); ++i) {
            if (a[i][c] == 0)
                continue;
            if (a[r][c] == 0) {
                std::swap(a[r], a[i]);
                continue;
            }
            const Int x = a[r][c], y = a[i][c];
            Int g, s, t;
            gcdext(x, y, g, s, t);
            const Int xg = x / g, yg = y / g;
            IntVec top(a[r].size()), bottom(a[r].size());
            for (std::size_t col = 0; col < a[r].size(); ++col) {
                top[col] = s * a[r][col] + t * a[i][col];
                bottom[col] = yg * a[r][col] - xg * a[i][col];
            }
            a[r] = std::move(top);
            a[i] = std::move(bottom);
        }
        if (a[r][c] == 0)
            continue;
        if (a[r][c] < 0)
            for (auto& v : a[r])
                v = -v;
        for (std::size_t i = 0; i < r; ++i) {
            if (a[i][c] == 0)
                continue;
            Int q = floor_div(a[i][c], a[r][c]);
            if (q != 0)
                axpy(a[i], q, a[r]);
        }
        ++r;
    }
    Echelon out;
    out.pivot_rows.assign(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(r));
    out.rest.assign(a.begin() + static_cast<std::ptrdiff_t>(r), a.end());
    return out;
}

inline Matrix hnf(Matrix a, std::size_t n)
{
    return echelon(std::move(a), n).pivot_rows;
}

inline std::size_t pivot_col(const IntVec& row)
{
    for (std::size_t c = 0; c < row.size(); ++c)
        if (row[c] != 0)
            return c;
    return row.size();
}

} // namespace hnf_detail

/// Homomorphism Z^n -> Z^m, acting on column vectors.
struct IntMap {
    std::size_t m = 0; // codomain dimension
    std::size_t n = 0; // domain dimension
    Matrix a;          // m rows, n columns

    IntMap() = default;
    IntMap(std::size_t rows, std::size_t cols) : m(rows), n(cols), a(rows, IntVec(cols, Int(0))) {}

    /// Build from the images of the standard basis vectors.
    static IntMap from_columns(std::size_t codim, const std::vector<IntVec>& columns)
    {
        IntMap f(codim, columns.size());
        for (std::size_t j = 0; j < columns.size(); ++j) {
            if (columns[j].size() != codim)
                throw DimensionMismatch("IntMap column has wrong length");
            for (std::size_t i = 0; i < codim; ++i)
                f.a[i][j] = columns[j][i];
        }
        return f;
    }

    IntVec apply(const IntVec& v) const
    {
        if (v.size() != n)
            throw DimensionMismatch("IntMap::apply: expected length " + std::to_string(n));
        IntVec out(m, Int(0));
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j)
                out[i] += a[i][j] * v[j];
        return out;
    }
};

class Lattice {
public:
    Lattice() = default;

    static Lattice zero(std::size_t n) { return Lattice(n, {}); }

    static Lattice full(std::size_t n)
    {
        Matrix id(n, IntVec(n, Int(0)));
        for (std::size_t i = 0; i < n; ++i)
            id[i][i] = 1;
        return Lattice(n, std::move(id));
    }

    static Lattice from_generators(std::size_t n, const std::vector<IntVec>& gens)
    {
        for (const auto& g : gens)
            if (g.size() != n)
                throw DimensionMismatch("generator of length " + std::to_string(g.size()) +
                                        " in Z^" + std::to_string(n));
        return Lattice(n, hnf_detail::hnf(gens, n));
    }

    /// Trusts that `rows` is already canonical; used by deserialization after re-checking.
    static Lattice from_canonical(std::size_t n, Matrix rows)
    {
        Lattice l = from_generators(n, rows);
        if (l.rows_ != rows)
            throw PreconditionViolated("basis is not in canonical Hermite normal form");
        return l;
    }

    std::size_t dim() const { return n_; }
    std::size_t rank() const { return rows_.size(); }
    const Matrix& basis() const { return rows_; }
    bool is_zero() const { return rows_.empty(); }

    bool contains(const IntVec& v) const { return coordinates(v).has_value(); }

    /// Coefficients of v in this basis, or nullopt when v is not in the lattice.
    std::optional<IntVec> coordinates(const IntVec& v) const
    {
        if (v.size() != n_)
            throw DimensionMismatch("vector of length " + std::to_string(v.size()) + " vs Z^" +
                                    std::to_string(n_));
        IntVec w = v;
        IntVec coords(rows_.size());
        std::size_t next = 0; // first column not yet cleared
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const std::size_t c = hnf_detail::pivot_col(rows_[r]);
            for (; next < c; ++next)
                if (w[next] != 0)
                    return std::nullopt;
            if (!divides(rows_[r][c], w[c]))
                return std::nullopt;
            coords[r] = w[c] / rows_[r][c];
            hnf_detail::axpy(w, coords[r], rows_[r]);
            next = c + 1;
        }
        for (; next < n_; ++next)
            if (w[next] != 0)
                return std::nullopt;
        return coords;
    }

    friend bool operator==(const Lattice&, const Lattice&) = default;

private:
    Lattice(std::size_t n, Matrix rows) : n_(n), rows_(std::move(rows)) {}

    std::size_t n_ = 0;
    Matrix rows_;
};

namespace detail {

inline void require_same_dim(const Lattice& a, const Lattice& b, const char* op)
{
    if (a.dim() != b.dim())
        throw DimensionMismatch(std::string(op) + ": Z^" + std::to_string(a.dim()) + " vs Z^" +
                                std::to_string(b.dim()));
}

} // namespace detail

inline Lattice from_generators(std::size_t n, const std::vector<IntVec>& gens)
{
    return Lattice::from_generators(n, gens);
}

inline bool contains(const Lattice& l, const IntVec& v) { return l.contains(v); }

/// M is a subset of L.
inline bool includes(const Lattice& l, const Lattice& m)
{
    detail::require_same_dim(l, m, "includes");
    for (const auto& row : m.basis())
        if (!l.contains(row))
            return false;
    return true;
}

inline bool equals(const Lattice& l, const Lattice& m)
{
    detail::require_same_dim(l, m, "equals");
    return l == m;
}

inline Lattice sum(const Lattice& l, const Lattice& m)
{
    detail::require_same_dim(l, m, "sum");
    Matrix gens = l.basis();
    gens.insert(gens.end(), m.basis().begin(), m.basis().end());
    return Lattice::from_generators(l.dim(), gens);
}

/* Rows (x, x) for x in L and (y, 0) for y in M; echelonizing on the first
 * block leaves exactly the tails a.L with a.L + b.M = 0, i.e. L meet M. */
inline Lattice intersect(const Lattice& l, const Lattice& m)
{
    detail::require_same_dim(l, m, "intersect");
    const std::size_t n = l.dim();
    Matrix aug;
    for (const auto& x : l.basis()) {
        IntVec row = x;
        row.insert(row.end(), x.begin(), x.end());
        aug.push_back(std::move(row));
    }
    for (const auto& y : m.basis()) {
        IntVec row = y;
        row.resize(2 * n, Int(0));
        aug.push_back(std::move(row));
    }
    auto ech = hnf_detail::echelon(std::move(aug), n);
    Matrix tails;
    for (const auto& row : ech.rest)
        tails.emplace_back(row.begin() + static_cast<std::ptrdiff_t>(n), row.end());
    return Lattice::from_generators(n, tails);
}

/// { v in Z^n : f(v) in M }.
inline Lattice preimage(const IntMap& f, const Lattice& target)
{
    if (target.dim() != f.m)
        throw DimensionMismatch("preimage: map lands in Z^" + std::to_string(f.m) +
                                ", lattice lives in Z^" + std::to_string(target.dim()));
    const std::size_t m = f.m, n = f.n;
    Matrix aug;
    for (std::size_t v = 0; v < n; ++v) {
        IntVec row(m + n, Int(0));
        for (std::size_t i = 0; i < m; ++i)
            row[i] = f.a[i][v];
        row[m + v] = 1;
        aug.push_back(std::move(row));
    }
    for (const auto& y : target.basis()) {
        IntVec row = y;
        row.resize(m + n, Int(0));
        aug.push_back(std::move(row));
    }
    auto ech = hnf_detail::echelon(std::move(aug), m);
    Matrix tails;
    for (const auto& row : ech.rest)
        tails.emplace_back(row.begin() + static_cast<std::ptrdiff_t>(m), row.end());
    return Lattice::from_generators(n, tails);
}

/// Image of L under f.
inline Lattice image(const IntMap& f, const Lattice& l)
{
    if (l.dim() != f.n)
        throw DimensionMismatch("image: lattice dimension does not match map domain");
    std::vector<IntVec> gens;
    for (const auto& row : l.basis())
        gens.push_back(f.apply(row));
    return Lattice::from_generators(f.m, gens);
}

/// Invariant factors d_1 | d_2 | ... of a matrix, all positive.
inline IntVec smith_diagonal(Matrix a)
{
    if (a.empty())
        return {};
    const std::size_t cols = a[0].size();
    auto transpose = [](const Matrix& x, std::size_t c) {
        Matrix t(c, IntVec(x.size()));
        for (std::size_t i = 0; i < x.size(); ++i)
            for (std::size_t j = 0; j < c; ++j)
                t[j][i] = x[i][j];
        return t;
    };
    auto is_diagonal = [](const Matrix& x) {
        for (std::size_t i = 0; i < x.size(); ++i)
            for (std::size_t j = 0; j < x[i].size(); ++j)
                if (i != j && x[i][j] != 0)
                    return false;
        return true;
    };
    std::size_t c = cols;
    a = hnf_detail::hnf(std::move(a), c);
    while (!is_diagonal(a)) {
        Matrix t = transpose(a, c);
        c = a.size();
        a = hnf_detail::hnf(std::move(t), c);
    }
    IntVec d;
    for (std::size_t i = 0; i < a.size(); ++i)
        d.push_back(abs(a[i][i]));
    for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = i + 1; j < d.size(); ++j) {
            Int g = gcd(d[i], d[j]), l = lcm(d[i], d[j]);
            d[i] = g;
            d[j] = l;
        }
    return d;
}

struct QuotientStructure {
    IntVec torsion; // invariant factors > 1, each dividing the next
    std::size_t free_rank = 0;

    friend bool operator==(const QuotientStructure&, const QuotientStructure&) = default;
};

/// Structure of super / sub.
inline QuotientStructure invariant_factors(const Lattice& sub, const Lattice& super)
{
    detail::require_same_dim(sub, super, "invariant_factors");
    Matrix coords;
    for (const auto& row : sub.basis()) {
        auto c = super.coordinates(row);
        if (!c)
            throw NotIncluded("invariant_factors: sub is not contained in super");
        coords.push_back(std::move(*c));
    }
    QuotientStructure out;
    out.free_rank = super.rank() - sub.rank();
    for (auto& d : smith_diagonal(std::move(coords)))
        if (d != 1)
            out.torsion.push_back(d);
    return out;
}

/// |super / sub|, or nullopt when the quotient is infinite.
inline std::optional<Int> index(const Lattice& sub, const Lattice& super)
{
    auto q = invariant_factors(sub, super);
    if (q.free_rank != 0)
        return std::nullopt;
    Int out = 1;
    for (const auto& d : q.torsion)
        out *= d;
    return out;
}

} // namespace tambara
