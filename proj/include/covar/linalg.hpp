#ifndef COVAR_LINALG_HPP
#define COVAR_LINALG_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "covar/errors.hpp"
#include "covar/matrix.hpp"
#include "covar/multipoly.hpp"
#include "covar/rational.hpp"

namespace covar {

using Vec = std::vector<Rational>;

/// Linear subspace of Q^n held as its reduced row echelon basis. Equality of
/// basis matrices is equality of subspaces.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim) {}

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<Vec>& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    /// Residual of v after eliminating against the basis; zero iff v is in the span.
    template <class S>
    std::vector<S> residual(std::vector<S> v) const {
        if (v.size() != ambient_) throw InputError("vector dimension does not match subspace", "vector");
        for (std::size_t k = 0; k < basis_.size(); ++k) {
            S coef = v[pivots_[k]];
            if (scalar_is_zero(coef)) continue;
            for (std::size_t j = 0; j < ambient_; ++j)
                if (!basis_[k][j].is_zero()) v[j] = v[j] - coef * basis_[k][j];
        }
        return v;
    }

    bool contains(const Vec& v) const {
        auto r = residual(v);
        return std::all_of(r.begin(), r.end(), [](const Rational& x) { return x.is_zero(); });
    }

    bool contains(const Subspace& other) const {
        if (other.ambient_ != ambient_) return false;
        return std::all_of(other.basis_.begin(), other.basis_.end(), [&](const Vec& v) { return contains(v); });
    }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }

    /// Coordinate subspace spanned by the given standard basis vectors.
    static Subspace coordinate(std::size_t ambient_dim, const std::vector<std::size_t>& indices);

    friend Subspace span_reduce(const std::vector<Vec>& vectors, std::optional<std::size_t> ambient_dim);

private:
    std::size_t ambient_ = 0;
    std::vector<Vec> basis_;
    std::vector<std::size_t> pivots_;
};

/// Canonical RREF span of the input vectors. `ambient_dim` fixes the
/// dimension of an empty input (default 0).
inline Subspace span_reduce(const std::vector<Vec>& vectors, std::optional<std::size_t> ambient_dim = std::nullopt) {
    std::size_t n = ambient_dim ? *ambient_dim : (vectors.empty() ? 0 : vectors[0].size());
    for (const auto& v : vectors)
        if (v.size() != n) throw InputError("vectors of mixed dimension", "vectors");
    std::vector<Vec> rows;
    rows.reserve(vectors.size());
    for (const auto& v : vectors)
        if (std::any_of(v.begin(), v.end(), [](const Rational& x) { return !x.is_zero(); })) rows.push_back(v);

    Subspace s(n);
    std::size_t r = 0;
    for (std::size_t col = 0; col < n && r < rows.size(); ++col) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][col].is_zero()) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[r], rows[p]);
        Rational inv = Rational(1) / rows[r][col];
        for (std::size_t j = col; j < n; ++j) rows[r][j] *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][col].is_zero()) continue;
            Rational f = rows[i][col];
            for (std::size_t j = col; j < n; ++j)
                if (!rows[r][j].is_zero()) rows[i][j] -= f * rows[r][j];
        }
        s.pivots_.push_back(col);
        ++r;
    }
    rows.resize(r);
    s.basis_ = std::move(rows);
    return s;
}

inline Subspace Subspace::coordinate(std::size_t ambient_dim, const std::vector<std::size_t>& indices) {
    std::vector<Vec> vs;
    for (auto i : indices) {
        if (i >= ambient_dim) throw InputError("coordinate index out of range");
        Vec v(ambient_dim);
        v[i] = 1;
        vs.push_back(std::move(v));
    }
    return span_reduce(vs, ambient_dim);
}

inline Subspace join(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw InputError("subspaces of different ambient dimension");
    std::vector<Vec> vs = a.basis();
    vs.insert(vs.end(), b.basis().begin(), b.basis().end());
    return span_reduce(vs, a.ambient_dim());
}

inline std::size_t rank(const Matrix<Rational>& m) {
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
    return span_reduce(rows, m.cols()).dim();
}

inline Rational determinant(Matrix<Rational> m) {
    if (!m.is_square()) throw InputError("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    Rational det(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m(p, c).is_zero()) ++p;
        if (p == n) return Rational(0);
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
            det = -det;
        }
        det *= m(c, c);
        Rational inv = Rational(1) / m(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m(i, c).is_zero()) continue;
            Rational f = m(i, c) * inv;
            for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
        }
    }
    return det;
}

/// Inverse by Gauss-Jordan; throws PreconditionError on a singular matrix.
inline Matrix<Rational> inverse(const Matrix<Rational>& a) {
    if (!a.is_square()) throw InputError("inverse of a non-square matrix");
    const std::size_t n = a.rows();
    Matrix<Rational> m = a;
    Matrix<Rational> inv = Matrix<Rational>::identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m(p, c).is_zero()) ++p;
        if (p == n) throw PreconditionError("matrix is singular");
        for (std::size_t j = 0; j < n; ++j) {
            std::swap(m(p, j), m(c, j));
            std::swap(inv(p, j), inv(c, j));
        }
        Rational s = Rational(1) / m(c, c);
        for (std::size_t j = 0; j < n; ++j) {
            m(c, j) *= s;
            inv(c, j) *= s;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || m(i, c).is_zero()) continue;
            Rational f = m(i, c);
            for (std::size_t j = 0; j < n; ++j) {
                m(i, j) -= f * m(c, j);
                inv(i, j) -= f * inv(c, j);
            }
        }
    }
    return inv;
}

/// Projective point of a Grassmannian in Pluecker coordinates: integer
/// maximal minors over lexicographically ordered column subsets, primitive,
/// first nonzero entry positive.
struct PluckerPoint {
    std::size_t k = 0;
    std::size_t n = 0;
    std::vector<BigInt> coords;

    friend bool operator==(const PluckerPoint& a, const PluckerPoint& b) {
        return a.k == b.k && a.n == b.n && a.coords == b.coords;
    }
};

/// Lexicographically ordered k-subsets of {0, ..., n-1}.
inline std::vector<std::vector<std::size_t>> k_subsets(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    if (k > n) return out;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        out.push_back(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

/// Pluecker point of the span of linearly independent rows.
inline PluckerPoint plucker_of_rows(const std::vector<Vec>& rows) {
    if (rows.empty()) throw InputError("Pluecker coordinates of the zero subspace", "subspace");
    const std::size_t k = rows.size();
    const std::size_t n = rows[0].size();
    if (k > n) throw InputError("more rows than the ambient dimension", "subspace");
    std::vector<Rational> minors;
    bool nonzero = false;
    for (const auto& cols : k_subsets(n, k)) {
        Matrix<Rational> sub(k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) sub(i, j) = rows[i][cols[j]];
        minors.push_back(determinant(std::move(sub)));
        nonzero = nonzero || !minors.back().is_zero();
    }
    if (!nonzero) throw InputError("rows are linearly dependent", "subspace");
    BigInt lcm = 1;
    for (const auto& m : minors) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m.denominator().get_mpz_t());
    PluckerPoint p{k, n, {}};
    BigInt g = 0;
    for (const auto& m : minors) {
        BigInt v = m.numerator() * (lcm / m.denominator());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        p.coords.push_back(std::move(v));
    }
    int sign = 0;
    for (const auto& c : p.coords)
        if (c != 0) {
            sign = sgn(c);
            break;
        }
    for (auto& c : p.coords) {
        c /= g;
        if (sign < 0) c = -c;
    }
    return p;
}

inline PluckerPoint plucker(const Subspace& s) {
    if (s.dim() == 0) throw InputError("Pluecker coordinates of the zero subspace", "subspace");
    return plucker_of_rows(s.basis());
}

/// Rank over the fraction field of the polynomial ring by fraction-free
/// (Bareiss) elimination with full pivoting on the sparsest nonzero entry.
inline std::size_t generic_rank_bareiss(Matrix<MultiPoly> m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    MultiPoly prev(Rational(1));
    std::size_t k = 0;
    for (; k < std::min(rows, cols); ++k) {
        std::size_t pi = rows, pj = cols, best = SIZE_MAX;
        for (std::size_t i = k; i < rows; ++i)
            for (std::size_t j = k; j < cols; ++j)
                if (!m(i, j).is_zero() && m(i, j).size() < best) {
                    best = m(i, j).size();
                    pi = i;
                    pj = j;
                }
        if (pi == rows) break;
        if (pi != k)
            for (std::size_t j = 0; j < cols; ++j) std::swap(m(pi, j), m(k, j));
        if (pj != k)
            for (std::size_t i = 0; i < rows; ++i) std::swap(m(i, pj), m(i, k));
        for (std::size_t i = k + 1; i < rows; ++i) {
            for (std::size_t j = k + 1; j < cols; ++j)
                m(i, j) = exact_divide(m(k, k) * m(i, j) - m(i, k) * m(k, j), prev);
            m(i, k) = MultiPoly(Rational(0));
        }
        prev = m(k, k);
    }
    return k;
}

/// Numeric rank of a polynomial matrix at a rational point. Variables are
/// bound by name through `vars`.
inline std::size_t rank_at(const Matrix<MultiPoly>& m, const VarList& vars, const Vec& point) {
    Matrix<Rational> num(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            num(i, j) = m(i, j).with_vars(vars).evaluate(point);
    return rank(num);
}

/// Union of the variable lists of all entries.
inline VarList matrix_vars(const Matrix<MultiPoly>& m) {
    VarList u = detail::empty_vars();
    for (const auto& x : m.data()) u = detail::unite(u, x.vars());
    return u;
}

/// Generic rank of a polynomial matrix (its rank over the fraction field).
///
/// A rational specialization never has larger rank than the generic one, so
/// when a deterministic sample point already attains min(rows, cols) that
/// value is certified and elimination is skipped. Otherwise the rank comes
/// from fraction-free elimination.
inline std::size_t generic_rank(const Matrix<MultiPoly>& m) {
    const std::size_t bound = std::min(m.rows(), m.cols());
    if (bound == 0) return 0;
    VarList vars = matrix_vars(m);
    std::mt19937_64 rng(0x5eed);
    for (int trial = 0; trial < 2; ++trial) {
        Vec point;
        for (std::size_t i = 0; i < vars->size(); ++i)
            point.emplace_back(static_cast<long>(rng() % 1999) - 999);
        if (rank_at(m, vars, point) == bound) return bound;
    }
    return generic_rank_bareiss(m);
}

}  // namespace covar

#endif
