// Reference computations, independent of the main algorithms, used to
// cross-check them in the tests and verification suites.
#ifndef COVAR_ORACLES_HPP
#define COVAR_ORACLES_HPP

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>
#include <vector>

#include "covar/linalg.hpp"
#include "covar/matrix.hpp"
#include "covar/sl2rep.hpp"
#include "covar/univariate.hpp"

namespace covar::oracle {

// Determinant by cofactor expansion along the first row.
inline UPoly det(const std::vector<std::vector<UPoly>>& m) {
    const std::size_t n = m.size();
    if (n == 0) return UPoly({Rational(1)});
    if (n == 1) return m[0][0];
    UPoly out;
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        std::vector<std::vector<UPoly>> minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<UPoly> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            minor.push_back(std::move(row));
        }
        UPoly term = m[0][j] * det(minor);
        out = (j % 2 == 0) ? out + term : out - term;
    }
    return out;
}

// tI - A over Q[t].
inline std::vector<std::vector<UPoly>> char_matrix(const Matrix<Rational>& a) {
    const std::size_t n = a.rows();
    std::vector<std::vector<UPoly>> m(n, std::vector<UPoly>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i][j] = UPoly({-a(i, j), Rational(i == j ? 1 : 0)});
    return m;
}

// Degree of the minimal polynomial: the characteristic polynomial divided by
// the gcd of all (n-1)-minors of tI - A.
inline int minimal_polynomial_degree(const Matrix<Rational>& a) {
    const std::size_t n = a.rows();
    auto m = char_matrix(a);
    UPoly g;
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            std::vector<std::vector<UPoly>> minor;
            for (std::size_t i = 0; i < n; ++i) {
                if (i == r) continue;
                std::vector<UPoly> row;
                for (std::size_t k = 0; k < n; ++k)
                    if (k != c) row.push_back(m[i][k]);
                minor.push_back(std::move(row));
            }
            g = gcd(g, det(minor));
        }
    return det(m).degree() - g.degree();
}

// Quotient of f by the binary form g when g divides f exactly.
inline std::optional<BinaryForm<Rational>> divide_form(const BinaryForm<Rational>& f, const BinaryForm<Rational>& g) {
    // Long division on coefficient vectors, highest x-power first.
    int dg = g.degree(), df = f.degree();
    if (dg > df) return std::nullopt;
    int lead = dg;
    while (lead >= 0 && g[static_cast<std::size_t>(lead)].is_zero()) --lead;
    if (lead < 0) return std::nullopt;
    std::vector<Rational> r = f.coeffs();
    std::vector<Rational> q(static_cast<std::size_t>(df - dg) + 1);
    for (int k = df - dg; k >= 0; --k) {
        // x^k y^(df-dg-k) times g reaches x^(k+lead).
        Rational c = r[static_cast<std::size_t>(k + lead)] / g[static_cast<std::size_t>(lead)];
        q[static_cast<std::size_t>(k)] = c;
        if (c.is_zero()) continue;
        for (int j = 0; j <= dg; ++j) r[static_cast<std::size_t>(k + j)] -= c * g[static_cast<std::size_t>(j)];
    }
    if (!std::all_of(r.begin(), r.end(), [](const Rational& x) { return x.is_zero(); })) return std::nullopt;
    return BinaryForm<Rational>(df - dg, std::move(q));
}

// Number of times g divides f (f nonzero).
inline int multiplicity(BinaryForm<Rational> f, const BinaryForm<Rational>& g) {
    int k = 0;
    while (f.degree() >= g.degree()) {
        auto q = divide_form(f, g);
        if (!q) break;
        f = std::move(*q);
        ++k;
    }
    return k;
}

struct NullformCase {
    BinaryForm<Rational> form;
    int max_multiplicity = 0;
    bool is_null = false;
};

// A form of degree d built as prod l_i^(k_i) * prod q_j^(e_j) * c, with
// pairwise non-proportional rational linear forms l_i and pairwise coprime
// quadratics q_j = x^2 + c_j y^2 (c_j > 0) that have no rational root. The
// largest multiplicity of a linear factor over the algebraic closure is
// max(k_i, e_j).
inline NullformCase make_nullform_case(std::mt19937_64& rng, int d) {
    auto pick = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };
    NullformCase out;
    BinaryForm<Rational> f(0, {Rational(pick(1, 5)) * (pick(0, 1) ? 1 : -1)});
    int left = d;
    std::vector<std::pair<long, long>> used_lines;  // (alpha, beta) primitive-ish directions
    long next_c = 1;
    while (left > 0) {
        bool linear = left < 2 || pick(0, 3) != 0;
        int max_k = linear ? left : left / 2;
        int k = static_cast<int>(pick(1, std::max(1, std::min(max_k, static_cast<int>(pick(1, d))))));
        BinaryForm<Rational> factor;
        if (linear) {
            long a, b;
            do {
                a = pick(-3, 3);
                b = pick(-3, 3);
            } while ((a == 0 && b == 0) || std::any_of(used_lines.begin(), used_lines.end(), [&](auto& p) {
                         return p.first * b - p.second * a == 0;
                     }));
            used_lines.emplace_back(a, b);
            factor = BinaryForm<Rational>(1, {Rational(b), Rational(a)});  // a x + b y
        } else {
            // x^2 + c y^2 with c > 0 not a square keeps roots irrational and simple.
            long c = next_c;
            do ++c;
            while (static_cast<long>(std::sqrt(static_cast<double>(c))) * static_cast<long>(std::sqrt(static_cast<double>(c))) == c);
            next_c = c;
            factor = BinaryForm<Rational>(2, {Rational(c), 0, 1});
        }
        for (int j = 0; j < k; ++j) f = multiply(f, factor);
        out.max_multiplicity = std::max(out.max_multiplicity, k);
        left -= k * factor.degree();
    }
    out.form = f;
    out.is_null = d == 0 ? false : 2 * out.max_multiplicity > d;
    return out;
}

/// u v u^-1 by explicit 3 x 3 matrix conjugation, returned as (x, y, z).
inline Vec conjugate_unipotent(const Rational& a, const Rational& b, const Rational& c, const Vec& v) {
    Matrix<Rational> u{{1, a, b}, {0, 1, c}, {0, 0, 1}};
    Matrix<Rational> m{{0, v[0], v[1]}, {0, 0, v[2]}, {0, 0, 0}};
    auto r = u * m * inverse(u);
    return {r(0, 1), r(0, 2), r(1, 2)};
}

}  // namespace covar::oracle

#endif
