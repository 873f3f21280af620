#ifndef COVAR_TRANSVECTANT_HPP
#define COVAR_TRANSVECTANT_HPP

#include <algorithm>
#include <vector>

#include "covar/errors.hpp"
#include "covar/rational.hpp"
#include "covar/sl2rep.hpp"

namespace covar {

struct TransvectionSpec {
    int d = 0;
    int e = 0;
    int r = 0;

    void validate() const {
        if (d < 0 || e < 0) throw InputError("negative degree", "degree");
        if (r < 0 || r > std::min(d, e)) throw InputError("transvection order out of range", "r");
    }
    int result_degree() const { return d + e - 2 * r; }
};

/// d^(a+b) f / dx^a dy^b, a form of degree d - a - b.
template <class S>
BinaryForm<S> partial_xy(const BinaryForm<S>& f, int a, int b) {
    const int d = f.degree();
    if (a < 0 || b < 0 || a + b > d) throw InputError("derivative order exceeds degree");
    BinaryForm<S> out = BinaryForm<S>::zero(d - a - b);
    for (int k = a; k <= d - b; ++k) {
        const S& c = f[static_cast<std::size_t>(k)];
        if (scalar_is_zero(c)) continue;
        Rational w(BigInt(falling(k, a) * falling(d - k, b)));
        out.coeffs()[static_cast<std::size_t>(k - a)] = c * w;
    }
    return out;
}

/// The r-th transvection
///   (f, h)_r = sum_i (-1)^i C(r,i) d^r f/dx^(r-i)dy^i * d^r h/dx^i dy^(r-i).
template <class S>
BinaryForm<S> transvection(const BinaryForm<S>& f, const BinaryForm<S>& h, int r) {
    TransvectionSpec spec{f.degree(), h.degree(), r};
    spec.validate();
    BinaryForm<S> out = BinaryForm<S>::zero(spec.result_degree());
    for (int i = 0; i <= r; ++i) {
        auto df = partial_xy(f, r - i, i);
        if (df.is_zero()) continue;
        auto dh = partial_xy(h, i, r - i);
        if (dh.is_zero()) continue;
        Rational c(binomial(r, i));
        if (i % 2) c = -c;
        out = out + multiply(df, dh) * S(c);
    }
    return out;
}

/// (f, f)_r; vanishes identically for odd r.
template <class S>
BinaryForm<S> quad_transvectant(const BinaryForm<S>& f, int r) {
    if (r < 0 || r > f.degree()) throw InputError("transvectant order out of range", "r");
    return transvection(f, f, r);
}

/// Leading constant of (x^(m-1) y^(m+1), x^(m-1) y^(m+1))_r, as an
/// alternating sum of rising factorials.
inline Rational cmr_sum(int m, int r) {
    if (m < 1) throw InputError("m must be positive", "m");
    if (r < 0 || r % 2 != 0 || r >= 2 * m) throw InputError("r must be even with 0 <= r < 2m", "r");
    BigInt total = 0;
    for (long i = r - m + 1; i <= m - 1; ++i) {
        if (i < 0 || i > r) continue;
        BigInt t = binomial(r, i) * pochhammer(m - r + i, r - i) * pochhammer(m - i + 2, i) * pochhammer(m - i, i) *
                   pochhammer(m - r + i + 2, r - i);
        if (i % 2) total -= t;
        else total += t;
    }
    return Rational(total);
}

/// Closed form (-1)^s (2s)! (s!)^2 C(m-1,s) C(m+1,s) C(2m-s,s) of cmr_sum(m, 2s).
inline Rational cmr_closed(int m, int s) {
    if (m < 1) throw InputError("m must be positive", "m");
    if (s < 0 || s >= m) throw InputError("s must satisfy 0 <= s < m", "s");
    BigInt fs = factorial(s);
    BigInt v = factorial(2 * s) * fs * fs * binomial(m - 1, s) * binomial(m + 1, s) * binomial(2 * m - s, s);
    if (s % 2) v = -v;
    return Rational(v);
}

/// ((m+1)!^2 / m^2) * sum_{i=1}^{m-1} (-1)^i C(m,i-1) C(m,i) C(m,i+1).
inline Rational konvalinka_cmm(int m) {
    if (m < 1) throw InputError("m must be positive", "m");
    BigInt sum = 0;
    for (long i = 1; i <= m - 1; ++i) {
        BigInt t = binomial(m, i - 1) * binomial(m, i) * binomial(m, i + 1);
        if (i % 2) sum -= t;
        else sum += t;
    }
    BigInt f = factorial(m + 1);
    return Rational(BigInt(f * f * sum)) / Rational(BigInt(BigInt(m) * m));
}

}  // namespace covar

#endif
