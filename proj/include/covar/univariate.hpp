#ifndef COVAR_UNIVARIATE_HPP
#define COVAR_UNIVARIATE_HPP

#include <utility>
#include <vector>

#include "covar/errors.hpp"
#include "covar/multipoly.hpp"
#include "covar/rational.hpp"

namespace covar {

/// Dense univariate polynomial over the rationals; coeffs[k] multiplies t^k.
/// Always trimmed: the zero polynomial has no coefficients.
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UPoly monomial(std::size_t k, const Rational& c) {
        std::vector<Rational> v(k + 1);
        v[k] = c;
        return UPoly(std::move(v));
    }

    bool is_zero() const { return c_.empty(); }
    /// -1 for zero.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational lead() const { return c_.empty() ? Rational(0) : c_.back(); }
    Rational operator[](std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }

    UPoly monic() const {
        if (is_zero()) return *this;
        Rational inv = Rational(1) / lead();
        UPoly out = *this;
        for (auto& x : out.c_) x *= inv;
        return out;
    }

    UPoly derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<Rational> d(c_.size() - 1);
        for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * Rational(k);
        return UPoly(std::move(d));
    }

    friend UPoly operator+(const UPoly& a, const UPoly& b) {
        std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t k = 0; k < v.size(); ++k) v[k] = a[k] + b[k];
        return UPoly(std::move(v));
    }
    friend UPoly operator-(const UPoly& a, const UPoly& b) {
        std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t k = 0; k < v.size(); ++k) v[k] = a[k] - b[k];
        return UPoly(std::move(v));
    }
    friend UPoly operator*(const UPoly& a, const UPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> v(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
        return UPoly(std::move(v));
    }
    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

    /// Euclidean division: returns {quotient, remainder}.
    friend std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
        if (b.is_zero()) throw InputError("division by the zero polynomial");
        std::vector<Rational> r = a.c_;
        if (a.degree() < b.degree()) return {UPoly{}, a};
        std::vector<Rational> q(a.c_.size() - b.c_.size() + 1);
        Rational inv = Rational(1) / b.lead();
        for (std::size_t k = q.size(); k-- > 0;) {
            Rational f = r[k + b.c_.size() - 1] * inv;
            q[k] = f;
            if (f.is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[k + j] -= f * b.c_[j];
        }
        return {UPoly(std::move(q)), UPoly(std::move(r))};
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<Rational> c_;
};

/// Monic gcd; gcd(0, 0) = 0.
inline UPoly gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

inline UPoly exact_quotient(const UPoly& a, const UPoly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw InternalError("univariate division is not exact");
    return q;
}

struct SquarefreeFactor {
    MultiPoly factor;
    int multiplicity;
};

struct USquarefreeFactor {
    UPoly factor;
    int multiplicity;
};

/// Yun's algorithm on a dense polynomial. Factors are monic, squarefree,
/// pairwise coprime and listed by increasing multiplicity; constant factors
/// are dropped.
inline std::vector<USquarefreeFactor> squarefree_decompose(const UPoly& p) {
    if (p.is_zero()) throw InputError("squarefree decomposition of the zero polynomial");
    std::vector<USquarefreeFactor> out;
    if (p.degree() == 0) return out;
    UPoly dp = p.derivative();
    UPoly b = gcd(p, dp);
    UPoly c = exact_quotient(p, b);
    UPoly d = exact_quotient(dp, b) - c.derivative();
    for (int i = 1; c.degree() > 0; ++i) {
        UPoly a = gcd(c, d);
        if (a.degree() > 0) out.push_back({a, i});
        c = exact_quotient(c, a);
        d = exact_quotient(d, a) - c.derivative();
    }
    return out;
}

/// Converts a polynomial in which at most one variable occurs.
inline std::pair<UPoly, std::size_t> to_univariate(const MultiPoly& p) {
    auto used = p.occurring_vars();
    if (used.size() > 1) throw InputError("polynomial is not univariate");
    std::size_t var = used.empty() ? 0 : used[0];
    std::vector<Rational> c;
    for (const auto& t : p.terms()) {
        std::size_t k = used.empty() ? 0 : t.exps[var];
        if (c.size() <= k) c.resize(k + 1);
        c[k] = t.coeff;
    }
    return {UPoly(std::move(c)), var};
}

inline MultiPoly from_univariate(const UPoly& u, const VarList& vars, std::size_t var) {
    std::vector<Term> terms;
    for (std::size_t k = 0; k < u.coeffs().size(); ++k) {
        if (u.coeffs()[k].is_zero()) continue;
        Exponents e(vars->size(), 0);
        e[var] = static_cast<std::uint32_t>(k);
        terms.push_back({std::move(e), u.coeffs()[k]});
    }
    return MultiPoly::from_terms(vars, std::move(terms));
}

/// Squarefree decomposition of a univariate MultiPoly: the product of
/// factor^multiplicity equals p up to a nonzero constant.
inline std::vector<SquarefreeFactor> squarefree_decompose(const MultiPoly& p) {
    if (p.is_zero()) throw InputError("squarefree decomposition of the zero polynomial", "p");
    auto [u, var] = to_univariate(p);
    std::vector<SquarefreeFactor> out;
    for (auto& f : squarefree_decompose(u)) out.push_back({from_univariate(f.factor, p.vars(), var), f.multiplicity});
    return out;
}

}  // namespace covar

#endif
