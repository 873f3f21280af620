#ifndef COVAR_RATIONAL_FUNCTION_HPP
#define COVAR_RATIONAL_FUNCTION_HPP

#include <algorithm>
#include <random>
#include <string>
#include <utility>

#include "covar/errors.hpp"
#include "covar/multipoly.hpp"
#include "covar/univariate.hpp"

namespace covar {

namespace detail {

inline MultiPoly make_monic(const MultiPoly& p) {
    if (p.is_zero()) return p;
    return p * (Rational(1) / p.leading_coefficient());
}

inline std::size_t main_variable(const MultiPoly& a, const MultiPoly& b) {
    std::size_t best = 0;
    bool found = false;
    for (const auto* p : {&a, &b})
        for (auto v : p->occurring_vars())
            if (!found || v > best) {
                best = v;
                found = true;
            }
    return found ? best : SIZE_MAX;
}

// p as a univariate polynomial in `var` after binding every other variable
// to the given values.
inline UPoly specialize(const MultiPoly& p, std::size_t var, const std::vector<Rational>& values) {
    std::vector<Rational> c(p.degree_in(var) + 1);
    for (const auto& t : p.terms()) {
        Rational v = t.coeff;
        for (std::size_t i = 0; i < t.exps.size(); ++i)
            if (i != var)
                for (std::uint32_t k = 0; k < t.exps[i]; ++k) v *= values[i];
        c[t.exps[var]] += v;
    }
    return UPoly(std::move(c));
}

// True when gcd(a, b) certainly does not involve `var`: at a point that
// keeps both degrees in `var`, the specialized gcd is constant, and
// specialization can only raise the degree of the gcd. False means undecided.
inline bool gcd_free_of(const MultiPoly& a, const MultiPoly& b, std::size_t var) {
    const unsigned da = a.degree_in(var), db = b.degree_in(var);
    if (da == 0 || db == 0) return true;
    std::mt19937_64 rng(0xc0ffee + var);
    for (int attempt = 0; attempt < 2; ++attempt) {
        std::vector<Rational> values;
        for (std::size_t i = 0; i < a.num_vars(); ++i) values.emplace_back(static_cast<long>(rng() % 97) - 48);
        UPoly ua = specialize(a, var, values), ub = specialize(b, var, values);
        if (ua.degree() != static_cast<int>(da) || ub.degree() != static_cast<int>(db)) continue;
        return gcd(ua, ub).degree() == 0;
    }
    return false;
}

MultiPoly gcd_rec(const MultiPoly& a, const MultiPoly& b);

inline MultiPoly content(const MultiPoly& p, std::size_t var) {
    MultiPoly g;
    bool first = true;
    for (auto& c : p.coefficients_in(var)) {
        if (c.is_zero()) continue;
        g = first ? c : gcd_rec(g, c);
        first = false;
        if (g.is_constant()) break;
    }
    return g;
}

// Scales p to integer coefficients with gcd 1 and a positive leading term.
inline MultiPoly integer_primitive(const MultiPoly& p) {
    if (p.is_zero()) return p;
    BigInt num = 0, den = 1;
    for (const auto& t : p.terms()) {
        mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), t.coeff.numerator().get_mpz_t());
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.denominator().get_mpz_t());
    }
    Rational scale{BigInt(den), BigInt(num)};
    if (p.leading_coefficient() < 0) scale = -scale;
    return scale == 1 ? p : p * scale;
}

inline MultiPoly primitive_part(const MultiPoly& p, std::size_t var) {
    return integer_primitive(exact_divide(p, content(p, var)));
}

// Pseudo-remainder of a by b with respect to `var`.
inline MultiPoly pseudo_remainder(MultiPoly r, const MultiPoly& b, std::size_t var) {
    const unsigned db = b.degree_in(var);
    auto bc = b.coefficients_in(var);
    const MultiPoly& lcb = bc[db];
    while (!r.is_zero() && r.degree_in(var) >= db) {
        unsigned dr = r.degree_in(var);
        MultiPoly lcr = r.coefficients_in(var)[dr];
        Exponents shift(r.num_vars(), 0);
        shift[var] = dr - db;
        r = lcb * r - lcr * MultiPoly::monomial(r.vars(), shift, Rational(1)) * b;
    }
    return r;
}

// Recursive primitive PRS gcd; inputs nonzero and over the same variable list.
inline MultiPoly gcd_rec(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    std::size_t var = main_variable(a, b);
    if (var == SIZE_MAX) return MultiPoly::constant(a.vars(), Rational(1));
    // A variable the gcd does not involve reduces to the coefficients in it.
    for (auto v : a.occurring_vars())
        if (b.degree_in(v) > 0 && gcd_free_of(a, b, v)) {
            MultiPoly ca = content(a, v);
            if (ca.is_constant()) return MultiPoly::constant(a.vars(), Rational(1));
            return gcd_rec(ca, content(b, v));
        }
    if (a.degree_in(var) == 0) return gcd_rec(a, content(b, var));
    if (b.degree_in(var) == 0) return gcd_rec(content(a, var), b);
    MultiPoly ca = content(a, var), cb = content(b, var);
    MultiPoly c = gcd_rec(ca, cb);
    MultiPoly x = exact_divide(a, ca), y = exact_divide(b, cb);
    if (x.degree_in(var) < y.degree_in(var)) std::swap(x, y);
    MultiPoly g;
    while (true) {
        MultiPoly r = pseudo_remainder(x, y, var);
        if (r.is_zero()) {
            g = primitive_part(y, var);
            break;
        }
        if (r.degree_in(var) == 0) {
            g = MultiPoly::constant(a.vars(), Rational(1));
            break;
        }
        x = std::move(y);
        y = primitive_part(r, var);
    }
    return c * g;
}

}  // namespace detail

/// Monic gcd (leading coefficient 1 in graded-lex order); gcd(0, 0) = 0.
inline MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b) {
    auto u = detail::unite(a.vars(), b.vars());
    return detail::make_monic(detail::gcd_rec(a.with_vars(u), b.with_vars(u)));
}

/// Reduced quotient of polynomials. The denominator is monic in graded-lex
/// order and coprime to the numerator; zero is 0/1.
class RationalFunction {
public:
    RationalFunction() : num_(), den_(Rational(1)) {}
    RationalFunction(const Rational& c) : num_(c), den_(Rational(1)) {}  // NOLINT(google-explicit-constructor)
    RationalFunction(MultiPoly p) : num_(std::move(p)), den_(MultiPoly::constant(num_.vars(), Rational(1))) {}  // NOLINT
    template <std::integral I>
    RationalFunction(I c) : RationalFunction(Rational(c)) {}  // NOLINT(google-explicit-constructor)

    RationalFunction(MultiPoly num, MultiPoly den) {
        if (den.is_zero()) throw InputError("rational function with zero denominator", "den");
        auto u = detail::unite(num.vars(), den.vars());
        num_ = num.with_vars(u);
        den_ = den.with_vars(u);
        reduce();
    }

    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) { return add(a, b, false); }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return add(a, b, true); }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        if (a.is_zero() || b.is_zero()) return RationalFunction(MultiPoly(detail::unite(a.num_.vars(), b.num_.vars())));
        MultiPoly g1 = poly_gcd(a.num_, b.den_), g2 = poly_gcd(b.num_, a.den_);
        return normalized(exact_divide(a.num_, g1) * exact_divide(b.num_, g2),
                          exact_divide(a.den_, g2) * exact_divide(b.den_, g1));
    }
    friend RationalFunction operator*(const RationalFunction& a, const Rational& c) {
        RationalFunction out = a;
        out.num_ *= c;
        if (c.is_zero()) out.den_ = MultiPoly::constant(out.num_.vars(), Rational(1));
        return out;
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.is_zero()) throw InputError("division by the zero rational function");
        return {a.num_ * b.den_, a.den_ * b.num_};
    }
    friend RationalFunction operator-(const RationalFunction& a) {
        RationalFunction out = a;
        out.num_ = -out.num_;
        return out;
    }
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ * b.den_ == b.num_ * a.den_;
    }

    /// Partial derivative by the quotient rule, reduced.
    RationalFunction partial(std::string_view var) const {
        auto has = [&](const MultiPoly& p) {
            return std::find(p.vars()->begin(), p.vars()->end(), var) != p.vars()->end();
        };
        if (!has(num_)) return RationalFunction(MultiPoly::constant(num_.vars(), Rational(0)));
        return {num_.partial(var) * den_ - num_ * den_.partial(var), den_ * den_};
    }

    std::string str() const {
        if (den_.is_constant() && den_.constant_value().is_one()) return num_.str();
        return "(" + num_.str() + ")/(" + den_.str() + ")";
    }

private:
    // Both inputs reduced; only the common part of the denominators can cancel.
    static RationalFunction add(const RationalFunction& a, const RationalFunction& b, bool subtract) {
        const MultiPoly bn = subtract ? -b.num_ : b.num_;
        if (a.den_ == b.den_) return {a.num_ + bn, a.den_};
        MultiPoly g = poly_gcd(a.den_, b.den_);
        MultiPoly ad = exact_divide(a.den_, g), bd = exact_divide(b.den_, g);
        MultiPoly t = a.num_ * bd + bn * ad;
        if (t.is_zero()) return RationalFunction(t);
        MultiPoly g2 = poly_gcd(t, g);
        return normalized(exact_divide(t, g2), ad * exact_divide(b.den_, g2));
    }

    // num / den with num and den already coprime.
    static RationalFunction normalized(MultiPoly num, MultiPoly den) {
        RationalFunction out;
        auto u = detail::unite(num.vars(), den.vars());
        out.num_ = num.with_vars(u);
        out.den_ = den.with_vars(u);
        out.scale_den();
        return out;
    }

    void scale_den() {
        if (num_.is_zero()) {
            den_ = MultiPoly::constant(num_.vars(), Rational(1));
            return;
        }
        Rational lc = den_.leading_coefficient();
        if (!lc.is_one()) {
            Rational inv = Rational(1) / lc;
            num_ *= inv;
            den_ *= inv;
        }
    }

    void reduce() {
        if (num_.is_zero()) {
            den_ = MultiPoly::constant(num_.vars(), Rational(1));
            return;
        }
        if (!den_.is_constant()) {
            MultiPoly g = poly_gcd(num_, den_);
            if (!g.is_constant()) {
                num_ = exact_divide(num_, g);
                den_ = exact_divide(den_, g);
            }
        }
        scale_den();
    }

    MultiPoly num_;
    MultiPoly den_;
};

inline bool is_zero(const RationalFunction& f) { return f.is_zero(); }

}  // namespace covar

#endif
