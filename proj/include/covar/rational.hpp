#ifndef COVAR_RATIONAL_HPP
#define COVAR_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstddef>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

#include "covar/errors.hpp"

namespace covar {

using BigInt = mpz_class;

/// Exact rational number in lowest terms with positive denominator.
/// Serializes as "n/d", or "n" when the denominator is 1.
class Rational {
public:
    Rational() = default;

    template <std::signed_integral I>
    Rational(I value) : q_(static_cast<long>(value)) {}  // NOLINT(google-explicit-constructor)

    template <std::unsigned_integral I>
    Rational(I value) : q_(static_cast<unsigned long>(value)) {}  // NOLINT(google-explicit-constructor)

    Rational(const BigInt& value) : q_(value) {}  // NOLINT(google-explicit-constructor)

    Rational(const BigInt& num, const BigInt& den) {
        if (den == 0) throw InputError("rational with zero denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }

    explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    /// Parses "n", "-n", "n/d". Whitespace and decimal points are rejected.
    static Rational parse(std::string_view text, const std::string& field = {}) {
        auto fail = [&]() -> Rational {
            throw InputError("malformed rational '" + std::string(text) + "'", field);
        };
        if (text.empty()) return fail();
        auto slash = text.find('/');
        auto valid_int = [](std::string_view s, bool allow_sign) {
            if (s.empty()) return false;
            std::size_t i = 0;
            if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
            if (i == s.size()) return false;
            for (; i < s.size(); ++i)
                if (s[i] < '0' || s[i] > '9') return false;
            return true;
        };
        std::string_view num = text.substr(0, slash);
        std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
        if (!valid_int(num, true) || !valid_int(den, false)) return fail();
        std::string ns(num);
        if (!ns.empty() && ns[0] == '+') ns.erase(0, 1);
        BigInt n(ns, 10);
        BigInt d(std::string(den), 10);
        if (d == 0) throw InputError("rational with zero denominator '" + std::string(text) + "'", field);
        return Rational(n, d);
    }

    BigInt numerator() const { return q_.get_num(); }
    BigInt denominator() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_one() const { return q_ == 1; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    std::string str() const { return q_.get_str(); }
    const mpq_class& raw() const { return q_; }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw InputError("division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    mpq_class q_{0};
};

inline bool is_zero(const Rational& r) { return r.is_zero(); }

/// Zero test for any scalar type with an is_zero overload found by ADL.
template <class S>
bool scalar_is_zero(const S& x) {
    return is_zero(x);
}

inline Rational pow(const Rational& base, unsigned exp) {
    Rational out(1);
    Rational b = base;
    while (exp) {
        if (exp & 1U) out *= b;
        exp >>= 1U;
        if (exp) b *= b;
    }
    return out;
}

/// Binomial coefficient with C(n, k) = 0 for k < 0 or k > n.
inline BigInt binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

inline BigInt factorial(long n) {
    if (n < 0) throw InputError("factorial of a negative number");
    BigInt out;
    mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
    return out;
}

/// Rising factorial x (x+1) ... (x+n-1); empty product for n <= 0.
inline BigInt pochhammer(long x, long n) {
    BigInt out = 1;
    for (long j = 0; j < n; ++j) out *= (x + j);
    return out;
}

/// Falling factorial x (x-1) ... (x-n+1).
inline BigInt falling(long x, long n) {
    BigInt out = 1;
    for (long j = 0; j < n; ++j) out *= (x - j);
    return out;
}

}  // namespace covar

template <>
struct std::hash<covar::Rational> {
    std::size_t operator()(const covar::Rational& r) const noexcept {
        return std::hash<std::string>{}(r.str());
    }
};

#endif
