#ifndef COVAR_MULTIPOLY_HPP
#define COVAR_MULTIPOLY_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "covar/errors.hpp"
#include "covar/rational.hpp"

namespace covar {

using Exponents = std::vector<std::uint32_t>;
using VarList = std::shared_ptr<const std::vector<std::string>>;

inline VarList make_vars(std::vector<std::string> names) {
    std::unordered_set<std::string> seen;
    for (const auto& n : names) {
        if (n.empty()) throw InputError("empty variable name");
        if (!seen.insert(n).second) throw InputError("duplicate variable '" + n + "'");
    }
    return std::make_shared<const std::vector<std::string>>(std::move(names));
}

/// Variables prefix0, prefix1, ..., prefix{count-1}.
inline VarList indexed_vars(const std::string& prefix, std::size_t count) {
    std::vector<std::string> names;
    names.reserve(count);
    for (std::size_t i = 0; i < count; ++i) names.push_back(prefix + std::to_string(i));
    return make_vars(std::move(names));
}

namespace detail {

inline const VarList& empty_vars() {
    static const VarList empty = std::make_shared<const std::vector<std::string>>();
    return empty;
}

inline bool same_vars(const VarList& a, const VarList& b) { return a == b || *a == *b; }

inline VarList unite(const VarList& a, const VarList& b) {
    if (same_vars(a, b) || b->empty()) return a;
    if (a->empty()) return b;
    std::vector<std::string> names = *a;
    for (const auto& n : *b)
        if (std::find(names.begin(), names.end(), n) == names.end()) names.push_back(n);
    if (names.size() == a->size()) return a;
    return std::make_shared<const std::vector<std::string>>(std::move(names));
}

inline unsigned degree(const Exponents& e) {
    unsigned d = 0;
    for (auto x : e) d += x;
    return d;
}

// Graded lexicographic comparison; the first declared variable is most significant.
inline int grlex_cmp(const Exponents& a, const Exponents& b) {
    unsigned da = degree(a), db = degree(b);
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

struct ExponentsHash {
    std::size_t operator()(const Exponents& e) const noexcept {
        std::size_t h = 1469598103934665603ULL;
        for (auto x : e) {
            h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
    }
};

}  // namespace detail

struct Term {
    Exponents exps;
    Rational coeff;
};

/// Sparse multivariate polynomial over the rationals. Terms are kept sorted
/// in descending graded-lex order with no zero coefficients. Binary
/// operations between polynomials over different variable lists work over
/// the union of the two lists.
class MultiPoly {
public:
    MultiPoly() : vars_(detail::empty_vars()) {}

    MultiPoly(const Rational& c) : vars_(detail::empty_vars()) {  // NOLINT(google-explicit-constructor)
        if (!c.is_zero()) terms_.push_back({Exponents{}, c});
    }

    template <std::integral I>
    MultiPoly(I c) : MultiPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)

    explicit MultiPoly(VarList vars) : vars_(std::move(vars)) {}

    static MultiPoly constant(VarList vars, const Rational& c) {
        MultiPoly p(std::move(vars));
        if (!c.is_zero()) p.terms_.push_back({Exponents(p.vars_->size(), 0), c});
        return p;
    }

    static MultiPoly variable(VarList vars, std::size_t index) {
        if (index >= vars->size()) throw InputError("variable index out of range");
        MultiPoly p(std::move(vars));
        Exponents e(p.vars_->size(), 0);
        e[index] = 1;
        p.terms_.push_back({std::move(e), Rational(1)});
        return p;
    }

    static MultiPoly variable(VarList vars, std::string_view name) {
        return variable(vars, index_of(*vars, name));
    }

    static MultiPoly monomial(VarList vars, Exponents exps, const Rational& c) {
        if (exps.size() != vars->size()) throw InputError("exponent vector length mismatch", "exponents");
        MultiPoly p(std::move(vars));
        if (!c.is_zero()) p.terms_.push_back({std::move(exps), c});
        return p;
    }

    /// Builds a polynomial from arbitrary terms; like terms are combined.
    static MultiPoly from_terms(VarList vars, std::vector<Term> terms) {
        std::unordered_map<Exponents, Rational, detail::ExponentsHash> acc;
        for (auto& t : terms) {
            if (t.exps.size() != vars->size()) throw InputError("exponent vector length mismatch", "exponents");
            acc[t.exps] += t.coeff;
        }
        return from_map(std::move(vars), std::move(acc));
    }

    const VarList& vars() const { return vars_; }
    std::size_t num_vars() const { return vars_->size(); }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && detail::degree(terms_[0].exps) == 0); }
    Rational constant_value() const {
        if (!is_constant()) throw InputError("polynomial is not constant");
        return terms_.empty() ? Rational(0) : terms_[0].coeff;
    }

    /// -1 for the zero polynomial.
    int total_degree() const { return terms_.empty() ? -1 : static_cast<int>(detail::degree(terms_[0].exps)); }

    unsigned degree_in(std::size_t var) const {
        unsigned d = 0;
        for (const auto& t : terms_) d = std::max(d, t.exps[var]);
        return d;
    }

    const Term& leading_term() const {
        if (terms_.empty()) throw InputError("leading term of zero polynomial");
        return terms_.front();
    }
    const Rational& leading_coefficient() const { return leading_term().coeff; }

    /// Indices of variables occurring with positive exponent.
    std::vector<std::size_t> occurring_vars() const {
        std::vector<bool> used(num_vars(), false);
        for (const auto& t : terms_)
            for (std::size_t i = 0; i < t.exps.size(); ++i)
                if (t.exps[i]) used[i] = true;
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < used.size(); ++i)
            if (used[i]) out.push_back(i);
        return out;
    }

    bool is_homogeneous(unsigned degree) const {
        return std::all_of(terms_.begin(), terms_.end(),
                           [&](const Term& t) { return detail::degree(t.exps) == degree; });
    }

    /// Re-expresses the polynomial over `target`, which must contain every
    /// occurring variable.
    MultiPoly with_vars(const VarList& target) const {
        if (detail::same_vars(vars_, target)) {
            MultiPoly p = *this;
            p.vars_ = target;
            return p;
        }
        std::vector<std::size_t> map(num_vars(), SIZE_MAX);
        for (std::size_t i = 0; i < num_vars(); ++i) {
            auto it = std::find(target->begin(), target->end(), (*vars_)[i]);
            if (it != target->end()) map[i] = static_cast<std::size_t>(it - target->begin());
        }
        MultiPoly p(target);
        p.terms_.reserve(terms_.size());
        for (const auto& t : terms_) {
            Exponents e(target->size(), 0);
            for (std::size_t i = 0; i < t.exps.size(); ++i) {
                if (!t.exps[i]) continue;
                if (map[i] == SIZE_MAX)
                    throw InputError("variable '" + (*vars_)[i] + "' not in target variable list");
                e[map[i]] = t.exps[i];
            }
            p.terms_.push_back({std::move(e), t.coeff});
        }
        p.sort_terms();
        return p;
    }

    MultiPoly& operator+=(const MultiPoly& o) { return *this = add(*this, o, false); }
    MultiPoly& operator-=(const MultiPoly& o) { return *this = add(*this, o, true); }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = mul(*this, o); }
    MultiPoly& operator*=(const Rational& c) {
        if (c.is_zero()) {
            terms_.clear();
        } else {
            for (auto& t : terms_) t.coeff *= c;
        }
        return *this;
    }

    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) { return add(a, b, false); }
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return add(a, b, true); }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) { return mul(a, b); }
    friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
    friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
    friend MultiPoly operator-(MultiPoly a) {
        for (auto& t : a.terms_) t.coeff = -t.coeff;
        return a;
    }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        if (detail::same_vars(a.vars_, b.vars_)) return equal_terms(a.terms_, b.terms_);
        auto u = detail::unite(a.vars_, b.vars_);
        return equal_terms(a.with_vars(u).terms_, b.with_vars(u).terms_);
    }

    MultiPoly pow(unsigned exp) const {
        MultiPoly out = MultiPoly::constant(vars_, Rational(1));
        MultiPoly base = *this;
        while (exp) {
            if (exp & 1U) out *= base;
            exp >>= 1U;
            if (exp) base *= base;
        }
        return out;
    }

    /// Formal partial derivative.
    MultiPoly partial(std::size_t var) const {
        if (var >= num_vars()) throw InputError("unknown variable index " + std::to_string(var), "variable");
        MultiPoly p(vars_);
        for (const auto& t : terms_) {
            if (!t.exps[var]) continue;
            Term d{t.exps, t.coeff * Rational(t.exps[var])};
            --d.exps[var];
            p.terms_.push_back(std::move(d));
        }
        // Differentiation in one variable keeps grlex order among surviving terms.
        return p;
    }

    MultiPoly partial(std::string_view name) const {
        auto it = std::find(vars_->begin(), vars_->end(), name);
        if (it == vars_->end()) throw InputError("unknown variable '" + std::string(name) + "'", "variable");
        return partial(static_cast<std::size_t>(it - vars_->begin()));
    }

    /// Simultaneous substitution; every occurring variable must be bound.
    MultiPoly substitute(const std::map<std::string, MultiPoly>& bindings) const {
        std::vector<const MultiPoly*> images(num_vars(), nullptr);
        for (std::size_t i = 0; i < num_vars(); ++i) {
            auto it = bindings.find((*vars_)[i]);
            if (it != bindings.end()) images[i] = &it->second;
        }
        for (auto i : occurring_vars())
            if (!images[i]) throw InputError("unbound variable '" + (*vars_)[i] + "'", "bindings");
        std::vector<std::vector<MultiPoly>> powers(num_vars());
        MultiPoly out;
        for (const auto& t : terms_) {
            MultiPoly term(t.coeff);
            for (std::size_t i = 0; i < t.exps.size(); ++i) {
                if (!t.exps[i]) continue;
                auto& cache = powers[i];
                if (cache.empty()) cache.push_back(MultiPoly(Rational(1)));
                while (cache.size() <= t.exps[i]) cache.push_back(cache.back() * *images[i]);
                term *= cache[t.exps[i]];
            }
            out += term;
        }
        return out;
    }

    /// Evaluates at `values` (one per variable) in any commutative ring S
    /// constructible from Rational.
    template <class S>
    S evaluate(std::span<const S> values) const {
        if (values.size() != num_vars()) throw InputError("evaluation point has wrong dimension", "point");
        std::vector<std::vector<S>> powers(num_vars());
        S acc = S(Rational(0));
        for (const auto& t : terms_) {
            S term = S(t.coeff);
            for (std::size_t i = 0; i < t.exps.size(); ++i) {
                if (!t.exps[i]) continue;
                auto& cache = powers[i];
                if (cache.empty()) cache.push_back(S(Rational(1)));
                while (cache.size() <= t.exps[i]) cache.push_back(cache.back() * values[i]);
                term = term * cache[t.exps[i]];
            }
            acc = acc + term;
        }
        return acc;
    }

    Rational evaluate(const std::vector<Rational>& values) const {
        return evaluate<Rational>(std::span<const Rational>(values));
    }

    /// Coefficients with respect to one variable: result[k] multiplies var^k.
    std::vector<MultiPoly> coefficients_in(std::size_t var) const {
        std::vector<MultiPoly> out(degree_in(var) + 1, MultiPoly(vars_));
        for (const auto& t : terms_) {
            Term c = t;
            c.exps[var] = 0;
            out[t.exps[var]].terms_.push_back(std::move(c));
        }
        for (auto& c : out) c.sort_terms();
        return out;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& t : terms_) {
            Rational c = t.coeff;
            bool neg = c.sign() < 0;
            if (neg) c = -c;
            if (first) {
                if (neg) os << "-";
            } else {
                os << (neg ? " - " : " + ");
            }
            first = false;
            bool has_vars = detail::degree(t.exps) > 0;
            if (!has_vars || !c.is_one()) {
                os << c;
                if (has_vars) os << "*";
            }
            bool first_var = true;
            for (std::size_t i = 0; i < t.exps.size(); ++i) {
                if (!t.exps[i]) continue;
                if (!first_var) os << "*";
                first_var = false;
                os << (*vars_)[i];
                if (t.exps[i] > 1) os << "^" << t.exps[i];
            }
        }
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.str(); }

    static std::size_t index_of(const std::vector<std::string>& vars, std::string_view name) {
        auto it = std::find(vars.begin(), vars.end(), name);
        if (it == vars.end()) throw InputError("unknown variable '" + std::string(name) + "'", "variable");
        return static_cast<std::size_t>(it - vars.begin());
    }

private:
    using Accumulator = std::unordered_map<Exponents, Rational, detail::ExponentsHash>;

    static MultiPoly from_map(VarList vars, Accumulator acc) {
        MultiPoly p(std::move(vars));
        p.terms_.reserve(acc.size());
        for (auto& [e, c] : acc)
            if (!c.is_zero()) p.terms_.push_back({e, std::move(c)});
        p.sort_terms();
        return p;
    }

    void sort_terms() {
        std::sort(terms_.begin(), terms_.end(),
                  [](const Term& a, const Term& b) { return detail::grlex_cmp(a.exps, b.exps) > 0; });
    }

    static bool equal_terms(const std::vector<Term>& a, const std::vector<Term>& b) {
        if (a.size() != b.size()) return false;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i].exps != b[i].exps || a[i].coeff != b[i].coeff) return false;
        return true;
    }

    static std::pair<MultiPoly, MultiPoly> aligned(const MultiPoly& a, const MultiPoly& b) {
        auto u = detail::unite(a.vars_, b.vars_);
        return {a.with_vars(u), b.with_vars(u)};
    }

    static MultiPoly add(const MultiPoly& a, const MultiPoly& b, bool subtract) {
        if (!detail::same_vars(a.vars_, b.vars_)) {
            auto [x, y] = aligned(a, b);
            return add(x, y, subtract);
        }
        MultiPoly out(a.vars_);
        out.terms_.reserve(a.terms_.size() + b.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < a.terms_.size() || j < b.terms_.size()) {
            int c;
            if (i == a.terms_.size()) c = -1;
            else if (j == b.terms_.size()) c = 1;
            else c = detail::grlex_cmp(a.terms_[i].exps, b.terms_[j].exps);
            if (c > 0) {
                out.terms_.push_back(a.terms_[i++]);
            } else if (c < 0) {
                Term t = b.terms_[j++];
                if (subtract) t.coeff = -t.coeff;
                out.terms_.push_back(std::move(t));
            } else {
                Rational s = subtract ? a.terms_[i].coeff - b.terms_[j].coeff : a.terms_[i].coeff + b.terms_[j].coeff;
                if (!s.is_zero()) out.terms_.push_back({a.terms_[i].exps, std::move(s)});
                ++i;
                ++j;
            }
        }
        return out;
    }

    static MultiPoly mul(const MultiPoly& a, const MultiPoly& b) {
        if (!detail::same_vars(a.vars_, b.vars_)) {
            auto [x, y] = aligned(a, b);
            return mul(x, y);
        }
        if (a.is_zero() || b.is_zero()) return MultiPoly(a.vars_);
        if (b.is_constant()) return a * b.terms_[0].coeff;
        if (a.is_constant()) return b * a.terms_[0].coeff;
        if (a.terms_.size() == 1 || b.terms_.size() == 1) {
            // Monomial times polynomial keeps the order.
            const MultiPoly& mono = a.terms_.size() == 1 ? a : b;
            const MultiPoly& poly = a.terms_.size() == 1 ? b : a;
            const Term& m = mono.terms_[0];
            MultiPoly out(a.vars_);
            out.terms_.reserve(poly.terms_.size());
            for (const auto& t : poly.terms_) {
                Term r{t.exps, t.coeff * m.coeff};
                for (std::size_t k = 0; k < r.exps.size(); ++k) r.exps[k] += m.exps[k];
                out.terms_.push_back(std::move(r));
            }
            return out;
        }
        Accumulator acc;
        acc.reserve(a.terms_.size() * b.terms_.size());
        Exponents e(a.num_vars());
        for (const auto& s : a.terms_) {
            for (const auto& t : b.terms_) {
                for (std::size_t k = 0; k < e.size(); ++k) e[k] = s.exps[k] + t.exps[k];
                auto [it, inserted] = acc.try_emplace(e, s.coeff);
                if (inserted) it->second *= t.coeff;
                else it->second += s.coeff * t.coeff;
            }
        }
        return from_map(a.vars_, std::move(acc));
    }

    VarList vars_;
    std::vector<Term> terms_;
};

inline bool is_zero(const MultiPoly& p) { return p.is_zero(); }

/// Exact division a / b; throws InputError when b does not divide a.
inline MultiPoly exact_divide(const MultiPoly& a, const MultiPoly& b) {
    if (b.is_zero()) throw InputError("division by the zero polynomial");
    if (b.is_constant()) return a * (Rational(1) / b.constant_value());
    auto u = detail::unite(a.vars(), b.vars());
    MultiPoly rem = a.with_vars(u);
    MultiPoly div = b.with_vars(u);
    const Term& lead = div.leading_term();
    std::vector<Term> quotient;
    while (!rem.is_zero()) {
        const Term& r = rem.leading_term();
        Exponents e(r.exps.size());
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (r.exps[k] < lead.exps[k]) throw InputError("polynomial division is not exact");
            e[k] = r.exps[k] - lead.exps[k];
        }
        Rational c = r.coeff / lead.coeff;
        MultiPoly q = MultiPoly::monomial(u, e, c);
        quotient.push_back({std::move(e), c});
        rem -= q * div;
    }
    return MultiPoly::from_terms(u, std::move(quotient));
}

}  // namespace covar

#endif
