// JSON encodings of the library types. Rationals are strings "n" or "n/d";
// polynomials are lists of {"coeff", "exponents"} in the ambient variable
// order, and on input may also be written as expressions like "a - 2*d^2".
#ifndef COVAR_CLI_JSON_IO_HPP
#define COVAR_CLI_JSON_IO_HPP

#include <algorithm>
#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "covar/errors.hpp"
#include "covar/linalg.hpp"
#include "covar/matrix.hpp"
#include "covar/multipoly.hpp"
#include "covar/rational.hpp"
#include "covar/rational_function.hpp"
#include "covar/sl2rep.hpp"
#include "json.hpp"

namespace covar::io {

using json = nlohmann::json;

inline json to_json(const Rational& r) { return r.str(); }

inline json to_json(const Vec& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(to_json(x));
    return out;
}

inline json to_json(const BinaryForm<Rational>& f) { return {{"degree", f.degree()}, {"coeffs", to_json(f.coeffs())}}; }

inline json to_json(const Matrix<Rational>& m) {
    json out = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(to_json(m.row(i)));
    return out;
}

inline json to_json(const Subspace& s) {
    json basis = json::array();
    for (const auto& b : s.basis()) basis.push_back(to_json(b));
    return {{"ambient_dim", s.ambient_dim()}, {"dim", s.dim()}, {"basis", basis}};
}

inline json to_json(const PluckerPoint& p) {
    json coords = json::array();
    for (const auto& c : p.coords) coords.push_back(c.get_str());
    return {{"k", p.k}, {"n", p.n}, {"coords", coords}};
}

inline json to_json(const MultiPoly& p) {
    json out = json::array();
    for (const auto& t : p.terms()) out.push_back({{"coeff", to_json(t.coeff)}, {"exponents", t.exps}});
    return out;
}

/// Self-describing polynomial: {"vars": [...], "terms": [...]}.
inline json to_json_with_vars(const MultiPoly& p) { return {{"vars", *p.vars()}, {"terms", to_json(p)}}; }

/// Terms over `vars`, which must contain every variable of p.
inline json to_json(const MultiPoly& p, const VarList& vars) { return to_json(p.with_vars(vars)); }

inline json to_json(const RationalFunction& f, const VarList& vars) {
    return {{"num", to_json(f.num(), vars)}, {"den", to_json(f.den(), vars)}};
}

inline const json& require(const json& j, const std::string& key, const std::string& path) {
    if (!j.is_object() || !j.contains(key)) throw InputError("missing field '" + key + "'", path.empty() ? key : path + "." + key);
    return j.at(key);
}

inline std::string join_path(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }

inline std::string index_path(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

inline Rational parse_rational(const json& j, const std::string& field) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) return Rational::parse(j.get<std::string>(), field);
    throw InputError("expected a rational as an integer or a string \"n/d\"", field);
}

inline long long parse_int(const json& j, const std::string& field, long long lo, long long hi) {
    if (!j.is_number_integer()) throw InputError("expected an integer", field);
    auto v = j.get<long long>();
    if (v < lo || v > hi)
        throw InputError("value out of range [" + std::to_string(lo) + ", " + std::to_string(hi) + "]", field);
    return v;
}

inline Vec parse_vec(const json& j, const std::string& field) {
    if (!j.is_array()) throw InputError("expected an array of rationals", field);
    Vec v;
    for (std::size_t i = 0; i < j.size(); ++i) v.push_back(parse_rational(j[i], index_path(field, i)));
    return v;
}

inline constexpr int max_form_degree = 64;

/// {"degree": d, "coeffs": [c_0, ..., c_d]}, c_i the coefficient of x^i y^(d-i).
inline BinaryForm<Rational> parse_form(const json& j, const std::string& field) {
    if (!j.is_object()) throw InputError("expected a form {\"degree\", \"coeffs\"}", field);
    int d = static_cast<int>(parse_int(require(j, "degree", field), join_path(field, "degree"), 0, max_form_degree));
    Vec c = parse_vec(require(j, "coeffs", field), join_path(field, "coeffs"));
    if (c.size() != static_cast<std::size_t>(d) + 1)
        throw InputError("expected " + std::to_string(d + 1) + " coefficients", join_path(field, "coeffs"));
    return BinaryForm<Rational>(d, std::move(c));
}

inline Matrix<Rational> parse_matrix(const json& j, const std::string& field) {
    if (!j.is_array() || j.empty()) throw InputError("expected a non-empty array of rows", field);
    const std::size_t rows = j.size();
    std::vector<Rational> data;
    std::size_t cols = 0;
    for (std::size_t i = 0; i < rows; ++i) {
        Vec r = parse_vec(j[i], index_path(field, i));
        if (i == 0) cols = r.size();
        if (r.size() != cols || cols == 0) throw InputError("rows of unequal or zero length", index_path(field, i));
        data.insert(data.end(), r.begin(), r.end());
    }
    return Matrix<Rational>(rows, cols, std::move(data));
}

namespace detail {

// Recursive descent over + - * ^ and parentheses; numeric literals may be
// fractions "n/d", and no other division is allowed.
class PolyParser {
public:
    PolyParser(std::string_view text, VarList vars, std::string field)
        : s_(text), vars_(std::move(vars)), field_(std::move(field)) {}

    MultiPoly parse() {
        MultiPoly p = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw InputError("polynomial syntax: " + what + " at offset " + std::to_string(pos_), field_);
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    MultiPoly expr() {
        MultiPoly p = term();
        while (true) {
            if (eat('+')) p += term();
            else if (eat('-')) p = p - term();
            else return p;
        }
    }
    MultiPoly term() {
        MultiPoly p = factor();
        while (eat('*')) p = p * factor();
        return p;
    }
    MultiPoly factor() {
        if (++depth_ > 200) fail("nesting too deep");
        MultiPoly p;
        if (eat('-')) p = -factor();
        else if (eat('+')) p = factor();
        else {
            p = atom();
            if (eat('^')) {
                skip();
                std::size_t start = pos_;
                while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
                if (start == pos_ || pos_ - start > 3) fail("expected a small exponent");
                auto e = std::stoul(std::string(s_.substr(start, pos_ - start)));
                if (e > 64) fail("exponent above 64");
                p = p.pow(static_cast<unsigned>(e));
            }
        }
        --depth_;
        return p;
    }
    MultiPoly atom() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            MultiPoly p = expr();
            if (!eat(')')) fail("expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (pos_ < s_.size() && s_[pos_] == '/') {
                ++pos_;
                std::size_t dstart = pos_;
                while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
                if (dstart == pos_) fail("expected a denominator");
            }
            return MultiPoly::constant(vars_, Rational::parse(s_.substr(start, pos_ - start), field_));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
            std::string name(s_.substr(start, pos_ - start));
            auto it = std::find(vars_->begin(), vars_->end(), name);
            if (it == vars_->end()) throw InputError("unknown variable '" + name + "'", field_);
            return MultiPoly::variable(vars_, static_cast<std::size_t>(it - vars_->begin()));
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view s_;
    VarList vars_;
    std::string field_;
    std::size_t pos_ = 0;
    int depth_ = 0;
};

}  // namespace detail

inline MultiPoly parse_poly(const json& j, const VarList& vars, const std::string& field) {
    if (j.is_number_integer()) return MultiPoly::constant(vars, Rational(j.get<long long>()));
    if (j.is_string()) return detail::PolyParser(j.get<std::string>(), vars, field).parse();
    if (!j.is_array()) throw InputError("expected a list of {\"coeff\", \"exponents\"} or an expression string", field);
    std::vector<Term> terms;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const auto at = index_path(field, i);
        Rational c = parse_rational(require(j[i], "coeff", at), join_path(at, "coeff"));
        const json& e = require(j[i], "exponents", at);
        if (!e.is_array() || e.size() != vars->size())
            throw InputError("expected " + std::to_string(vars->size()) + " exponents", join_path(at, "exponents"));
        Exponents exps;
        for (std::size_t k = 0; k < e.size(); ++k)
            exps.push_back(static_cast<std::uint32_t>(parse_int(e[k], index_path(join_path(at, "exponents"), k), 0, 64)));
        terms.push_back({std::move(exps), std::move(c)});
    }
    return MultiPoly::from_terms(vars, std::move(terms));
}

/// {"num": poly, "den": poly} with "den" optional, or a bare polynomial.
inline RationalFunction parse_rational_function(const json& j, const VarList& vars, const std::string& field) {
    if (j.is_string() || j.is_number_integer() || j.is_array()) return RationalFunction(parse_poly(j, vars, field));
    if (!j.is_object()) throw InputError("expected {\"num\", \"den\"}", field);
    MultiPoly num = parse_poly(require(j, "num", field), vars, join_path(field, "num"));
    MultiPoly den = j.contains("den") ? parse_poly(j.at("den"), vars, join_path(field, "den"))
                                      : MultiPoly::constant(vars, Rational(1));
    if (den.is_zero()) throw InputError("zero denominator", join_path(field, "den"));
    return RationalFunction(num, den);
}

inline json error_json(const std::string& code, const std::string& field, const std::string& message) {
    return {{"code", code}, {"field", field}, {"message", message}};
}

}  // namespace covar::io

#endif
