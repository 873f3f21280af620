#ifndef COVAR_INTEGRALS_HPP
#define COVAR_INTEGRALS_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "covar/errors.hpp"
#include "covar/linalg.hpp"
#include "covar/matrix.hpp"
#include "covar/multipoly.hpp"
#include "covar/rational_function.hpp"

namespace covar {

/// sum_i p_i d/dx_i over the coordinates `ambient`.
struct VectorField {
    std::string name;
    VarList ambient;
    std::vector<MultiPoly> components;

    std::size_t dim() const { return ambient->size(); }

    Vec at(const Vec& point) const {
        if (point.size() != dim()) throw InputError("point dimension does not match the ambient space", "point");
        Vec out;
        out.reserve(components.size());
        for (const auto& p : components) out.push_back(p.evaluate(point));
        return out;
    }
};

/// Spanning set of a linear space of vector fields on a common ambient space.
struct FieldFamily {
    std::string name;
    VarList ambient;
    std::vector<VectorField> fields;

    std::size_t dim() const { return ambient->size(); }
};

namespace detail {

inline void require_within(const VarList& ambient, const MultiPoly& p, const char* field) {
    for (auto i : p.occurring_vars()) {
        const auto& v = (*p.vars())[i];
        if (std::find(ambient->begin(), ambient->end(), v) == ambient->end())
            throw InputError("variable '" + v + "' is not an ambient coordinate", field);
    }
}

}  // namespace detail

/// The field xi = Xi(phi) of a polynomial endomorphism phi: its components
/// are those of phi, read in the tangent space.
inline VectorField field_from_endo(const VarList& ambient, const std::vector<MultiPoly>& phi, std::string name = "xi") {
    if (phi.size() != ambient->size()) throw InputError("endomorphism has the wrong number of components", "components");
    VectorField xi{std::move(name), ambient, {}};
    for (const auto& p : phi) {
        detail::require_within(ambient, p, "components");
        xi.components.push_back(p.with_vars(ambient));
    }
    return xi;
}

inline FieldFamily make_family(std::string name, const VarList& ambient, std::vector<VectorField> fields) {
    for (const auto& f : fields)
        if (!detail::same_vars(f.ambient, ambient)) throw InputError("fields do not share the ambient space", "fields");
    return {std::move(name), ambient, std::move(fields)};
}

/// xi applied to a polynomial.
inline MultiPoly lie_derivative(const VectorField& xi, const MultiPoly& p) {
    detail::require_within(xi.ambient, p, "f");
    MultiPoly q = p.with_vars(xi.ambient);
    MultiPoly out(xi.ambient);
    for (std::size_t i = 0; i < xi.dim(); ++i) {
        if (xi.components[i].is_zero()) continue;
        out += xi.components[i] * q.partial(i);
    }
    return out;
}

/// xi f = sum_i p_i df/dx_i, reduced. For f = n/q this is
/// xi(n)/q - (n/q)(xi(q)/q), which keeps every gcd at the size of q.
inline RationalFunction lie_derivative(const VectorField& xi, const RationalFunction& f) {
    MultiPoly dn = lie_derivative(xi, f.num());
    if (f.den().is_constant()) return RationalFunction(dn * (Rational(1) / f.den().constant_value()));
    MultiPoly q = f.den().with_vars(xi.ambient);
    return RationalFunction(dn, q) - f * RationalFunction(lie_derivative(xi, q), q);
}

inline bool is_first_integral(const FieldFamily& family, const RationalFunction& f) {
    detail::require_within(family.ambient, f.num(), "f");
    detail::require_within(family.ambient, f.den(), "f");
    return std::all_of(family.fields.begin(), family.fields.end(),
                       [&](const VectorField& xi) { return lie_derivative(xi, f).is_zero(); });
}

/// D(v) = span{xi(v) : xi in D}.
inline Subspace evaluated_span(const FieldFamily& family, const Vec& v) {
    if (v.size() != family.dim()) throw InputError("point dimension does not match the ambient space", "point");
    std::vector<Vec> rows;
    for (const auto& xi : family.fields) rows.push_back(xi.at(v));
    return span_reduce(rows, family.dim());
}

inline std::size_t distribution_rank_at(const FieldFamily& family, const Vec& v) {
    return evaluated_span(family, v).dim();
}

/// d(X): the rank of the component matrix over the field of rational functions.
inline std::size_t generic_distribution_rank(const FieldFamily& family) {
    if (family.fields.empty()) return 0;
    Matrix<MultiPoly> m(family.fields.size(), family.dim());
    for (std::size_t i = 0; i < family.fields.size(); ++i)
        for (std::size_t j = 0; j < family.dim(); ++j) m(i, j) = family.fields[i].components[j];
    return generic_rank(m);
}

inline std::size_t tdeg_first_integrals(const FieldFamily& family) {
    return family.dim() - generic_distribution_rank(family);
}

/// pi(v) = D(v) as a Pluecker point; v must lie in the open stratum X'.
inline PluckerPoint quotient_point(const FieldFamily& family, const Vec& v, std::optional<std::size_t> generic = std::nullopt) {
    const std::size_t g = generic ? *generic : generic_distribution_rank(family);
    if (g == 0) throw InputError("the family has no nonzero field", "family");
    auto span = evaluated_span(family, v);
    if (span.dim() < g)
        throw StratumError("point lies off the open stratum: rank " + std::to_string(span.dim()) + " < " +
                           std::to_string(g));
    return plucker(span);
}

/// Value of f at a point, or nothing where the denominator vanishes.
inline std::optional<Rational> evaluate_at(const RationalFunction& f, const VarList& ambient, const Vec& v) {
    detail::require_within(ambient, f.num(), "f");
    detail::require_within(ambient, f.den(), "f");
    Rational den = f.den().with_vars(ambient).evaluate(v);
    if (den.is_zero()) return std::nullopt;
    return f.num().with_vars(ambient).evaluate(v) / den;
}

/// Coordinates a_ij (1-based) of n x n matrices, row-major.
inline VarList matrix_coordinates(std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j) names.push_back("a" + std::to_string(i) + "_" + std::to_string(j));
    return make_vars(std::move(names));
}

namespace detail {

inline FieldFamily matrix_power_family(std::string name, const VarList& coords, std::size_t n) {
    Matrix<MultiPoly> a(n, n), p(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            a(i, j) = MultiPoly::variable(coords, i * n + j);
            p(i, j) = MultiPoly::constant(coords, Rational(i == j ? 1 : 0));
        }
    std::vector<VectorField> fields;
    for (std::size_t k = 0; k < n; ++k) {
        fields.push_back(field_from_endo(coords, p.data(), k == 0 ? "A^0" : "A^" + std::to_string(k)));
        p = p * a;
    }
    return make_family(std::move(name), coords, std::move(fields));
}

}  // namespace detail

/// {xi_I, xi_A} on 2 x 2 matrices with coordinates (a, b, c, d).
inline FieldFamily gl2_adjoint() {
    return detail::matrix_power_family("gl2_adjoint", make_vars({"a", "b", "c", "d"}), 2);
}

/// {xi from A -> A^i : 0 <= i < n} on n x n matrices.
inline FieldFamily gln_adjoint(std::size_t n) {
    if (n < 1 || n > 8) throw InputError("gln_adjoint needs 1 <= n <= 8", "n");
    return detail::matrix_power_family("gln_adjoint(" + std::to_string(n) + ")", matrix_coordinates(n), n);
}

/// {xi_id, xi from the constant (0, 1, 0)} on the Lie algebra of strictly
/// upper triangular 3 x 3 matrices, coordinates (x, y, z).
inline FieldFamily u3() {
    auto v = make_vars({"x", "y", "z"});
    auto id = field_from_endo(v, {MultiPoly::variable(v, 0), MultiPoly::variable(v, 1), MultiPoly::variable(v, 2)}, "id");
    auto c = field_from_endo(
        v, {MultiPoly::constant(v, 0), MultiPoly::constant(v, 1), MultiPoly::constant(v, 0)}, "phi0");
    return make_family("u3", v, {id, c});
}

/// Ad(u) v for u = [[1,a,b],[0,1,c],[0,0,1]] and v = [[0,x,y],[0,0,z],[0,0,0]].
inline Vec unipotent_ad(const Rational& a, const Rational& /*b*/, const Rational& c, const Vec& v) {
    if (v.size() != 3) throw InputError("point must have 3 coordinates", "point");
    return {v[0], v[1] + a * v[2] - c * v[0], v[2]};
}

/// "gl2_adjoint", "gln_adjoint(n)" or "u3".
inline FieldFamily builtin_family(const std::string& name) {
    if (name == "gl2_adjoint") return gl2_adjoint();
    if (name == "u3") return u3();
    const std::string pre = "gln_adjoint(";
    if (name.size() > pre.size() + 1 && name.compare(0, pre.size(), pre) == 0 && name.back() == ')') {
        auto digits = name.substr(pre.size(), name.size() - pre.size() - 1);
        if (!digits.empty() && digits.size() <= 2 &&
            std::all_of(digits.begin(), digits.end(), [](char ch) { return ch >= '0' && ch <= '9'; }))
            return gln_adjoint(static_cast<std::size_t>(std::stoi(digits)));
    }
    throw InputError("unknown family '" + name + "'", "family");
}

}  // namespace covar

#endif
