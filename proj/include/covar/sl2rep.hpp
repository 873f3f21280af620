#ifndef COVAR_SL2REP_HPP
#define COVAR_SL2REP_HPP

#include <algorithm>
#include <array>
#include <string>
#include <utility>
#include <vector>

#include "covar/errors.hpp"
#include "covar/linalg.hpp"
#include "covar/matrix.hpp"
#include "covar/multipoly.hpp"
#include "covar/rational.hpp"

namespace covar {

/// Binary form of degree d: coeffs[i] multiplies x^i y^(d-i), which spans
/// the torus weight space of weight d - 2i.
template <class S = Rational>
class BinaryForm {
public:
    BinaryForm() = default;
    BinaryForm(int degree, std::vector<S> coeffs) : degree_(degree), coeffs_(std::move(coeffs)) {
        if (degree_ < 0) throw InputError("negative degree", "degree");
        if (coeffs_.size() != static_cast<std::size_t>(degree_) + 1)
            throw InputError("coeffs length must be degree + 1", "coeffs");
    }

    static BinaryForm zero(int degree) {
        if (degree < 0) throw InputError("negative degree", "degree");
        return BinaryForm(degree, std::vector<S>(static_cast<std::size_t>(degree) + 1, S(Rational(0))));
    }

    /// c * x^i y^(d-i).
    static BinaryForm monomial(int degree, int i, const S& c = S(Rational(1))) {
        if (i < 0 || i > degree) throw InputError("monomial index out of range", "i");
        BinaryForm f = zero(degree);
        f.coeffs_[static_cast<std::size_t>(i)] = c;
        return f;
    }

    int degree() const { return degree_; }
    const std::vector<S>& coeffs() const { return coeffs_; }
    std::vector<S>& coeffs() { return coeffs_; }
    const S& operator[](std::size_t i) const { return coeffs_[i]; }

    bool is_zero() const {
        return std::all_of(coeffs_.begin(), coeffs_.end(), [](const S& c) { return scalar_is_zero(c); });
    }

    friend BinaryForm operator+(const BinaryForm& a, const BinaryForm& b) {
        if (a.degree_ != b.degree_) throw InputError("adding forms of different degree");
        BinaryForm out = a;
        for (std::size_t i = 0; i < out.coeffs_.size(); ++i) out.coeffs_[i] = out.coeffs_[i] + b.coeffs_[i];
        return out;
    }
    friend BinaryForm operator-(const BinaryForm& a, const BinaryForm& b) {
        if (a.degree_ != b.degree_) throw InputError("subtracting forms of different degree");
        BinaryForm out = a;
        for (std::size_t i = 0; i < out.coeffs_.size(); ++i) out.coeffs_[i] = out.coeffs_[i] - b.coeffs_[i];
        return out;
    }
    friend BinaryForm operator*(const BinaryForm& a, const S& c) {
        BinaryForm out = a;
        for (auto& x : out.coeffs_) x = x * c;
        return out;
    }
    friend bool operator==(const BinaryForm& a, const BinaryForm& b) {
        return a.degree_ == b.degree_ && a.coeffs_ == b.coeffs_;
    }

private:
    int degree_ = 0;
    std::vector<S> coeffs_{S(Rational(0))};
};

/// Product of binary forms (polynomial multiplication in x, y).
template <class S>
BinaryForm<S> multiply(const BinaryForm<S>& a, const BinaryForm<S>& b) {
    BinaryForm<S> out = BinaryForm<S>::zero(a.degree() + b.degree());
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        if (scalar_is_zero(a[i])) continue;
        for (std::size_t j = 0; j < b.coeffs().size(); ++j) {
            if (scalar_is_zero(b[j])) continue;
            out.coeffs()[i + j] = out.coeffs()[i + j] + a[i] * b[j];
        }
    }
    return out;
}

/// The generic form sum_i a_i x^i y^(d-i) with symbolic coefficients.
inline BinaryForm<MultiPoly> generic_form(int degree, const std::string& prefix = "a") {
    if (degree < 0) throw InputError("negative degree", "degree");
    auto vars = indexed_vars(prefix, static_cast<std::size_t>(degree) + 1);
    std::vector<MultiPoly> c;
    for (std::size_t i = 0; i <= static_cast<std::size_t>(degree); ++i) c.push_back(MultiPoly::variable(vars, i));
    return BinaryForm<MultiPoly>(degree, std::move(c));
}

template <class S>
BinaryForm<S> lift(const BinaryForm<Rational>& f) {
    std::vector<S> c;
    for (const auto& x : f.coeffs()) c.push_back(S(x));
    return BinaryForm<S>(f.degree(), std::move(c));
}

/// Torus weight of the basis monomial x^i y^(d-i).
inline int weight_of(int d, int i) {
    if (d < 0 || i < 0 || i > d) throw InputError("weight index out of range", "i");
    return d - 2 * i;
}

/// Traceless 2x2 rational matrix [[a, b], [c, -a]] = a h + b e + c f.
class Sl2Elem {
public:
    Sl2Elem() = default;
    Sl2Elem(Rational m00, Rational m01, Rational m10, Rational m11)
        : h_(m00), e_(std::move(m01)), f_(std::move(m10)) {
        if (!(m00 + m11).is_zero()) throw InputError("sl2 element must be traceless", "A");
    }

    static Sl2Elem e() { return {0, 1, 0, 0}; }
    static Sl2Elem h() { return {1, 0, 0, -1}; }
    static Sl2Elem f() { return {0, 0, 1, 0}; }

    /// Coefficients in the basis (e, h, f).
    const Rational& e_coeff() const { return e_; }
    const Rational& h_coeff() const { return h_; }
    const Rational& f_coeff() const { return f_; }

    Matrix<Rational> matrix() const { return Matrix<Rational>{{h_, e_}, {f_, -h_}}; }

    static Sl2Elem from_matrix(const Matrix<Rational>& m) {
        if (m.rows() != 2 || m.cols() != 2) throw InputError("sl2 element must be 2x2", "A");
        return {m(0, 0), m(0, 1), m(1, 0), m(1, 1)};
    }

    friend Sl2Elem bracket(const Sl2Elem& a, const Sl2Elem& b) {
        return from_matrix(commutator(a.matrix(), b.matrix()));
    }
    friend bool operator==(const Sl2Elem& a, const Sl2Elem& b) {
        return a.h_ == b.h_ && a.e_ == b.e_ && a.f_ == b.f_;
    }

private:
    Rational h_{0}, e_{0}, f_{0};
};

/// Derivation action of sl2 on V_d: (A p)(v) = -dp_v(A v). In the monomial
/// basis e x = -y, f y = -x, and h scales x^i y^(d-i) by d - 2i.
inline Matrix<Rational> lie_action_matrix(int d, const Sl2Elem& a) {
    if (d < 0) throw InputError("negative degree", "d");
    const std::size_t n = static_cast<std::size_t>(d) + 1;
    Matrix<Rational> m(n, n);
    for (int i = 0; i <= d; ++i) {
        auto col = static_cast<std::size_t>(i);
        m(col, col) += a.h_coeff() * Rational(d - 2 * i);
        if (i > 0) m(col - 1, col) += a.e_coeff() * Rational(-i);
        if (i < d) m(col + 1, col) += a.f_coeff() * Rational(-(d - i));
    }
    return m;
}

/// Element [[p, q], [r, s]] of SL2 over a commutative ring S.
template <class S = Rational>
struct GroupElem {
    S p, q, r, s;

    GroupElem(S p_, S q_, S r_, S s_) : p(std::move(p_)), q(std::move(q_)), r(std::move(r_)), s(std::move(s_)) {
        if (!scalar_is_zero(p * s - q * r - S(Rational(1)))) throw InputError("group element must have determinant 1", "g");
    }

    static GroupElem identity() { return {S(Rational(1)), S(Rational(0)), S(Rational(0)), S(Rational(1))}; }

    friend GroupElem operator*(const GroupElem& a, const GroupElem& b) {
        return {a.p * b.p + a.q * b.r, a.p * b.q + a.q * b.s, a.r * b.p + a.s * b.r, a.r * b.q + a.s * b.s};
    }
};

/// (g f)(v) = f(g^{-1} v): substitutes x -> s x - q y, y -> -r x + p y.
template <class S>
BinaryForm<S> group_action(const GroupElem<S>& g, const BinaryForm<S>& f) {
    const int d = f.degree();
    const S zero(Rational(0));
    BinaryForm<S> lx(1, {-g.q, g.s});   // s x - q y
    BinaryForm<S> ly(1, {g.p, zero - g.r});  // -r x + p y
    std::vector<BinaryForm<S>> px{BinaryForm<S>(0, {S(Rational(1))})}, py = px;
    for (int k = 1; k <= d; ++k) {
        px.push_back(multiply(px.back(), lx));
        py.push_back(multiply(py.back(), ly));
    }
    BinaryForm<S> out = BinaryForm<S>::zero(d);
    for (int i = 0; i <= d; ++i) {
        const S& c = f[static_cast<std::size_t>(i)];
        if (scalar_is_zero(c)) continue;
        out = out + multiply(px[static_cast<std::size_t>(i)], py[static_cast<std::size_t>(d - i)]) * c;
    }
    return out;
}

enum class RepKind { V, SL2ADJ, SL2TENSOR, END };

inline std::string to_string(RepKind k) {
    switch (k) {
        case RepKind::V: return "V";
        case RepKind::SL2ADJ: return "SL2ADJ";
        case RepKind::SL2TENSOR: return "SL2TENSOR";
        case RepKind::END: return "END";
    }
    return "?";
}

/// Finite-dimensional sl2-representation with exact action matrices in a
/// weight basis (act_h diagonal).
///   V(d):      basis x^i y^(d-i), i ascending
///   SL2ADJ:    basis (e, h, f), adjoint action
///   SL2TENSOR: basis b_i (x) b_j over (e, h, f), index 3i + j
///   END(V_d):  matrix units E_ab flattened row-major, commutator action
struct RepSpace {
    RepKind kind = RepKind::V;
    int d = 0;
    std::size_t dim = 0;
    std::vector<int> weight;
    Matrix<Rational> act_e, act_h, act_f;

    /// Matrix of a general element a h + b e + c f.
    Matrix<Rational> action(const Sl2Elem& a) const {
        return act_h * a.h_coeff() + act_e * a.e_coeff() + act_f * a.f_coeff();
    }

    std::string name() const {
        switch (kind) {
            case RepKind::V: return "V(" + std::to_string(d) + ")";
            case RepKind::END: return "END(V(" + std::to_string(d) + "))";
            default: return to_string(kind);
        }
    }

    friend bool operator==(const RepSpace& a, const RepSpace& b) { return a.kind == b.kind && a.d == b.d && a.dim == b.dim; }
};

namespace detail {

inline std::vector<Matrix<Rational>> sl2_basis_matrices() {
    return {Sl2Elem::e().matrix(), Sl2Elem::h().matrix(), Sl2Elem::f().matrix()};
}

// Coordinates of a traceless matrix in the basis (e, h, f).
inline Vec sl2_coords(const Matrix<Rational>& m) { return {m(0, 1), m(0, 0), m(1, 0)}; }

inline Matrix<Rational> adjoint_matrix(const Sl2Elem& x) {
    auto basis = sl2_basis_matrices();
    std::vector<Vec> cols;
    for (const auto& b : basis) cols.push_back(sl2_coords(commutator(x.matrix(), b)));
    return Matrix<Rational>::from_columns(cols, 3);
}

inline Matrix<Rational> end_action(const Matrix<Rational>& rho) {
    const std::size_t n = rho.rows();
    Matrix<Rational> out(n * n, n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            // [rho, E_ab] = sum_i rho(i,a) E_ib - sum_j rho(b,j) E_aj
            std::size_t col = a * n + b;
            for (std::size_t i = 0; i < n; ++i) out(i * n + b, col) += rho(i, a);
            for (std::size_t j = 0; j < n; ++j) out(a * n + j, col) -= rho(b, j);
        }
    return out;
}

}  // namespace detail

inline RepSpace make_rep(RepKind kind, int d = 0) {
    RepSpace r;
    r.kind = kind;
    switch (kind) {
        case RepKind::V: {
            if (d < 0) throw InputError("negative degree", "d");
            r.d = d;
            r.dim = static_cast<std::size_t>(d) + 1;
            for (int i = 0; i <= d; ++i) r.weight.push_back(d - 2 * i);
            r.act_e = lie_action_matrix(d, Sl2Elem::e());
            r.act_h = lie_action_matrix(d, Sl2Elem::h());
            r.act_f = lie_action_matrix(d, Sl2Elem::f());
            break;
        }
        case RepKind::SL2ADJ: {
            r.dim = 3;
            r.weight = {2, 0, -2};
            r.act_e = detail::adjoint_matrix(Sl2Elem::e());
            r.act_h = detail::adjoint_matrix(Sl2Elem::h());
            r.act_f = detail::adjoint_matrix(Sl2Elem::f());
            break;
        }
        case RepKind::SL2TENSOR: {
            r.dim = 9;
            const std::vector<int> w{2, 0, -2};
            for (int a : w)
                for (int b : w) r.weight.push_back(a + b);
            auto id = Matrix<Rational>::identity(3);
            auto tensor = [&](const Sl2Elem& x) {
                auto ad = detail::adjoint_matrix(x);
                return kron(ad, id) + kron(id, ad);
            };
            r.act_e = tensor(Sl2Elem::e());
            r.act_h = tensor(Sl2Elem::h());
            r.act_f = tensor(Sl2Elem::f());
            break;
        }
        case RepKind::END: {
            if (d < 0) throw InputError("negative degree", "d");
            r.d = d;
            const std::size_t n = static_cast<std::size_t>(d) + 1;
            r.dim = n * n;
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b)
                    r.weight.push_back(weight_of(d, static_cast<int>(a)) - weight_of(d, static_cast<int>(b)));
            r.act_e = detail::end_action(lie_action_matrix(d, Sl2Elem::e()));
            r.act_h = detail::end_action(lie_action_matrix(d, Sl2Elem::h()));
            r.act_f = detail::end_action(lie_action_matrix(d, Sl2Elem::f()));
            break;
        }
        default:
            throw InputError("invalid representation kind", "kind");
    }
    return r;
}

/// Weight of a nonzero weight vector; throws when v is not an h-eigenvector.
inline int weight_of_vector(const RepSpace& rep, const Vec& v) {
    std::optional<int> w;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        if (w && *w != rep.weight[i]) throw PreconditionError("vector is not a weight vector");
        w = rep.weight[i];
    }
    if (!w) throw PreconditionError("zero vector has no weight");
    return *w;
}

/// The unique linear map src -> tgt with f^j hw_src |-> f^j hw_tgt. It
/// intertwines e, h and f when both inputs are highest-weight vectors of
/// the same weight and src is irreducible.
inline Matrix<Rational> extend_from_highest_weight(const RepSpace& src, const Vec& hw_src, const RepSpace& tgt,
                                                   const Vec& hw_tgt) {
    if (hw_src.size() != src.dim || hw_tgt.size() != tgt.dim)
        throw InputError("highest-weight vector has wrong dimension", "hw");
    auto is_zero_vec = [](const Vec& v) {
        return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
    };
    if (is_zero_vec(hw_src) || is_zero_vec(hw_tgt)) throw PreconditionError("highest-weight vector is zero");
    if (!is_zero_vec(src.act_e.apply(hw_src)) || !is_zero_vec(tgt.act_e.apply(hw_tgt)))
        throw PreconditionError("highest-weight vector is not annihilated by e");
    int lambda = weight_of_vector(src, hw_src);
    if (weight_of_vector(tgt, hw_tgt) != lambda) throw PreconditionError("highest weights differ");
    if (lambda < 0) throw PreconditionError("negative highest weight");

    std::vector<Vec> chain_src{hw_src}, chain_tgt{hw_tgt};
    for (int j = 1; j <= lambda; ++j) {
        chain_src.push_back(src.act_f.apply(chain_src.back()));
        chain_tgt.push_back(tgt.act_f.apply(chain_tgt.back()));
    }
    if (!is_zero_vec(src.act_f.apply(chain_src.back())))
        throw PreconditionError("source is not irreducible: f^(lambda+1) does not kill the highest-weight vector");
    if (span_reduce(chain_src, src.dim).dim() != src.dim)
        throw PreconditionError("source is not irreducible: lowered chain does not span it");
    auto u = Matrix<Rational>::from_columns(chain_src, src.dim);
    auto t = Matrix<Rational>::from_columns(chain_tgt, tgt.dim);
    return t * inverse(u);
}

/// V_d^+: the sum of the positive weight spaces, spanned by x^i y^(d-i) with d - 2i > 0.
inline Subspace subspace_vplus(int d) {
    if (d < 1) throw InputError("V_d^+ needs d >= 1", "d");
    std::vector<std::size_t> idx;
    for (int i = 0; i <= d; ++i)
        if (weight_of(d, i) > 0) idx.push_back(static_cast<std::size_t>(i));
    return Subspace::coordinate(static_cast<std::size_t>(d) + 1, idx);
}

/// V_d^{++} = V_d[2] + V_d[6] + V_d[8] + ... for even d: every positive
/// weight space except weight 4.
inline Subspace subspace_vplusplus(int d) {
    if (d < 2 || d % 2 != 0) throw InputError("V_d^{++} needs even d >= 2", "d");
    std::vector<std::size_t> idx;
    for (int i = 0; i <= d; ++i) {
        int w = weight_of(d, i);
        if (w > 0 && w != 4) idx.push_back(static_cast<std::size_t>(i));
    }
    return Subspace::coordinate(static_cast<std::size_t>(d) + 1, idx);
}

/// True iff L act_X = act_X L for X in {e, h, f}.
inline bool intertwines(const Matrix<Rational>& l, const RepSpace& src, const RepSpace& tgt) {
    return l * src.act_e == tgt.act_e * l && l * src.act_h == tgt.act_h * l && l * src.act_f == tgt.act_f * l;
}

}  // namespace covar

#endif
