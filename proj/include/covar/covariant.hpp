#ifndef COVAR_COVARIANT_HPP
#define COVAR_COVARIANT_HPP

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "covar/errors.hpp"
#include "covar/linalg.hpp"
#include "covar/matrix.hpp"
#include "covar/multipoly.hpp"
#include "covar/sl2rep.hpp"
#include "covar/transvectant.hpp"

namespace covar {

enum class NodeKind { IDENTITY, TAU, TRANSVECT, LINEAR, PHIS, POLYNOMIAL_MAP };

/// Node of a covariant's composition tree. Children are covariants whose
/// outputs feed this node; the source form is implicit.
struct CovNode {
    NodeKind kind = NodeKind::IDENTITY;
    int order = 0;             // TAU, TRANSVECT: transvection order; PHIS: power s
    std::string label;         // LINEAR: name of the map
    Matrix<Rational> linear;   // LINEAR
    std::vector<MultiPoly> polys;  // POLYNOMIAL_MAP, over a0..ad
    std::vector<std::shared_ptr<const CovNode>> children;
};

using NodePtr = std::shared_ptr<const CovNode>;

namespace detail {

template <class S>
S power(const S& x, unsigned e) {
    S out(Rational(1));
    for (unsigned k = 0; k < e; ++k) out = out * x;
    return out;
}

// Evaluates p(a0..ad) at the given scalars, with p's variables matched by name.
template <class S>
S eval_poly(const MultiPoly& p, const VarList& source_vars, const std::vector<S>& args) {
    MultiPoly q = p.with_vars(source_vars);
    S out(Rational(0));
    for (const auto& t : q.terms()) {
        S term(t.coeff);
        for (std::size_t i = 0; i < t.exps.size(); ++i)
            if (t.exps[i]) term = term * power(args[i], t.exps[i]);
        out = out + term;
    }
    return out;
}

template <class S>
std::vector<S> apply_linear(const Matrix<Rational>& m, const std::vector<S>& v) {
    std::vector<S> out(m.rows(), S(Rational(0)));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (m(i, j).is_zero() || scalar_is_zero(v[j])) continue;
            out[i] = out[i] + v[j] * m(i, j);
        }
    return out;
}

// y = M v for M given row-major as a flat vector of size n*n.
template <class S>
std::vector<S> apply_flat(const std::vector<S>& flat, const std::vector<S>& v) {
    const std::size_t n = v.size();
    std::vector<S> out(n, S(Rational(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const S& a = flat[i * n + j];
            if (scalar_is_zero(a) || scalar_is_zero(v[j])) continue;
            out[i] = out[i] + a * v[j];
        }
    return out;
}

template <class S>
BinaryForm<S> as_form(std::vector<S> v) {
    int d = static_cast<int>(v.size()) - 1;
    return BinaryForm<S>(d, std::move(v));
}

template <class S>
std::vector<S> eval_node(const CovNode& n, const BinaryForm<S>& f) {
    switch (n.kind) {
        case NodeKind::IDENTITY:
            return f.coeffs();
        case NodeKind::TAU: {
            auto g = as_form(eval_node(*n.children[0], f));
            return quad_transvectant(g, n.order).coeffs();
        }
        case NodeKind::TRANSVECT: {
            auto g = as_form(eval_node(*n.children[0], f));
            auto h = as_form(eval_node(*n.children[1], f));
            return transvection(g, h, n.order).coeffs();
        }
        case NodeKind::LINEAR:
            return apply_linear(n.linear, eval_node(*n.children[0], f));
        case NodeKind::PHIS: {
            auto v = eval_node(*n.children[1], f);
            if (n.order == 0) return v;
            auto m = eval_node(*n.children[0], f);
            for (int k = 0; k < n.order; ++k) v = apply_flat(m, v);
            return v;
        }
        case NodeKind::POLYNOMIAL_MAP: {
            auto vars = indexed_vars("a", f.coeffs().size());
            std::vector<S> out;
            for (const auto& p : n.polys) out.push_back(eval_poly(p, vars, f.coeffs()));
            return out;
        }
    }
    throw InternalError("unknown covariant node");
}

}  // namespace detail

/// A polynomial map V_d -> target built from equivariant pieces, or an
/// explicit polynomial map. `homogeneity` is -1 for non-homogeneous maps.
class Covariant {
public:
    Covariant(int source_degree, RepSpace target, int homogeneity, NodePtr node, std::string name)
        : d_(source_degree), target_(std::move(target)), k_(homogeneity), node_(std::move(node)), name_(std::move(name)) {}

    int source_degree() const { return d_; }
    const RepSpace& target() const { return target_; }
    int homogeneity() const { return k_; }
    const NodePtr& node() const { return node_; }
    const std::string& name() const { return name_; }

    template <class S>
    std::vector<S> eval(const BinaryForm<S>& f) const {
        if (f.degree() != d_) throw InputError("form degree does not match covariant source", "form");
        return detail::eval_node(*node_, f);
    }

    std::vector<Rational> operator()(const BinaryForm<Rational>& f) const { return eval(f); }

    /// Output as a binary form; only for targets V(e).
    template <class S>
    BinaryForm<S> eval_form(const BinaryForm<S>& f) const {
        if (target_.kind != RepKind::V) throw InputError("covariant target is not a space of binary forms");
        return BinaryForm<S>(target_.d, eval(f));
    }

    bool has_polynomial_leaf() const { return contains(*node_, NodeKind::POLYNOMIAL_MAP); }

    /// Entries as polynomials in a0..ad; present for homogeneity <= 4 and
    /// for explicit polynomial maps.
    std::optional<std::vector<MultiPoly>> symbolic_entries() const {
        if (!has_polynomial_leaf() && (k_ < 0 || k_ > 4)) return std::nullopt;
        auto vars = indexed_vars("a", static_cast<std::size_t>(d_) + 1);
        std::vector<MultiPoly> out;
        for (auto& p : eval(generic_form(d_))) out.push_back(p.with_vars(vars));
        return out;
    }

    /// Composition tree as text, e.g. "phis(3; linear[ad](tau2(id)), id)".
    std::string tree() const { return render(*node_); }

private:
    static bool contains(const CovNode& n, NodeKind k) {
        if (n.kind == k) return true;
        for (const auto& c : n.children)
            if (contains(*c, k)) return true;
        return false;
    }

    static std::string render(const CovNode& n) {
        switch (n.kind) {
            case NodeKind::IDENTITY: return "id";
            case NodeKind::TAU: return "tau" + std::to_string(n.order) + "(" + render(*n.children[0]) + ")";
            case NodeKind::TRANSVECT:
                return "transvect" + std::to_string(n.order) + "(" + render(*n.children[0]) + ", " +
                       render(*n.children[1]) + ")";
            case NodeKind::LINEAR: return "linear[" + n.label + "](" + render(*n.children[0]) + ")";
            case NodeKind::PHIS:
                return "phis(" + std::to_string(n.order) + "; " + render(*n.children[0]) + ", " +
                       render(*n.children[1]) + ")";
            case NodeKind::POLYNOMIAL_MAP: return "polynomial_map[" + n.label + "]";
        }
        return "?";
    }

    int d_;
    RepSpace target_;
    int k_;
    NodePtr node_;
    std::string name_;
};

namespace detail {

inline NodePtr make_node(CovNode n) { return std::make_shared<const CovNode>(std::move(n)); }

inline void require_v_target(const Covariant& c, const char* what) {
    if (c.target().kind != RepKind::V) throw InputError(std::string(what) + " needs a covariant into binary forms");
}

}  // namespace detail

inline Covariant cov_identity(int d) {
    if (d < 0) throw InputError("negative degree", "d");
    return {d, make_rep(RepKind::V, d), 1, detail::make_node({NodeKind::IDENTITY, 0, {}, {}, {}, {}}), "id"};
}

/// f |-> (c(f), c(f))_r.
inline Covariant cov_tau_of(const Covariant& c, int r) {
    detail::require_v_target(c, "tau");
    const int e = c.target().d;
    if (r < 0 || r > e) throw InputError("transvectant order out of range", "r");
    if (r % 2 != 0) throw InputError("odd-order quadratic transvectant is identically zero", "r");
    CovNode n{NodeKind::TAU, r, {}, {}, {}, {c.node()}};
    int k = c.homogeneity() < 0 ? -1 : 2 * c.homogeneity();
    return {c.source_degree(), make_rep(RepKind::V, 2 * e - 2 * r), k, detail::make_node(std::move(n)),
            "tau" + std::to_string(r) + "(" + c.name() + ")"};
}

/// f |-> (f, f)_r on V_d.
inline Covariant cov_tau(int d, int r) {
    if (d < 0) throw InputError("negative degree", "d");
    auto c = cov_tau_of(cov_identity(d), r);
    return {d, c.target(), 2, c.node(), "tau" + std::to_string(r)};
}

/// f |-> (a(f), b(f))_r.
inline Covariant cov_transvect(const Covariant& a, const Covariant& b, int r) {
    detail::require_v_target(a, "transvect");
    detail::require_v_target(b, "transvect");
    if (a.source_degree() != b.source_degree()) throw InputError("source degrees differ");
    TransvectionSpec{a.target().d, b.target().d, r}.validate();
    CovNode n{NodeKind::TRANSVECT, r, {}, {}, {}, {a.node(), b.node()}};
    int k = (a.homogeneity() < 0 || b.homogeneity() < 0) ? -1 : a.homogeneity() + b.homogeneity();
    return {a.source_degree(), make_rep(RepKind::V, a.target().d + b.target().d - 2 * r), k,
            detail::make_node(std::move(n)), "(" + a.name() + ", " + b.name() + ")_" + std::to_string(r)};
}

/// L o c for a linear map L: c.target() -> target. L must intertwine the
/// sl2 actions; this is checked exactly.
inline Covariant compose_linear(const Matrix<Rational>& l, const RepSpace& target, const Covariant& c,
                                const std::string& label) {
    if (l.cols() != c.target().dim || l.rows() != target.dim) throw InputError("linear map has wrong shape");
    if (!intertwines(l, c.target(), target)) throw InternalError("linear map '" + label + "' is not equivariant");
    CovNode n{NodeKind::LINEAR, 0, label, l, {}, {c.node()}};
    return {c.source_degree(), target, c.homogeneity(), detail::make_node(std::move(n)), label + "(" + c.name() + ")"};
}

/// Highest-weight isomorphism V(2) -> sl2 with y^2 |-> e.
inline Matrix<Rational> hw_embed_v2_adj() {
    Vec y2{1, 0, 0}, e{1, 0, 0};
    return extend_from_highest_weight(make_rep(RepKind::V, 2), y2, make_rep(RepKind::SL2ADJ), e);
}

/// Highest-weight embedding V(4) -> sl2 (x) sl2 with y^4 |-> e (x) e.
inline Matrix<Rational> hw_embed_v4_tensor() {
    Vec y4{1, 0, 0, 0, 0}, ee(9);
    ee[0] = 1;
    return extend_from_highest_weight(make_rep(RepKind::V, 4), y4, make_rep(RepKind::SL2TENSOR), ee);
}

/// Quadratic covariant V_d -> sl2 for odd d = 2m + 1: tau_2m followed by V(2) = sl2.
inline Covariant cov_phi0_odd(int d) {
    if (d < 3 || d % 2 == 0) throw InputError("phi0_odd needs odd d >= 3", "d");
    auto c = compose_linear(hw_embed_v2_adj(), make_rep(RepKind::SL2ADJ), cov_tau(d, d - 1), "hw_embed");
    return {d, c.target(), 2, c.node(), "phi0_odd"};
}

/// Quadratic covariant V_d -> sl2 (x) sl2 for even d = 2m: tau_(2m-2)
/// followed by V(4) -> sl2 (x) sl2.
inline Covariant cov_phi0_even(int d) {
    if (d < 4 || d % 2 != 0) throw InputError("phi0_even needs even d >= 4", "d");
    auto c = compose_linear(hw_embed_v4_tensor(), make_rep(RepKind::SL2TENSOR), cov_tau(d, d - 2), "hw_embed");
    return {d, c.target(), 2, c.node(), "phi0_even"};
}

/// ad: sl2 -> End(V_d), A |-> rho_d(A), columns over the basis (e, h, f).
inline Matrix<Rational> ad_map(int d) {
    if (d < 0) throw InputError("negative degree", "d");
    std::vector<Vec> cols;
    for (const auto& b : {Sl2Elem::e(), Sl2Elem::h(), Sl2Elem::f()}) cols.push_back(lie_action_matrix(d, b).flatten());
    return Matrix<Rational>::from_columns(cols, static_cast<std::size_t>((d + 1) * (d + 1)));
}

/// alpha: sl2 (x) sl2 -> End(V_d), A (x) B |-> rho_d(A) rho_d(B).
inline Matrix<Rational> cov_alpha(int d) {
    if (d < 1) throw InputError("alpha needs d >= 1", "d");
    const std::vector<Sl2Elem> basis{Sl2Elem::e(), Sl2Elem::h(), Sl2Elem::f()};
    std::vector<Vec> cols;
    for (const auto& a : basis)
        for (const auto& b : basis) cols.push_back((lie_action_matrix(d, a) * lie_action_matrix(d, b)).flatten());
    return Matrix<Rational>::from_columns(cols, static_cast<std::size_t>((d + 1) * (d + 1)));
}

/// ad o phi0 for odd d.
inline Covariant cov_ad_phi0(int d) {
    auto c = compose_linear(ad_map(d), make_rep(RepKind::END, d), cov_phi0_odd(d), "ad");
    return {d, c.target(), 2, c.node(), "ad_phi0_odd"};
}

/// alpha o phi0 for even d.
inline Covariant cov_alpha_phi0(int d) {
    auto c = compose_linear(cov_alpha(d), make_rep(RepKind::END, d), cov_phi0_even(d), "alpha");
    return {d, c.target(), 2, c.node(), "alpha_phi0_even"};
}

namespace detail {

inline BinaryForm<Rational> weight_two_monomial(int d) {
    return BinaryForm<Rational>::monomial(d, d / 2 - 1);
}

}  // namespace detail

/// Covariant V_d -> V_d moving the weight-2 line to weight 4 (d = 0 mod 4,
/// psi = tau_m) or weight 8 (d = 2 mod 4, d >= 10, quartic).
inline Covariant cov_psi(int d) {
    if (d % 2 != 0) throw InputError("psi needs even d", "d");
    const int m = d / 2;
    if (d % 4 == 0) {
        if (d < 4) throw InputError("psi needs d >= 4", "d");
        auto c = cov_tau(d, m);
        return {d, c.target(), 2, c.node(), "psi"};
    }
    if (d < 10) throw InputError("psi for d = 2 mod 4 needs d >= 10", "d");
    const int k = (m - 1) / 2;
    const int r1 = k % 2 == 0 ? 3 * k : 3 * k - 1;
    const int r2 = k % 2 == 0 ? 3 * k + 2 : 3 * k + 3;
    auto t1 = cov_tau(d, r1), t2 = cov_tau(d, r2);
    auto v = detail::weight_two_monomial(d);
    if (BinaryForm<Rational>(t1.target().d, t1(v)).is_zero() || BinaryForm<Rational>(t2.target().d, t2(v)).is_zero())
        throw InternalError("inner transvectant of psi vanishes on the weight-2 vector");
    auto c = cov_transvect(t1, t2, 1);
    if (c.target().d != d) throw InternalError("psi has the wrong target degree");
    if (BinaryForm<Rational>(d, c(v)).is_zero()) throw InternalError("psi vanishes on the weight-2 vector");
    return {d, c.target(), 4, c.node(), "psi"};
}

/// Phi_s(phi, psi): f |-> phi(f)^s psi(f).
inline Covariant cov_phis(const Covariant& phi_end, const Covariant& psi, int s) {
    if (s < 0) throw InputError("s must be non-negative", "s");
    if (phi_end.target().kind != RepKind::END) throw InputError("phi must map into End(V_d)", "phi");
    detail::require_v_target(psi, "phis");
    if (phi_end.source_degree() != psi.source_degree()) throw InputError("source degrees differ");
    if (phi_end.target().d != psi.target().d) throw InputError("End(V_d) and psi target degrees differ");
    CovNode n{NodeKind::PHIS, s, {}, {}, {}, {phi_end.node(), psi.node()}};
    int k = (phi_end.homogeneity() < 0 || psi.homogeneity() < 0) ? -1 : s * phi_end.homogeneity() + psi.homogeneity();
    return {psi.source_degree(), psi.target(), k, detail::make_node(std::move(n)),
            "phis(" + phi_end.name() + ", " + psi.name() + ", " + std::to_string(s) + ")"};
}

/// Explicit polynomial map with entries in a0..ad (no equivariance implied).
inline Covariant cov_polynomial_map(int d, const RepSpace& target, std::vector<MultiPoly> entries, const std::string& name) {
    if (entries.size() != target.dim) throw InputError("entry count does not match target dimension", "entries");
    auto vars = indexed_vars("a", static_cast<std::size_t>(d) + 1);
    int k = -2;
    for (auto& p : entries) {
        p = p.with_vars(vars);
        if (p.is_zero()) continue;
        int deg = p.total_degree();
        bool homog = p.is_homogeneous(static_cast<unsigned>(deg));
        if (!homog || (k != -2 && k != deg)) k = -1;
        else if (k == -2) k = deg;
    }
    if (k == -2) k = 0;
    CovNode n{NodeKind::POLYNOMIAL_MAP, 0, name, {}, std::move(entries), {}};
    return {d, target, k, detail::make_node(std::move(n)), name};
}

enum class EquivarianceStatus { Pass, Fail, ByConstruction };

struct EquivarianceReport {
    EquivarianceStatus status = EquivarianceStatus::Pass;
    std::string element;          // offending sl2 basis element on failure
    std::size_t component = 0;    // offending target coordinate
    MultiPoly residual;           // nonzero residual on failure
    std::string certificate;      // composition tree for ByConstruction
};

inline std::string to_string(EquivarianceStatus s) {
    switch (s) {
        case EquivarianceStatus::Pass: return "pass";
        case EquivarianceStatus::Fail: return "fail";
        case EquivarianceStatus::ByConstruction: return "verified by construction";
    }
    return "?";
}

/// Checks rho_target(A) c(f) = sum_j dc/da_j (rho_d(A) f)_j for A in {e, h, f}
/// as polynomial identities in a0..ad.
inline EquivarianceReport check_equivariance(const Covariant& c) {
    EquivarianceReport rep;
    auto entries = c.symbolic_entries();
    if (!entries) {
        rep.status = EquivarianceStatus::ByConstruction;
        rep.certificate = c.tree();
        return rep;
    }
    const int d = c.source_degree();
    auto a = generic_form(d);
    auto vars = indexed_vars("a", static_cast<std::size_t>(d) + 1);
    const std::vector<std::pair<std::string, Sl2Elem>> basis{{"e", Sl2Elem::e()}, {"h", Sl2Elem::h()}, {"f", Sl2Elem::f()}};
    // Partial derivatives are shared by the three checks.
    std::vector<std::vector<MultiPoly>> partials(entries->size());
    for (std::size_t k = 0; k < entries->size(); ++k)
        for (std::size_t j = 0; j <= static_cast<std::size_t>(d); ++j) partials[k].push_back((*entries)[k].partial(j));
    for (const auto& [name, x] : basis) {
        auto src_act = detail::apply_linear(lie_action_matrix(d, x), a.coeffs());
        auto lhs = detail::apply_linear(c.target().action(x), *entries);
        for (std::size_t k = 0; k < entries->size(); ++k) {
            MultiPoly rhs(vars);
            for (std::size_t j = 0; j <= static_cast<std::size_t>(d); ++j) {
                if (partials[k][j].is_zero() || src_act[j].is_zero()) continue;
                rhs += partials[k][j] * src_act[j];
            }
            MultiPoly diff = lhs[k] - rhs;
            if (!diff.is_zero()) {
                rep.status = EquivarianceStatus::Fail;
                rep.element = name;
                rep.component = k;
                rep.residual = diff;
                return rep;
            }
        }
    }
    return rep;
}

}  // namespace covar

#endif
