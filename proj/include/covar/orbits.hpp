#ifndef COVAR_ORBITS_HPP
#define COVAR_ORBITS_HPP

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "covar/covariant.hpp"
#include "covar/errors.hpp"
#include "covar/linalg.hpp"
#include "covar/sl2rep.hpp"
#include "covar/univariate.hpp"

namespace covar {

struct SpanReport {
    Vec point;
    std::vector<std::string> family;
    Subspace span;
    bool saturated = true;
    std::optional<bool> matches_candidate;
    bool contains_point = false;  // point lies in span
    int rounds = 0;               // orbit_closure only
    std::size_t points = 0;       // distinct generated points
};

namespace detail {

inline bool is_zero_vec(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
}

}  // namespace detail

/// span{c(v) : c in F} for covariants V_d -> V_d.
inline SpanReport family_span(const std::vector<Covariant>& family, const BinaryForm<Rational>& v) {
    SpanReport rep;
    rep.point = v.coeffs();
    std::vector<Vec> images;
    for (const auto& c : family) {
        if (c.source_degree() != v.degree()) throw InputError("covariant source degree does not match the point", "family");
        if (c.target().kind != RepKind::V || c.target().d != v.degree())
            throw InputError("covariant '" + c.name() + "' does not map V_d to itself", "family");
        rep.family.push_back(c.name());
        images.push_back(c(v));
    }
    rep.points = images.size();
    rep.span = span_reduce(images, v.coeffs().size());
    rep.contains_point = rep.span.contains(rep.point);
    return rep;
}

/// An endomorphism of an exact vector space, applied pointwise.
struct Generator {
    std::string name;
    std::function<Vec(const Vec&)> apply;
};

inline Generator generator_from(const Covariant& c) {
    if (c.target().kind != RepKind::V || c.target().d != c.source_degree())
        throw InputError("covariant '" + c.name() + "' does not map V_d to itself", "family");
    const int d = c.source_degree();
    return {c.name(), [c, d](const Vec& v) { return c(BinaryForm<Rational>(d, v)); }};
}

/// Span of all points g_k(...g_1(v)) with 1 <= k <= depth_cap. Generators
/// are applied to generated points, never to span elements. The report is
/// saturated when the last round added no independent point.
inline SpanReport orbit_closure(const std::vector<Generator>& gens, const Vec& v, int depth_cap) {
    if (depth_cap < 1) throw InputError("depth cap must be at least 1", "depth_cap");
    SpanReport rep;
    rep.point = v;
    for (const auto& g : gens) rep.family.push_back(g.name);
    const std::size_t n = v.size();
    std::set<Vec> seen;
    std::vector<Vec> frontier{v}, all;
    rep.span = Subspace(n);
    rep.saturated = true;
    for (int round = 1; round <= depth_cap && !frontier.empty(); ++round) {
        std::vector<Vec> next;
        for (const auto& p : frontier)
            for (const auto& g : gens) {
                Vec q = g.apply(p);
                if (q.size() != n) throw InputError("generator '" + g.name + "' changed the dimension", "family");
                if (seen.insert(q).second) {
                    next.push_back(q);
                    all.push_back(q);
                }
            }
        auto grown = span_reduce(all, n);
        rep.saturated = grown.dim() == rep.span.dim();
        rep.span = std::move(grown);
        rep.rounds = round;
        frontier = std::move(next);
    }
    rep.points = all.size();
    rep.contains_point = rep.span.contains(v);
    return rep;
}

struct NullformReport {
    bool is_null = false;
    int max_multiplicity = 0;
    int y_multiplicity = 0;
};

/// Nullcone membership via the largest multiplicity of a linear factor.
inline NullformReport is_nullform(const BinaryForm<Rational>& f) {
    const int d = f.degree();
    NullformReport rep;
    if (f.is_zero()) {
        rep.is_null = true;
        rep.max_multiplicity = d;
        rep.y_multiplicity = d;
        return rep;
    }
    // p(t) = f(t, 1); the factor y appears d - deg p times.
    UPoly p(f.coeffs());
    rep.y_multiplicity = d - p.degree();
    rep.max_multiplicity = rep.y_multiplicity;
    for (const auto& part : squarefree_decompose(p)) rep.max_multiplicity = std::max(rep.max_multiplicity, part.multiplicity);
    rep.is_null = 2 * rep.max_multiplicity > d;
    return rep;
}

struct StabilityReport {
    bool pass = true;
    std::size_t component = 0;  // first coordinate with a nonzero residual
    MultiPoly residual;
};

/// Whether c maps the subspace W of V_d into itself, decided symbolically on
/// the generic element sum_j t_j w_j.
inline StabilityReport stabilizes_subspace(const Covariant& c, const Subspace& w) {
    const int d = c.source_degree();
    if (w.ambient_dim() != static_cast<std::size_t>(d) + 1) throw InputError("subspace is not in the source space", "W");
    if (c.target().kind != RepKind::V || c.target().d != d) throw InputError("covariant does not map V_d to itself");
    auto params = indexed_vars("t", w.dim());
    std::vector<MultiPoly> coeffs(static_cast<std::size_t>(d) + 1, MultiPoly(params));
    for (std::size_t j = 0; j < w.dim(); ++j) {
        MultiPoly tj = MultiPoly::variable(params, j);
        for (std::size_t i = 0; i < coeffs.size(); ++i)
            if (!w.basis()[j][i].is_zero()) coeffs[i] += tj * w.basis()[j][i];
    }
    auto image = c.eval(BinaryForm<MultiPoly>(d, std::move(coeffs)));
    auto res = w.residual(std::move(image));
    StabilityReport rep;
    for (std::size_t i = 0; i < res.size(); ++i)
        if (!res[i].is_zero()) {
            rep.pass = false;
            rep.component = i;
            rep.residual = res[i];
            break;
        }
    return rep;
}

struct MemberStability {
    std::string name;
    bool stabilizes = false;
};

struct MinimalSymmetricCertificate {
    bool span_equals = false;
    bool all_stabilize = false;
    bool point_in_subspace = false;
    std::size_t span_dim = 0;
    std::size_t subspace_dim = 0;
    SpanReport span;
    std::vector<MemberStability> members;

    bool certified() const { return span_equals && all_stabilize && point_in_subspace; }
};

/// Computable half of minimality: E(v) computed from F equals W, and every
/// member of F maps W into itself.
inline MinimalSymmetricCertificate certify_minimal_symmetric(const std::vector<Covariant>& family,
                                                             const BinaryForm<Rational>& v, const Subspace& w) {
    if (!w.contains(v.coeffs())) throw PreconditionError("point does not lie in the candidate subspace");
    MinimalSymmetricCertificate cert;
    cert.point_in_subspace = true;
    cert.span = family_span(family, v);
    cert.span.matches_candidate = cert.span.span == w;
    cert.span_equals = *cert.span.matches_candidate;
    cert.span_dim = cert.span.span.dim();
    cert.subspace_dim = w.dim();
    cert.all_stabilize = true;
    for (const auto& c : family) {
        bool ok = stabilizes_subspace(c, w).pass;
        cert.members.push_back({c.name(), ok});
        cert.all_stabilize = cert.all_stabilize && ok;
    }
    return cert;
}

/// A theorem instance: family F, base point v and the subspace W = E(v).
struct TheoremInstance {
    int d = 0;
    int m = 0;
    std::vector<Covariant> family;
    BinaryForm<Rational> point;
    Subspace subspace;
    int stated_dim = 0;  // dimension as stated in the literature
};

/// Odd d = 2m + 1: F = {Phi_s(ad o phi0, id) : 0 <= s <= m}, v = x^m y^(m+1), W = V_d^+.
inline TheoremInstance theorem_odd(int d) {
    if (d < 3 || d % 2 == 0) throw InputError("odd case needs odd d >= 3", "d");
    TheoremInstance t;
    t.d = d;
    t.m = (d - 1) / 2;
    auto phi = cov_ad_phi0(d);
    auto id = cov_identity(d);
    for (int s = 0; s <= t.m; ++s) t.family.push_back(cov_phis(phi, id, s));
    t.point = BinaryForm<Rational>::monomial(d, t.m);
    t.subspace = subspace_vplus(d);
    t.stated_dim = t.m;
    return t;
}

/// d = 2m with m even: Phi_s(alpha o phi0, id) and Phi_s(alpha o phi0, psi)
/// for 0 <= s < m/2, v = x^(m-1) y^(m+1), W = V_d^+.
inline TheoremInstance theorem_4m(int d) {
    if (d < 4 || d % 4 != 0) throw InputError("this case needs d = 0 mod 4, d >= 4", "d");
    TheoremInstance t;
    t.d = d;
    t.m = d / 2;
    auto phi = cov_alpha_phi0(d);
    auto id = cov_identity(d);
    auto psi = cov_psi(d);
    for (int s = 0; s < t.m / 2; ++s) t.family.push_back(cov_phis(phi, id, s));
    for (int s = 0; s < t.m / 2; ++s) t.family.push_back(cov_phis(phi, psi, s));
    t.point = BinaryForm<Rational>::monomial(d, t.m - 1);
    t.subspace = subspace_vplus(d);
    t.stated_dim = t.m;
    return t;
}

/// d = 2m with m odd, d >= 10: Phi_s(alpha o phi0, id) for 0 <= s <= (m-1)/2 and
/// Phi_s(alpha o phi0, psi) for 0 <= s <= (m-5)/2, W = V_d^{++}.
inline TheoremInstance theorem_2mod4(int d) {
    if (d < 10 || d % 4 != 2) throw InputError("this case needs d = 2 mod 4, d >= 10", "d");
    TheoremInstance t;
    t.d = d;
    t.m = d / 2;
    auto phi = cov_alpha_phi0(d);
    auto id = cov_identity(d);
    auto psi = cov_psi(d);
    for (int s = 0; s <= (t.m - 1) / 2; ++s) t.family.push_back(cov_phis(phi, id, s));
    for (int s = 0; s <= (t.m - 5) / 2; ++s) t.family.push_back(cov_phis(phi, psi, s));
    t.point = BinaryForm<Rational>::monomial(d, t.m - 1);
    t.subspace = subspace_vplusplus(d);
    t.stated_dim = t.m - 1;
    return t;
}

/// span{I, A, ..., A^(n-1)} inside the n^2-dimensional matrix space.
inline Subspace matrix_power_span(const Matrix<Rational>& a) {
    if (!a.is_square() || a.rows() == 0) throw InputError("matrix must be square and non-empty", "A");
    const std::size_t n = a.rows();
    std::vector<Vec> powers;
    Matrix<Rational> p = Matrix<Rational>::identity(n);
    for (std::size_t k = 0; k < n; ++k) {
        powers.push_back(p.flatten());
        p = p * a;
    }
    return span_reduce(powers, n * n);
}

inline bool is_regular_matrix(const Matrix<Rational>& a) { return matrix_power_span(a).dim() == a.rows(); }

inline bool is_nilpotent(const Matrix<Rational>& a) {
    return a.is_square() && a.pow(static_cast<unsigned>(a.rows())).is_zero();
}

/// rank(N^j) = rank(N2^j) for j = 1..n-1; both inputs must be nilpotent.
inline bool rank_profile_equal(const Matrix<Rational>& n1, const Matrix<Rational>& n2) {
    if (!n1.is_square() || !n2.is_square() || n1.rows() != n2.rows()) throw InputError("matrices must be square of equal size");
    if (!is_nilpotent(n1) || !is_nilpotent(n2)) throw PreconditionError("rank profiles need nilpotent matrices");
    Matrix<Rational> p1 = n1, p2 = n2;
    for (std::size_t j = 1; j < n1.rows(); ++j) {
        if (rank(p1) != rank(p2)) return false;
        p1 = p1 * n1;
        p2 = p2 * n2;
    }
    return true;
}

}  // namespace covar

#endif
