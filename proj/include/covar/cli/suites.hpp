// Verification suites behind `covar verify` and the acceptance harness.
#ifndef COVAR_CLI_SUITES_HPP
#define COVAR_CLI_SUITES_HPP

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "covar/cli/json_io.hpp"
#include "covar/covariant.hpp"
#include "covar/gen.hpp"
#include "covar/integrals.hpp"
#include "covar/oracles.hpp"
#include "covar/orbits.hpp"
#include "covar/transvectant.hpp"

namespace covar::suite {

using io::json;

struct CaseResult {
    std::string case_id;
    bool pass = false;
    json details = json::object();
};

struct SuiteResult {
    std::string suite;
    std::uint64_t seed = 0;
    std::int64_t elapsed_ms = 0;
    std::vector<CaseResult> cases;

    bool passed() const {
        return std::all_of(cases.begin(), cases.end(), [](const CaseResult& c) { return c.pass; });
    }

    json to_json() const {
        json cs = json::array();
        for (const auto& c : cases)
            cs.push_back({{"case_id", c.case_id}, {"status", c.pass ? "pass" : "fail"}, {"details", c.details}});
        return {{"suite", suite}, {"seed", seed}, {"elapsed_ms", elapsed_ms}, {"cases", cs}, {"passed", passed()}};
    }
};

/// Unset fields take the desk-scale defaults of each suite.
struct Params {
    std::uint64_t seed = 0;
    std::optional<int> d;
    std::optional<int> mmax;
    std::optional<int> trials;
    std::optional<int> n;
};

namespace detail {

inline std::string pad(long v) {
    std::string s = std::to_string(v);
    return s.size() < 2 ? "0" + s : s;
}

inline CaseResult make_case(std::string id, bool pass, json details = json::object()) {
    return {std::move(id), pass, std::move(details)};
}

inline BinaryForm<MultiPoly> act(const Matrix<Rational>& m, const BinaryForm<MultiPoly>& f) {
    std::vector<MultiPoly> out(f.coeffs().size(), MultiPoly(f[0].vars()));
    for (std::size_t i = 0; i < out.size(); ++i)
        for (std::size_t j = 0; j < out.size(); ++j)
            if (!m(i, j).is_zero()) out[i] += f[j] * m(i, j);
    return BinaryForm<MultiPoly>(f.degree(), std::move(out));
}

inline bool is_zero_vec(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
}

inline int param(const std::optional<int>& v, int fallback) { return v ? *v : fallback; }

inline void require_range(const std::optional<int>& v, int lo, int hi, const char* field) {
    if (v && (*v < lo || *v > hi))
        throw InputError("value out of range [" + std::to_string(lo) + ", " + std::to_string(hi) + "]", field);
}

}  // namespace detail

/// Every covariant the library constructs, for source degrees 1..max_d.
inline std::vector<Covariant> shipped_covariants(int max_d) {
    std::vector<Covariant> out;
    for (int d = 1; d <= max_d; ++d) {
        out.push_back(cov_identity(d));
        for (int r = 0; r <= d; r += 2) out.push_back(cov_tau(d, r));
        if (d % 2 == 1 && d >= 3) {
            out.push_back(cov_phi0_odd(d));
            out.push_back(cov_ad_phi0(d));
            out.push_back(cov_phis(cov_ad_phi0(d), cov_identity(d), 1));
        }
        if (d % 2 == 0 && d >= 4) {
            out.push_back(cov_phi0_even(d));
            out.push_back(cov_alpha_phi0(d));
            out.push_back(cov_phis(cov_alpha_phi0(d), cov_identity(d), 1));
        }
        if ((d % 4 == 0 && d >= 4) || (d % 4 == 2 && d >= 10)) out.push_back(cov_psi(d));
    }
    return out;
}

/// Coefficient identities between the sum, closed and Konvalinka forms of
/// c_{m,r}, and the transvectant of x^(m-1) y^(m+1) with itself.
inline std::vector<CaseResult> cmr_cases(const Params& p) {
    detail::require_range(p.mmax, 1, 30, "mmax");
    const int mmax = detail::param(p.mmax, 12);
    std::vector<CaseResult> out;
    for (int m = 1; m <= mmax; ++m)
        for (int s = 0; s < m; ++s) {
            auto a = cmr_sum(m, 2 * s), b = cmr_closed(m, s);
            out.push_back(detail::make_case("closed/m=" + detail::pad(m) + "/s=" + detail::pad(s), a == b,
                                            {{"sum", a.str()}, {"closed", b.str()}}));
        }
    for (int m = 1; m <= mmax; ++m) {
        auto k = konvalinka_cmm(m);
        if (m % 2 == 0) {
            auto a = cmr_sum(m, m);
            out.push_back(detail::make_case("konvalinka/m=" + detail::pad(m), a == k, {{"sum", a.str()}, {"konvalinka", k.str()}}));
        } else if (m < mmax) {
            out.push_back(detail::make_case("konvalinka-odd/m=" + detail::pad(m), k.is_zero(), {{"konvalinka", k.str()}}));
        }
    }
    for (int m = 2; m <= std::max(20, mmax); m += 2) {
        auto c = cmr_closed(m, m / 2);
        out.push_back(detail::make_case("nonzero/m=" + detail::pad(m), !c.is_zero(), {{"closed", c.str()}}));
    }
    for (int m = 1; m <= std::min(8, mmax); ++m) {
        const int d = 2 * m;
        auto f = BinaryForm<Rational>::monomial(d, m - 1);
        for (int r = 0; r < 2 * m; r += 2) {
            // r < 2m keeps the exponent d - r - 2 of x non-negative.
            auto lhs = quad_transvectant(f, r);
            auto rhs = BinaryForm<Rational>::monomial(2 * d - 2 * r, d - r - 2, cmr_sum(m, r));
            bool ok = lhs == rhs;
            json det = {{"transvectant", io::to_json(lhs)}, {"cmr_sum", cmr_sum(m, r).str()}};
            out.push_back(detail::make_case("lemma/m=" + detail::pad(m) + "/r=" + detail::pad(r), ok, det));
        }
    }
    return out;
}

/// Infinitesimal equivariance of transvection, and check_equivariance on
/// every shipped covariant of low homogeneity plus a corrupted control.
inline std::vector<CaseResult> equivariance_cases(const Params& p) {
    detail::require_range(p.d, 1, 8, "d");
    const int dmax = detail::param(p.d, 6);
    std::vector<CaseResult> out;
    const std::vector<std::pair<std::string, Sl2Elem>> basis{{"e", Sl2Elem::e()}, {"h", Sl2Elem::h()}, {"f", Sl2Elem::f()}};
    for (int d = 0; d <= dmax; ++d)
        for (int e = 0; e <= dmax; ++e) {
            auto f = generic_form(d, "a"), h = generic_form(e, "b");
            for (int r = 0; r <= std::min(d, e); ++r) {
                auto t = transvection(f, h, r);
                bool ok = true;
                std::string failed;
                for (const auto& [name, x] : basis) {
                    auto lhs = detail::act(lie_action_matrix(t.degree(), x), t);
                    auto rhs = transvection(detail::act(lie_action_matrix(d, x), f), h, r) +
                               transvection(f, detail::act(lie_action_matrix(e, x), h), r);
                    if (!(lhs == rhs)) {
                        ok = false;
                        failed = name;
                        break;
                    }
                }
                json det = json::object();
                if (!ok) det["element"] = failed;
                out.push_back(detail::make_case(
                    "transvection/d=" + detail::pad(d) + "/e=" + detail::pad(e) + "/r=" + detail::pad(r), ok, det));
            }
        }
    for (const auto& c : shipped_covariants(10)) {
        if (c.homogeneity() > 4) continue;
        auto rep = check_equivariance(c);
        json det = {{"status", to_string(rep.status)}};
        if (rep.status == EquivarianceStatus::Fail)
            det["witness"] = {{"element", rep.element}, {"component", rep.component}, {"residual", io::to_json_with_vars(rep.residual)}};
        out.push_back(detail::make_case("covariant/d=" + detail::pad(c.source_degree()) + "/" + c.name(),
                                        rep.status == EquivarianceStatus::Pass, det));
    }
    auto tau = cov_tau(4, 2);
    auto entries = *tau.symbolic_entries();
    entries[2] = entries[2] + MultiPoly::monomial(entries[2].vars(), {1, 0, 0, 0, 1}, Rational(1));
    auto bad = check_equivariance(cov_polynomial_map(4, tau.target(), entries, "corrupted_tau"));
    out.push_back(detail::make_case("negative-control/corrupted_tau", bad.status == EquivarianceStatus::Fail,
                                    {{"status", to_string(bad.status)}, {"residual", io::to_json_with_vars(bad.residual)}}));
    return out;
}

inline json certificate_json(const MinimalSymmetricCertificate& c) {
    json members = json::array();
    for (const auto& m : c.members) members.push_back({{"name", m.name}, {"stabilizes", m.stabilizes}});
    return {{"family_size", c.members.size()},
            {"point", io::to_json(c.span.point)},
            {"span", io::to_json(c.span.span)},
            {"span_dim", c.span_dim},
            {"subspace_dim", c.subspace_dim},
            {"span_equals_subspace", c.span_equals},
            {"all_stabilize", c.all_stabilize},
            {"certified", c.certified()},
            {"members", members}};
}

inline json certificate_json(const MinimalSymmetricCertificate& c, const TheoremInstance& t) {
    json out = certificate_json(c);
    out["d"] = t.d;
    out["m"] = t.m;
    out["stated_dim"] = t.stated_dim;
    out["point"] = io::to_json(t.point);
    return out;
}

inline std::vector<CaseResult> theorem_cases(const std::string& which, const Params& p) {
    std::vector<int> degrees;
    std::function<TheoremInstance(int)> make;
    if (which == "thm-odd") {
        degrees = {3, 5, 7, 9};
        make = theorem_odd;
    } else if (which == "thm-4m") {
        degrees = {4, 8, 12};
        make = theorem_4m;
    } else {
        degrees = {10, 14};
        make = theorem_2mod4;
    }
    if (p.d) {
        detail::require_range(p.d, 1, 30, "d");
        degrees = {*p.d};
    }
    std::vector<CaseResult> out;
    for (int d : degrees) {
        auto t = make(d);
        auto c = certify_minimal_symmetric(t.family, t.point, t.subspace);
        json det = certificate_json(c, t);
        bool ok = c.certified();
        if (which == "thm-odd") {
            // The certified object is V_d^+ itself; its dimension is m + 1.
            det["dimension_flag"] = c.span_dim == static_cast<std::size_t>(t.stated_dim)
                                        ? "none"
                                        : "computed " + std::to_string(c.span_dim) + " differs from stated " +
                                              std::to_string(t.stated_dim);
        } else {
            ok = ok && c.span_dim == static_cast<std::size_t>(t.stated_dim);
        }
        out.push_back(detail::make_case("certificate/d=" + detail::pad(d), ok, det));
        if (which == "thm-2mod4") {
            auto q = quad_transvectant(generic_form(d), t.m);
            out.push_back(detail::make_case("no-quadratic/d=" + detail::pad(d), q.is_zero(), {{"order", t.m}}));
        }
    }
    return out;
}

inline std::vector<CaseResult> nullform_cases(const Params& p) {
    detail::require_range(p.d, 1, 24, "d");
    detail::require_range(p.trials, 1, 100000, "trials");
    const int trials = detail::param(p.trials, 500);
    gen::Rng rng(p.seed);
    struct Tally {
        int total = 0, agree = 0;
        json witness;
    };
    std::map<int, Tally> by_degree;
    std::map<std::pair<int, bool>, oracle::NullformCase> classes;
    for (int i = 0; i < trials; ++i) {
        int d = p.d ? *p.d : static_cast<int>(rng.integer(1, 12));
        auto c = oracle::make_nullform_case(rng.engine(), d);
        auto rep = is_nullform(c.form);
        auto& t = by_degree[d];
        ++t.total;
        if (rep.is_null == c.is_null && rep.max_multiplicity == c.max_multiplicity) ++t.agree;
        else if (t.witness.is_null())
            t.witness = {{"form", io::to_json(c.form)}, {"expected_max", c.max_multiplicity}, {"got_max", rep.max_multiplicity}};
        classes.emplace(std::make_pair(d, c.is_null), c);
    }
    std::vector<CaseResult> out;
    for (auto& [d, t] : by_degree) {
        json det = {{"cases", t.total}, {"agree", t.agree}};
        if (!t.witness.is_null()) det["witness"] = t.witness;
        out.push_back(detail::make_case("oracle/d=" + detail::pad(d), t.agree == t.total, det));
    }
    for (const auto& [key, c] : classes) {
        const int translations = 50;
        int agree = 0;
        json witness;
        for (int k = 0; k < translations; ++k) {
            auto g = rng.sl2();
            auto rep = is_nullform(group_action(g, c.form));
            if (rep.is_null == c.is_null && rep.max_multiplicity == c.max_multiplicity) ++agree;
            else if (witness.is_null())
                witness = {{"form", io::to_json(c.form)},
                           {"g", {g.p.str(), g.q.str(), g.r.str(), g.s.str()}},
                           {"got_max", rep.max_multiplicity}};
        }
        json det = {{"translations", translations}, {"agree", agree}, {"form", io::to_json(c.form)}};
        if (!witness.is_null()) det["witness"] = witness;
        out.push_back(detail::make_case("sl2-invariance/d=" + detail::pad(key.first) + (key.second ? "/null" : "/stable"),
                                        agree == translations, det));
    }
    return out;
}

inline std::vector<CaseResult> gl2_cases(const Params& p) {
    detail::require_range(p.trials, 1, 10000, "trials");
    const int pairs = detail::param(p.trials, 20);
    auto g = gl2_adjoint();
    auto v = [&](const char* n) { return MultiPoly::variable(g.ambient, n); };
    std::vector<CaseResult> out;
    const std::vector<std::pair<std::string, RationalFunction>> candidates{
        {"(a-d)/b", RationalFunction(v("a") - v("d"), v("b"))}, {"(a-d)/c", RationalFunction(v("a") - v("d"), v("c"))}};
    for (const auto& [name, f] : candidates)
        out.push_back(detail::make_case("first-integral/" + name, is_first_integral(g, f), {{"f", io::to_json(f, g.ambient)}}));
    const auto tdeg = tdeg_first_integrals(g);
    out.push_back(detail::make_case("tdeg", tdeg == 2, {{"tdeg", tdeg}, {"generic_rank", generic_distribution_rank(g)}}));

    gen::Rng rng(p.seed);
    auto key = [](const Vec& m) { return span_reduce({{m[1], m[2], (m[0] - m[3]) / 2}}, 3); };
    int checked = 0, agree = 0, equal = 0;
    json witness;
    for (int guard = 0; checked < pairs && guard < 100 * pairs; ++guard) {
        Vec a = rng.vec(4, 5), b;
        if (guard % 2 == 0) {
            Rational t = rng.rational(), half_tr = (a[0] + a[3]) / 2;
            b = {a[0] + t * (a[0] - half_tr), a[1] * (1 + t), a[2] * (1 + t), a[3] + t * (a[3] - half_tr)};
        } else {
            b = rng.vec(4, 5);
        }
        if (distribution_rank_at(g, a) < 2 || distribution_rank_at(g, b) < 2) continue;
        ++checked;
        bool same = quotient_point(g, a, 2) == quotient_point(g, b, 2);
        equal += same;
        if (same == (key(a) == key(b))) ++agree;
        else if (witness.is_null()) witness = {{"A", io::to_json(a)}, {"B", io::to_json(b)}};
    }
    json det = {{"pairs", checked}, {"agree", agree}, {"equal_classes", equal}};
    if (!witness.is_null()) det["witness"] = witness;
    out.push_back(detail::make_case("quotient-classes", checked == pairs && agree == checked, det));
    return out;
}

inline std::vector<CaseResult> gln_cases(const Params& p) {
    detail::require_range(p.n, 1, 6, "n");
    detail::require_range(p.trials, 1, 10000, "trials");
    const int nmax = detail::param(p.n, 5);
    const int trials = detail::param(p.trials, 200);
    gen::Rng rng(p.seed);
    std::vector<CaseResult> out;

    int agree = 0, regular = 0;
    json witness;
    for (int t = 0; t < trials; ++t) {
        auto n = static_cast<std::size_t>(rng.integer(1, nmax));
        Matrix<Rational> a;
        switch (t % 3) {
            case 0: a = rng.matrix(n, n, 3); break;
            case 1: {
                // Conjugate of a diagonal matrix with repeated entries.
                Matrix<Rational> dm(n, n);
                for (std::size_t i = 0; i < n; ++i) dm(i, i) = Rational(rng.integer(0, 2));
                auto q = rng.matrix(n, n, 2);
                while (rank(q) < n) q = rng.matrix(n, n, 2);
                a = q * dm * inverse(q);
                break;
            }
            default: {
                a = Matrix<Rational>(n, n);
                Rational lambda(rng.integer(-2, 2));
                for (std::size_t i = 0; i < n; ++i) a(i, i) = lambda;
                for (std::size_t i = 0; i + 1 < n; ++i)
                    if (rng.coin()) a(i, i + 1) = 1;
            }
        }
        bool reg = is_regular_matrix(a);
        regular += reg;
        if (reg == (oracle::minimal_polynomial_degree(a) == static_cast<int>(n))) ++agree;
        else if (witness.is_null()) witness = {{"A", io::to_json(a)}, {"regular", reg}};
    }
    json det = {{"matrices", trials}, {"agree", agree}, {"regular", regular}};
    if (!witness.is_null()) det["witness"] = witness;
    out.push_back(detail::make_case("regular-vs-minpoly", agree == trials, det));

    for (int n = 1; n <= nmax; ++n) {
        const auto un = static_cast<std::size_t>(n);
        Matrix<Rational> a(un, un);
        std::vector<Rational> seen;
        for (std::size_t i = 0; i < un; ++i) {
            Rational x;
            do x = rng.rational();
            while (std::find(seen.begin(), seen.end(), x) != seen.end());
            seen.push_back(x);
            a(i, i) = x;
        }
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < un; ++i) idx.push_back(i * un + i);
        auto span = matrix_power_span(a);
        out.push_back(detail::make_case("diagonal-span/n=" + detail::pad(n), span == Subspace::coordinate(un * un, idx),
                                        {{"dim", span.dim()}}));
        auto fam = gln_adjoint(un);
        auto g = generic_distribution_rank(fam);
        auto td = tdeg_first_integrals(fam);
        out.push_back(detail::make_case("generic-rank/n=" + detail::pad(n), g == un && td == un * un - un,
                                        {{"generic_rank", g}, {"tdeg", td}}));
    }
    return out;
}

inline std::vector<CaseResult> u3_cases(const Params& p) {
    detail::require_range(p.trials, 1, 10000, "trials");
    const int trials = detail::param(p.trials, 50);
    gen::Rng rng(p.seed);
    std::vector<CaseResult> out;
    int agree = 0;
    json witness;
    for (int t = 0; t < trials; ++t) {
        auto a = rng.rational(), b = rng.rational(), c = rng.rational();
        auto v = rng.vec(3);
        auto lhs = unipotent_ad(a, b, c, v), rhs = oracle::conjugate_unipotent(a, b, c, v);
        if (lhs == rhs) ++agree;
        else if (witness.is_null()) witness = {{"abc", {a.str(), b.str(), c.str()}}, {"v", io::to_json(v)}};
    }
    json det = {{"tuples", trials}, {"agree", agree}};
    if (!witness.is_null()) det["witness"] = witness;
    out.push_back(detail::make_case("conjugation", agree == trials, det));

    // Fixed points common to u with (a, c) = (1, 0) and (0, 1).
    std::vector<Vec> rows;
    for (auto [a, c] : {std::pair<int, int>{1, 0}, {0, 1}})
        for (std::size_t i = 0; i < 3; ++i) {
            Vec row(3);
            for (std::size_t j = 0; j < 3; ++j) {
                Vec e(3);
                e[j] = 1;
                row[j] = unipotent_ad(a, 0, c, e)[i] - e[i];
            }
            rows.push_back(row);
        }
    auto constraints = span_reduce(rows, 3);
    Vec fixed{0, 1, 0};
    bool kills = std::all_of(constraints.basis().begin(), constraints.basis().end(), [&](const Vec& r) {
        Rational s;
        for (std::size_t i = 0; i < 3; ++i) s += r[i] * fixed[i];
        return s.is_zero();
    });
    out.push_back(detail::make_case("fixed-points", constraints.dim() == 2 && kills, {{"fixed_dim", 3 - constraints.dim()}}));

    auto fam = u3();
    std::vector<Generator> gens{{"id", [](const Vec& x) { return x; }}, {"phi0", [](const Vec&) { return Vec{0, 1, 0}; }}};
    int spans_ok = 0, points = 0;
    for (int t = 0; t < 20; ++t) {
        Vec v = rng.vec(3);
        if (v[0].is_zero() && v[2].is_zero()) continue;
        ++points;
        auto field_span = evaluated_span(fam, v);
        auto orbit = orbit_closure(gens, v, 3);
        auto expected = span_reduce({v, {0, 1, 0}}, 3);
        if (field_span.dim() == 2 && field_span == expected && orbit.span == expected) ++spans_ok;
    }
    out.push_back(detail::make_case("span", spans_ok == points, {{"points", points}, {"agree", spans_ok}}));
    RationalFunction xz(MultiPoly::variable(fam.ambient, "x"), MultiPoly::variable(fam.ambient, "z"));
    out.push_back(detail::make_case("first-integral/x/z", is_first_integral(fam, xz), {{"f", io::to_json(xz, fam.ambient)}}));
    auto td = tdeg_first_integrals(fam);
    out.push_back(detail::make_case("tdeg", td == 1, {{"tdeg", td}}));
    return out;
}

inline std::vector<CaseResult> kernel_cases(const Params& p) {
    detail::require_range(p.trials, 1, 10000, "trials");
    const int trials = detail::param(p.trials, 200);
    gen::Rng rng(p.seed);
    std::vector<CaseResult> out;
    auto tally = [&](const std::string& id, int ok) {
        out.push_back(detail::make_case(id, ok == trials, {{"cases", trials}, {"agree", ok}}));
    };

    auto v4 = indexed_vars("x", 4);
    int ok = 0;
    for (int t = 0; t < trials; ++t) {
        auto f = rng.poly(v4, 3, 5), g = rng.poly(v4, 3, 5);
        auto i = static_cast<std::size_t>(rng.integer(0, 3));
        ok += (f * g).partial(i) == f * g.partial(i) + g * f.partial(i);
    }
    tally("leibniz", ok);

    ok = 0;
    for (int t = 0; t < trials; ++t) {
        UPoly f(std::vector<Rational>{rng.nonzero_rational()});
        int budget = static_cast<int>(rng.integer(1, 12));
        while (budget > 0) {
            int deg = static_cast<int>(rng.integer(1, 2)), mult = static_cast<int>(rng.integer(1, 3));
            if (deg * mult > budget) break;
            std::vector<Rational> c;
            for (int k = 0; k < deg; ++k) c.push_back(rng.rational());
            c.push_back(rng.nonzero_rational());
            UPoly q(c);
            for (int k = 0; k < mult; ++k) f = f * q;
            budget -= deg * mult;
        }
        auto parts = squarefree_decompose(f);
        UPoly prod(std::vector<Rational>{1});
        bool good = true;
        for (std::size_t i = 0; i < parts.size(); ++i) {
            good = good && gcd(parts[i].factor, parts[i].factor.derivative()).degree() == 0;
            for (std::size_t j = i + 1; j < parts.size(); ++j) good = good && gcd(parts[i].factor, parts[j].factor).degree() == 0;
            for (int k = 0; k < parts[i].multiplicity; ++k) prod = prod * parts[i].factor;
        }
        ok += good && prod == f.monic();
    }
    tally("squarefree-reconstruction", ok);

    ok = 0;
    for (int t = 0; t < trials; ++t) {
        auto n = static_cast<std::size_t>(rng.integer(1, 6)), k = static_cast<std::size_t>(rng.integer(0, 6));
        std::vector<Vec> vs;
        for (std::size_t i = 0; i < k; ++i) {
            if (!vs.empty() && rng.coin(0.3)) {
                Vec w = vs[static_cast<std::size_t>(rng.integer(0, static_cast<long>(vs.size()) - 1))];
                Rational c(rng.integer(-3, 3));
                for (auto& x : w) x *= c;
                vs.push_back(w);
            } else {
                vs.push_back(rng.vec(n, 4));
            }
        }
        auto base = span_reduce(vs, n);
        auto shuffled = vs;
        std::shuffle(shuffled.begin(), shuffled.end(), rng.engine());
        for (auto& w : shuffled) {
            Rational c = rng.nonzero_rational();
            for (auto& x : w) x *= c;
        }
        ok += span_reduce(base.basis(), n) == base && span_reduce(shuffled, n) == base;
    }
    tally("rref-canonical", ok);

    ok = 0;
    for (int t = 0; t < trials; ++t) {
        auto n = static_cast<std::size_t>(rng.integer(2, 6));
        auto k = static_cast<std::size_t>(rng.integer(1, static_cast<long>(n)));
        std::vector<Vec> vs;
        for (std::size_t i = 0; i < k; ++i) vs.push_back(rng.vec(n, 5));
        auto s = span_reduce(vs, n);
        if (s.dim() == 0) {
            ++ok;
            continue;
        }
        std::vector<Vec> mixed;
        const auto& b = s.basis();
        for (std::size_t i = 0; i < b.size(); ++i) {
            Vec w = b[i];
            Rational scale(rng.integer(1, 4));
            for (auto& x : w) x *= scale;
            for (std::size_t j = 0; j < i; ++j) {
                Rational c = rng.rational();
                for (std::size_t q = 0; q < n; ++q) w[q] += c * b[j][q];
            }
            mixed.push_back(w);
        }
        ok += plucker_of_rows(mixed) == plucker(s) && plucker(span_reduce(mixed, n)) == plucker(s);
    }
    tally("plucker-basis-independence", ok);

    ok = 0;
    auto v3 = indexed_vars("x", 3);
    for (int t = 0; t < trials; ++t) {
        auto rows = static_cast<std::size_t>(rng.integer(1, 4)), cols = static_cast<std::size_t>(rng.integer(1, 4));
        Matrix<MultiPoly> m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.poly(v3, 2, 2, 3);
        if (rng.coin(0.4) && rows > 1) {
            auto c = rng.poly(v3, 1, 2, 3);
            for (std::size_t j = 0; j < cols; ++j) m(rows - 1, j) = c * m(0, j);
        }
        auto g = generic_rank(m);
        std::size_t best = 0;
        bool bounded = g == generic_rank_bareiss(m);
        for (int s = 0; s < 20; ++s) {
            auto r = rank_at(m, v3, rng.vec(3, 20));
            bounded = bounded && r <= g;
            best = std::max(best, r);
        }
        ok += bounded && best == g;
    }
    tally("generic-vs-sampled-rank", ok);
    return out;
}

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"cmr", "thm-odd", "thm-4m", "thm-2mod4", "nullform",
                                                "gl2", "gln", "u3", "equivariance", "kernel"};
    return names;
}

/// Runs a suite; cases come back sorted by case_id.
inline SuiteResult run(const std::string& name, const Params& p) {
    auto start = std::chrono::steady_clock::now();
    SuiteResult r;
    r.suite = name;
    r.seed = p.seed;
    if (name == "cmr") r.cases = cmr_cases(p);
    else if (name == "thm-odd" || name == "thm-4m" || name == "thm-2mod4") r.cases = theorem_cases(name, p);
    else if (name == "nullform") r.cases = nullform_cases(p);
    else if (name == "gl2") r.cases = gl2_cases(p);
    else if (name == "gln") r.cases = gln_cases(p);
    else if (name == "u3") r.cases = u3_cases(p);
    else if (name == "equivariance") r.cases = equivariance_cases(p);
    else if (name == "kernel") r.cases = kernel_cases(p);
    else throw InputError("unknown suite '" + name + "'", "suite");
    std::sort(r.cases.begin(), r.cases.end(), [](const CaseResult& a, const CaseResult& b) { return a.case_id < b.case_id; });
    r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    return r;
}

}  // namespace covar::suite

#endif
