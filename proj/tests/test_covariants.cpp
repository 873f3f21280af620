#include <catch_amalgamated.hpp>

#include "covar/covariant.hpp"
#include "covar/gen.hpp"

using namespace covar;

namespace {

BinaryForm<> mono(int d, int i, Rational c = 1) { return BinaryForm<>::monomial(d, i, c); }

Vec unit(std::size_t n, std::size_t i, Rational c = 1) {
    Vec v(n);
    v[i] = c;
    return v;
}

// Exactly one nonzero coordinate, at `idx`.
bool supported_at(const Vec& v, std::size_t idx) {
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i].is_zero() != (i != idx)) return false;
    return true;
}

std::vector<Covariant> shipped(int max_d) {
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
        if (d % 4 == 0 && d >= 4) out.push_back(cov_psi(d));
        if (d % 4 == 2 && d >= 10) out.push_back(cov_psi(d));
    }
    return out;
}

}  // namespace

TEST_CASE("identity covariant") {
    auto c = cov_identity(3);
    CHECK(c(mono(3, 0)) == mono(3, 0).coeffs());
    CHECK(c(mono(4 - 1, 1, 2)) == mono(3, 1, 2).coeffs());
    CHECK(c.homogeneity() == 1);
    CHECK(check_equivariance(c).status == EquivarianceStatus::Pass);
}

TEST_CASE("tau covariant") {
    CHECK(cov_tau(4, 2)(mono(4, 1)) == mono(4, 0, -18).coeffs());
    CHECK(cov_tau(3, 2)(mono(3, 1)) == mono(2, 0, -8).coeffs());
    CHECK(cov_tau(4, 2).target().d == 4);
    CHECK_THROWS_AS(cov_tau(4, 1), InputError);
    CHECK_THROWS_AS(cov_tau(4, 6), InputError);
    for (int d = 0; d <= 6; ++d)
        for (int r = 0; r <= d; r += 2) CHECK(check_equivariance(cov_tau(d, r)).status == EquivarianceStatus::Pass);
}

TEST_CASE("phi0 for odd degree") {
    auto c3 = cov_phi0_odd(3);
    CHECK(c3.target().kind == RepKind::SL2ADJ);
    CHECK(c3(mono(3, 1)) == Vec{-8, 0, 0});
    CHECK(supported_at(cov_phi0_odd(5)(mono(5, 2)), 0));
    CHECK(cov_phi0_odd(5)(mono(5, 2)) == Vec{864, 0, 0});
    CHECK_THROWS_AS(cov_phi0_odd(4), InputError);
    CHECK_THROWS_AS(cov_phi0_odd(1), InputError);
}

TEST_CASE("phi0 for even degree") {
    auto c4 = cov_phi0_even(4);
    CHECK(c4.target().kind == RepKind::SL2TENSOR);
    auto img = c4(mono(4, 1));
    CHECK(supported_at(img, 0));
    CHECK(img[0] == Rational(-18));
    CHECK(weight_of_vector(c4.target(), img) == 4);
    CHECK(cov_phi0_even(8)(mono(8, 3)) == unit(9, 0, -2592000));
    CHECK_THROWS_AS(cov_phi0_even(5), InputError);
}

TEST_CASE("alpha and ad maps") {
    for (int d = 1; d <= 5; ++d) {
        auto a = cov_alpha(d);
        auto n = static_cast<std::size_t>(d + 1);
        auto rho_e = lie_action_matrix(d, Sl2Elem::e());
        CHECK(a.apply(unit(9, 0)) == (rho_e * rho_e).flatten());
        // alpha(h (x) h) is diagonal with squared weights.
        auto hh = a.apply(unit(9, 4));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Rational w(d - 2 * static_cast<int>(i));
                CHECK(hh[i * n + j] == (i == j ? w * w : Rational(0)));
            }
        CHECK(intertwines(a, make_rep(RepKind::SL2TENSOR), make_rep(RepKind::END, d)));
        CHECK(intertwines(ad_map(d), make_rep(RepKind::SL2ADJ), make_rep(RepKind::END, d)));
    }
}

TEST_CASE("psi") {
    auto p4 = cov_psi(4);
    CHECK(p4(mono(4, 1)) == mono(4, 0, -18).coeffs());
    CHECK(p4.homogeneity() == 2);
    auto p10 = cov_psi(10);
    CHECK(p10.homogeneity() == 4);
    CHECK(supported_at(p10(mono(10, 4)), 1));
    auto p14 = cov_psi(14);
    CHECK(supported_at(p14(mono(14, 6)), 3));
    CHECK_THROWS_AS(cov_psi(6), InputError);
    CHECK_THROWS_AS(cov_psi(7), InputError);
    CHECK_THROWS_AS(cov_psi(2), InputError);
}

TEST_CASE("phis") {
    auto phi = cov_ad_phi0(3);
    auto id = cov_identity(3);
    CHECK(cov_phis(phi, id, 0)(mono(3, 1)) == id(mono(3, 1)));
    CHECK(cov_phis(phi, id, 1)(mono(3, 1)) == mono(3, 0, 8).coeffs());
    CHECK(cov_phis(phi, id, 3).homogeneity() == 7);
    for (int s = 0; s <= 2; ++s) {
        auto out = cov_phis(cov_ad_phi0(5), cov_identity(5), s)(mono(5, 2));
        CHECK(weight_of_vector(make_rep(RepKind::V, 5), out) == 2 * s + 1);
    }
    CHECK_THROWS_AS(cov_phis(phi, cov_identity(5), 1), InputError);
    CHECK_THROWS_AS(cov_phis(phi, id, -1), InputError);
}

TEST_CASE("equivariance negative control") {
    auto tau = cov_tau(4, 2);
    auto entries = *tau.symbolic_entries();
    entries[2] = entries[2] + MultiPoly::monomial(entries[2].vars(), {1, 0, 0, 0, 1}, Rational(1));
    auto bad = cov_polynomial_map(4, tau.target(), entries, "corrupted_tau");
    CHECK(bad.homogeneity() == 2);
    auto rep = check_equivariance(bad);
    CHECK(rep.status == EquivarianceStatus::Fail);
    CHECK(!rep.residual.is_zero());
    CHECK(check_equivariance(cov_polynomial_map(4, tau.target(), *tau.symbolic_entries(), "tau_copy")).status ==
          EquivarianceStatus::Pass);
}

TEST_CASE("high-degree covariants are certified by construction") {
    auto c = cov_phis(cov_ad_phi0(5), cov_identity(5), 2);
    auto rep = check_equivariance(c);
    CHECK(rep.status == EquivarianceStatus::ByConstruction);
    CHECK(rep.certificate.find("phis(2") == 0);
}

TEST_CASE("property: shipped covariants of low homogeneity are equivariant", "[property]") {
    for (const auto& c : shipped(10)) {
        if (c.homogeneity() > 4) continue;
        INFO(c.name() << " d=" << c.source_degree());
        CHECK(check_equivariance(c).status == EquivarianceStatus::Pass);
    }
}

TEST_CASE("property: homogeneity", "[property]") {
    gen::Rng rng(31);
    auto tv = make_vars({"t"});
    MultiPoly t = MultiPoly::variable(tv, 0);
    auto cases = shipped(10);
    for (int d = 3; d <= 9; d += 2)
        for (int s = 2; s <= 3; ++s) cases.push_back(cov_phis(cov_ad_phi0(d), cov_identity(d), s));
    cases.push_back(cov_phis(cov_alpha_phi0(8), cov_psi(8), 2));
    for (const auto& c : cases) {
        INFO(c.name() << " d=" << c.source_degree());
        auto f = rng.form(c.source_degree(), 3);
        auto scaled = lift<MultiPoly>(f) * t;
        auto lhs = c.eval(scaled);
        auto rhs = c(f);
        MultiPoly tk = detail::power(t, static_cast<unsigned>(c.homogeneity()));
        for (std::size_t i = 0; i < lhs.size(); ++i) CHECK(lhs[i] == tk * rhs[i]);
    }
}

TEST_CASE("property: weight law on weight vectors", "[property]") {
    for (const auto& c : shipped(10)) {
        const int d = c.source_degree();
        for (int i = 0; i <= d; ++i) {
            auto out = c(mono(d, i));
            if (std::all_of(out.begin(), out.end(), [](const Rational& x) { return x.is_zero(); })) continue;
            INFO(c.name() << " d=" << d << " i=" << i);
            CHECK(weight_of_vector(c.target(), out) == c.homogeneity() * weight_of(d, i));
        }
    }
}

TEST_CASE("property: phis weight laws", "[property]") {
    for (int d = 3; d <= 9; d += 2) {
        const int m = (d - 1) / 2;
        for (int s = 0; s <= m; ++s) {
            auto out = cov_phis(cov_ad_phi0(d), cov_identity(d), s)(mono(d, m));
            CHECK(weight_of_vector(make_rep(RepKind::V, d), out) == 2 * s + 1);
        }
    }
    for (int d : {4, 8, 10, 12, 14}) {
        const int m = d / 2;
        auto v = mono(d, m - 1);
        auto phi = cov_alpha_phi0(d);
        auto psi = cov_psi(d);
        const int psi_shift = d % 4 == 0 ? 4 : 8;
        for (int s = 0; 4 * s + 2 <= d; ++s) {
            auto a = cov_phis(phi, cov_identity(d), s)(v);
            CHECK(weight_of_vector(make_rep(RepKind::V, d), a) == 4 * s + 2);
            if (4 * s + psi_shift <= d) {
                auto b = cov_phis(phi, psi, s)(v);
                CHECK(weight_of_vector(make_rep(RepKind::V, d), b) == 4 * s + psi_shift);
            }
        }
    }
}
