#include <catch_amalgamated.hpp>

#include "covar/oracles.hpp"
#include "covar/orbits.hpp"
#include "covar/gen.hpp"

using namespace covar;

namespace {

BinaryForm<> mono(int d, int i, Rational c = 1) { return BinaryForm<>::monomial(d, i, c); }

Matrix<Rational> diag(const std::vector<Rational>& d) {
    Matrix<Rational> m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

Matrix<Rational> jordan(std::size_t n) {
    Matrix<Rational> m(n, n);
    for (std::size_t i = 0; i + 1 < n; ++i) m(i, i + 1) = 1;
    return m;
}

Subspace diagonal_subspace(std::size_t n) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i) idx.push_back(i * n + i);
    return Subspace::coordinate(n * n, idx);
}

Generator matrix_square(std::size_t n) {
    return {"square", [n](const Vec& v) {
                auto m = Matrix<Rational>(n, n, v);
                return (m * m).flatten();
            }};
}

Generator identity_gen() {
    return {"id", [](const Vec& v) { return v; }};
}

}  // namespace

TEST_CASE("family_span examples") {
    auto r1 = family_span({cov_identity(3)}, mono(3, 1, 5));
    CHECK(r1.span.dim() == 1);
    CHECK(r1.contains_point);
    auto phi = cov_ad_phi0(3);
    auto r2 = family_span({cov_phis(phi, cov_identity(3), 0), cov_phis(phi, cov_identity(3), 1)}, mono(3, 1));
    CHECK(r2.span == subspace_vplus(3));
    CHECK(family_span({cov_identity(3)}, BinaryForm<>::zero(3)).span.dim() == 0);
    CHECK_THROWS_AS(family_span({cov_identity(4)}, mono(3, 1)), InputError);
    CHECK_THROWS_AS(family_span({cov_tau(3, 2)}, mono(3, 1)), InputError);
}

TEST_CASE("orbit_closure examples") {
    gen::Rng rng(41);
    Vec v = rng.vec(4);
    auto r = orbit_closure({identity_gen()}, v, 3);
    CHECK(r.span.dim() == 1);
    CHECK(r.saturated);
    CHECK(r.contains_point);

    // A |-> A^2 on 2x2 matrices: every A^(2^k) lies in span{I, A}.
    Vec a = rng.vec(4);
    auto sq = orbit_closure({matrix_square(2)}, a, 3);
    auto ia = span_reduce({Matrix<Rational>::identity(2).flatten(), a});
    CHECK(ia.contains(sq.span));
    CHECK(sq.span.dim() <= 2);
    CHECK(sq.points == 3);

    // Without the identity the base point need not be reached.
    auto phi = cov_ad_phi0(3);
    auto no_id = orbit_closure({generator_from(cov_phis(phi, cov_identity(3), 1))}, mono(3, 1).coeffs(), 3);
    CHECK(!no_id.contains_point);
    auto with_id = orbit_closure({generator_from(cov_identity(3)), generator_from(cov_phis(phi, cov_identity(3), 1))},
                                 mono(3, 1).coeffs(), 3);
    CHECK(with_id.contains_point);
    CHECK(with_id.span == subspace_vplus(3));
    CHECK_THROWS_AS(orbit_closure({identity_gen()}, v, 0), InputError);
}

TEST_CASE("is_nullform examples") {
    auto y4 = is_nullform(mono(4, 0));
    CHECK(y4.is_null);
    CHECK(y4.max_multiplicity == 4);
    CHECK(y4.y_multiplicity == 4);
    auto x2y2 = is_nullform(mono(4, 2));
    CHECK(!x2y2.is_null);
    CHECK(x2y2.max_multiplicity == 2);
    auto moved = group_action(GroupElem<>{1, 0, 1, 1}, mono(4, 1));
    CHECK(is_nullform(moved).is_null);
    auto zero = is_nullform(BinaryForm<>::zero(5));
    CHECK(zero.is_null);
    CHECK(zero.max_multiplicity == 5);
    // x^3 - x y^2 = x (x - y)(x + y) is stable.
    CHECK(!is_nullform(BinaryForm<>(3, {0, -1, 0, 1})).is_null);
}

TEST_CASE("stabilizes_subspace") {
    auto v4p = subspace_vplus(4);
    CHECK(stabilizes_subspace(cov_identity(4), v4p).pass);
    CHECK(stabilizes_subspace(cov_identity(4), span_reduce({{1, 2, 3, 4, 5}})).pass);
    CHECK(stabilizes_subspace(cov_tau(4, 2), v4p).pass);
    CHECK(stabilizes_subspace(cov_tau(4, 2), span_reduce({{0, 0, 1, 0, 0}}, 5)).pass);
    CHECK(!stabilizes_subspace(cov_tau(4, 2), span_reduce({{0, 1, 0, 0, 0}}, 5)).pass);

    // v |-> v + w0 with w0 = x y^3 moves the line through y^4 off itself.
    auto vars = indexed_vars("a", 5);
    std::vector<MultiPoly> shift;
    for (std::size_t i = 0; i < 5; ++i)
        shift.push_back(MultiPoly::variable(vars, i) + MultiPoly::constant(vars, Rational(i == 1 ? 1 : 0)));
    auto sh = cov_polynomial_map(4, make_rep(RepKind::V, 4), shift, "shift");
    CHECK(sh.homogeneity() == -1);
    auto res = stabilizes_subspace(sh, span_reduce({{1, 0, 0, 0, 0}}));
    CHECK(!res.pass);
    CHECK(!res.residual.is_zero());
    CHECK(stabilizes_subspace(sh, span_reduce({{0, 1, 0, 0, 0}})).pass);
}

TEST_CASE("certify_minimal_symmetric examples") {
    auto t5 = theorem_odd(5);
    auto c5 = certify_minimal_symmetric(t5.family, t5.point, t5.subspace);
    CHECK(c5.certified());
    CHECK(c5.span_dim == 3);

    auto t8 = theorem_4m(8);
    auto c8 = certify_minimal_symmetric(t8.family, t8.point, t8.subspace);
    CHECK(c8.certified());
    CHECK(c8.span_dim == 4);

    auto t10 = theorem_2mod4(10);
    auto c10 = certify_minimal_symmetric(t10.family, t10.point, t10.subspace);
    CHECK(c10.certified());
    CHECK(c10.span_dim == 4);

    CHECK_THROWS_AS(certify_minimal_symmetric(t5.family, mono(5, 4), t5.subspace), PreconditionError);
    // V_10^+ strictly contains the span, so it is not certified.
    auto loose = certify_minimal_symmetric(t10.family, t10.point, subspace_vplus(10));
    CHECK(!loose.span_equals);
    CHECK(!loose.certified());
}

TEST_CASE("matrix examples") {
    CHECK(matrix_power_span(diag({1, 2})) == diagonal_subspace(2));
    CHECK(matrix_power_span(Matrix<Rational>::identity(2)).dim() == 1);
    CHECK(matrix_power_span(jordan(3)).dim() == 3);
    CHECK(is_regular_matrix(diag({1, 2, 3})));
    CHECK(!is_regular_matrix(diag({1, 1})));
    Matrix<Rational> blocks(4, 4);
    blocks(0, 0) = blocks(1, 1) = blocks(2, 2) = blocks(3, 3) = 7;
    blocks(0, 1) = blocks(2, 3) = 1;
    CHECK(!is_regular_matrix(blocks));
    CHECK(oracle::minimal_polynomial_degree(blocks) == 2);

    auto n = jordan(3);
    CHECK(rank_profile_equal(n, n * Rational(2) + n * n * Rational(5)));
    CHECK(!rank_profile_equal(n, n * n));
    Matrix<Rational> j22(4, 4), j2(4, 4);
    j22(0, 1) = j22(2, 3) = 1;
    j2(0, 1) = 1;
    CHECK(!rank_profile_equal(j22, j2));
    CHECK_THROWS_AS(rank_profile_equal(n, Matrix<Rational>::identity(3)), PreconditionError);
}

TEST_CASE("property: cone and monotonicity", "[property]") {
    gen::Rng rng(42);
    for (int trial = 0; trial < 40; ++trial) {
        int d = static_cast<int>(rng.integer(3, 7));
        auto v = rng.form(d, 4);
        std::vector<Covariant> fam{cov_identity(d)};
        for (int r = 0; r <= d; r += 2)
            if (2 * d - 2 * r == d) fam.push_back(cov_tau(d, r));
        if (d % 2 == 1) fam.push_back(cov_phis(cov_ad_phi0(d), cov_identity(d), 1));
        else if (d >= 4) fam.push_back(cov_phis(cov_alpha_phi0(d), cov_identity(d), 1));
        auto small = family_span({fam[0]}, v);
        auto big = family_span(fam, v);
        CHECK(big.contains_point);
        CHECK(big.span.contains(small.span));
    }
}

TEST_CASE("property: orbit of an orbit point", "[property]") {
    gen::Rng rng(43);
    for (int trial = 0; trial < 10; ++trial) {
        int d = 3 + 2 * static_cast<int>(rng.integer(0, 1));
        auto phi = cov_ad_phi0(d);
        std::vector<Generator> gens{generator_from(cov_identity(d)), generator_from(cov_phis(phi, cov_identity(d), 1))};
        Vec v = rng.form(d, 3).coeffs();
        const int cap = 2;
        auto outer = orbit_closure(gens, v, 2 * cap);
        // A generated point w has its own closure inside that of v.
        Vec w = gens[1].apply(v);
        auto inner = orbit_closure(gens, w, cap);
        CHECK(outer.span.contains(inner.span));
    }
}

TEST_CASE("property: nullform agrees with constructed factorizations", "[property]") {
    std::mt19937_64 rng(44);
    gen::Rng grng(45);
    for (int trial = 0; trial < 200; ++trial) {
        int d = static_cast<int>(std::uniform_int_distribution<int>(1, 12)(rng));
        auto c = oracle::make_nullform_case(rng, d);
        auto rep = is_nullform(c.form);
        CHECK(rep.max_multiplicity == c.max_multiplicity);
        CHECK(rep.is_null == c.is_null);
        if (trial < 50) {
            auto g = grng.sl2();
            CHECK(is_nullform(group_action(g, c.form)).is_null == c.is_null);
            CHECK(is_nullform(group_action(g, c.form)).max_multiplicity == c.max_multiplicity);
        }
    }
}

TEST_CASE("property: regularity agrees with the minimal polynomial", "[property]") {
    gen::Rng rng(46);
    int regular = 0, singular = 0;
    for (int trial = 0; trial < 200; ++trial) {
        auto n = static_cast<std::size_t>(rng.integer(1, 5));
        Matrix<Rational> a;
        switch (rng.integer(0, 2)) {
            case 0: a = rng.matrix(n, n, 3); break;
            case 1: {
                // Conjugate of a diagonal matrix with repeated entries.
                std::vector<Rational> d;
                for (std::size_t i = 0; i < n; ++i) d.push_back(Rational(rng.integer(0, 2)));
                auto p = rng.matrix(n, n, 2);
                while (rank(p) < n) p = rng.matrix(n, n, 2);
                a = p * diag(d) * inverse(p);
                break;
            }
            default: {
                // Block diagonal with equal Jordan blocks.
                a = Matrix<Rational>(n, n);
                Rational lambda(rng.integer(-2, 2));
                for (std::size_t i = 0; i < n; ++i) a(i, i) = lambda;
                for (std::size_t i = 0; i + 1 < n; ++i)
                    if (rng.coin()) a(i, i + 1) = 1;
            }
        }
        bool reg = is_regular_matrix(a);
        CHECK(reg == (oracle::minimal_polynomial_degree(a) == static_cast<int>(n)));
        (reg ? regular : singular)++;
    }
    CHECK(regular > 20);
    CHECK(singular > 20);
}

TEST_CASE("property: distinct diagonal entries give the diagonal subspace", "[property]") {
    gen::Rng rng(47);
    for (int trial = 0; trial < 30; ++trial) {
        auto n = static_cast<std::size_t>(rng.integer(1, 5));
        std::vector<Rational> d;
        while (d.size() < n) {
            Rational x = rng.rational();
            if (std::find(d.begin(), d.end(), x) == d.end()) d.push_back(x);
        }
        CHECK(matrix_power_span(diag(d)) == diagonal_subspace(n));
    }
}
