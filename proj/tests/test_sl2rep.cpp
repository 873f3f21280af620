#include <catch_amalgamated.hpp>

#include <algorithm>

#include "covar/rational_function.hpp"
#include "covar/sl2rep.hpp"
#include "covar/gen.hpp"

using namespace covar;

namespace {

std::vector<RepSpace> all_reps() {
    std::vector<RepSpace> out;
    for (int d = 0; d <= 6; ++d) out.push_back(make_rep(RepKind::V, d));
    out.push_back(make_rep(RepKind::SL2ADJ));
    out.push_back(make_rep(RepKind::SL2TENSOR));
    for (int d = 0; d <= 3; ++d) out.push_back(make_rep(RepKind::END, d));
    return out;
}

Vec unit(std::size_t n, std::size_t i) {
    Vec v(n);
    v[i] = 1;
    return v;
}

}  // namespace

TEST_CASE("weight_of") {
    CHECK(weight_of(4, 1) == 2);
    CHECK(weight_of(3, 0) == 3);
    CHECK(weight_of(2, 1) == 0);
    CHECK_THROWS_AS(weight_of(2, 3), InputError);
}

TEST_CASE("sl2 basis relations") {
    auto e = Sl2Elem::e(), f = Sl2Elem::f(), h = Sl2Elem::h();
    CHECK(bracket(e, f) == h);
    CHECK(bracket(h, e).matrix() == e.matrix() * Rational(2));
    CHECK(bracket(h, f).matrix() == f.matrix() * Rational(-2));
    CHECK_THROWS_AS(Sl2Elem(1, 0, 0, 1), InputError);
}

TEST_CASE("lie_action_matrix examples") {
    // e on x y^2 (d = 3) gives -y^3.
    auto e3 = lie_action_matrix(3, Sl2Elem::e());
    CHECK(e3.apply(unit(4, 1)) == Vec{-1, 0, 0, 0});
    for (int d = 0; d <= 5; ++d) {
        auto h = lie_action_matrix(d, Sl2Elem::h());
        for (int i = 0; i <= d; ++i) CHECK(h(i, i) == Rational(d - 2 * i));
        // f on y^d gives -d x y^(d-1).
        if (d > 0) {
            auto f = lie_action_matrix(d, Sl2Elem::f());
            auto img = f.apply(unit(static_cast<std::size_t>(d) + 1, 0));
            CHECK(img[1] == Rational(-d));
        }
    }
}

TEST_CASE("group_action examples") {
    BinaryForm<> f(3, {1, -2, 0, 5});
    CHECK(group_action(GroupElem<>::identity(), f) == f);
    GroupElem<> torus{2, 0, 0, Rational(1, 2)};
    CHECK(group_action(torus, BinaryForm<>::monomial(4, 1)) == BinaryForm<>::monomial(4, 1, 4));
    CHECK_THROWS_AS(GroupElem<>(1, 1, 1, 1), InputError);
}

TEST_CASE("unipotent derivative at t = 0 equals the e action on x^2 y") {
    auto tv = make_vars({"t"});
    MultiPoly t = MultiPoly::variable(tv, 0);
    GroupElem<MultiPoly> g{MultiPoly(1), t, MultiPoly(0), MultiPoly(1)};
    auto moved = group_action(g, lift<MultiPoly>(BinaryForm<>::monomial(3, 2)));
    Vec deriv;
    for (const auto& c : moved.coeffs()) deriv.push_back((c + MultiPoly(tv)).partial("t").substitute({{"t", MultiPoly(0)}}).constant_value());
    CHECK(deriv == lie_action_matrix(3, Sl2Elem::e()).apply(unit(4, 2)));
    CHECK(deriv == Vec{0, -2, 0, 0});
}

TEST_CASE("make_rep examples") {
    auto v4 = make_rep(RepKind::V, 4);
    CHECK(v4.dim == 5);
    auto w = v4.weight;
    std::sort(w.rbegin(), w.rend());
    CHECK(w == std::vector<int>{4, 2, 0, -2, -4});
    auto adj = make_rep(RepKind::SL2ADJ);
    CHECK(adj.dim == 3);
    CHECK(adj.weight == std::vector<int>{2, 0, -2});
    auto ten = make_rep(RepKind::SL2TENSOR);
    CHECK(ten.dim == 9);
    auto tw = ten.weight;
    std::sort(tw.rbegin(), tw.rend());
    CHECK(tw == std::vector<int>{4, 2, 2, 0, 0, 0, -2, -2, -4});
    CHECK(make_rep(RepKind::END, 2).dim == 9);
    CHECK_THROWS_AS(make_rep(static_cast<RepKind>(17)), InputError);
}

TEST_CASE("property: every representation satisfies the sl2 relations") {
    for (const auto& r : all_reps()) {
        INFO(r.name());
        CHECK(commutator(r.act_e, r.act_f) == r.act_h);
        CHECK(commutator(r.act_h, r.act_e) == r.act_e * Rational(2));
        CHECK(commutator(r.act_h, r.act_f) == r.act_f * Rational(-2));
        for (std::size_t i = 0; i < r.dim; ++i)
            for (std::size_t j = 0; j < r.dim; ++j) {
                if (i == j) CHECK(r.act_h(i, i) == Rational(r.weight[i]));
                else CHECK(r.act_h(i, j).is_zero());
                if (!r.act_e(i, j).is_zero()) CHECK(r.weight[i] == r.weight[j] + 2);
                if (!r.act_f(i, j).is_zero()) CHECK(r.weight[i] == r.weight[j] - 2);
            }
    }
}

TEST_CASE("extend_from_highest_weight") {
    auto v2 = make_rep(RepKind::V, 2);
    auto adj = make_rep(RepKind::SL2ADJ);
    auto l = extend_from_highest_weight(v2, unit(3, 0), adj, unit(3, 0));
    CHECK(l.apply(unit(3, 0)) == Vec{1, 0, 0});
    auto img = l.apply(unit(3, 2));
    CHECK(img[0].is_zero());
    CHECK(img[1].is_zero());
    CHECK(!img[2].is_zero());
    CHECK(intertwines(l, v2, adj));

    auto v4 = make_rep(RepKind::V, 4);
    auto ten = make_rep(RepKind::SL2TENSOR);
    auto l4 = extend_from_highest_weight(v4, unit(5, 0), ten, unit(9, 0));
    CHECK(intertwines(l4, v4, ten));
    CHECK(rank(l4) == 5);

    CHECK_THROWS_AS(extend_from_highest_weight(v2, unit(3, 1), adj, unit(3, 0)), PreconditionError);
    CHECK_THROWS_AS(extend_from_highest_weight(v2, unit(3, 0), ten, unit(9, 1)), PreconditionError);
    CHECK_THROWS_AS(extend_from_highest_weight(v4, unit(5, 0), adj, unit(3, 0)), PreconditionError);
}

TEST_CASE("positive weight subspaces") {
    auto p3 = subspace_vplus(3);
    CHECK(p3.dim() == 2);
    CHECK(p3 == span_reduce({unit(4, 0), unit(4, 1)}));
    auto p4 = subspace_vplus(4);
    CHECK(p4.dim() == 2);
    CHECK(p4 == span_reduce({unit(5, 0), unit(5, 1)}));
    CHECK(subspace_vplusplus(10).dim() == 4);
    CHECK(subspace_vplusplus(14).dim() == 6);
    CHECK(!subspace_vplusplus(10).contains(unit(11, 3)));
    CHECK_THROWS_AS(subspace_vplusplus(7), InputError);
    CHECK_THROWS_AS(subspace_vplus(0), InputError);
}

TEST_CASE("property: group action is a left action", "[property]") {
    gen::Rng rng(21);
    for (int trial = 0; trial < 50; ++trial) {
        int d = static_cast<int>(rng.integer(0, 6));
        auto g = rng.sl2(), h = rng.sl2();
        auto f = rng.form(d);
        CHECK(group_action(g * h, f) == group_action(g, group_action(h, f)));
    }
}

TEST_CASE("property: torus scales weight spaces", "[property]") {
    auto tv = make_vars({"t"});
    RationalFunction t(MultiPoly::variable(tv, 0));
    RationalFunction one(Rational(1)), zero(Rational(0));
    GroupElem<RationalFunction> g{t, zero, zero, one / t};
    for (int d = 0; d <= 6; ++d) {
        auto f = lift<RationalFunction>(BinaryForm<>(d, std::vector<Rational>(static_cast<std::size_t>(d) + 1, Rational(1))));
        auto moved = group_action(g, f);
        for (int i = 0; i <= d; ++i) {
            int w = weight_of(d, i);
            RationalFunction expect = one;
            for (int k = 0; k < std::abs(w); ++k) expect = w > 0 ? expect * t : expect / t;
            CHECK(moved[static_cast<std::size_t>(i)] == expect);
        }
    }
}

TEST_CASE("property: infinitesimal and group actions agree", "[property]") {
    auto tv = make_vars({"t"});
    MultiPoly t = MultiPoly::variable(tv, 0);
    const MultiPoly one(1), zero(0);
    for (int d = 0; d <= 6; ++d) {
        auto f = generic_form(d);
        for (int which = 0; which < 2; ++which) {
            GroupElem<MultiPoly> g = which == 0 ? GroupElem<MultiPoly>{one, t, zero, one}
                                                : GroupElem<MultiPoly>{one, zero, t, one};
            auto m = lie_action_matrix(d, which == 0 ? Sl2Elem::e() : Sl2Elem::f());
            auto moved = group_action(g, f);
            for (int k = 0; k <= d; ++k) {
                auto deriv = (moved[static_cast<std::size_t>(k)] + MultiPoly(tv)).partial("t").substitute(
                    [&] {
                        std::map<std::string, MultiPoly> b{{"t", zero}};
                        for (int j = 0; j <= d; ++j) b["a" + std::to_string(j)] = f[static_cast<std::size_t>(j)];
                        return b;
                    }());
                MultiPoly expect(0);
                for (int j = 0; j <= d; ++j) expect = expect + f[static_cast<std::size_t>(j)] * m(static_cast<std::size_t>(k), static_cast<std::size_t>(j));
                CHECK(deriv == expect);
            }
        }
    }
}

TEST_CASE("property: highest-weight extensions intertwine") {
    auto ten = make_rep(RepKind::SL2TENSOR);
    // Highest-weight vectors of weight 4, 2 and 0 in sl2 (x) sl2.
    auto l4 = extend_from_highest_weight(make_rep(RepKind::V, 4), unit(5, 0), ten, unit(9, 0));
    CHECK(intertwines(l4, make_rep(RepKind::V, 4), ten));
    Vec hw2(9);
    hw2[0 * 3 + 1] = 1;  // e (x) h - h (x) e
    hw2[1 * 3 + 0] = -1;
    REQUIRE(ten.act_e.apply(hw2) == Vec(9));
    auto l2 = extend_from_highest_weight(make_rep(RepKind::V, 2), unit(3, 0), ten, hw2);
    CHECK(intertwines(l2, make_rep(RepKind::V, 2), ten));
    for (int d = 1; d <= 4; ++d) {
        auto end = make_rep(RepKind::END, d);
        // rho(e) is a weight-2 highest-weight vector of End(V_d).
        auto l = extend_from_highest_weight(make_rep(RepKind::V, 2), unit(3, 0), end,
                                            lie_action_matrix(d, Sl2Elem::e()).flatten());
        CHECK(intertwines(l, make_rep(RepKind::V, 2), end));
    }
}
