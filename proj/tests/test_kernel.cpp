#include <catch_amalgamated.hpp>

#include <algorithm>

#include "covar/linalg.hpp"
#include "covar/multipoly.hpp"
#include "covar/rational.hpp"
#include "covar/rational_function.hpp"
#include "covar/univariate.hpp"
#include "covar/gen.hpp"

using namespace covar;

namespace {

VarList xy() { return make_vars({"x", "y"}); }

MultiPoly var(const VarList& v, const char* name) { return MultiPoly::variable(v, name); }

}  // namespace

TEST_CASE("rational normalizes and parses") {
    Rational r(6, -4);
    CHECK(r.str() == "-3/2");
    CHECK(Rational(0, 5).str() == "0");
    CHECK(Rational::parse("10/4") == Rational(5, 2));
    CHECK(Rational::parse("-7") == Rational(-7));
    CHECK_THROWS_AS(Rational::parse("1.5"), InputError);
    CHECK_THROWS_AS(Rational::parse("1/0"), InputError);
    CHECK_THROWS_AS(Rational::parse(""), InputError);
}

TEST_CASE("combinatorial helpers") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(5, -1) == 0);
    CHECK(binomial(5, 6) == 0);
    CHECK(factorial(6) == 720);
    CHECK(pochhammer(3, 4) == 3 * 4 * 5 * 6);
    CHECK(pochhammer(7, 0) == 1);
    CHECK(falling(5, 2) == 20);
    CHECK(falling(2, 3) == 0);
}

TEST_CASE("poly_partial") {
    auto v = xy();
    auto x = var(v, "x"), y = var(v, "y");
    CHECK((x * x * y).partial("x") == Rational(2) * x * y);
    CHECK(MultiPoly::constant(v, Rational(5)).partial("x").is_zero());
    auto a = indexed_vars("a", 2);
    auto a0 = MultiPoly::variable(a, 0), a1 = MultiPoly::variable(a, 1);
    CHECK((a0 * a0 * a1).partial("a1") == a0 * a0);
    CHECK_THROWS_AS(x.partial("z"), InputError);
}

TEST_CASE("poly_substitute") {
    auto v = xy();
    auto x = var(v, "x"), y = var(v, "y");
    CHECK((x + y).substitute({{"x", x}, {"y", MultiPoly(0)}}) == x);
    CHECK((x * y).substitute({{"x", x + y}, {"y", y}}) == x * y + y * y);
    auto sq = (x * x).substitute({{"x", MultiPoly(2)}});
    CHECK(sq.is_constant());
    CHECK(sq.constant_value() == Rational(4));
    CHECK_THROWS_AS((x * y).substitute({{"x", y}}), InputError);
}

TEST_CASE("squarefree_decompose examples") {
    auto tv = make_vars({"t"});
    auto t = MultiPoly::variable(tv, 0);
    auto one = MultiPoly::constant(tv, Rational(1));

    auto r1 = squarefree_decompose(t * t);
    REQUIRE(r1.size() == 1);
    CHECK(r1[0].factor == t);
    CHECK(r1[0].multiplicity == 2);

    auto r2 = squarefree_decompose(t * t * (t - one));
    REQUIRE(r2.size() == 2);
    CHECK(r2[0].factor == t - one);
    CHECK(r2[0].multiplicity == 1);
    CHECK(r2[1].factor == t);
    CHECK(r2[1].multiplicity == 2);

    auto r3 = squarefree_decompose(t * t + one);
    REQUIRE(r3.size() == 1);
    CHECK(r3[0].factor == t * t + one);
    CHECK(r3[0].multiplicity == 1);

    CHECK_THROWS_AS(squarefree_decompose(MultiPoly(tv)), InputError);
}

TEST_CASE("span_reduce examples") {
    CHECK(span_reduce({{1, 0}, {0, 1}}).dim() == 2);
    auto line = span_reduce({{1, 1}, {2, 2}});
    CHECK(line.dim() == 1);
    CHECK(line.basis()[0] == Vec{1, 1});
    CHECK(span_reduce({}).dim() == 0);
    CHECK_THROWS_AS(span_reduce({{1, 0}, {1, 0, 0}}), InputError);
}

TEST_CASE("plucker examples") {
    auto p1 = plucker(span_reduce({{1, 0, 0}, {0, 1, 0}}));
    CHECK(p1.coords == std::vector<BigInt>{1, 0, 0});
    auto p2 = plucker(span_reduce({{1, 0, 1}, {0, 1, 1}}));
    CHECK(p2.coords == std::vector<BigInt>{1, 1, -1});
    auto p3 = plucker(span_reduce({{2, 0}, {0, 2}}));
    CHECK(p3.coords == std::vector<BigInt>{1});
    CHECK_THROWS_AS(plucker(Subspace(3)), InputError);
}

TEST_CASE("generic_rank examples") {
    auto v = xy();
    auto x = var(v, "x"), y = var(v, "y");
    MultiPoly z(v);
    CHECK(generic_rank(Matrix<MultiPoly>{{x, z}, {z, y}}) == 2);
    CHECK(generic_rank(Matrix<MultiPoly>{{x, y}, {Rational(2) * x, Rational(2) * y}}) == 1);
    CHECK(generic_rank(Matrix<MultiPoly>{{x, y}, {y, x}}) == 2);
    CHECK(generic_rank_bareiss(Matrix<MultiPoly>{{x, y}, {y, x}}) == 2);
    CHECK(generic_rank_bareiss(Matrix<MultiPoly>{{x, y}, {Rational(2) * x, Rational(2) * y}}) == 1);
}

TEST_CASE("rational functions reduce and differentiate") {
    auto v = make_vars({"a", "b", "c", "d"});
    auto a = MultiPoly::variable(v, 0), b = MultiPoly::variable(v, 1), d = MultiPoly::variable(v, 3);
    RationalFunction f(a * b - b * d, b * b);
    CHECK(f.num() == a - d);
    CHECK(f.den() == b);
    RationalFunction g(Rational(2) * b, Rational(-4) * b * b);
    CHECK(g.den().leading_coefficient() == Rational(1));
    CHECK(g == RationalFunction(MultiPoly(Rational(-1, 2)), b));
    CHECK(f.partial("a") == RationalFunction(MultiPoly::constant(v, Rational(1)), b));
    CHECK(poly_gcd(a * a - b * b, a * a + Rational(2) * a * b + b * b) == a + b);
}

TEST_CASE("property: Leibniz rule", "[property]") {
    gen::Rng rng(11);
    auto v = indexed_vars("x", 4);
    for (int trial = 0; trial < 200; ++trial) {
        auto p = rng.poly(v, 3, 5), q = rng.poly(v, 3, 5);
        auto idx = static_cast<std::size_t>(rng.integer(0, 3));
        CHECK((p * q).partial(idx) == p * q.partial(idx) + q * p.partial(idx));
    }
}

TEST_CASE("property: ring axioms spot checks", "[property]") {
    gen::Rng rng(12);
    auto v = indexed_vars("x", 3);
    for (int trial = 0; trial < 100; ++trial) {
        auto p = rng.poly(v, 3, 4), q = rng.poly(v, 3, 4), r = rng.poly(v, 2, 3);
        CHECK(p + q == q + p);
        CHECK(p * q == q * p);
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * (q + r) == p * q + p * r);
    }
}

TEST_CASE("property: squarefree reconstruction", "[property]") {
    gen::Rng rng(13);
    for (int trial = 0; trial < 200; ++trial) {
        // Products of small powers of random low-degree factors give
        // genuinely repeated roots.
        UPoly p(std::vector<Rational>{rng.nonzero_rational()});
        int budget = static_cast<int>(rng.integer(1, 12));
        while (budget > 0) {
            int deg = static_cast<int>(rng.integer(1, 2));
            int mult = static_cast<int>(rng.integer(1, 3));
            if (deg * mult > budget) break;
            std::vector<Rational> c;
            for (int k = 0; k < deg; ++k) c.push_back(rng.rational());
            c.push_back(rng.nonzero_rational());
            UPoly f(c);
            for (int k = 0; k < mult; ++k) p = p * f;
            budget -= deg * mult;
        }
        if (p.degree() < 0) continue;
        auto parts = squarefree_decompose(p);
        UPoly prod(std::vector<Rational>{1});
        for (std::size_t i = 0; i < parts.size(); ++i) {
            const auto& f = parts[i];
            CHECK(gcd(f.factor, f.factor.derivative()).degree() == 0);
            for (std::size_t j = i + 1; j < parts.size(); ++j) CHECK(gcd(f.factor, parts[j].factor).degree() == 0);
            for (int k = 0; k < f.multiplicity; ++k) prod = prod * f.factor;
        }
        CHECK(prod == p.monic());
    }
}

TEST_CASE("property: RREF canonical under permutation and scaling", "[property]") {
    gen::Rng rng(14);
    for (int trial = 0; trial < 200; ++trial) {
        auto n = static_cast<std::size_t>(rng.integer(1, 6));
        auto k = static_cast<std::size_t>(rng.integer(0, 6));
        std::vector<Vec> vs;
        for (std::size_t i = 0; i < k; ++i) {
            if (!vs.empty() && rng.coin(0.3)) {
                Vec w = vs[static_cast<std::size_t>(rng.integer(0, static_cast<long>(vs.size()) - 1))];
                const Rational c(rng.integer(-3, 3));
                for (auto& x : w) x *= c;
                vs.push_back(w);
            } else {
                vs.push_back(rng.vec(n, 4));
            }
        }
        auto base = span_reduce(vs, n);
        CHECK(span_reduce(base.basis(), n) == base);
        auto shuffled = vs;
        std::shuffle(shuffled.begin(), shuffled.end(), rng.engine());
        for (auto& w : shuffled) {
            const Rational c = rng.nonzero_rational();
            for (auto& x : w) x *= c;
        }
        CHECK(span_reduce(shuffled, n) == base);
    }
}

TEST_CASE("property: Plucker independent of generating set", "[property]") {
    gen::Rng rng(15);
    for (int trial = 0; trial < 200; ++trial) {
        auto n = static_cast<std::size_t>(rng.integer(2, 6));
        auto k = static_cast<std::size_t>(rng.integer(1, static_cast<long>(n)));
        std::vector<Vec> vs;
        for (std::size_t i = 0; i < k; ++i) vs.push_back(rng.vec(n, 5));
        auto s = span_reduce(vs, n);
        if (s.dim() == 0) continue;
        // Random invertible recombination of the basis.
        std::vector<Vec> mixed;
        auto b = s.basis();
        for (std::size_t i = 0; i < b.size(); ++i) {
            Vec w = b[i];
            Rational scale(rng.integer(1, 4));
            for (auto& x : w) x *= scale;
            for (std::size_t j = 0; j < b.size(); ++j) {
                if (j == i) continue;
                Rational c = j < i ? rng.rational() : Rational(0);
                for (std::size_t t = 0; t < n; ++t) w[t] += c * b[j][t];
            }
            mixed.push_back(w);
        }
        auto p = plucker(s);
        CHECK(plucker(span_reduce(mixed, n)) == p);
        CHECK(plucker_of_rows(mixed) == p);
        // Quadratic Plucker relation for k = 2, n = 4.
        if (p.k == 2 && p.n == 4) {
            const auto& c = p.coords;  // 12 13 14 23 24 34
            CHECK(c[0] * c[5] - c[1] * c[4] + c[2] * c[3] == 0);
        }
    }
}

TEST_CASE("property: generic rank dominates sampled ranks", "[property]") {
    gen::Rng rng(16);
    auto v = indexed_vars("x", 3);
    for (int trial = 0; trial < 200; ++trial) {
        auto rows = static_cast<std::size_t>(rng.integer(1, 4));
        auto cols = static_cast<std::size_t>(rng.integer(1, 4));
        Matrix<MultiPoly> m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.poly(v, 2, 2, 3);
        if (rng.coin(0.4) && rows > 1) {
            // Force a dependent row.
            auto c = rng.poly(v, 1, 2, 3);
            for (std::size_t j = 0; j < cols; ++j) m(rows - 1, j) = c * m(0, j);
        }
        auto g = generic_rank(m);
        CHECK(g == generic_rank_bareiss(m));
        std::size_t best = 0;
        for (int s = 0; s < 20; ++s) {
            auto r = rank_at(m, v, rng.vec(3, 20));
            CHECK(r <= g);
            best = std::max(best, r);
        }
        CHECK(best == g);
    }
}
