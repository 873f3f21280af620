// Seeded random generators for property tests and verification suites.
#ifndef COVAR_GEN_HPP
#define COVAR_GEN_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "covar/linalg.hpp"
#include "covar/matrix.hpp"
#include "covar/multipoly.hpp"
#include "covar/rational.hpp"
#include "covar/sl2rep.hpp"

namespace covar::gen {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(eng_); }
    bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(eng_); }

    Rational rational(long bound = 9) {
        long num = integer(-bound, bound);
        long den = integer(1, bound);
        return Rational(num, den);
    }
    Rational nonzero_rational(long bound = 9) {
        Rational r;
        do r = rational(bound);
        while (r.is_zero());
        return r;
    }

    Vec vec(std::size_t n, long bound = 9) {
        Vec v;
        for (std::size_t i = 0; i < n; ++i) v.push_back(rational(bound));
        return v;
    }

    Matrix<Rational> matrix(std::size_t rows, std::size_t cols, long bound = 5) {
        Matrix<Rational> m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = Rational(integer(-bound, bound));
        return m;
    }

    MultiPoly poly(const VarList& vars, unsigned max_deg, std::size_t max_terms, long bound = 9) {
        std::vector<Term> terms;
        std::size_t count = static_cast<std::size_t>(integer(0, static_cast<long>(max_terms)));
        for (std::size_t t = 0; t < count; ++t) {
            Exponents e(vars->size(), 0);
            unsigned budget = static_cast<unsigned>(integer(0, max_deg));
            for (unsigned k = 0; k < budget; ++k) e[static_cast<std::size_t>(integer(0, static_cast<long>(vars->size()) - 1))]++;
            terms.push_back({std::move(e), rational(bound)});
        }
        return MultiPoly::from_terms(vars, std::move(terms));
    }

    BinaryForm<Rational> form(int d, long bound = 9) { return BinaryForm<Rational>(d, vec(static_cast<std::size_t>(d) + 1, bound)); }

    /// Product of elementary unipotent and torus elements, so det = 1 exactly.
    GroupElem<Rational> sl2(long bound = 4) {
        Rational a(integer(-bound, bound)), b(integer(-bound, bound));
        Rational t = nonzero_rational(bound);
        GroupElem<Rational> u{1, a, 0, 1}, l{1, 0, b, 1}, diag{t, 0, 0, Rational(1) / t};
        return u * l * diag;
    }

    std::mt19937_64& engine() { return eng_; }

private:
    std::mt19937_64 eng_;
};

}  // namespace covar::gen

#endif
