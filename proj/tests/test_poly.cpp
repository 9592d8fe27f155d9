#include <doctest.h>

#include <random>

#include "chowgamma/errors.hpp"
#include "chowgamma/poly.hpp"

using namespace chowgamma;

namespace {

MVPoly random_poly(std::mt19937& rng) {
    std::uniform_int_distribution<int> terms(0, 6), exp(0, 4), coeff(-20, 20);
    MVPoly f;
    for (int i = terms(rng); i > 0; --i)
        f.add_term({static_cast<std::uint32_t>(exp(rng)), static_cast<std::uint32_t>(exp(rng)),
                    static_cast<std::uint32_t>(exp(rng))},
                   coeff(rng));
    return f;
}

}  // namespace

TEST_CASE("canonical text form") {
    MVPoly f = 1 + 4 * MVPoly::t() + MVPoly::t(2);
    CHECK(f.to_string() == "1 + 4*t + t^2");
    CHECK(MVPoly{}.to_string() == "0");
    CHECK((MVPoly::t() * MVPoly::q(2) * MVPoly::p() * 3).to_string() == "3*t*q^2*p");
    CHECK((1 - MVPoly::t()).to_string() == "1 - t");
}

TEST_CASE("ring laws on random polynomials") {
    std::mt19937 rng(7);
    for (int i = 0; i < 200; ++i) {
        MVPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
        CHECK(a * MVPoly(1) == a);
        CHECK((a * b).substitute(Var::p, -1) == a.substitute(Var::p, -1) * b.substitute(Var::p, -1));
    }
}

TEST_CASE("coefficients are arbitrary precision") {
    MVPoly f = (1 + MVPoly::t()).pow(100);
    mpz_class c50;
    mpz_bin_uiui(c50.get_mpz_t(), 100, 50);
    CHECK(f.coeff({50, 0, 0}) == c50);
    CHECK(f.substitute(Var::t, 1) == MVPoly(mpz_class(1) << 100));
}

TEST_CASE("shift and degree") {
    MVPoly f = MVPoly::t(2) + MVPoly::t(3) * MVPoly::q();
    CHECK(f.degree_t() == 3);
    CHECK(f.shift_t(-2) == 1 + MVPoly::t() * MVPoly::q());
    CHECK_THROWS_AS(f.shift_t(-3), DomainError);
    CHECK(MVPoly{}.degree_t() == -1);
}

TEST_CASE("gaussian binomial") {
    MVPoly q = MVPoly::q();
    CHECK(gaussian_binomial(4, 2) == 1 + q + 2 * q.pow(2) + q.pow(3) + q.pow(4));
    CHECK(gaussian_binomial(5, 0) == MVPoly(1));
    CHECK_THROWS_AS(gaussian_binomial(2, 3), DomainError);
    for (unsigned n = 1; n <= 8; ++n)
        for (unsigned k = 1; k < n; ++k)
            CHECK(gaussian_binomial(n, k) ==
                  gaussian_binomial(n - 1, k - 1) + q.pow(k) * gaussian_binomial(n - 1, k));
}

TEST_CASE("gamma expansion") {
    GammaVector g = gamma_expand(1 + 4 * MVPoly::t() + MVPoly::t(2), 2);
    REQUIRE(g.gamma.size() == 2);
    CHECK(g.gamma[0] == MVPoly(1));
    CHECK(g.gamma[1] == MVPoly(2));
    CHECK(g.nonnegative());
    CHECK(g.reconstruct() == 1 + 4 * MVPoly::t() + MVPoly::t(2));

    // Coefficients may be polynomials in q.
    MVPoly a3 = 1 + 2 * MVPoly::t() + MVPoly::t() * MVPoly::q() + MVPoly::t() * MVPoly::q(2) + MVPoly::t(2);
    GammaVector ga = gamma_expand(a3, 2);
    CHECK(ga.gamma[1] == MVPoly::q() + MVPoly::q(2));

    CHECK(gamma_expand(1 - MVPoly::t() * 2 + MVPoly::t(2), 2).gamma[1] == MVPoly(-4));
}

TEST_CASE("non-palindromic input names the first bad index") {
    try {
        gamma_expand(1 + 2 * MVPoly::t() + 3 * MVPoly::t(2), 2);
        FAIL("expected PalindromyError");
    } catch (const PalindromyError& e) {
        CHECK(e.index() == 0);
    }
    CHECK_FALSE(is_palindromic(1 + MVPoly::t(), 2));
    CHECK(is_palindromic(MVPoly::t() + MVPoly::t(2), 3));
}

TEST_CASE("gamma basis round trip") {
    for (unsigned d = 0; d <= 10; ++d)
        for (unsigned k = 0; 2 * k <= d; ++k) {
            GammaVector g = gamma_expand(gamma_basis(k, d), d);
            for (unsigned j = 0; j < g.gamma.size(); ++j) CHECK(g.gamma[j] == MVPoly(j == k ? 1 : 0));
        }
    CHECK_THROWS_AS(gamma_basis(3, 5), DomainError);
}

TEST_CASE("unimodality") {
    CHECK(is_unimodal(1 + 4 * MVPoly::t() + MVPoly::t(2)));
    CHECK_FALSE(is_unimodal(2 + MVPoly::t() + 2 * MVPoly::t(2)));
    CHECK_THROWS_AS(is_unimodal(MVPoly::q()), DomainError);
}
