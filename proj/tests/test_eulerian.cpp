#include <doctest.h>

#include "chowgamma/chow.hpp"
#include "chowgamma/errors.hpp"
#include "chowgamma/eulerian.hpp"

using namespace chowgamma;

namespace {

MVPoly poly(std::initializer_list<long> coeffs) {
    std::vector<mpz_class> c;
    for (long v : coeffs) c.emplace_back(v);
    return MVPoly::from_t_coeffs(c);
}

const MVPoly t = MVPoly::t();
const MVPoly q = MVPoly::q();

}  // namespace

TEST_CASE("permutation statistics") {
    PermStats s = stats({2, 3, 1});
    CHECK(s.descents == RankSet{2});
    CHECK(s.des == 1);
    CHECK(s.maj == 2);
    CHECK(s.inv == 2);
    CHECK(s.exc == 2);
    CHECK(inverse_one_line({2, 3, 1}) == OneLine{3, 1, 2});
    CHECK(is_derangement({2, 3, 1}));
    CHECK_FALSE(is_derangement({1, 3, 2}));
    int count = 0;
    for_each_permutation(5, [&](const OneLine&) { ++count; });
    CHECK(count == 120);
}

TEST_CASE("q-Eulerian and q-derangement polynomials") {
    CHECK(q_eulerian(3) == 1 + 2 * t + t * q + t * q.pow(2) + t.pow(2));
    CHECK(q_derangement(3) == t + t.pow(2));
    CHECK(q_binomial_eulerian(2) == 1 + 2 * t + t * q + t.pow(2));
    CHECK(q_eulerian(4).substitute(Var::q, 1) == poly({1, 11, 11, 1}));
    CHECK(q_derangement(4).substitute(Var::q, 1) == poly({0, 1, 7, 1}));
    for (int n = 1; n <= 7; ++n) {
        GammaVector g = gamma_expand(q_eulerian(n), static_cast<unsigned>(n - 1));
        CHECK(g.nonnegative());
    }
}

TEST_CASE("Hilbert series bridges") {
    for (int n = 1; n <= 6; ++n) CHECK(verify_hilbert_bridges(n).passed());
    FlatLattice u23 = flats_lattice(Matroid::uniform(2, 3));
    CHECK(hilbert_series(u23, RingKind::chow).shift_t(1) == q_derangement(3).substitute(Var::q, 1));
}

TEST_CASE("Eulerian quasisymmetric functions") {
    QFunctions f = q_functions(2);
    CHECK(f.q0.to_string() == "s[2]*(t)");
    CHECK(f.q.to_string() == "s[2]*(1 + t)");
    CHECK(f.qtilde.to_string() == "s[1,1]*(t) + s[2]*(1 + 2*t + t^2)");
    for (int n = 1; n <= 6; ++n) {
        QFunctions g = q_functions(n);
        CHECK(symf_equal(g.qtilde, g.qtilde_recursive));
        for (const auto& lambda : partitions(n)) CHECK(n_lambda(lambda, n) == n_lambda_tableaux(lambda));
    }
}

TEST_CASE("corollary suite") {
    for (int n = 2; n <= 6; ++n) {
        Report r = verify_corollaries(n);
        CHECK(r.passed());
        std::size_t discrepancies = 0;
        for (const auto& c : r.checks())
            if (c.id.rfind("discrepancy/", 0) == 0) {
                ++discrepancies;
                CHECK(c.note.find("does not match") != std::string::npos);
            }
        CHECK(discrepancies >= 4);
    }
    CHECK_THROWS_AS(verify_corollaries(1), DomainError);
}

TEST_CASE("pq and Schur suites") {
    for (int n = 1; n <= 7; ++n) CHECK(verify_pq_eulerian(n).passed());
    for (int n = 1; n <= 5; ++n) {
        CHECK(verify_schur_coeff(n).passed());
        CHECK(verify_pq_binomial(n).passed());
        CHECK(verify_ribbon_bridge(n).passed());
    }
}

TEST_CASE("xi windows") {
    int r = 0;
    CHECK(parse_xi_window("chow(4)", &r) == XiWindow::chow);
    CHECK(r == 4);
    CHECK(parse_xi_window("no-last", nullptr) == XiWindow::no_last);
    CHECK_THROWS_AS(parse_xi_window("sideways", nullptr), DomainError);
    CHECK_THROWS_AS(parse_xi_weight("heavy"), DomainError);
    for (int n = 2; n <= 6; ++n)
        for (int k = 0; k < n; ++k) {
            XiSpec a{n, k, XiWindow::no_first, 0, XiWeight::pq, XiPopulation::all};
            XiSpec b = a;
            b.window = XiWindow::no_last;
            CHECK(xi(a) == xi(b));
        }
    XiSpec s{4, 1, XiWindow::full, 0, XiWeight::count, XiPopulation::all};
    CHECK(xi_all(s, 3)[1] == xi(s));
}
