#include <doctest.h>

#include "chowgamma/errors.hpp"
#include "chowgamma/symfunc.hpp"

using namespace chowgamma;

namespace {

mpz_class factorial(int n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

RankSet full(int n) {
    RankSet s;
    for (int i = 1; i < n; ++i) s.push_back(i);
    return s;
}

}  // namespace

TEST_CASE("partitions and tableaux") {
    CHECK(partitions(4) == std::vector<Partition>{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}});
    CHECK(partitions(7).size() == 15);
    for (int n = 1; n <= 7; ++n) {
        mpz_class squares = 0;
        for (const auto& lambda : partitions(n)) {
            CHECK(mpz_class(static_cast<long>(syt_list(lambda).size())) == syt_count(lambda));
            squares += syt_count(lambda) * syt_count(lambda);
        }
        CHECK(squares == factorial(n));
    }
    std::vector<Tableau> t = syt_list({2, 1});
    REQUIRE(t.size() == 2);
    CHECK(descent_set({3, 1, 2}) == RankSet{1});
    CHECK(to_string_partition({2, 1}) == "[2,1]");
}

TEST_CASE("character values") {
    CHECK(sn_character({2, 1}, {1, 1, 1}) == 2);
    CHECK(sn_character({2, 1}, {2, 1}) == 0);
    CHECK(sn_character({2, 1}, {3}) == -1);
    CHECK(sn_character({1, 1, 1, 1}, {2, 2}) == 1);
    CHECK(sn_character({3, 1}, {4}) == -1);
    CHECK(sn_character({2, 2}, {3, 1}) == -1);
    CHECK_THROWS_AS(sn_character({2, 1}, {2}), DomainError);
}

TEST_CASE("Frobenius characteristic") {
    for (int n = 1; n <= 6; ++n) {
        PermGroup g = symmetric_group(n);
        std::vector<mpz_class> regular(g.class_count(), 0), trivial(g.class_count(), 1);
        regular[0] = factorial(n);
        SymF reg = frobenius_ch(g, regular);
        for (const auto& lambda : partitions(n)) CHECK(reg.coeff(lambda) == MVPoly(syt_count(lambda)));
        CHECK(frobenius_ch(g, trivial) == SymF::schur({n}));
    }
    CHECK_THROWS_AS(frobenius_ch(cyclic_group(3), {1, 1, 1}), DomainError);
}

TEST_CASE("ribbons in both bases") {
    CHECK(ribbon_to_schur({1}, 3) == SymF::schur({2, 1}));
    CHECK(ribbon_to_schur({}, 3) == SymF::schur({3}));
    for (int n = 1; n <= 6; ++n) {
        std::map<RankSet, SymF> all = all_ribbons_fundamental(n);
        for (const RankSet& r : subsets_of(full(n))) {
            CHECK(to_fundamental(ribbon_to_schur(r, n)) == ribbon_to_fundamental(r, n));
            CHECK(all.at(r) == ribbon_to_fundamental(r, n));
        }
    }
}

TEST_CASE("ribbon monomial expansion") {
    for (int n = 1; n <= 5; ++n)
        for (int m = 1; m <= 3; ++m)
            for (const RankSet& r : subsets_of(full(n)))
                CHECK(monomial_expansion(ribbon_to_fundamental(r, n), m) == ribbon_word_expansion(r, n, m));
}

TEST_CASE("Pieri rule") {
    CHECK(pieri_h(1, SymF::schur({1})) == SymF::schur({2}) + SymF::schur({1, 1}));
    CHECK(pieri_h(2, SymF::schur({1})) == SymF::schur({3}) + SymF::schur({2, 1}));
    // h_1^n = sum f^lambda s_lambda.
    SymF f = SymF::schur({1});
    for (int n = 2; n <= 6; ++n) {
        f = pieri_h(1, f);
        for (const auto& lambda : partitions(n)) CHECK(f.coeff(lambda) == MVPoly(syt_count(lambda)));
    }
}

TEST_CASE("principal specialization closed form") {
    for (int n = 1; n <= 5; ++n)
        for (const RankSet& s : subsets_of(full(n))) {
            long sum = 0;
            for (int x : s) sum += x;
            for (int m = 1; m <= 12; ++m) {
                const int top = m - 1 - static_cast<int>(s.size());
                MVPoly expected = top < 0 ? MVPoly{}
                                          : gaussian_binomial(static_cast<unsigned>(top + n), static_cast<unsigned>(n)) *
                                                MVPoly::q(static_cast<std::uint32_t>(sum));
                CHECK(principal_specialization(s, n, m) == expected);
            }
        }
}

TEST_CASE("specialization routes agree across bases") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& lambda : partitions(n)) {
            SymF s = SymF::schur(lambda);
            SymF f = to_fundamental(s);
            CHECK(ps_stable_normalized(s, n) == ps_stable_normalized(f, n));
            CHECK(ps_principal_numerator(s, n) == ps_principal_numerator(f, n));
        }
}

TEST_CASE("text form") {
    SymF f = SymF::schur({2, 1}, 1 + MVPoly::t()) + SymF::schur({3});
    CHECK(f.to_string() == "s[2,1]*(1 + t) + s[3]");
    CHECK(SymF::fundamental({1}, 2).to_string() == "F{1}");
    CHECK(SymF(SymF::Basis::schur, 2).to_string() == "0");
    CHECK(symf_equal(SymF::schur({2}), SymF::fundamental({}, 2)));
}
