#include <doctest.h>

#include "chowgamma/errors.hpp"
#include "chowgamma/matroid.hpp"

using namespace chowgamma;

namespace {

long binomial(int n, int k) {
    long b = 1;
    for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
    return b;
}

}  // namespace

TEST_CASE("uniform lattice sizes") {
    for (int n = 1; n <= 7; ++n)
        for (int r = 1; r <= n; ++r) {
            FlatLattice l = flats_lattice(Matroid::uniform(r, n));
            long expected = 2;  // bottom and top
            for (int k = 1; k < r; ++k) expected += binomial(n, k);
            CHECK(static_cast<long>(l.size()) == expected);
            CHECK(l.rank() == r);
            CHECK(l.flat(l.top()).set == ElementSet::range(n));
            CHECK(l.flat(l.bottom()).set.empty());
        }
}

TEST_CASE("partition lattices") {
    // Bell numbers 5, 15, 52; ranks follow Stirling numbers of the second kind.
    CHECK(flats_lattice(Matroid::complete_graph(3)).size() == 5);
    FlatLattice p4 = flats_lattice(Matroid::complete_graph(4));
    CHECK(p4.size() == 15);
    CHECK(p4.at_rank(1).size() == 6);
    CHECK(p4.at_rank(2).size() == 7);
    FlatLattice p5 = flats_lattice(Matroid::complete_graph(5));
    CHECK(p5.size() == 52);
    CHECK(p5.at_rank(1).size() == 10);
    CHECK(p5.at_rank(2).size() == 25);
    CHECK(p5.at_rank(3).size() == 15);
}

TEST_CASE("models agree") {
    Matroid u = Matroid::uniform(2, 4);
    std::vector<ElementSet> bases;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) bases.push_back({i, j});
    Matroid b = Matroid::from_bases(4, bases);
    FlatLattice lu = flats_lattice(u), lb = flats_lattice(b);
    REQUIRE(lu.size() == lb.size());
    for (std::size_t i = 0; i < lu.size(); ++i) CHECK(lu.flat(i).set == lb.flat(i).set);

    std::vector<std::pair<ElementSet, int>> flats;
    for (const Flat& f : lu.flats()) flats.emplace_back(f.set, f.rank);
    FlatLattice lf = flats_lattice(Matroid::from_flats(4, flats));
    CHECK(lf.size() == lu.size());

    // The 4-cycle graph is U_{3,4}.
    Matroid c4 = Matroid::graphic(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    CHECK(flats_lattice(c4).size() == flats_lattice(Matroid::uniform(3, 4)).size());
}

TEST_CASE("closure and rank") {
    Matroid k4 = Matroid::complete_graph(4);  // edges 01 02 03 12 13 23
    CHECK(k4.rank() == 3);
    CHECK(closure(k4, {0, 1}) == ElementSet({0, 1, 3}));
    CHECK(k4.rank_of({0, 1, 3}) == 2);
    CHECK(closure(Matroid::uniform(2, 5), {0, 1}) == ElementSet::range(5));
}

TEST_CASE("invalid input is rejected") {
    CHECK_THROWS_AS(Matroid::uniform(4, 3), DomainError);
    CHECK_THROWS_AS(Matroid::uniform(0, 3), DomainError);
    CHECK_THROWS_AS(Matroid::graphic(2, {{0, 0}}), DomainError);
    CHECK_THROWS_AS(Matroid::from_bases(3, {}), DomainError);
    FlatLattice l = flats_lattice(Matroid::uniform(3, 4));
    CHECK_THROWS_AS(rank_selected(l, {3}), DomainError);
    CHECK_THROWS_AS(rank_selected(l, {0}), DomainError);
}

TEST_CASE("stable sets follow the Fibonacci numbers") {
    long a = 1, b = 2;
    for (int m = 0; m <= 18; ++m) {
        CHECK(static_cast<long>(stab(1, m).size()) == a);
        for (const RankSet& s : stab(1, m)) CHECK(is_stable(s));
        long c = a + b;
        a = b;
        b = c;
    }
    CHECK(stab(2, 4) == std::vector<RankSet>{{}, {2}, {3}, {4}, {2, 4}});
    CHECK(stab(3, 2) == std::vector<RankSet>{{}});
}

TEST_CASE("chains of rank-selected subposets") {
    FlatLattice b3 = flats_lattice(Matroid::boolean(3));
    CHECK(maximal_chains(rank_selected(b3, {1, 2})).size() == 6);
    CHECK(maximal_chains(rank_selected(b3, {})).size() == 1);
    FlatLattice p4 = flats_lattice(Matroid::complete_graph(4));
    // 4!3!/2^3 maximal chains in the partition lattice of 4.
    CHECK(maximal_chains(rank_selected(p4, {1, 2})).size() == 18);
    std::size_t streamed = 0;
    for_each_chain(p4, {1, 2}, [&](const Chain&) { ++streamed; });
    CHECK(streamed == 18);
}

TEST_CASE("induced flat permutations") {
    FlatLattice l = flats_lattice(Matroid::uniform(2, 3));
    auto image = induced_flat_permutation(l, {1, 2, 0});
    REQUIRE(image.has_value());
    CHECK((*image)[l.bottom()] == l.bottom());
    CHECK((*image)[l.top()] == l.top());
    FlatLattice k4 = flats_lattice(Matroid::complete_graph(4));
    // Swapping two edges that are not related by a vertex map breaks triangles.
    CHECK_FALSE(induced_flat_permutation(k4, {1, 0, 2, 3, 4, 5}).has_value());
}
