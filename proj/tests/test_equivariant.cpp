#include <doctest.h>

#include <random>

#include "chowgamma/equivariant.hpp"
#include "chowgamma/errors.hpp"

using namespace chowgamma;

namespace {

ClassFunction cf(std::initializer_list<long> v) {
    ClassFunction f;
    for (long x : v) f.values.emplace_back(x);
    return f;
}

struct Setup {
    explicit Setup(Matroid m) : matroid(std::move(m)), lattice(flats_lattice(matroid)),
                                group(named_group(matroid, "symmetric")), action(lattice, group) {}
    Matroid matroid;
    FlatLattice lattice;
    PermGroup group;
    LatticeAction action;
};

}  // namespace

TEST_CASE("characters of the boolean lattice of rank 3") {
    Setup b(Matroid::boolean(3));
    CHECK(alpha_character(b.action, {1}) == cf({3, 1, 0}));
    CHECK(beta_character(b.action, {1}) == cf({2, 0, -1}));
    CHECK(beta_character(b.action, {1, 2}) == cf({1, -1, 1}));
    CHECK(beta_character(b.action, {}) == cf({1, 1, 1}));
    CHECK(homology_character(b.action, {1}) == cf({2, 0, -1}));
    CHECK(homology_character(b.action, {1, 2}) == cf({1, -1, 1}));
}

TEST_CASE("equivariant series restricts to the Hilbert series") {
    for (int n = 1; n <= 5; ++n)
        for (int r = 1; r <= n; ++r) {
            Setup s(Matroid::uniform(r, n));
            for (RingKind kind : {RingKind::chow, RingKind::augmented}) {
                EqSeries e = equivariant_hilbert(s.action, kind);
                CHECK(e.at_class(0) == hilbert_series(s.lattice, kind));
                CHECK(e.class_count() == s.group.class_count());
            }
        }
}

TEST_CASE("braid matroid gamma characters") {
    Setup k4(Matroid::complete_graph(4));
    EqSeries e = equivariant_hilbert(k4.action, RingKind::chow);
    std::vector<ClassFunction> g = equivariant_gamma(e, 2);
    REQUIRE(g.size() == 2);
    CHECK(g[0] == ClassFunction::constant(5, 1));
    CHECK(g[1].identity_value() == 6);
    CHECK(g[1] == homology_character(k4.action, {2}));

    Setup k5(Matroid::complete_graph(5));
    std::vector<ClassFunction> g5 = equivariant_gamma(equivariant_hilbert(k5.action, RingKind::chow), 3);
    CHECK(g5[1] == cf({38, 12, -2, 0, 0, 6, 2}));
    std::vector<ClassFunction> a5 = equivariant_gamma(equivariant_hilbert(k5.action, RingKind::augmented), 4);
    CHECK(a5[0].identity_value() == 1);
    CHECK(a5[1].identity_value() == 47);
    CHECK(a5[2].identity_value() == 46);
}

TEST_CASE("class functions are constant on classes") {
    std::mt19937 rng(3);
    for (const Matroid& m : {Matroid::complete_graph(5), Matroid::uniform(3, 6)}) {
        Setup s(m);
        RankSet all;
        for (int i = 1; i < s.lattice.rank(); ++i) all.push_back(i);
        std::uniform_int_distribution<std::size_t> pick(0, s.group.order() - 1);
        for (int trial = 0; trial < 40; ++trial) {
            std::size_t i = pick(rng);
            const Permutation& g = s.group.elements()[i];
            auto image = induced_flat_permutation(s.lattice, g);
            REQUIRE(image.has_value());
            std::size_t c = s.group.class_of_element(i);
            for (const RankSet& sub : subsets_of(all))
                CHECK(fixed_chain_count(s.lattice, sub, *image) == alpha_character(s.action, sub).values[c]);
        }
    }
}

TEST_CASE("main theorems on small uniform matroids") {
    for (int n = 1; n <= 5; ++n)
        for (int r = 1; r <= n; ++r) {
            Setup s(Matroid::uniform(r, n));
            CHECK(verify_main_theorems(s.action, RingKind::chow).passed());
            CHECK(verify_main_theorems(s.action, RingKind::augmented).passed());
        }
}

TEST_CASE("theorem windows") {
    CHECK(theorem_window(4, RingKind::chow) == std::vector<RankSet>{{}, {2}, {3}});
    CHECK(theorem_window(3, RingKind::augmented) == std::vector<RankSet>{{}, {1}, {2}});
    CHECK(theorem_degree(4, RingKind::chow) == 3);
    CHECK(theorem_degree(4, RingKind::augmented) == 4);
}

TEST_CASE("non-automorphisms are rejected") {
    FlatLattice l = flats_lattice(Matroid::complete_graph(4));
    PermGroup bad = group_from_generators(6, {{1, 0, 2, 3, 4, 5}});
    CHECK_THROWS_AS(LatticeAction(l, bad), DomainError);
    CHECK_THROWS_AS(equivariant_gamma(EqSeries{{cf({1}), cf({2})}}, 1), PalindromyError);
}
