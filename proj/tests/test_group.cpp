#include <doctest.h>

#include <numeric>

#include "chowgamma/errors.hpp"
#include "chowgamma/group.hpp"

using namespace chowgamma;

namespace {

std::size_t class_size_total(const PermGroup& g) {
    std::size_t total = 0;
    for (const auto& c : g.classes()) total += c.size;
    return total;
}

}  // namespace

TEST_CASE("permutation helpers") {
    Permutation a{1, 2, 0, 3}, b{0, 1, 3, 2};
    CHECK(compose(a, b) == Permutation{1, 3, 0, 2});
    CHECK(compose(a, inverse(a)) == identity_permutation(4));
    CHECK(cycle_type(a) == std::vector<int>{3, 1});
    CHECK(cycle_string(a) == "(1 2 3)");
    CHECK(cycle_string(identity_permutation(3)) == "()");
    CHECK(cycle_string(Permutation{1, 0, 3, 2}) == "(1 2)(3 4)");
    CHECK_FALSE(is_permutation({0, 0, 1}, 3));
}

TEST_CASE("symmetric groups") {
    const std::size_t classes[] = {1, 1, 2, 3, 5, 7, 11, 15};
    std::size_t order = 1;
    for (int n = 1; n <= 7; ++n) {
        order *= static_cast<std::size_t>(n);
        PermGroup g = symmetric_group(n);
        CHECK(g.order() == order);
        CHECK(g.class_count() == classes[n]);
        CHECK(class_size_total(g) == order);
        CHECK(g.classes()[0].representative == identity_permutation(n));
    }
}

TEST_CASE("cyclic and trivial groups") {
    PermGroup c4 = cyclic_group(4);
    CHECK(c4.order() == 4);
    CHECK(c4.class_count() == 4);
    CHECK(trivial_group(5).order() == 1);
    PermGroup g = group_from_generators(4, {{1, 2, 3, 0}});
    CHECK(g.order() == 4);
}

TEST_CASE("conjugacy classes are closed and exhaustive") {
    PermGroup g = group_from_generators(5, {{1, 0, 2, 3, 4}, {0, 2, 3, 4, 1}});
    for (std::size_t i = 0; i < g.order(); ++i)
        for (const auto& h : g.elements()) {
            Permutation conj = compose(compose(inverse(h), g.elements()[i]), h);
            CHECK(g.class_of_element(g.index_of(conj)) == g.class_of_element(i));
        }
    CHECK_THROWS_AS(g.index_of({0, 1, 2, 4, 3, 9}), DomainError);
}

TEST_CASE("group cap") {
    CHECK_THROWS_AS(symmetric_group(8, 1000), ResourceError);
    CHECK_THROWS_AS(PermGroup(3, {{0, 0, 1}}), DomainError);
}

TEST_CASE("vertex action on edges") {
    Matroid k4 = Matroid::complete_graph(4);
    PermGroup g = named_group(k4, "symmetric");
    CHECK(g.degree() == 6);
    CHECK(g.order() == 24);
    CHECK(g.class_count() == 5);
    const auto& graph = std::get<GraphicModel>(k4.model());
    Permutation e = induced_edge_permutation(graph, {1, 0, 2, 3});
    CHECK(e == Permutation{0, 3, 4, 1, 2, 5});
    for (const auto& h : g.elements()) CHECK(check_automorphism(k4, h));
    CHECK(named_group(Matroid::uniform(2, 5), "cyclic").order() == 5);
    CHECK_THROWS_AS(named_group(k4, "dihedral"), DomainError);
}
