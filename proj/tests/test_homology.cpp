#include <doctest.h>

#include <map>
#include <random>

#include "chowgamma/errors.hpp"
#include "chowgamma/homology.hpp"
#include "chowgamma/linalg.hpp"

using namespace chowgamma;

namespace {

BettiVector betti(const FlatLattice& l, const RankSet& s) { return reduced_betti(order_complex(rank_selected(l, s))); }

std::size_t boundary_square_nonzeros(const OrderComplex& c) {
    std::size_t nonzero = 0;
    for (int d = 1; d <= c.top_dimension(); ++d) {
        const SparseIntMatrix& outer = c.boundary(d - 1);
        const SparseIntMatrix& inner = c.boundary(d);
        for (std::size_t i = 0; i < outer.rows(); ++i) {
            std::map<std::size_t, mpz_class> row;
            for (const auto& [k, v] : outer.row(i))
                for (const auto& [j, w] : inner.row(k)) row[j] += v * w;
            for (const auto& [j, v] : row) nonzero += v != 0;
        }
    }
    return nonzero;
}

std::vector<Matroid> sample_matroids() {
    std::vector<Matroid> out;
    for (int n = 1; n <= 5; ++n)
        for (int r = 1; r <= n; ++r) out.push_back(Matroid::uniform(r, n));
    out.push_back(Matroid::complete_graph(4));
    out.push_back(Matroid::complete_graph(5));
    out.push_back(Matroid::graphic(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}}));
    return out;
}

}  // namespace

TEST_CASE("Betti numbers of small rank selections") {
    FlatLattice b3 = flats_lattice(Matroid::boolean(3));
    CHECK(betti(b3, {}).values == std::vector<long>{1});
    CHECK(betti(b3, {1}).values == std::vector<long>{0, 2});
    CHECK(betti(b3, {1, 2}).values == std::vector<long>{0, 0, 1});

    FlatLattice u34 = flats_lattice(Matroid::uniform(3, 4));
    CHECK(betti(u34, {1}).values == std::vector<long>{0, 3});
    CHECK(betti(u34, {2}).values == std::vector<long>{0, 5});
    CHECK(betti(u34, {1, 2}).values == std::vector<long>{0, 0, 3});

    // |mu(Pi_4)| = 3! and |mu(Pi_5)| = 4!.
    CHECK(betti(flats_lattice(Matroid::complete_graph(4)), {1, 2}).at(1) == 6);
    CHECK(betti(flats_lattice(Matroid::complete_graph(5)), {1, 2, 3}).at(2) == 24);
}

TEST_CASE("boundary squares to zero and lower homology vanishes") {
    for (const Matroid& m : sample_matroids()) {
        FlatLattice l = flats_lattice(m);
        RankSet all;
        for (int i = 1; i < l.rank(); ++i) all.push_back(i);
        for (const RankSet& s : subsets_of(all)) {
            OrderComplex c = order_complex(rank_selected(l, s));
            CHECK(boundary_square_nonzeros(c) == 0);
            BettiVector b = reduced_betti(c);
            for (int d = -1; d < c.top_dimension(); ++d) CHECK(b.at(d) == 0);
            CHECK(b.euler_characteristic() == reduced_face_euler_characteristic(c));
        }
    }
}

TEST_CASE("sparse rank agrees with dense Bareiss") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> dim(1, 9), val(-3, 3), keep(0, 2);
    for (int trial = 0; trial < 300; ++trial) {
        std::size_t rows = static_cast<std::size_t>(dim(rng)), cols = static_cast<std::size_t>(dim(rng));
        SparseIntMatrix m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                if (keep(rng) == 0) m.add(i, j, val(rng));
        CHECK(rank(m) == rank_bareiss_dense(m));
        KernelBasis k = kernel_basis(m);
        CHECK(k.vectors.size() + rank(m) == cols);
        for (const auto& v : k.vectors)
            for (const auto& x : m.multiply(v)) CHECK(x == 0);
    }
}

TEST_CASE("large entries stay exact") {
    SparseIntMatrix m(2, 2);
    mpz_class big = mpz_class(1) << 200;
    m.add(0, 0, big);
    m.add(0, 1, big + 1);
    m.add(1, 0, big - 1);
    m.add(1, 1, big);
    CHECK(rank(m) == 2);  // determinant is 1
    SparseIntMatrix s(2, 2);
    s.add(0, 0, big);
    s.add(0, 1, big * 3);
    s.add(1, 0, 2);
    s.add(1, 1, 6);
    CHECK(rank(s) == 1);
}

TEST_CASE("traces on top homology") {
    FlatLattice b3 = flats_lattice(Matroid::boolean(3));
    OrderComplex c = order_complex(rank_selected(b3, {1, 2}));
    CHECK(top_homology_trace(c, {0, 1, 2}) == 1);
    CHECK(top_homology_trace(c, {1, 0, 2}) == -1);  // sign character
    CHECK(top_homology_trace(c, {1, 2, 0}) == 1);
    OrderComplex c1 = order_complex(rank_selected(b3, {1}));
    CHECK(top_homology_trace(c1, {1, 0, 2}) == 0);
    CHECK(top_homology_trace(c1, {1, 2, 0}) == -1);
}
