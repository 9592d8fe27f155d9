#include <doctest.h>

#include <algorithm>

#include "chowgamma/chow.hpp"
#include "chowgamma/equivariant.hpp"
#include "chowgamma/errors.hpp"

using namespace chowgamma;

namespace {

MVPoly poly(std::initializer_list<long> coeffs) {
    std::vector<mpz_class> c;
    for (long v : coeffs) c.emplace_back(v);
    return MVPoly::from_t_coeffs(c);
}

std::vector<Matroid> sample_matroids() {
    std::vector<Matroid> out;
    for (int n = 1; n <= 6; ++n)
        for (int r = 1; r <= n; ++r) out.push_back(Matroid::uniform(r, n));
    out.push_back(Matroid::complete_graph(4));
    out.push_back(Matroid::complete_graph(5));
    out.push_back(Matroid::graphic(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}}));
    return out;
}

// Every word of the given length over {blank, cross, dot}.
template <class F>
void for_each_word(SequenceModel model, int length, F&& visit) {
    GammaSeq w;
    w.model = model;
    w.cells.assign(static_cast<std::size_t>(length), GammaSeq::blank);
    while (true) {
        visit(w);
        std::size_t i = 0;
        while (i < w.cells.size() && w.cells[i] == GammaSeq::dot) w.cells[i++] = GammaSeq::blank;
        if (i == w.cells.size()) return;
        ++w.cells[i];
    }
}

}  // namespace

TEST_CASE("Hilbert series of small matroids") {
    FlatLattice b3 = flats_lattice(Matroid::boolean(3));
    CHECK(hilbert_series(b3, RingKind::chow) == poly({1, 4, 1}));
    CHECK(hilbert_series(b3, RingKind::augmented) == poly({1, 7, 7, 1}));
    CHECK(hilbert_series(flats_lattice(Matroid::uniform(2, 3)), RingKind::chow) == poly({1, 1}));
    CHECK(hilbert_series(flats_lattice(Matroid::uniform(2, 3)), RingKind::augmented) == poly({1, 4, 1}));
    CHECK(hilbert_series(flats_lattice(Matroid::boolean(4)), RingKind::chow) == poly({1, 11, 11, 1}));
    CHECK(hilbert_series(flats_lattice(Matroid::complete_graph(4)), RingKind::chow) == poly({1, 8, 1}));
}

TEST_CASE("FY enumeration matches the dynamic program") {
    for (const Matroid& m : sample_matroids()) {
        FlatLattice l = flats_lattice(m);
        for (RingKind kind : {RingKind::chow, RingKind::augmented}) {
            FYBasis basis = fy_basis(l, kind);
            MVPoly h = hilbert_series(l, kind);
            CHECK(basis.hilbert() == h);
            CHECK(is_palindromic(h, theorem_degree(l.rank(), kind)));
            for (std::size_t d = 0; d < basis.by_degree.size(); ++d)
                for (const FYMonomial& x : basis.by_degree[d]) CHECK(x.degree() == static_cast<int>(d));
        }
    }
}

TEST_CASE("monomial cap") {
    FlatLattice l = flats_lattice(Matroid::complete_graph(5));
    CHECK_THROWS_AS(fy_basis(l, RingKind::chow, 10), ResourceError);
    CHECK_NOTHROW(fy_basis(l, RingKind::chow, 1000));
}

TEST_CASE("rank-set decomposition factors through chain counts") {
    for (const Matroid& m : sample_matroids()) {
        FlatLattice l = flats_lattice(m);
        for (RingKind kind : {RingKind::chow, RingKind::augmented}) {
            MVPoly total;
            for (const auto& [s, f] : rank_set_decomposition(l, kind)) {
                const long chains = static_cast<long>(maximal_chains(rank_selected(l, s)).size());
                MVPoly weight = kind == RingKind::chow ? phi(s, l.rank()) : psi(s, l.rank());
                CHECK(f == weight * MVPoly(chains));
                total += f;
            }
            CHECK(total == hilbert_series(l, kind));
        }
    }
}

TEST_CASE("multiplicity polynomials") {
    CHECK(phi({}, 3) == poly({1, 1, 1}));
    CHECK(phi({2}, 3) == poly({0, 1}));
    CHECK(phi({1}, 3).is_zero());
    CHECK(phi({2, 3}, 4).is_zero());
    CHECK(psi({}, 2) == poly({1, 1, 1}));
    CHECK(psi({1}, 2) == poly({0, 1}));
    CHECK_THROWS_AS(phi({3}, 3), DomainError);
    CHECK_THROWS_AS(psi({0}, 3), DomainError);
}

TEST_CASE("sequence automaton matches the literal definition") {
    for (SequenceModel model : {SequenceModel::chow, SequenceModel::augmented}) {
        for (int n = 1; n <= 8; ++n) {
            const int length = model == SequenceModel::chow ? n - 1 : n;
            for (const RankSet& t : lemma_window(n, model)) {
                std::vector<mpz_class> brute(static_cast<std::size_t>(n) + 2);
                for_each_word(model, length, [&](const GammaSeq& w) {
                    RankSet d = w.dots();
                    if (is_valid_sequence(w) && std::includes(d.begin(), d.end(), t.begin(), t.end()))
                        brute[static_cast<std::size_t>(w.crosses())] += 1;
                });
                std::size_t streamed = 0;
                enumerate_sequences(n, model, t, [&](const GammaSeq& w) {
                    ++streamed;
                    CHECK(is_valid_sequence(w));
                });
                MVPoly f = sequence_generating_function(n, model, t);
                CHECK(f == MVPoly::from_t_coeffs(brute));
                CHECK(f == lemma_closed_form(n, model, t));
                CHECK(f.substitute(Var::t, 1) == MVPoly(static_cast<long>(streamed)));
            }
        }
    }
}

TEST_CASE("sequence validity examples") {
    auto seq = [](SequenceModel model, const std::string& s) {
        GammaSeq w;
        w.model = model;
        for (char c : s) w.cells.push_back(c == 'x' ? GammaSeq::cross : c == '.' ? GammaSeq::dot : GammaSeq::blank);
        return w;
    };
    CHECK(is_valid_sequence(seq(SequenceModel::chow, "__x")));
    CHECK(is_valid_sequence(seq(SequenceModel::chow, "x.x")));
    CHECK_FALSE(is_valid_sequence(seq(SequenceModel::chow, "x__")));
    CHECK_FALSE(is_valid_sequence(seq(SequenceModel::chow, "._x")));
    CHECK(seq(SequenceModel::augmented, "x._").dots() == RankSet{1});
    CHECK(seq(SequenceModel::chow, "x._").dots() == RankSet{2});
    CHECK(seq(SequenceModel::chow, "_x.").pretty() == "_x.");
}

TEST_CASE("window violations are rejected") {
    CHECK_THROWS_AS(sequence_generating_function(5, SequenceModel::chow, {1}), DomainError);
    CHECK_THROWS_AS(sequence_generating_function(5, SequenceModel::chow, {2, 3}), DomainError);
    CHECK_NOTHROW(sequence_generating_function(5, SequenceModel::augmented, {1, 3}));
}

TEST_CASE("summation identities") {
    for (int n = 1; n <= 10; ++n) {
        Report c = verify_lemma(n, SequenceModel::chow);
        Report a = verify_lemma(n, SequenceModel::augmented);
        CHECK(c.passed());
        CHECK(a.passed());
        CHECK(c.checks().size() == lemma_window(n, SequenceModel::chow).size() + 1);
        CHECK(a.checks().size() == lemma_window(n, SequenceModel::augmented).size() + 1);
    }
}
