#pragma once

// Feichtner-Yuzvinsky bases of the Chow ring A(M) and the augmented Chow
// ring of a matroid, their Hilbert series, the multiplicity polynomials
// phi/psi and the dot/cross sequence models proving the two summation
// identities.

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "chowgamma/matroid.hpp"
#include "chowgamma/poly.hpp"
#include "chowgamma/report.hpp"

namespace chowgamma {

enum class RingKind { chow, augmented };

std::string to_string(RingKind kind);

/// x_{F_1}^{a_1} ... x_{F_l}^{a_l} for a chain of nonempty flats.
struct FYMonomial {
    Chain chain;
    std::vector<int> exponents;
    RingKind kind = RingKind::chow;

    int degree() const;
};

struct FYBasis {
    RingKind kind = RingKind::chow;
    std::vector<std::vector<FYMonomial>> by_degree;

    std::size_t size() const;
    /// Coefficient list of the Hilbert series.
    MVPoly hilbert() const;
};

inline constexpr std::size_t kDefaultMonomialCap = 100'000'000;

/// Admissible exponent ceiling of each flat on a chain: rk(F_1) for the
/// first flat of the augmented ring, rk(F_i) - rk(F_{i-1}) - 1 otherwise.
/// Calls visit once per chain that admits at least one monomial, starting
/// with the empty chain.
void for_each_fy_chain(const FlatLattice& lattice, RingKind kind,
                       const std::function<void(const Chain&, const std::vector<int>&)>& visit);

/// Depth-first walk over chains. ResourceError past cap monomials.
FYBasis fy_basis(const FlatLattice& lattice, RingKind kind, std::size_t cap = kDefaultMonomialCap);

/// Sum of t^deg over the FY basis, computed by dynamic programming over
/// flats. If fixed is given, only chains of flats with fixed[i] count.
MVPoly hilbert_series(const FlatLattice& lattice, RingKind kind);
std::vector<mpz_class> fy_degree_counts(const FlatLattice& lattice, RingKind kind,
                                        const std::vector<bool>* fixed = nullptr);

/// FY monomials grouped by the rank set of the chain with E removed.
std::map<RankSet, MVPoly> rank_set_decomposition(const FlatLattice& lattice, RingKind kind);

/// Multiplicity polynomial of alpha(S) in the Chow ring of a rank-n matroid.
/// Zero unless S is stable inside [2, n-1]; DomainError if S is not in [1, n-1].
MVPoly phi(const RankSet& s, int n);

/// Same for the augmented ring; [n+1]_t for S empty.
MVPoly psi(const RankSet& s, int n);

enum class SequenceModel { chow, augmented };

/// A word in {blank, cross, dot}; positions 1..n-1 (chow) or 0..n-1
/// (augmented). Cells are 0 = blank, 1 = cross, 2 = dot.
struct GammaSeq {
    enum Cell : std::uint8_t { blank = 0, cross = 1, dot = 2 };

    SequenceModel model = SequenceModel::chow;
    std::vector<std::uint8_t> cells;

    int first_position() const { return model == SequenceModel::chow ? 1 : 0; }
    RankSet dots() const;
    int crosses() const;
    /// Cells as a packed byte string (one byte per cell).
    std::string packed() const;
    /// e.g. "_x.x._" with '_' blank, 'x' cross, '.' dot.
    std::string pretty() const;
};

/// Literal membership test: every dot directly follows a cross, and inside
/// each dot-free segment (including the one before the first dot) the
/// crosses form a block flush against the segment's right end.
bool is_valid_sequence(const GammaSeq& w);

/// Admissible window of T: Stab([2, n-1]) for chow, Stab([n-1]) for augmented.
std::vector<RankSet> lemma_window(int n, SequenceModel model);

/// Streams every valid sequence with Dot(w) containing T. DomainError if T
/// is outside the model's window.
void enumerate_sequences(int n, SequenceModel model, const RankSet& superset_of,
                         const std::function<void(const GammaSeq&)>& visit);

/// sum of t^{cro(w)} over the stream above.
MVPoly sequence_generating_function(int n, SequenceModel model, const RankSet& superset_of);

/// t^{|T|} (1+t)^{n-1-2|T|} (chow) or t^{|T|} (1+t)^{n-2|T|} (augmented).
MVPoly lemma_closed_form(int n, SequenceModel model, const RankSet& t);

/// Three-way agreement of sum phi/psi, the sequence count and the closed form
/// for every admissible T, plus the per-S slice identity.
Report verify_lemma(int n, SequenceModel model);

}  // namespace chowgamma
