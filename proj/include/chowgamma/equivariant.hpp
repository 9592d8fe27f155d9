#pragma once

// Class functions arising from a group acting on a lattice of flats: chain
// characters, homology characters and equivariant Hilbert series of the
// Chow and augmented Chow rings.

#include <gmpxx.h>

#include <string>
#include <vector>

#include "chowgamma/chow.hpp"
#include "chowgamma/group.hpp"
#include "chowgamma/homology.hpp"
#include "chowgamma/matroid.hpp"
#include "chowgamma/report.hpp"

namespace chowgamma {

/// One integer per conjugacy class, in PermGroup::classes() order.
struct ClassFunction {
    std::vector<mpz_class> values;

    static ClassFunction constant(std::size_t classes, long value);
    std::size_t size() const { return values.size(); }
    const mpz_class& identity_value() const { return values.at(0); }

    ClassFunction& operator+=(const ClassFunction& o);
    ClassFunction& operator-=(const ClassFunction& o);
    friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }
    friend ClassFunction operator-(ClassFunction a, const ClassFunction& b) { return a -= b; }
    friend bool operator==(const ClassFunction&, const ClassFunction&) = default;

    /// "(2,0,-1)".
    std::string to_string() const;
};

/// Degree i -> character of the i-th graded piece.
struct EqSeries {
    std::vector<ClassFunction> by_degree;

    /// Series in t at class c.
    MVPoly at_class(std::size_t c) const;
    std::size_t class_count() const { return by_degree.empty() ? 0 : by_degree.front().size(); }
    std::string to_string() const;
};

/// Group acting on a lattice; both must outlive the action. Stores the
/// induced flat permutation of every class representative.
class LatticeAction {
public:
    /// DomainError unless every generator is a lattice automorphism.
    LatticeAction(const FlatLattice& lattice, const PermGroup& group);

    const FlatLattice& lattice() const { return *lattice_; }
    const PermGroup& group() const { return *group_; }
    const std::vector<std::size_t>& flat_image(std::size_t c) const { return images_[c]; }
    const std::vector<bool>& fixed_flats(std::size_t c) const { return fixed_[c]; }

private:
    const FlatLattice* lattice_;
    const PermGroup* group_;
    std::vector<std::vector<std::size_t>> images_;
    std::vector<std::vector<bool>> fixed_;
};

/// Maximal chains of L_S whose flats are each fixed by the element acting
/// through flat_image.
mpz_class fixed_chain_count(const FlatLattice& lattice, const RankSet& s, const std::vector<std::size_t>& flat_image);

ClassFunction alpha_character(const LatticeAction& action, const RankSet& s);

/// Inclusion-exclusion over subsets of S; re-checks alpha(S) = sum beta(T)
/// and throws ConsistencyError if the round trip fails.
ClassFunction beta_character(const LatticeAction& action, const RankSet& s);

/// Trace of every class representative on the top reduced homology of P_S.
ClassFunction homology_character(const LatticeAction& action, const RankSet& s);

EqSeries equivariant_hilbert(const LatticeAction& action, RingKind kind);

/// Classwise gamma extraction; PalindromyError naming the class and degree.
std::vector<ClassFunction> equivariant_gamma(const EqSeries& e, unsigned d);

/// Window and degree of the gamma expansion: [2, r-1] and r-1 for chow,
/// [1, r-1] and r for the augmented ring.
std::vector<RankSet> theorem_window(int rank, RingKind kind);
unsigned theorem_degree(int rank, RingKind kind);

/// Checks the equivariant gamma expansion against beta and homology
/// characters, the identity-class bridge, vanishing lower homology and the
/// positivity witness.
Report verify_main_theorems(const LatticeAction& action, RingKind kind);

}  // namespace chowgamma
