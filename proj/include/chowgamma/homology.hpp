#pragma once

// Order complexes of rank-selected subposets of a lattice of flats, reduced
// rational homology and group traces on top homology.

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <vector>

#include "chowgamma/linalg.hpp"
#include "chowgamma/matroid.hpp"

namespace chowgamma {

/// Simplicial complex of chains in the proper part of P_S. Faces are chains
/// of flat indices in rank-increasing order; this ordering fixes the
/// orientation so a rank-preserving automorphism acts by a 0/1 matrix.
class OrderComplex {
public:
    explicit OrderComplex(const RankSelectedPoset& poset);

    const FlatLattice& lattice() const { return *lattice_; }
    const RankSet& ranks() const { return ranks_; }
    /// Maximal face dimension, |S| - 1 (so -1 for S empty).
    int top_dimension() const { return static_cast<int>(ranks_.size()) - 1; }
    /// Faces of dimension d >= -1; dimension -1 holds only the empty face.
    const std::vector<Chain>& faces(int d) const;
    std::size_t face_count(int d) const { return faces(d).size(); }
    /// -1 when c is not a face of dimension |c|-1.
    long face_index(const Chain& c) const;

    /// Augmented boundary C_d -> C_{d-1} for 0 <= d <= top; rows index
    /// faces of dimension d-1, columns faces of dimension d.
    const SparseIntMatrix& boundary(int d) const;

private:
    const FlatLattice* lattice_;
    RankSet ranks_;
    std::vector<std::vector<Chain>> faces_;  // faces_[d + 1]
    std::vector<std::map<Chain, std::size_t>> index_;
    std::vector<SparseIntMatrix> boundary_;  // boundary_[d] for d = 0..top
};

OrderComplex order_complex(const RankSelectedPoset& poset);

/// Reduced Betti numbers, values[i] is b~_{i-1}.
struct BettiVector {
    std::vector<long> values;

    long at(int dim) const;
    int max_dimension() const { return static_cast<int>(values.size()) - 2; }
    long euler_characteristic() const;
    friend bool operator==(const BettiVector&, const BettiVector&) = default;
};

BettiVector reduced_betti(const OrderComplex& c);

/// Sum over d >= -1 of (-1)^d times the face count of dimension d.
long reduced_face_euler_characteristic(const OrderComplex& c);

/// Kernel of the top boundary map, kept for repeated traces.
class TopHomology {
public:
    explicit TopHomology(const OrderComplex& complex);

    std::size_t dimension() const { return basis_.vectors.size(); }

    /// Trace of g on ker(d_top). The argument is the induced permutation of
    /// flat indices. Throws DomainError when g does not preserve the complex
    /// and ConsistencyError for a non-integral trace.
    mpz_class trace(const std::vector<std::size_t>& flat_image) const;

private:
    const OrderComplex* complex_;
    KernelBasis basis_;
};

/// Convenience wrapper taking a ground-set permutation.
mpz_class top_homology_trace(const OrderComplex& c, const Permutation& g);

/// Lefschetz number sum_{d >= -1} (-1)^d #(faces of dimension d fixed by g).
long lefschetz_number(const OrderComplex& c, const std::vector<std::size_t>& flat_image);

}  // namespace chowgamma
