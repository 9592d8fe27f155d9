#pragma once

// Finite permutation groups, materialized in full.

#include <cstddef>
#include <string>
#include <vector>

#include "chowgamma/matroid.hpp"

namespace chowgamma {

inline constexpr std::size_t kDefaultGroupCap = 100'000;

/// Apply a first, then b: (a * b)[i] = b[a[i]].
Permutation compose(const Permutation& a, const Permutation& b);
Permutation inverse(const Permutation& g);
Permutation identity_permutation(int n);
bool is_permutation(const Permutation& g, int n);
/// Cycle lengths in weakly decreasing order, fixed points included.
std::vector<int> cycle_type(const Permutation& g);
/// Cycle notation on 1-based points, e.g. "(1 2)(3 4 5)"; "()" for identity.
std::string cycle_string(const Permutation& g);

struct ConjugacyClass {
    Permutation representative;
    std::size_t size = 0;
};

class PermGroup {
public:
    /// Breadth-first closure of the generators. DomainError for a
    /// non-bijection, ResourceError once the order passes cap.
    PermGroup(int degree, std::vector<Permutation> generators, std::size_t cap = kDefaultGroupCap);

    int degree() const { return degree_; }
    std::size_t order() const { return elements_.size(); }
    const std::vector<Permutation>& generators() const { return generators_; }
    /// Identity first, then breadth-first discovery order.
    const std::vector<Permutation>& elements() const { return elements_; }
    /// Class 0 is the identity. Representatives are the first members in
    /// element order.
    const std::vector<ConjugacyClass>& classes() const { return classes_; }
    std::size_t class_count() const { return classes_.size(); }
    /// Class index of elements()[i].
    std::size_t class_of_element(std::size_t i) const { return class_of_[i]; }
    /// Index into elements(); throws DomainError for a non-member.
    std::size_t index_of(const Permutation& g) const;

private:
    int degree_;
    std::vector<Permutation> generators_;
    std::vector<Permutation> elements_;
    std::vector<std::size_t> class_of_;
    std::vector<ConjugacyClass> classes_;
};

PermGroup group_from_generators(int n, std::vector<Permutation> generators, std::size_t cap = kDefaultGroupCap);
PermGroup trivial_group(int n);
PermGroup symmetric_group(int n, std::size_t cap = kDefaultGroupCap);
PermGroup cyclic_group(int n);

/// Edge permutation induced by a vertex permutation; DomainError when the
/// graph is not simple or the image of an edge is not an edge.
Permutation induced_edge_permutation(const GraphicModel& g, const Permutation& vertex_perm);

/// "symmetric", "cyclic" or "trivial". For a graphic matroid the first two
/// act on vertices and are transported to edges; otherwise they act on the
/// ground set directly.
PermGroup named_group(const Matroid& m, const std::string& name, std::size_t cap = kDefaultGroupCap);

/// True iff g sends every flat to a flat of the same rank.
bool check_automorphism(const FlatLattice& lattice, const Permutation& g);
bool check_automorphism(const Matroid& m, const Permutation& g);

}  // namespace chowgamma
