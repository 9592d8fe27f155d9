#pragma once

// Matroids on the ground set {0, ..., n-1}, their lattices of flats and
// rank-selected subposets.

#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace chowgamma {

/// Fixed-width bitset over ground-set indices. Flats, chains and group
/// actions all work on this representation.
class ElementSet {
public:
    static constexpr std::size_t kWords = 4;
    static constexpr std::size_t kCapacity = kWords * 64;

    ElementSet() = default;
    ElementSet(std::initializer_list<int> elements);
    static ElementSet range(int n);

    void insert(int e) { words_[word(e)] |= bit(e); }
    void erase(int e) { words_[word(e)] &= ~bit(e); }
    bool contains(int e) const { return (words_[word(e)] & bit(e)) != 0; }

    int size() const;
    bool empty() const;
    bool subset_of(const ElementSet& o) const;
    std::vector<int> elements() const;

    ElementSet operator|(const ElementSet& o) const;
    ElementSet operator&(const ElementSet& o) const;
    ElementSet with(int e) const {
        ElementSet s = *this;
        s.insert(e);
        return s;
    }

    auto operator<=>(const ElementSet&) const = default;
    bool operator==(const ElementSet&) const = default;

    std::size_t hash() const;
    std::string to_string() const;

private:
    static std::size_t word(int e) { return static_cast<std::size_t>(e) >> 6U; }
    static std::uint64_t bit(int e) { return std::uint64_t{1} << (static_cast<unsigned>(e) & 63U); }

    std::array<std::uint64_t, kWords> words_{};
};

struct ElementSetHash {
    std::size_t operator()(const ElementSet& s) const { return s.hash(); }
};

struct UniformModel {
    int rank;
    int n;
};

struct GraphicModel {
    int vertices;
    std::vector<std::pair<int, int>> edges;  // ground-set element i = edges[i]
};

struct BasesModel {
    int n;
    std::vector<ElementSet> bases;
};

struct FlatsModel {
    int n;
    std::vector<std::pair<ElementSet, int>> flats;  // (set, rank)
};

using MatroidModel = std::variant<UniformModel, GraphicModel, BasesModel, FlatsModel>;

/// Rank oracle backed by exactly one model. Construction rejects loops and
/// out-of-range data.
class Matroid {
public:
    explicit Matroid(MatroidModel model);

    static Matroid uniform(int rank, int n);
    static Matroid boolean(int n) { return uniform(n, n); }
    static Matroid graphic(int vertices, std::vector<std::pair<int, int>> edges);
    /// Graphic matroid of the complete graph K_m; edges in lexicographic order.
    static Matroid complete_graph(int m);
    static Matroid from_bases(int n, std::vector<ElementSet> bases);
    static Matroid from_flats(int n, std::vector<std::pair<ElementSet, int>> flats);

    int ground_size() const { return n_; }
    int rank() const { return rank_of(ElementSet::range(n_)); }
    int rank_of(const ElementSet& a) const;
    const MatroidModel& model() const { return model_; }
    std::string describe() const;

private:
    MatroidModel model_;
    int n_ = 0;
};

/// Closure: A together with every element that does not raise the rank.
ElementSet closure(const Matroid& m, const ElementSet& a);

struct Flat {
    ElementSet set;
    int rank;
};

/// All flats, sorted by (rank, bitset). Index 0 is the empty flat, the last
/// index is the full ground set.
class FlatLattice {
public:
    FlatLattice(int ground_size, int rank, std::vector<Flat> flats);

    int ground_size() const { return n_; }
    int rank() const { return rank_; }
    std::size_t size() const { return flats_.size(); }
    const Flat& flat(std::size_t i) const { return flats_[i]; }
    const std::vector<Flat>& flats() const { return flats_; }
    std::size_t bottom() const { return 0; }
    std::size_t top() const { return flats_.size() - 1; }

    /// Indices of flats of rank r, ascending.
    const std::vector<std::size_t>& at_rank(int r) const { return by_rank_[static_cast<std::size_t>(r)]; }
    /// Indices strictly above flat i.
    const std::vector<std::size_t>& above(std::size_t i) const { return above_[i]; }
    const std::vector<std::size_t>& covers(std::size_t i) const { return covers_[i]; }
    bool less(std::size_t i, std::size_t j) const;
    /// -1 when s is not a flat.
    long index_of(const ElementSet& s) const;

private:
    int n_;
    int rank_;
    std::vector<Flat> flats_;
    std::vector<std::vector<std::size_t>> by_rank_;
    std::vector<std::vector<std::size_t>> above_;
    std::vector<std::vector<std::size_t>> covers_;
    std::vector<std::pair<ElementSet, std::size_t>> sorted_index_;
};

/// Breadth-first closure of F + e from the empty flat, then spot checks of
/// gradedness and meet-closure. DomainError when the checks fail.
FlatLattice flats_lattice(const Matroid& m);

using RankSet = std::vector<int>;  // sorted, distinct

/// P_S: flats whose rank lies in S; the adjoined bottom and top are implicit.
class RankSelectedPoset {
public:
    /// Keeps a reference to the lattice, which must outlive the poset.
    RankSelectedPoset(const FlatLattice& lattice, RankSet ranks);

    const FlatLattice& lattice() const { return *lattice_; }
    const RankSet& ranks() const { return ranks_; }
    /// Member flat indices (proper part), ordered by rank then bitset.
    const std::vector<std::size_t>& members() const { return members_; }

private:
    const FlatLattice* lattice_;
    RankSet ranks_;
    std::vector<std::size_t> members_;
};

/// DomainError unless S is a subset of [1, r-1].
RankSelectedPoset rank_selected(const FlatLattice& lattice, RankSet ranks);

using Chain = std::vector<std::size_t>;

/// Chains hitting every rank of S exactly once, as flat indices in rank order.
/// S empty gives the single empty chain.
std::vector<Chain> maximal_chains(const RankSelectedPoset& poset);

/// Calls visit for each such chain without materializing the list.
void for_each_chain(const FlatLattice& lattice, const RankSet& ranks,
                    const std::function<void(const Chain&)>& visit);

/// Subsets of [a, b] without two consecutive integers, ordered by size and
/// then lexicographically. The empty interval yields only the empty set.
std::vector<RankSet> stab(int a, int b);

bool is_stable(const RankSet& s);

/// Every subset of s, in binary-counting order.
std::vector<RankSet> subsets_of(const RankSet& s);

std::string to_string(const RankSet& s);

/// One-line notation on {0, ..., n-1}: element i is sent to perm[i].
using Permutation = std::vector<int>;

ElementSet apply(const Permutation& g, const ElementSet& s);

/// Image index of every flat under g, or nullopt when some flat is not sent
/// to a flat of the same rank.
std::optional<std::vector<std::size_t>> induced_flat_permutation(const FlatLattice& lattice,
                                                                  const Permutation& g);

}  // namespace chowgamma
