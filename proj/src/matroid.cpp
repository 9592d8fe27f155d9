#include "chowgamma/matroid.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "chowgamma/errors.hpp"

namespace chowgamma {

// ---------------------------------------------------------------- ElementSet

ElementSet::ElementSet(std::initializer_list<int> elements) {
    for (int e : elements) insert(e);
}

ElementSet ElementSet::range(int n) {
    ElementSet s;
    for (int e = 0; e < n; ++e) s.insert(e);
    return s;
}

int ElementSet::size() const {
    int total = 0;
    for (auto w : words_) total += std::popcount(w);
    return total;
}

bool ElementSet::empty() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

bool ElementSet::subset_of(const ElementSet& o) const {
    for (std::size_t i = 0; i < kWords; ++i)
        if ((words_[i] & ~o.words_[i]) != 0) return false;
    return true;
}

std::vector<int> ElementSet::elements() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < kWords; ++i) {
        std::uint64_t w = words_[i];
        while (w != 0) {
            int b = std::countr_zero(w);
            out.push_back(static_cast<int>(i * 64) + b);
            w &= w - 1;
        }
    }
    return out;
}

ElementSet ElementSet::operator|(const ElementSet& o) const {
    ElementSet s;
    for (std::size_t i = 0; i < kWords; ++i) s.words_[i] = words_[i] | o.words_[i];
    return s;
}

ElementSet ElementSet::operator&(const ElementSet& o) const {
    ElementSet s;
    for (std::size_t i = 0; i < kWords; ++i) s.words_[i] = words_[i] & o.words_[i];
    return s;
}

std::size_t ElementSet::hash() const {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (auto w : words_) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6U) + (h >> 2U);
    return h;
}

std::string ElementSet::to_string() const {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (int e : elements()) {
        if (!first) os << ',';
        os << e;
        first = false;
    }
    os << '}';
    return os.str();
}

// ------------------------------------------------------------------- Matroid

namespace {

void check_ground_size(int n) {
    if (n < 1) throw DomainError("matroid ground set must be nonempty");
    if (static_cast<std::size_t>(n) > ElementSet::kCapacity)
        throw DomainError("matroid ground set exceeds " + std::to_string(ElementSet::kCapacity) + " elements");
}

void check_members(const ElementSet& s, int n, const char* what) {
    for (int e : s.elements())
        if (e >= n) throw DomainError(std::string(what) + " refers to element " + std::to_string(e) + " >= n");
}

int find_root(std::vector<int>& parent, int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
        parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        x = parent[static_cast<std::size_t>(x)];
    }
    return x;
}

int model_ground_size(const MatroidModel& model) {
    return std::visit(
        [](const auto& m) -> int {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, GraphicModel>)
                return static_cast<int>(m.edges.size());
            else
                return m.n;
        },
        model);
}

}  // namespace

Matroid::Matroid(MatroidModel model) : model_(std::move(model)), n_(model_ground_size(model_)) {
    check_ground_size(n_);
    std::visit(
        [this](const auto& m) {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, UniformModel>) {
                if (m.rank < 1 || m.rank > m.n) throw DomainError("uniform matroid needs 1 <= r <= n");
            } else if constexpr (std::is_same_v<T, GraphicModel>) {
                if (m.vertices < 1) throw DomainError("graphic matroid needs at least one vertex");
                for (auto [u, v] : m.edges) {
                    if (u < 0 || v < 0 || u >= m.vertices || v >= m.vertices)
                        throw DomainError("graphic matroid edge endpoint out of range");
                    if (u == v) throw DomainError("graphic matroid has a self-loop (a loop element)");
                }
            } else if constexpr (std::is_same_v<T, BasesModel>) {
                if (m.bases.empty()) throw DomainError("bases model needs at least one basis");
                int r = m.bases.front().size();
                for (const auto& b : m.bases) {
                    check_members(b, n_, "basis");
                    if (b.size() != r) throw DomainError("bases must all have the same size");
                }
            } else {
                bool has_bottom = false;
                bool has_top = false;
                for (const auto& [s, r] : m.flats) {
                    check_members(s, n_, "flat");
                    if (s.empty()) {
                        if (r != 0) throw DomainError("the empty flat must have rank 0");
                        has_bottom = true;
                    }
                    if (s == ElementSet::range(n_)) has_top = true;
                    if (r < 0) throw DomainError("flat ranks must be nonnegative");
                }
                if (!has_bottom) throw DomainError("flats model must list the empty set (loopless)");
                if (!has_top) throw DomainError("flats model must list the full ground set");
            }
        },
        model_);
    for (int e = 0; e < n_; ++e)
        if (rank_of(ElementSet{e}) != 1)
            throw DomainError("matroid has a loop at element " + std::to_string(e));
}

Matroid Matroid::uniform(int rank, int n) { return Matroid(UniformModel{rank, n}); }

Matroid Matroid::graphic(int vertices, std::vector<std::pair<int, int>> edges) {
    return Matroid(GraphicModel{vertices, std::move(edges)});
}

Matroid Matroid::complete_graph(int m) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < m; ++u)
        for (int v = u + 1; v < m; ++v) edges.emplace_back(u, v);
    return graphic(m, std::move(edges));
}

Matroid Matroid::from_bases(int n, std::vector<ElementSet> bases) {
    return Matroid(BasesModel{n, std::move(bases)});
}

Matroid Matroid::from_flats(int n, std::vector<std::pair<ElementSet, int>> flats) {
    return Matroid(FlatsModel{n, std::move(flats)});
}

int Matroid::rank_of(const ElementSet& a) const {
    return std::visit(
        [&a](const auto& m) -> int {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, UniformModel>) {
                return std::min(a.size(), m.rank);
            } else if constexpr (std::is_same_v<T, GraphicModel>) {
                std::vector<int> parent(static_cast<std::size_t>(m.vertices));
                std::iota(parent.begin(), parent.end(), 0);
                int merged = 0;
                for (int e : a.elements()) {
                    auto [u, v] = m.edges[static_cast<std::size_t>(e)];
                    int ru = find_root(parent, u);
                    int rv = find_root(parent, v);
                    if (ru != rv) {
                        parent[static_cast<std::size_t>(ru)] = rv;
                        ++merged;
                    }
                }
                return merged;
            } else if constexpr (std::is_same_v<T, BasesModel>) {
                int best = 0;
                for (const auto& b : m.bases) best = std::max(best, (a & b).size());
                return best;
            } else {
                int best = -1;
                for (const auto& [s, r] : m.flats)
                    if (a.subset_of(s) && (best < 0 || r < best)) best = r;
                return best;
            }
        },
        model_);
}

std::string Matroid::describe() const {
    return std::visit(
        [](const auto& m) -> std::string {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, UniformModel>)
                return "uniform:" + std::to_string(m.rank) + "," + std::to_string(m.n);
            else if constexpr (std::is_same_v<T, GraphicModel>)
                return "graphic(" + std::to_string(m.vertices) + " vertices, " + std::to_string(m.edges.size()) +
                       " edges)";
            else if constexpr (std::is_same_v<T, BasesModel>)
                return "bases(n=" + std::to_string(m.n) + ", " + std::to_string(m.bases.size()) + " bases)";
            else
                return "flats(n=" + std::to_string(m.n) + ", " + std::to_string(m.flats.size()) + " flats)";
        },
        model_);
}

ElementSet closure(const Matroid& m, const ElementSet& a) {
    if (const auto* fm = std::get_if<FlatsModel>(&m.model())) {
        ElementSet out = ElementSet::range(m.ground_size());
        for (const auto& [s, r] : fm->flats)
            if (a.subset_of(s)) out = out & s;
        return out;
    }
    int base = m.rank_of(a);
    ElementSet out = a;
    for (int e = 0; e < m.ground_size(); ++e)
        if (!a.contains(e) && m.rank_of(a.with(e)) == base) out.insert(e);
    return out;
}

// --------------------------------------------------------------- FlatLattice

FlatLattice::FlatLattice(int ground_size, int rank, std::vector<Flat> flats)
    : n_(ground_size), rank_(rank), flats_(std::move(flats)) {
    std::sort(flats_.begin(), flats_.end(), [](const Flat& a, const Flat& b) {
        return a.rank != b.rank ? a.rank < b.rank : a.set < b.set;
    });
    if (flats_.empty() || !flats_.front().set.empty() || flats_.front().rank != 0)
        throw DomainError("lattice of flats must start at the empty flat");
    if (flats_.back().set != ElementSet::range(n_) || flats_.back().rank != rank_)
        throw DomainError("lattice of flats must end at the ground set with the matroid rank");
    by_rank_.assign(static_cast<std::size_t>(rank_) + 1, {});
    for (std::size_t i = 0; i < flats_.size(); ++i) {
        int r = flats_[i].rank;
        if (r < 0 || r > rank_) throw DomainError("flat rank out of range");
        by_rank_[static_cast<std::size_t>(r)].push_back(i);
    }
    above_.assign(flats_.size(), {});
    covers_.assign(flats_.size(), {});
    for (std::size_t i = 0; i < flats_.size(); ++i) {
        for (std::size_t j = i + 1; j < flats_.size(); ++j) {
            if (flats_[j].rank > flats_[i].rank && flats_[i].set.subset_of(flats_[j].set)) {
                above_[i].push_back(j);
                if (flats_[j].rank == flats_[i].rank + 1) covers_[i].push_back(j);
            }
        }
    }
    sorted_index_.reserve(flats_.size());
    for (std::size_t i = 0; i < flats_.size(); ++i) sorted_index_.emplace_back(flats_[i].set, i);
    std::sort(sorted_index_.begin(), sorted_index_.end());
}

bool FlatLattice::less(std::size_t i, std::size_t j) const {
    return i != j && flats_[i].set.subset_of(flats_[j].set);
}

long FlatLattice::index_of(const ElementSet& s) const {
    auto it = std::lower_bound(sorted_index_.begin(), sorted_index_.end(), s,
                               [](const auto& entry, const ElementSet& key) { return entry.first < key; });
    if (it == sorted_index_.end() || it->first != s) return -1;
    return static_cast<long>(it->second);
}

namespace {

void check_graded(const FlatLattice& lattice) {
    for (std::size_t i = 0; i < lattice.size(); ++i) {
        for (std::size_t j : lattice.above(i)) {
            if (lattice.flat(j).rank <= lattice.flat(i).rank + 1) continue;
            bool bridged = std::any_of(lattice.covers(i).begin(), lattice.covers(i).end(),
                                       [&](std::size_t k) { return lattice.less(k, j); });
            if (!bridged) throw DomainError("lattice of flats is not graded");
        }
    }
    // containment between equal-rank distinct flats would break the rank function
    for (int r = 0; r <= lattice.rank(); ++r) {
        const auto& level = lattice.at_rank(r);
        for (std::size_t a = 0; a < level.size(); ++a)
            for (std::size_t b = 0; b < level.size(); ++b)
                if (a != b && lattice.flat(level[a]).set.subset_of(lattice.flat(level[b]).set))
                    throw DomainError("nested flats of equal rank");
    }
}

void check_meets(const FlatLattice& lattice) {
    constexpr std::size_t kFullCheckLimit = 1500;
    std::size_t n = lattice.size();
    std::size_t stride = n <= kFullCheckLimit ? 1 : n / kFullCheckLimit + 1;
    for (std::size_t i = 0; i < n; i += stride)
        for (std::size_t j = i + 1; j < n; j += stride)
            if (lattice.index_of(lattice.flat(i).set & lattice.flat(j).set) < 0)
                throw DomainError("intersection of two flats is not a flat");
}

}  // namespace

FlatLattice flats_lattice(const Matroid& m) {
    std::unordered_set<ElementSet, ElementSetHash> seen;
    std::vector<Flat> flats;
    std::deque<ElementSet> queue;
    ElementSet bottom = closure(m, ElementSet{});
    seen.insert(bottom);
    queue.push_back(bottom);
    while (!queue.empty()) {
        ElementSet f = queue.front();
        queue.pop_front();
        int rf = m.rank_of(f);
        flats.push_back({f, rf});
        for (int e = 0; e < m.ground_size(); ++e) {
            if (f.contains(e)) continue;
            ElementSet g = closure(m, f.with(e));
            if (seen.insert(g).second) queue.push_back(g);
        }
    }
    if (const auto* fm = std::get_if<FlatsModel>(&m.model())) {
        if (fm->flats.size() != flats.size())
            throw DomainError("listed flats are not exactly the closures reachable from the empty flat");
        for (const auto& [s, r] : fm->flats)
            if (!seen.contains(s) || m.rank_of(s) != r) throw DomainError("listed flat " + s.to_string() + " is inconsistent");
    }
    FlatLattice lattice(m.ground_size(), m.rank(), std::move(flats));
    check_graded(lattice);
    check_meets(lattice);
    return lattice;
}

// ------------------------------------------------------- rank-selected posets

RankSelectedPoset::RankSelectedPoset(const FlatLattice& lattice, RankSet ranks)
    : lattice_(&lattice), ranks_(std::move(ranks)) {
    for (std::size_t i = 0; i < ranks_.size(); ++i) {
        if (ranks_[i] < 1 || ranks_[i] > lattice.rank() - 1)
            throw DomainError("rank selection " + to_string(ranks_) + " is not inside [1, r-1]");
        if (i > 0 && ranks_[i] <= ranks_[i - 1]) throw DomainError("rank selection must be sorted and distinct");
    }
    for (int r : ranks_)
        for (std::size_t idx : lattice.at_rank(r)) members_.push_back(idx);
}

RankSelectedPoset rank_selected(const FlatLattice& lattice, RankSet ranks) {
    return RankSelectedPoset(lattice, std::move(ranks));
}

namespace {

void chain_dfs(const FlatLattice& lattice, const RankSet& ranks, std::size_t depth, Chain& chain,
               const std::function<void(const Chain&)>& visit) {
    if (depth == ranks.size()) {
        visit(chain);
        return;
    }
    int target = ranks[depth];
    if (depth == 0) {
        for (std::size_t idx : lattice.at_rank(target)) {
            chain.push_back(idx);
            chain_dfs(lattice, ranks, depth + 1, chain, visit);
            chain.pop_back();
        }
        return;
    }
    for (std::size_t idx : lattice.above(chain.back())) {
        if (lattice.flat(idx).rank != target) continue;
        chain.push_back(idx);
        chain_dfs(lattice, ranks, depth + 1, chain, visit);
        chain.pop_back();
    }
}

}  // namespace

void for_each_chain(const FlatLattice& lattice, const RankSet& ranks,
                    const std::function<void(const Chain&)>& visit) {
    Chain chain;
    chain_dfs(lattice, ranks, 0, chain, visit);
}

std::vector<Chain> maximal_chains(const RankSelectedPoset& poset) {
    std::vector<Chain> out;
    for_each_chain(poset.lattice(), poset.ranks(), [&out](const Chain& c) { out.push_back(c); });
    return out;
}

// ---------------------------------------------------------------- rank sets

bool is_stable(const RankSet& s) {
    for (std::size_t i = 1; i < s.size(); ++i)
        if (s[i] - s[i - 1] <= 1) return false;
    return true;
}

std::vector<RankSet> stab(int a, int b) {
    std::vector<RankSet> out;
    RankSet current;
    std::function<void(int)> grow = [&](int next) {
        out.push_back(current);
        for (int x = next; x <= b; ++x) {
            current.push_back(x);
            grow(x + 2);
            current.pop_back();
        }
    };
    grow(a);
    std::stable_sort(out.begin(), out.end(), [](const RankSet& x, const RankSet& y) {
        return x.size() != y.size() ? x.size() < y.size() : x < y;
    });
    return out;
}

std::vector<RankSet> subsets_of(const RankSet& s) {
    if (s.size() >= 31) throw DomainError("subsets_of: set too large");
    std::vector<RankSet> out;
    std::uint32_t count = 1U << s.size();
    out.reserve(count);
    for (std::uint32_t mask = 0; mask < count; ++mask) {
        RankSet sub;
        for (std::size_t i = 0; i < s.size(); ++i)
            if ((mask >> i) & 1U) sub.push_back(s[i]);
        out.push_back(std::move(sub));
    }
    return out;
}

std::string to_string(const RankSet& s) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
    os << '}';
    return os.str();
}

ElementSet apply(const Permutation& g, const ElementSet& s) {
    ElementSet out;
    for (int e : s.elements()) {
        if (static_cast<std::size_t>(e) >= g.size()) throw DomainError("permutation degree smaller than ground set");
        out.insert(g[static_cast<std::size_t>(e)]);
    }
    return out;
}

std::optional<std::vector<std::size_t>> induced_flat_permutation(const FlatLattice& lattice,
                                                                  const Permutation& g) {
    if (g.size() != static_cast<std::size_t>(lattice.ground_size()))
        throw DomainError("permutation degree does not match the ground set");
    std::vector<std::size_t> image(lattice.size());
    for (std::size_t i = 0; i < lattice.size(); ++i) {
        long j = lattice.index_of(apply(g, lattice.flat(i).set));
        if (j < 0 || lattice.flat(static_cast<std::size_t>(j)).rank != lattice.flat(i).rank) return std::nullopt;
        image[i] = static_cast<std::size_t>(j);
    }
    return image;
}

}  // namespace chowgamma
