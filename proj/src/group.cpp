#include "chowgamma/group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

#include "chowgamma/errors.hpp"

namespace chowgamma {

Permutation compose(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) throw DomainError("composing permutations of different degree");
    Permutation out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = b[static_cast<std::size_t>(a[i])];
    return out;
}

Permutation inverse(const Permutation& g) {
    Permutation out(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) out[static_cast<std::size_t>(g[i])] = static_cast<int>(i);
    return out;
}

Permutation identity_permutation(int n) {
    Permutation out(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = i;
    return out;
}

bool is_permutation(const Permutation& g, int n) {
    if (g.size() != static_cast<std::size_t>(n)) return false;
    std::vector<bool> seen(g.size(), false);
    for (int x : g) {
        if (x < 0 || x >= n || seen[static_cast<std::size_t>(x)]) return false;
        seen[static_cast<std::size_t>(x)] = true;
    }
    return true;
}

namespace {

std::vector<std::vector<int>> cycles(const Permutation& g) {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(g.size(), false);
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (seen[i]) continue;
        std::vector<int> cycle;
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(g[j])) {
            seen[j] = true;
            cycle.push_back(static_cast<int>(j));
        }
        out.push_back(std::move(cycle));
    }
    return out;
}

}  // namespace

std::vector<int> cycle_type(const Permutation& g) {
    std::vector<int> out;
    for (const auto& c : cycles(g)) out.push_back(static_cast<int>(c.size()));
    std::sort(out.rbegin(), out.rend());
    return out;
}

std::string cycle_string(const Permutation& g) {
    std::ostringstream os;
    for (const auto& c : cycles(g)) {
        if (c.size() < 2) continue;
        os << '(';
        for (std::size_t i = 0; i < c.size(); ++i) os << (i ? " " : "") << c[i] + 1;
        os << ')';
    }
    std::string s = os.str();
    return s.empty() ? "()" : s;
}

PermGroup::PermGroup(int degree, std::vector<Permutation> generators, std::size_t cap)
    : degree_(degree), generators_(std::move(generators)) {
    if (degree < 0) throw DomainError("negative permutation degree");
    for (const auto& g : generators_)
        if (!is_permutation(g, degree)) throw DomainError("generator is not a bijection on the ground set");

    std::map<Permutation, std::size_t> index;
    elements_.push_back(identity_permutation(degree));
    index.emplace(elements_.front(), 0);
    // Right multiplication by generators reaches every product; in a finite
    // group this set is also closed under inverses.
    for (std::size_t head = 0; head < elements_.size(); ++head) {
        for (const auto& s : generators_) {
            Permutation next = compose(elements_[head], s);
            if (index.count(next)) continue;
            if (elements_.size() >= cap) throw ResourceError("group order exceeds the cap of " + std::to_string(cap));
            index.emplace(next, elements_.size());
            elements_.push_back(std::move(next));
        }
    }
    for (const auto& g : elements_)
        if (!index.count(inverse(g))) throw ConsistencyError("group closure is missing an inverse");

    const std::size_t unassigned = elements_.size();
    class_of_.assign(elements_.size(), unassigned);
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        if (class_of_[i] != unassigned) continue;
        std::size_t c = classes_.size();
        std::deque<std::size_t> frontier{i};
        class_of_[i] = c;
        std::size_t size = 0;
        while (!frontier.empty()) {
            std::size_t x = frontier.front();
            frontier.pop_front();
            ++size;
            for (const auto& s : generators_) {
                Permutation conj = compose(compose(inverse(s), elements_[x]), s);
                std::size_t y = index.at(conj);
                if (class_of_[y] == unassigned) {
                    class_of_[y] = c;
                    frontier.push_back(y);
                }
            }
        }
        classes_.push_back({elements_[i], size});
    }
}

std::size_t PermGroup::index_of(const Permutation& g) const {
    auto it = std::find(elements_.begin(), elements_.end(), g);
    if (it == elements_.end()) throw DomainError("permutation is not in the group");
    return static_cast<std::size_t>(it - elements_.begin());
}

PermGroup group_from_generators(int n, std::vector<Permutation> generators, std::size_t cap) {
    return PermGroup(n, std::move(generators), cap);
}

PermGroup trivial_group(int n) { return PermGroup(n, {}); }

PermGroup symmetric_group(int n, std::size_t cap) {
    std::vector<Permutation> gens;
    if (n >= 2) {
        Permutation swap = identity_permutation(n);
        std::swap(swap[0], swap[1]);
        gens.push_back(swap);
    }
    if (n >= 3) {
        Permutation cycle(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) cycle[static_cast<std::size_t>(i)] = (i + 1) % n;
        gens.push_back(cycle);
    }
    return PermGroup(n, std::move(gens), cap);
}

PermGroup cyclic_group(int n) {
    if (n < 2) return trivial_group(n);
    Permutation cycle(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) cycle[static_cast<std::size_t>(i)] = (i + 1) % n;
    return PermGroup(n, {cycle});
}

Permutation induced_edge_permutation(const GraphicModel& g, const Permutation& vertex_perm) {
    if (!is_permutation(vertex_perm, g.vertices)) throw DomainError("vertex permutation has the wrong degree");
    std::map<std::pair<int, int>, int> edge_index;
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        auto [u, v] = g.edges[i];
        auto key = std::minmax(u, v);
        if (!edge_index.emplace(key, static_cast<int>(i)).second)
            throw DomainError("vertex actions need a graph without parallel edges");
    }
    Permutation out(g.edges.size());
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        auto [u, v] = g.edges[i];
        auto key = std::minmax(vertex_perm[static_cast<std::size_t>(u)], vertex_perm[static_cast<std::size_t>(v)]);
        auto it = edge_index.find(key);
        if (it == edge_index.end()) throw DomainError("vertex permutation does not map edges to edges");
        out[i] = it->second;
    }
    return out;
}

PermGroup named_group(const Matroid& m, const std::string& name, std::size_t cap) {
    const int n = m.ground_size();
    if (name == "trivial") return trivial_group(n);
    if (name != "symmetric" && name != "cyclic") throw DomainError("unknown group name '" + name + "'");
    if (const auto* graph = std::get_if<GraphicModel>(&m.model())) {
        PermGroup vertex = name == "symmetric" ? symmetric_group(graph->vertices, cap) : cyclic_group(graph->vertices);
        std::vector<Permutation> gens;
        for (const auto& s : vertex.generators()) gens.push_back(induced_edge_permutation(*graph, s));
        return PermGroup(n, std::move(gens), cap);
    }
    return name == "symmetric" ? symmetric_group(n, cap) : cyclic_group(n);
}

bool check_automorphism(const FlatLattice& lattice, const Permutation& g) {
    if (!is_permutation(g, lattice.ground_size())) return false;
    return induced_flat_permutation(lattice, g).has_value();
}

bool check_automorphism(const Matroid& m, const Permutation& g) {
    return check_automorphism(flats_lattice(m), g);
}

}  // namespace chowgamma
