#include "chowgamma/chow.hpp"

#include <algorithm>

#include "chowgamma/errors.hpp"

namespace chowgamma {

std::string to_string(RingKind kind) { return kind == RingKind::chow ? "chow" : "aug"; }

int FYMonomial::degree() const {
    int d = 0;
    for (int a : exponents) d += a;
    return d;
}

std::size_t FYBasis::size() const {
    std::size_t n = 0;
    for (const auto& level : by_degree) n += level.size();
    return n;
}

MVPoly FYBasis::hilbert() const {
    std::vector<mpz_class> coeffs;
    for (const auto& level : by_degree) coeffs.emplace_back(static_cast<unsigned long>(level.size()));
    return MVPoly::from_t_coeffs(coeffs);
}

namespace {

int exponent_ceiling(const FlatLattice& lattice, RingKind kind, long prev, std::size_t next) {
    int r = lattice.flat(next).rank;
    if (prev < 0) return kind == RingKind::augmented ? r : r - 1;
    return r - lattice.flat(static_cast<std::size_t>(prev)).rank - 1;
}

}  // namespace

void for_each_fy_chain(const FlatLattice& lattice, RingKind kind,
                       const std::function<void(const Chain&, const std::vector<int>&)>& visit) {
    Chain chain;
    std::vector<int> bounds;
    visit(chain, bounds);
    std::function<void(long)> grow = [&](long prev) {
        const auto& candidates = lattice.above(prev < 0 ? lattice.bottom() : static_cast<std::size_t>(prev));
        for (std::size_t f : candidates) {
            int bound = exponent_ceiling(lattice, kind, prev, f);
            if (bound < 1) continue;
            chain.push_back(f);
            bounds.push_back(bound);
            visit(chain, bounds);
            grow(static_cast<long>(f));
            chain.pop_back();
            bounds.pop_back();
        }
    };
    grow(-1);
}

FYBasis fy_basis(const FlatLattice& lattice, RingKind kind, std::size_t cap) {
    FYBasis basis;
    basis.kind = kind;
    basis.by_degree.resize(static_cast<std::size_t>(lattice.rank()) + 1);
    std::size_t count = 0;
    for_each_fy_chain(lattice, kind, [&](const Chain& chain, const std::vector<int>& bounds) {
        std::vector<int> a(chain.size(), 1);
        while (true) {
            if (++count > cap) throw ResourceError("FY basis exceeds the monomial cap");
            FYMonomial m{chain, a, kind};
            basis.by_degree[static_cast<std::size_t>(m.degree())].push_back(std::move(m));
            std::size_t i = 0;
            while (i < a.size() && a[i] == bounds[i]) a[i++] = 1;
            if (i == a.size()) break;
            ++a[i];
        }
    });
    while (basis.by_degree.size() > 1 && basis.by_degree.back().empty()) basis.by_degree.pop_back();
    return basis;
}

std::vector<mpz_class> fy_degree_counts(const FlatLattice& lattice, RingKind kind, const std::vector<bool>* fixed) {
    const std::size_t width = static_cast<std::size_t>(lattice.rank()) + 1;
    auto ok = [&](std::size_t f) { return fixed == nullptr || (*fixed)[f]; };
    // ending[f][d]: monomials of degree d whose chain ends at flat f.
    std::vector<std::vector<mpz_class>> ending(lattice.size(), std::vector<mpz_class>(width));
    std::vector<mpz_class> total(width);
    total[0] = 1;
    for (std::size_t f = 1; f < lattice.size(); ++f) {
        if (!ok(f)) continue;
        auto& row = ending[f];
        int first = exponent_ceiling(lattice, kind, -1, f);
        for (int a = 1; a <= first; ++a) row[static_cast<std::size_t>(a)] += 1;
        for (std::size_t d = 0; d < width; ++d)
            if (row[d] != 0) total[d] += row[d];
        for (std::size_t g : lattice.above(f)) {
            if (!ok(g)) continue;
            int bound = exponent_ceiling(lattice, kind, static_cast<long>(f), g);
            for (std::size_t d = 0; d < width; ++d) {
                if (row[d] == 0) continue;
                for (int a = 1; a <= bound && d + static_cast<std::size_t>(a) < width; ++a)
                    ending[g][d + static_cast<std::size_t>(a)] += row[d];
            }
        }
    }
    while (total.size() > 1 && total.back() == 0) total.pop_back();
    return total;
}

MVPoly hilbert_series(const FlatLattice& lattice, RingKind kind) {
    return MVPoly::from_t_coeffs(fy_degree_counts(lattice, kind));
}

std::map<RankSet, MVPoly> rank_set_decomposition(const FlatLattice& lattice, RingKind kind) {
    std::map<RankSet, MVPoly> out;
    const std::size_t top = lattice.top();
    for_each_fy_chain(lattice, kind, [&](const Chain& chain, const std::vector<int>& bounds) {
        RankSet s;
        MVPoly weight = 1;
        for (std::size_t i = 0; i < chain.size(); ++i) {
            if (chain[i] != top) s.push_back(lattice.flat(chain[i]).rank);
            weight *= t_integer(static_cast<unsigned>(bounds[i])).shift_t(1);
        }
        out[s] += weight;
    });
    return out;
}

namespace {

void check_rank_set(const RankSet& s, int n) {
    if (n < 1) throw DomainError("rank must be positive");
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 1 || s[i] > n - 1) throw DomainError("rank set " + to_string(s) + " not inside [1, n-1]");
        if (i > 0 && s[i] <= s[i - 1]) throw DomainError("rank set must be strictly increasing");
    }
}

// Product of [m_i]_t, short-circuiting on a zero factor.
MVPoly product_of_t_integers(const std::vector<int>& factors, unsigned t_shift) {
    for (int m : factors)
        if (m <= 0) return {};
    MVPoly out = MVPoly::t(t_shift);
    for (int m : factors) out *= t_integer(static_cast<unsigned>(m));
    return out;
}

}  // namespace

MVPoly phi(const RankSet& s, int n) {
    check_rank_set(s, n);
    if (s.empty()) return t_integer(static_cast<unsigned>(n));
    std::vector<int> factors;
    int prev = 0;
    for (int x : s) {
        factors.push_back(x - prev - 1);
        prev = x;
    }
    factors.push_back(n - s.back());
    return product_of_t_integers(factors, static_cast<unsigned>(s.size()));
}

MVPoly psi(const RankSet& s, int n) {
    check_rank_set(s, n);
    if (s.empty()) return t_integer(static_cast<unsigned>(n + 1));
    std::vector<int> factors{s.front()};
    for (std::size_t i = 1; i < s.size(); ++i) factors.push_back(s[i] - s[i - 1] - 1);
    factors.push_back(n - s.back());
    return product_of_t_integers(factors, static_cast<unsigned>(s.size()));
}

RankSet GammaSeq::dots() const {
    RankSet out;
    for (std::size_t i = 0; i < cells.size(); ++i)
        if (cells[i] == dot) out.push_back(static_cast<int>(i) + first_position());
    return out;
}

int GammaSeq::crosses() const {
    return static_cast<int>(std::count(cells.begin(), cells.end(), static_cast<std::uint8_t>(cross)));
}

std::string GammaSeq::packed() const { return std::string(cells.begin(), cells.end()); }

std::string GammaSeq::pretty() const {
    std::string out;
    for (auto c : cells) out += c == blank ? '_' : c == cross ? 'x' : '.';
    return out;
}

bool is_valid_sequence(const GammaSeq& w) {
    const auto& c = w.cells;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] > GammaSeq::dot) return false;
        if (c[i] == GammaSeq::dot && (i == 0 || c[i - 1] != GammaSeq::cross)) return false;
    }
    std::size_t start = 0;
    while (start <= c.size()) {
        std::size_t end = start;
        while (end < c.size() && c[end] != GammaSeq::dot) ++end;
        auto first_cross = std::find(c.begin() + static_cast<long>(start), c.begin() + static_cast<long>(end),
                                     static_cast<std::uint8_t>(GammaSeq::cross));
        if (std::any_of(first_cross, c.begin() + static_cast<long>(end),
                        [](std::uint8_t x) { return x != GammaSeq::cross; }))
            return false;
        start = end + 1;
    }
    return true;
}

std::vector<RankSet> lemma_window(int n, SequenceModel model) {
    if (n < 1) throw DomainError("n must be positive");
    return model == SequenceModel::chow ? stab(2, n - 1) : stab(1, n - 1);
}

void enumerate_sequences(int n, SequenceModel model, const RankSet& superset_of,
                         const std::function<void(const GammaSeq&)>& visit) {
    if (n < 1) throw DomainError("n must be positive");
    const int lo = model == SequenceModel::chow ? 2 : 1;
    for (std::size_t i = 0; i < superset_of.size(); ++i) {
        int x = superset_of[i];
        if (x < lo || x > n - 1 || (i > 0 && x - superset_of[i - 1] < 2))
            throw DomainError("T = " + to_string(superset_of) + " outside the admissible window");
    }
    GammaSeq w;
    w.model = model;
    const int first = w.first_position();
    const std::size_t length = static_cast<std::size_t>(n - first);
    std::vector<bool> forced(length, false);
    for (int x : superset_of) forced[static_cast<std::size_t>(x - first)] = true;
    w.cells.reserve(length);

    // A blank never follows a cross and a dot always follows one.
    std::function<void()> grow = [&]() {
        std::size_t i = w.cells.size();
        if (i == length) {
            visit(w);
            return;
        }
        std::uint8_t prev = i == 0 ? std::uint8_t{GammaSeq::blank} : w.cells.back();
        auto place = [&](std::uint8_t c) {
            w.cells.push_back(c);
            grow();
            w.cells.pop_back();
        };
        if (forced[i]) {
            if (prev == GammaSeq::cross) place(GammaSeq::dot);
            return;
        }
        if (prev != GammaSeq::cross) place(GammaSeq::blank);
        place(GammaSeq::cross);
        if (prev == GammaSeq::cross) place(GammaSeq::dot);
    };
    grow();
}

MVPoly sequence_generating_function(int n, SequenceModel model, const RankSet& superset_of) {
    std::vector<mpz_class> counts(static_cast<std::size_t>(n) + 1);
    enumerate_sequences(n, model, superset_of,
                        [&](const GammaSeq& w) { counts[static_cast<std::size_t>(w.crosses())] += 1; });
    return MVPoly::from_t_coeffs(counts);
}

MVPoly lemma_closed_form(int n, SequenceModel model, const RankSet& t) {
    long k = static_cast<long>(t.size());
    long d = model == SequenceModel::chow ? n - 1 - 2 * k : n - 2 * k;
    if (d < 0) throw DomainError("T too large for the closed form");
    return one_plus_t_pow(static_cast<unsigned>(d)).shift_t(k);
}

Report verify_lemma(int n, SequenceModel model) {
    const bool chow = model == SequenceModel::chow;
    const std::string name = chow ? "chow-identity" : "augmented-identity";
    Report report(name);
    auto weight = [&](const RankSet& s) { return chow ? phi(s, n) : psi(s, n); };

    RankSet universe;
    for (int i = 1; i <= n - 1; ++i) universe.push_back(i);

    for (const RankSet& t : lemma_window(n, model)) {
        RankSet rest;
        std::set_difference(universe.begin(), universe.end(), t.begin(), t.end(), std::back_inserter(rest));
        MVPoly lhs;
        for (const RankSet& extra : subsets_of(rest)) {
            RankSet s;
            std::set_union(t.begin(), t.end(), extra.begin(), extra.end(), std::back_inserter(s));
            lhs += weight(s);
        }
        MVPoly seq = sequence_generating_function(n, model, t);
        MVPoly rhs = lemma_closed_form(n, model, t);
        bool pass = lhs == rhs && seq == rhs;
        report.add(name + "/n=" + std::to_string(n) + "/T=" + to_string(t), pass, lhs.to_string(), rhs.to_string(),
                   (lhs - rhs).to_string(), "sequence model: " + seq.to_string());
    }

    // Dot(w) = S slices reproduce phi/psi term by term.
    std::map<RankSet, std::vector<mpz_class>> slices;
    enumerate_sequences(n, model, {}, [&](const GammaSeq& w) {
        auto& row = slices[w.dots()];
        row.resize(static_cast<std::size_t>(n) + 1);
        row[static_cast<std::size_t>(w.crosses())] += 1;
    });
    std::size_t checked = 0;
    bool all = true;
    std::string first_bad;
    MVPoly bad_lhs, bad_rhs;
    for (const RankSet& s : subsets_of(universe)) {
        auto it = slices.find(s);
        MVPoly count = it == slices.end() ? MVPoly{} : MVPoly::from_t_coeffs(it->second);
        MVPoly expected = weight(s);
        ++checked;
        if (count != expected && all) {
            all = false;
            first_bad = to_string(s);
            bad_lhs = count;
            bad_rhs = expected;
        }
    }
    report.add(name + "/n=" + std::to_string(n) + "/slices", all, bad_lhs.to_string(), bad_rhs.to_string(),
               (bad_lhs - bad_rhs).to_string(),
               all ? std::to_string(checked) + " rank sets agree" : "first mismatch at S = " + first_bad);
    return report;
}

}  // namespace chowgamma
