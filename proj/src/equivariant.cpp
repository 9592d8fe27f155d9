#include "chowgamma/equivariant.hpp"

#include <algorithm>
#include <sstream>

#include "chowgamma/errors.hpp"

namespace chowgamma {

ClassFunction ClassFunction::constant(std::size_t classes, long value) {
    return ClassFunction{std::vector<mpz_class>(classes, mpz_class(value))};
}

ClassFunction& ClassFunction::operator+=(const ClassFunction& o) {
    if (values.empty()) values.assign(o.values.size(), 0);
    if (o.values.size() != values.size()) throw DomainError("class functions on different groups");
    for (std::size_t i = 0; i < values.size(); ++i) values[i] += o.values[i];
    return *this;
}

ClassFunction& ClassFunction::operator-=(const ClassFunction& o) {
    if (values.empty()) values.assign(o.values.size(), 0);
    if (o.values.size() != values.size()) throw DomainError("class functions on different groups");
    for (std::size_t i = 0; i < values.size(); ++i) values[i] -= o.values[i];
    return *this;
}

std::string ClassFunction::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < values.size(); ++i) out += (i ? "," : "") + values[i].get_str();
    return out + ")";
}

MVPoly EqSeries::at_class(std::size_t c) const {
    std::vector<mpz_class> coeffs;
    for (const auto& level : by_degree) coeffs.push_back(level.values.at(c));
    return MVPoly::from_t_coeffs(coeffs);
}

std::string EqSeries::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < by_degree.size(); ++i)
        out += (i ? " + " : "") + by_degree[i].to_string() + "*t^" + std::to_string(i);
    return out.empty() ? "0" : out;
}

LatticeAction::LatticeAction(const FlatLattice& lattice, const PermGroup& group) : lattice_(&lattice), group_(&group) {
    if (group.degree() != lattice.ground_size()) throw DomainError("group degree does not match the ground set");
    for (const auto& g : group.generators())
        if (!induced_flat_permutation(lattice, g))
            throw DomainError("generator " + cycle_string(g) + " is not a matroid automorphism");
    for (const auto& cls : group.classes()) {
        auto image = induced_flat_permutation(lattice, cls.representative);
        if (!image) throw ConsistencyError("product of automorphisms failed to preserve flats");
        std::vector<bool> fixed(image->size());
        for (std::size_t i = 0; i < image->size(); ++i) fixed[i] = (*image)[i] == i;
        images_.push_back(std::move(*image));
        fixed_.push_back(std::move(fixed));
    }
}

mpz_class fixed_chain_count(const FlatLattice& lattice, const RankSet& s, const std::vector<std::size_t>& flat_image) {
    mpz_class count = 0;
    for_each_chain(lattice, s, [&](const Chain& c) {
        for (std::size_t f : c)
            if (flat_image[f] != f) return;
        ++count;
    });
    return count;
}

ClassFunction alpha_character(const LatticeAction& action, const RankSet& s) {
    rank_selected(action.lattice(), s);  // validates S
    ClassFunction out;
    for (std::size_t c = 0; c < action.group().class_count(); ++c)
        out.values.push_back(fixed_chain_count(action.lattice(), s, action.flat_image(c)));
    return out;
}

ClassFunction beta_character(const LatticeAction& action, const RankSet& s) {
    const auto subsets = subsets_of(s);  // binary order: subsets of mask m are masks below m
    std::vector<ClassFunction> alpha, beta;
    for (const RankSet& t : subsets) alpha.push_back(alpha_character(action, t));
    const std::size_t classes = action.group().class_count();
    for (std::size_t m = 0; m < subsets.size(); ++m) {
        ClassFunction b = ClassFunction::constant(classes, 0);
        for (std::size_t sub = m;; sub = (sub - 1) & m) {
            bool negative = (__builtin_popcountll(m) - __builtin_popcountll(sub)) % 2 != 0;
            if (negative)
                b -= alpha[sub];
            else
                b += alpha[sub];
            if (sub == 0) break;
        }
        beta.push_back(std::move(b));
    }
    const std::size_t full = subsets.size() - 1;
    ClassFunction round_trip = ClassFunction::constant(classes, 0);
    for (std::size_t sub = full;; sub = (sub - 1) & full) {
        round_trip += beta[sub];
        if (sub == 0) break;
    }
    if (round_trip != alpha[full]) throw ConsistencyError("Mobius round trip failed for S = " + to_string(s));
    return beta[full];
}

ClassFunction homology_character(const LatticeAction& action, const RankSet& s) {
    RankSelectedPoset poset = rank_selected(action.lattice(), s);
    OrderComplex complex(poset);
    TopHomology top(complex);
    ClassFunction out;
    for (std::size_t c = 0; c < action.group().class_count(); ++c) out.values.push_back(top.trace(action.flat_image(c)));
    return out;
}

EqSeries equivariant_hilbert(const LatticeAction& action, RingKind kind) {
    const std::size_t classes = action.group().class_count();
    const std::size_t width = theorem_degree(action.lattice().rank(), kind) + 1;
    EqSeries e;
    e.by_degree.assign(width, ClassFunction::constant(classes, 0));
    for (std::size_t c = 0; c < classes; ++c) {
        auto counts = fy_degree_counts(action.lattice(), kind, &action.fixed_flats(c));
        if (counts.size() > width) throw ConsistencyError("FY degree exceeds the ring's top degree");
        for (std::size_t d = 0; d < counts.size(); ++d) e.by_degree[d].values[c] = counts[d];
    }
    return e;
}

std::vector<ClassFunction> equivariant_gamma(const EqSeries& e, unsigned d) {
    const std::size_t classes = e.class_count();
    std::vector<ClassFunction> out(d / 2 + 1, ClassFunction::constant(classes, 0));
    for (std::size_t c = 0; c < classes; ++c) {
        GammaVector g;
        try {
            g = gamma_expand(e.at_class(c), d);
        } catch (const PalindromyError& err) {
            throw PalindromyError(err.index(), "class " + std::to_string(c) + " fails palindromy at degree " +
                                                   std::to_string(err.index()));
        }
        for (std::size_t k = 0; k < g.gamma.size() && k < out.size(); ++k)
            out[k].values[c] = g.gamma[k].coeff({0, 0, 0});
    }
    return out;
}

std::vector<RankSet> theorem_window(int rank, RingKind kind) {
    return kind == RingKind::chow ? stab(2, rank - 1) : stab(1, rank - 1);
}

unsigned theorem_degree(int rank, RingKind kind) {
    if (rank < 1) throw DomainError("matroid rank must be positive");
    return static_cast<unsigned>(kind == RingKind::chow ? rank - 1 : rank);
}

Report verify_main_theorems(const LatticeAction& action, RingKind kind) {
    const FlatLattice& lattice = action.lattice();
    const PermGroup& group = action.group();
    const int r = lattice.rank();
    const unsigned d = theorem_degree(r, kind);
    const std::size_t classes = group.class_count();
    Report report(kind == RingKind::chow ? "chow-equivariant-gamma" : "augmented-equivariant-gamma");

    struct Piece {
        RankSet s;
        ClassFunction beta;
        ClassFunction homology;
        BettiVector betti;
        bool hopf = true;
    };
    std::vector<Piece> pieces;
    for (const RankSet& s : theorem_window(r, kind)) {
        Piece p;
        p.s = s;
        p.beta = beta_character(action, s);
        RankSelectedPoset poset = rank_selected(lattice, s);
        OrderComplex complex(poset);
        TopHomology top(complex);
        long sign = s.size() % 2 == 1 ? 1 : -1;  // (-1)^{|S|-1}
        for (std::size_t c = 0; c < classes; ++c) {
            mpz_class tr = top.trace(action.flat_image(c));
            p.homology.values.push_back(tr);
            if (mpz_class(lefschetz_number(complex, action.flat_image(c))) != sign * tr) p.hopf = false;
        }
        p.betti = reduced_betti(complex);
        pieces.push_back(std::move(p));
    }

    // (a) the series itself, class by class
    EqSeries e = equivariant_hilbert(action, kind);
    for (std::size_t c = 0; c < classes; ++c) {
        MVPoly lhs = e.at_class(c);
        MVPoly rhs;
        for (const Piece& p : pieces)
            rhs += MVPoly(p.beta.values[c]) * gamma_basis(static_cast<unsigned>(p.s.size()), d);
        report.add("hilbert-expansion/class=" + cycle_string(group.classes()[c].representative), lhs == rhs,
                   lhs.to_string(), rhs.to_string(), (lhs - rhs).to_string());
    }

    // (b) classwise gamma extraction against sums of beta
    std::vector<ClassFunction> gamma;
    try {
        gamma = equivariant_gamma(e, d);
    } catch (const PalindromyError& err) {
        report.add("gamma-extraction", false, e.to_string(), {}, {}, err.what());
    }
    std::vector<ClassFunction> beta_sum(d / 2 + 1, ClassFunction::constant(classes, 0));
    std::vector<ClassFunction> homology_sum = beta_sum;
    for (const Piece& p : pieces) {
        beta_sum[p.s.size()] += p.beta;
        homology_sum[p.s.size()] += p.homology;
    }
    for (std::size_t k = 0; k < gamma.size(); ++k) {
        ClassFunction residual = gamma[k] - beta_sum[k];
        report.add("gamma/k=" + std::to_string(k), gamma[k] == beta_sum[k], gamma[k].to_string(),
                   beta_sum[k].to_string(), residual.to_string());
    }

    // (c) beta against homology, with dimension and lower-vanishing checks
    for (const Piece& p : pieces) {
        const std::string tag = "/S=" + to_string(p.s);
        const int top = static_cast<int>(p.s.size()) - 1;
        report.add("homology" + tag, p.beta == p.homology, p.beta.to_string(), p.homology.to_string(),
                   (p.beta - p.homology).to_string());
        mpz_class b_top = p.betti.at(top);
        report.add("betti-dimension" + tag, p.beta.identity_value() == b_top, p.beta.identity_value().get_str(),
                   b_top.get_str(), mpz_class(p.beta.identity_value() - b_top).get_str());
        bool vanishing = true;
        for (int i = -1; i < top; ++i) vanishing = vanishing && p.betti.at(i) == 0;
        std::ostringstream betti;
        for (std::size_t i = 0; i < p.betti.values.size(); ++i) betti << (i ? "," : "") << p.betti.values[i];
        report.add("cohen-macaulay" + tag, vanishing, "[" + betti.str() + "]", {}, vanishing ? "0" : "nonzero",
                   "reduced Betti numbers from dimension -1 upward");
        report.add("hopf-trace" + tag, p.hopf, {}, {}, p.hopf ? "0" : "nonzero",
                   "Lefschetz number equals (-1)^(|S|-1) times the top trace");
    }

    // (d) identity class against the plain Hilbert series
    MVPoly plain = hilbert_series(lattice, kind);
    MVPoly at_identity = e.at_class(0);
    report.add("identity-class", at_identity == plain, at_identity.to_string(), plain.to_string(),
               (at_identity - plain).to_string());

    // (e) positivity witness
    for (std::size_t k = 0; k < gamma.size(); ++k) {
        bool pass = gamma[k].identity_value() >= 0 && gamma[k] == homology_sum[k];
        report.add("positivity/k=" + std::to_string(k), pass, gamma[k].to_string(), homology_sum[k].to_string(),
                   (gamma[k] - homology_sum[k]).to_string(), "gamma_k as a sum of top homology characters");
    }
    try {
        GammaVector g = gamma_expand(plain, d);
        std::string values;
        for (std::size_t k = 0; k < g.gamma.size(); ++k) values += (k ? "," : "") + g.gamma[k].to_string();
        bool integral = std::all_of(g.gamma.begin(), g.gamma.end(), [](const MVPoly& x) { return x.degree_t() <= 0; });
        report.add("gamma-vector", g.nonnegative() && integral, "[" + values + "]", {}, "0",
                   "non-equivariant gamma vector is a nonnegative integer vector");
    } catch (const PalindromyError& err) {
        report.add("gamma-vector", false, plain.to_string(), {}, {}, err.what());
    }
    return report;
}

}  // namespace chowgamma
